// Copyright 2026 The ticodes Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Laurent polynomials over F2 in a fixed, named set of variables.
//
// A polynomial is a set of monomials; coefficients are implicitly 1 and
// repeated monomials cancel in pairs. Monomials are exponent vectors over the
// integers, ordered lexicographically by the context's variable order. That
// order drives normalization, printing and hashing.

#ifndef TICODES_POLY_HPP
#define TICODES_POLY_HPP

#include <algorithm>
#include <cctype>
#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ticodes/error.hpp"

namespace ticodes {

class VarContext {
  public:
    explicit VarContext(std::vector<std::string> names) : names_(std::move(names)) {
        if (names_.empty()) {
            throw Error("variable context must have at least one variable");
        }
        std::unordered_set<std::string> seen;
        for (const auto &n : names_) {
            if (n.empty()) {
                throw Error("variable names must be nonempty");
            }
            if (!seen.insert(n).second) {
                throw Error("duplicate variable name '" + n + "'");
            }
        }
    }

    size_t dimension() const {
        return names_.size();
    }
    const std::vector<std::string> &names() const {
        return names_;
    }
    const std::string &name(size_t i) const {
        return names_.at(i);
    }

    std::optional<size_t> index_of(std::string_view name) const {
        for (size_t i = 0; i < names_.size(); i++) {
            if (names_[i] == name) {
                return i;
            }
        }
        return std::nullopt;
    }

    bool operator==(const VarContext &) const = default;

  private:
    std::vector<std::string> names_;
};

using ContextPtr = std::shared_ptr<const VarContext>;

inline ContextPtr make_context(std::vector<std::string> names) {
    return std::make_shared<const VarContext>(std::move(names));
}

inline bool same_context(const ContextPtr &a, const ContextPtr &b) {
    return a == b || (a && b && *a == *b);
}

inline void require_same_context(const ContextPtr &a, const ContextPtr &b, const char *op) {
    if (!same_context(a, b)) {
        throw ContextMismatch(std::string(op) + ": operands live in different variable contexts");
    }
}

/// Exponent vector x_1^{e_1} ... x_d^{e_d}; negative exponents allowed.
struct Monomial {
    std::vector<int64_t> exponents;

    Monomial() = default;
    explicit Monomial(std::vector<int64_t> e) : exponents(std::move(e)) {
    }

    static Monomial one(size_t d) {
        return Monomial(std::vector<int64_t>(d, 0));
    }
    static Monomial variable(size_t d, size_t i, int64_t power = 1) {
        Monomial m = one(d);
        m.exponents.at(i) = power;
        return m;
    }

    size_t dimension() const {
        return exponents.size();
    }

    bool is_one() const {
        return std::all_of(exponents.begin(), exponents.end(), [](int64_t e) { return e == 0; });
    }

    Monomial operator*(const Monomial &o) const {
        if (o.dimension() != dimension()) {
            throw DimensionMismatch("monomial dimensions differ");
        }
        Monomial r(exponents);
        for (size_t i = 0; i < exponents.size(); i++) {
            r.exponents[i] = detail::checked_add(exponents[i], o.exponents[i]);
        }
        return r;
    }

    Monomial inverse() const {
        Monomial r(exponents);
        for (auto &e : r.exponents) {
            e = detail::checked_neg(e);
        }
        return r;
    }

    Monomial pow(int64_t k) const {
        Monomial r(exponents);
        for (auto &e : r.exponents) {
            e = detail::checked_mul(e, k);
        }
        return r;
    }

    auto operator<=>(const Monomial &) const = default;
    bool operator==(const Monomial &) const = default;
};

struct MonomialHash {
    size_t operator()(const Monomial &m) const {
        size_t h = 1469598103934665603ull;
        for (int64_t e : m.exponents) {
            h ^= std::hash<int64_t>{}(e) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};

inline std::string monomial_to_string(const Monomial &m, const VarContext &ctx) {
    if (m.is_one()) {
        return "1";
    }
    std::string out;
    for (size_t i = 0; i < m.exponents.size(); i++) {
        int64_t e = m.exponents[i];
        if (e == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '*';
        }
        out += ctx.name(i);
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

class LaurentPoly {
  public:
    explicit LaurentPoly(ContextPtr ctx) : ctx_(std::move(ctx)) {
        if (!ctx_) {
            throw Error("polynomial requires a variable context");
        }
    }

    /// Builds a polynomial from a multiset of monomials; pairs cancel over F2.
    static LaurentPoly from_terms(ContextPtr ctx, std::vector<Monomial> terms) {
        LaurentPoly p(std::move(ctx));
        for (const auto &t : terms) {
            if (t.dimension() != p.ctx_->dimension()) {
                throw DimensionMismatch("monomial length does not match context dimension");
            }
        }
        std::sort(terms.begin(), terms.end());
        for (size_t i = 0; i < terms.size();) {
            size_t j = i;
            while (j < terms.size() && terms[j] == terms[i]) {
                j++;
            }
            if ((j - i) % 2 == 1) {
                p.terms_.push_back(std::move(terms[i]));
            }
            i = j;
        }
        return p;
    }

    static LaurentPoly one(ContextPtr ctx) {
        size_t d = ctx->dimension();
        return from_terms(std::move(ctx), {Monomial::one(d)});
    }
    static LaurentPoly monomial(ContextPtr ctx, Monomial m) {
        return from_terms(std::move(ctx), {std::move(m)});
    }
    static LaurentPoly variable(ContextPtr ctx, size_t i) {
        size_t d = ctx->dimension();
        return from_terms(std::move(ctx), {Monomial::variable(d, i)});
    }

    const ContextPtr &context() const {
        return ctx_;
    }
    size_t dimension() const {
        return ctx_->dimension();
    }
    /// Sorted, duplicate-free.
    const std::vector<Monomial> &terms() const {
        return terms_;
    }
    size_t weight() const {
        return terms_.size();
    }
    bool is_zero() const {
        return terms_.empty();
    }
    bool contains(const Monomial &m) const {
        return std::binary_search(terms_.begin(), terms_.end(), m);
    }
    bool has_constant_term() const {
        return contains(Monomial::one(dimension()));
    }

    /// Variables that occur with a nonzero exponent in some term.
    std::vector<size_t> support_variables() const {
        std::vector<size_t> out;
        for (size_t i = 0; i < dimension(); i++) {
            for (const auto &t : terms_) {
                if (t.exponents[i] != 0) {
                    out.push_back(i);
                    break;
                }
            }
        }
        return out;
    }

    LaurentPoly operator+(const LaurentPoly &o) const {
        require_same_context(ctx_, o.ctx_, "add");
        LaurentPoly r(ctx_);
        std::set_symmetric_difference(terms_.begin(), terms_.end(), o.terms_.begin(), o.terms_.end(),
                                      std::back_inserter(r.terms_));
        return r;
    }

    LaurentPoly operator*(const LaurentPoly &o) const {
        require_same_context(ctx_, o.ctx_, "mul");
        std::vector<Monomial> prods;
        prods.reserve(terms_.size() * o.terms_.size());
        for (const auto &a : terms_) {
            for (const auto &b : o.terms_) {
                prods.push_back(a * b);
            }
        }
        return from_terms(ctx_, std::move(prods));
    }

    /// Multiplication by a single monomial (a lattice translation).
    LaurentPoly shifted(const Monomial &m) const {
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            out.push_back(t * m);
        }
        return from_terms(ctx_, std::move(out));
    }

    /// Inverts every monomial (the overline operation).
    LaurentPoly antipode() const {
        std::vector<Monomial> out;
        out.reserve(terms_.size());
        for (const auto &t : terms_) {
            out.push_back(t.inverse());
        }
        return from_terms(ctx_, std::move(out));
    }

    LaurentPoly pow(uint64_t k) const {
        LaurentPoly result = one(ctx_);
        LaurentPoly base = *this;
        while (k) {
            if (k & 1) {
                result = result * base;
            }
            k >>= 1;
            if (k) {
                base = base * base;
            }
        }
        return result;
    }

    /// Re-expresses the polynomial in a context that contains every variable of
    /// this one under the same name.
    LaurentPoly embed(const ContextPtr &target) const {
        std::vector<size_t> where(dimension());
        for (size_t i = 0; i < dimension(); i++) {
            auto j = target->index_of(ctx_->name(i));
            if (!j) {
                throw ContextMismatch("embed: variable '" + ctx_->name(i) + "' missing from target context");
            }
            where[i] = *j;
        }
        std::vector<Monomial> out;
        for (const auto &t : terms_) {
            Monomial m = Monomial::one(target->dimension());
            for (size_t i = 0; i < dimension(); i++) {
                m.exponents[where[i]] = t.exponents[i];
            }
            out.push_back(std::move(m));
        }
        return from_terms(target, std::move(out));
    }

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::string out;
        for (size_t i = 0; i < terms_.size(); i++) {
            if (i) {
                out += " + ";
            }
            out += monomial_to_string(terms_[i], *ctx_);
        }
        return out;
    }

    bool operator==(const LaurentPoly &o) const {
        return same_context(ctx_, o.ctx_) && terms_ == o.terms_;
    }

  private:
    ContextPtr ctx_;
    std::vector<Monomial> terms_;
};

/// Variable -> monomial map into a target context; images[i] is the image of
/// source variable i.
struct Substitution {
    ContextPtr target;
    std::vector<Monomial> images;

    Monomial apply(const Monomial &m) const {
        if (m.dimension() != images.size()) {
            throw DimensionMismatch("substitution: monomial dimension does not match source context");
        }
        Monomial r = Monomial::one(target->dimension());
        for (size_t i = 0; i < images.size(); i++) {
            if (m.exponents[i] != 0) {
                r = r * images[i].pow(m.exponents[i]);
            }
        }
        return r;
    }

    static Substitution identity(const ContextPtr &ctx) {
        Substitution s{ctx, {}};
        for (size_t i = 0; i < ctx->dimension(); i++) {
            s.images.push_back(Monomial::variable(ctx->dimension(), i));
        }
        return s;
    }
};

inline LaurentPoly substitute(const LaurentPoly &p, const Substitution &s) {
    if (!s.target) {
        throw Error("substitute: missing target context");
    }
    if (s.images.size() != p.dimension()) {
        throw Error("substitute: every source variable needs an image (" + std::to_string(s.images.size()) +
                    " given, " + std::to_string(p.dimension()) + " required)");
    }
    for (const auto &img : s.images) {
        if (img.dimension() != s.target->dimension()) {
            throw ContextMismatch("substitute: image monomials do not share the target context");
        }
    }
    std::vector<Monomial> out;
    out.reserve(p.weight());
    for (const auto &t : p.terms()) {
        out.push_back(s.apply(t));
    }
    return LaurentPoly::from_terms(s.target, std::move(out));
}

/// Divides by the lexicographically smallest monomial so that the constant
/// term appears. Returns the normalized polynomial and the divisor.
inline std::pair<LaurentPoly, Monomial> normalize_to_one(const LaurentPoly &p) {
    if (p.is_zero()) {
        throw Error("normalize_to_one: zero polynomial has no normal form");
    }
    Monomial m = p.terms().front();
    return {p.shifted(m.inverse()), m};
}

inline LaurentPoly normalized(const LaurentPoly &p) {
    return normalize_to_one(p).first;
}

/// True when p and q differ by a monomial factor.
inline bool shift_equivalent(const LaurentPoly &p, const LaurentPoly &q) {
    if (p.is_zero() || q.is_zero()) {
        return p.is_zero() && q.is_zero() && same_context(p.context(), q.context());
    }
    return normalized(p) == normalized(q);
}

// Parsing -------------------------------------------------------------------
//
//   poly   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := atom ('^' ['-'] digits | '^' '(' ['-'] digits ')')?
//   atom   := '1' | '0' | identifier | '(' poly ')'
//
// Negative powers are only defined for single monomials.

namespace detail {

class PolyParser {
  public:
    PolyParser(std::string_view text, ContextPtr ctx, size_t line, size_t column_offset)
        : text_(text), ctx_(std::move(ctx)), line_(line), offset_(column_offset) {
    }

    LaurentPoly parse_all() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("empty polynomial");
        }
        LaurentPoly p = parse_poly();
        skip_ws();
        if (pos_ < text_.size()) {
            fail(std::string("unexpected character '") + text_[pos_] + "'");
        }
        return p;
    }

  private:
    [[noreturn]] void fail(const std::string &msg) const {
        throw ParseError(msg, line_, offset_ + pos_ + 1);
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
            pos_++;
        }
    }

    bool peek(char c) {
        skip_ws();
        return pos_ < text_.size() && text_[pos_] == c;
    }

    LaurentPoly parse_poly() {
        LaurentPoly acc = parse_term();
        while (peek('+')) {
            pos_++;
            acc = acc + parse_term();
        }
        return acc;
    }

    LaurentPoly parse_term() {
        LaurentPoly acc = parse_factor();
        while (peek('*')) {
            pos_++;
            acc = acc * parse_factor();
        }
        return acc;
    }

    int64_t parse_int() {
        skip_ws();
        bool neg = false;
        if (pos_ < text_.size() && text_[pos_] == '-') {
            neg = true;
            pos_++;
            skip_ws();
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            fail("expected integer exponent");
        }
        int64_t v = 0;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
            v = checked_add(checked_mul(v, 10), text_[pos_] - '0');
            pos_++;
        }
        return neg ? -v : v;
    }

    LaurentPoly parse_factor() {
        size_t start = pos_;
        LaurentPoly base = parse_atom();
        if (!peek('^')) {
            return base;
        }
        pos_++;
        int64_t e;
        if (peek('(')) {
            pos_++;
            e = parse_int();
            if (!peek(')')) {
                fail("expected ')'");
            }
            pos_++;
        } else {
            e = parse_int();
        }
        if (e >= 0) {
            return base.pow(static_cast<uint64_t>(e));
        }
        if (base.weight() != 1) {
            pos_ = start;
            fail("negative power of a non-monomial");
        }
        return LaurentPoly::monomial(ctx_, base.terms().front().pow(e));
    }

    LaurentPoly parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) {
            fail("expected term");
        }
        char c = text_[pos_];
        if (c == '(') {
            pos_++;
            LaurentPoly p = parse_poly();
            if (!peek(')')) {
                fail("expected ')'");
            }
            pos_++;
            return p;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            size_t start = pos_;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
                pos_++;
            }
            std::string_view lit = text_.substr(start, pos_ - start);
            if (lit == "1") {
                return LaurentPoly::one(ctx_);
            }
            if (lit == "0") {
                return LaurentPoly(ctx_);
            }
            pos_ = start;
            fail("coefficients other than an implicit 1 are not allowed");
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            size_t start = pos_;
            while (pos_ < text_.size() &&
                   (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
                pos_++;
            }
            std::string_view name = text_.substr(start, pos_ - start);
            auto idx = ctx_->index_of(name);
            if (!idx) {
                pos_ = start;
                fail("undeclared variable '" + std::string(name) + "'");
            }
            return LaurentPoly::variable(ctx_, *idx);
        }
        fail("expected term");
    }

    std::string_view text_;
    ContextPtr ctx_;
    size_t line_;
    size_t offset_;
    size_t pos_ = 0;
};

}  // namespace detail

/// Parses `1 + x^-1*y + x^2*y` style text. `line`/`column_offset` only affect
/// error positions.
inline LaurentPoly parse_poly(std::string_view text, const ContextPtr &ctx, size_t line = 0,
                              size_t column_offset = 0) {
    return detail::PolyParser(text, ctx, line, column_offset).parse_all();
}

/// Parses an expression that must evaluate to a single monomial.
inline Monomial parse_monomial(std::string_view text, const ContextPtr &ctx, size_t line = 0,
                               size_t column_offset = 0) {
    LaurentPoly p = parse_poly(text, ctx, line, column_offset);
    if (p.weight() != 1) {
        throw ParseError("expression is not a single monomial", line, column_offset + 1);
    }
    return p.terms().front();
}

}  // namespace ticodes

#endif
