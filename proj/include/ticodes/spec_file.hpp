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

// Code-spec files. Line oriented, `#` starts a comment:
//
//   [code]
//   name = gross
//   variables = x, y
//   f = x^3 + y + y^2
//   g = y^3 + x + x^2          (omit g for a classical code)
//
//   [boundary]
//   torus = 12, 6              (x^12 = 1, y^6 = 1)
//   x^3 = y                    (any monomial identity)
//
//   [lift]
//   order = 5
//   parent_variables = a, b, c, d
//   parent_f = 1 + a + b
//   parent_g = 1 + c + d
//   a = b^3*d^-1               (parent variable = child or parent monomial)
//
//   [erratum]
//   note = free text
//   a = b^-1*d^3               (replaces the [lift] assignment for a)

#ifndef TICODES_SPEC_FILE_HPP
#define TICODES_SPEC_FILE_HPP

#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ticodes/codes.hpp"
#include "ticodes/error.hpp"
#include "ticodes/lattice.hpp"
#include "ticodes/poly.hpp"

namespace ticodes {

struct BoundaryEquation {
    Monomial lhs;
    Monomial rhs;

    std::vector<int64_t> relation() const {
        return (lhs * rhs.inverse()).exponents;
    }
    bool operator==(const BoundaryEquation &) const = default;
};

struct BoundarySpec {
    std::optional<std::vector<int64_t>> torus;
    std::vector<BoundaryEquation> equations;

    bool operator==(const BoundarySpec &) const = default;
};

/// `variable = monomial`; the monomial lives in the parent+child context.
struct AssignmentSpec {
    std::string variable;
    Monomial value;

    bool operator==(const AssignmentSpec &) const = default;
};

struct LiftSpec {
    std::optional<int64_t> order;
    ContextPtr parent_context;
    ContextPtr combined_context;  // parent variables, then child variables
    LaurentPoly parent_f;
    LaurentPoly parent_g;
    std::vector<AssignmentSpec> assignments;

    bool operator==(const LiftSpec &o) const {
        return order == o.order && same_context(parent_context, o.parent_context) && parent_f == o.parent_f &&
               parent_g == o.parent_g && assignments == o.assignments;
    }
};

struct ErratumSpec {
    std::string note;
    std::vector<AssignmentSpec> assignments;

    bool operator==(const ErratumSpec &) const = default;
};

struct CodeSpec {
    std::string name;
    std::string description;
    ContextPtr context;
    LaurentPoly f;
    std::optional<LaurentPoly> g;
    std::optional<BoundarySpec> boundary;
    std::optional<LiftSpec> lift;
    std::optional<ErratumSpec> erratum;

    bool is_classical() const {
        return !g.has_value();
    }

    /// Two-block code with both generators normalized to contain 1.
    TwoBlockCode code() const {
        return raw_code().normalized();
    }
    /// Generators exactly as written.
    TwoBlockCode raw_code() const {
        if (!g) {
            throw Error("spec '" + name + "' describes a classical code (no g)");
        }
        return TwoBlockCode(f, *g);
    }

    GroupPresentation presentation() const {
        if (!boundary) {
            throw Error("spec '" + name + "' has no [boundary] section");
        }
        std::vector<std::vector<int64_t>> rels;
        const size_t d = context->dimension();
        if (boundary->torus) {
            for (size_t i = 0; i < d; i++) {
                std::vector<int64_t> r(d, 0);
                r[i] = (*boundary->torus)[i];
                rels.push_back(std::move(r));
            }
        }
        for (const auto &e : boundary->equations) {
            rels.push_back(e.relation());
        }
        return GroupPresentation(context, std::move(rels));
    }

    bool operator==(const CodeSpec &o) const {
        return name == o.name && description == o.description && same_context(context, o.context) && f == o.f &&
               g == o.g && boundary == o.boundary && lift == o.lift && erratum == o.erratum;
    }
};

namespace detail {

inline std::string_view trim(std::string_view s) {
    size_t a = 0, b = s.size();
    while (a < b && (s[a] == ' ' || s[a] == '\t' || s[a] == '\r')) {
        a++;
    }
    while (b > a && (s[b - 1] == ' ' || s[b - 1] == '\t' || s[b - 1] == '\r')) {
        b--;
    }
    return s.substr(a, b - a);
}

struct SpecLine {
    size_t number = 0;
    std::string key;
    std::string value;
    size_t key_column = 1;    // 1-based
    size_t value_offset = 0;  // 0-based start of value in the raw line
};

struct RawSection {
    std::string name;
    size_t line = 0;
    std::vector<SpecLine> entries;
};

inline std::vector<std::string> split_names(const SpecLine &l) {
    std::vector<std::string> out;
    std::string cur;
    std::stringstream ss(l.value);
    while (std::getline(ss, cur, ',')) {
        std::string t(trim(cur));
        if (t.empty()) {
            throw ParseError("empty entry in list", l.number, l.value_offset + 1);
        }
        out.push_back(t);
    }
    if (out.empty()) {
        throw ParseError("empty list", l.number, l.value_offset + 1);
    }
    return out;
}

inline int64_t parse_int(std::string_view text, size_t line, size_t column) {
    std::string t(trim(text));
    size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(t, &used);
    } catch (const std::exception &) {
        throw ParseError("expected an integer", line, column);
    }
    if (used != t.size()) {
        throw ParseError("expected an integer", line, column);
    }
    return v;
}

inline std::vector<RawSection> split_sections(std::string_view text) {
    std::vector<RawSection> out;
    std::set<std::string> seen;
    size_t number = 0;
    size_t start = 0;
    while (start <= text.size()) {
        size_t end = text.find('\n', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view raw = text.substr(start, end - start);
        number++;
        start = end + 1;
        size_t hash = raw.find('#');
        std::string_view body = hash == std::string_view::npos ? raw : raw.substr(0, hash);
        std::string_view t = trim(body);
        if (!t.empty()) {
            const size_t col = static_cast<size_t>(t.data() - raw.data()) + 1;
            if (t.front() == '[') {
                if (t.back() != ']') {
                    throw ParseError("unterminated section header", number, col);
                }
                std::string name(trim(t.substr(1, t.size() - 2)));
                if (!seen.insert(name).second) {
                    throw ParseError("duplicate section [" + name + "]", number, col);
                }
                out.push_back(RawSection{name, number, {}});
            } else {
                size_t eq = t.find('=');
                if (eq == std::string_view::npos) {
                    throw ParseError("expected 'key = value'", number, col);
                }
                if (out.empty()) {
                    throw ParseError("entry outside of a section", number, col);
                }
                std::string_view key = trim(t.substr(0, eq));
                std::string_view value = trim(t.substr(eq + 1));
                if (key.empty()) {
                    throw ParseError("missing key before '='", number, col);
                }
                if (value.empty()) {
                    throw ParseError("missing value after '='", number, col + eq + 1);
                }
                SpecLine l;
                l.number = number;
                l.key = std::string(key);
                l.value = std::string(value);
                l.key_column = static_cast<size_t>(key.data() - raw.data()) + 1;
                l.value_offset = static_cast<size_t>(value.data() - raw.data());
                out.back().entries.push_back(std::move(l));
            }
        }
        if (end == text.size()) {
            break;
        }
    }
    return out;
}

class SectionReader {
  public:
    explicit SectionReader(const RawSection &s) : section_(s) {
        std::set<std::string> keys;
        for (const auto &e : s.entries) {
            if (!keys.insert(e.key).second) {
                throw ParseError("duplicate key '" + e.key + "' in [" + s.name + "]", e.number, e.key_column);
            }
        }
    }

    const SpecLine *find(const std::string &key) {
        for (const auto &e : section_.entries) {
            if (e.key == key) {
                used_.insert(key);
                return &e;
            }
        }
        return nullptr;
    }

    const SpecLine &require(const std::string &key) {
        const SpecLine *l = find(key);
        if (!l) {
            throw ParseError("[" + section_.name + "] is missing '" + key + "'", section_.line, 1);
        }
        return *l;
    }

    std::vector<const SpecLine *> unused() const {
        std::vector<const SpecLine *> out;
        for (const auto &e : section_.entries) {
            if (!used_.count(e.key)) {
                out.push_back(&e);
            }
        }
        return out;
    }

    void reject_unused() const {
        for (const SpecLine *l : unused()) {
            throw ParseError("unknown key '" + l->key + "' in [" + section_.name + "]", l->number, l->key_column);
        }
    }

  private:
    const RawSection &section_;
    std::set<std::string> used_;
};

inline Monomial parse_spec_monomial(const SpecLine &l, const std::string &text, size_t offset, const ContextPtr &ctx) {
    LaurentPoly p = parse_poly(text, ctx, l.number, offset);
    if (p.weight() != 1) {
        throw ParseError("twist side is not a single monomial", l.number, offset + 1);
    }
    return p.terms().front();
}

inline std::vector<AssignmentSpec> parse_assignments(const std::vector<const SpecLine *> &lines,
                                                     const ContextPtr &parent, const ContextPtr &combined) {
    std::vector<AssignmentSpec> out;
    for (const SpecLine *l : lines) {
        if (!parent->index_of(l->key)) {
            throw ParseError("'" + l->key + "' is not a parent variable", l->number, l->key_column);
        }
        out.push_back(AssignmentSpec{l->key, parse_spec_monomial(*l, l->value, l->value_offset, combined)});
    }
    return out;
}

}  // namespace detail

/// Parses spec text; errors carry 1-based line and column.
inline CodeSpec parse_spec(std::string_view text) {
    auto sections = detail::split_sections(text);
    const detail::RawSection *code = nullptr, *boundary = nullptr, *lift = nullptr, *erratum = nullptr;
    for (const auto &s : sections) {
        if (s.name == "code") {
            code = &s;
        } else if (s.name == "boundary") {
            boundary = &s;
        } else if (s.name == "lift") {
            lift = &s;
        } else if (s.name == "erratum") {
            erratum = &s;
        } else {
            throw ParseError("unknown section [" + s.name + "]", s.line, 1);
        }
    }
    if (!code) {
        throw ParseError("missing [code] section", 1, 1);
    }
    detail::SectionReader code_reader(*code);
    const auto &vars = code_reader.require("variables");
    ContextPtr ctx;
    try {
        ctx = make_context(detail::split_names(vars));
    } catch (const ParseError &) {
        throw;
    } catch (const Error &e) {
        throw ParseError(e.what(), vars.number, vars.value_offset + 1);
    }
    const auto &fl = code_reader.require("f");
    CodeSpec spec{.name = code_reader.require("name").value,
                  .description = {},
                  .context = ctx,
                  .f = parse_poly(fl.value, ctx, fl.number, fl.value_offset),
                  .g = std::nullopt,
                  .boundary = std::nullopt,
                  .lift = std::nullopt,
                  .erratum = std::nullopt};
    if (const auto *d = code_reader.find("description")) {
        spec.description = d->value;
    }
    if (const auto *g = code_reader.find("g")) {
        spec.g = parse_poly(g->value, ctx, g->number, g->value_offset);
    }
    code_reader.reject_unused();
    if (boundary) {
        detail::SectionReader r(*boundary);
        BoundarySpec b;
        if (const auto *t = r.find("torus")) {
            std::vector<int64_t> lengths;
            size_t pos = 0;
            std::string v = t->value;
            while (pos <= v.size()) {
                size_t comma = v.find(',', pos);
                if (comma == std::string::npos) {
                    comma = v.size();
                }
                int64_t len = detail::parse_int(std::string_view(v).substr(pos, comma - pos), t->number,
                                                t->value_offset + pos + 1);
                if (len <= 0) {
                    throw ParseError("torus lengths must be positive", t->number, t->value_offset + pos + 1);
                }
                lengths.push_back(len);
                pos = comma + 1;
            }
            if (lengths.size() != spec.context->dimension()) {
                throw ParseError("torus needs one length per variable", t->number, t->value_offset + 1);
            }
            b.torus = std::move(lengths);
        }
        for (const auto *l : r.unused()) {
            // `lhs = rhs`: the key is the left side.
            Monomial lhs = detail::parse_spec_monomial(*l, l->key, l->key_column - 1, spec.context);
            Monomial rhs = detail::parse_spec_monomial(*l, l->value, l->value_offset, spec.context);
            b.equations.push_back(BoundaryEquation{lhs, rhs});
        }
        spec.boundary = std::move(b);
    }
    if (lift) {
        detail::SectionReader r(*lift);
        std::optional<int64_t> order;
        if (const auto *o = r.find("order")) {
            order = detail::parse_int(o->value, o->number, o->value_offset + 1);
        }
        const auto &pv = r.require("parent_variables");
        auto pnames = detail::split_names(pv);
        std::vector<std::string> all = pnames;
        for (const auto &n : spec.context->names()) {
            for (const auto &p : pnames) {
                if (p == n) {
                    throw ParseError("parent variable '" + p + "' clashes with a child variable", pv.number,
                                     pv.value_offset + 1);
                }
            }
            all.push_back(n);
        }
        ContextPtr pctx, combined;
        try {
            pctx = make_context(pnames);
            combined = make_context(all);
        } catch (const ParseError &) {
            throw;
        } catch (const Error &e) {
            throw ParseError(e.what(), pv.number, pv.value_offset + 1);
        }
        const auto &pf = r.require("parent_f");
        const auto &pg = r.require("parent_g");
        LiftSpec ls{.order = order,
                    .parent_context = pctx,
                    .combined_context = combined,
                    .parent_f = parse_poly(pf.value, pctx, pf.number, pf.value_offset),
                    .parent_g = parse_poly(pg.value, pctx, pg.number, pg.value_offset),
                    .assignments = {}};
        ls.assignments = detail::parse_assignments(r.unused(), ls.parent_context, ls.combined_context);
        spec.lift = std::move(ls);
    }
    if (erratum) {
        if (!spec.lift) {
            throw ParseError("[erratum] requires a [lift] section", erratum->line, 1);
        }
        detail::SectionReader r(*erratum);
        ErratumSpec es;
        if (const auto *n = r.find("note")) {
            es.note = n->value;
        }
        es.assignments = detail::parse_assignments(r.unused(), spec.lift->parent_context, spec.lift->combined_context);
        spec.erratum = std::move(es);
    }
    return spec;
}

inline CodeSpec load_spec(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open spec file '" + path + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    try {
        return parse_spec(ss.str());
    } catch (const ParseError &e) {
        throw ParseError(path + ": " + e.message(), e.line(), e.column());
    }
}

/// Canonical text: fixed section and key order, polynomials in lex order.
inline std::string print_spec(const CodeSpec &s) {
    auto join = [](const std::vector<std::string> &v) {
        std::string out;
        for (size_t i = 0; i < v.size(); i++) {
            out += (i ? ", " : "") + v[i];
        }
        return out;
    };
    std::ostringstream os;
    os << "[code]\n";
    os << "name = " << s.name << "\n";
    if (!s.description.empty()) {
        os << "description = " << s.description << "\n";
    }
    os << "variables = " << join(s.context->names()) << "\n";
    os << "f = " << s.f.to_string() << "\n";
    if (s.g) {
        os << "g = " << s.g->to_string() << "\n";
    }
    if (s.boundary) {
        os << "\n[boundary]\n";
        if (s.boundary->torus) {
            std::vector<std::string> t;
            for (auto v : *s.boundary->torus) {
                t.push_back(std::to_string(v));
            }
            os << "torus = " << join(t) << "\n";
        }
        for (const auto &e : s.boundary->equations) {
            os << monomial_to_string(e.lhs, *s.context) << " = " << monomial_to_string(e.rhs, *s.context) << "\n";
        }
    }
    if (s.lift) {
        const auto &l = *s.lift;
        os << "\n[lift]\n";
        if (l.order) {
            os << "order = " << *l.order << "\n";
        }
        os << "parent_variables = " << join(l.parent_context->names()) << "\n";
        os << "parent_f = " << l.parent_f.to_string() << "\n";
        os << "parent_g = " << l.parent_g.to_string() << "\n";
        for (const auto &a : l.assignments) {
            os << a.variable << " = " << monomial_to_string(a.value, *l.combined_context) << "\n";
        }
    }
    if (s.erratum) {
        os << "\n[erratum]\n";
        if (!s.erratum->note.empty()) {
            os << "note = " << s.erratum->note << "\n";
        }
        for (const auto &a : s.erratum->assignments) {
            os << a.variable << " = " << monomial_to_string(a.value, *s.lift->combined_context) << "\n";
        }
    }
    return os.str();
}

/// The lift assignments, with erratum overrides applied when requested,
/// converted to parent/child parts.
inline std::vector<LiftAssignment> lift_assignments(const CodeSpec &s, bool apply_erratum) {
    if (!s.lift) {
        throw Error("spec '" + s.name + "' has no [lift] section");
    }
    const auto &l = *s.lift;
    std::vector<AssignmentSpec> merged = l.assignments;
    if (apply_erratum && s.erratum) {
        for (const auto &e : s.erratum->assignments) {
            bool replaced = false;
            for (auto &a : merged) {
                if (a.variable == e.variable) {
                    a = e;
                    replaced = true;
                }
            }
            if (!replaced) {
                merged.push_back(e);
            }
        }
    }
    const size_t k = l.parent_context->dimension();
    const size_t d = s.context->dimension();
    std::vector<LiftAssignment> out;
    for (const auto &a : merged) {
        LiftAssignment la{*l.parent_context->index_of(a.variable), Monomial::one(k), Monomial::one(d)};
        for (size_t i = 0; i < k; i++) {
            la.parent_part.exponents[i] = a.value.exponents[i];
        }
        for (size_t i = 0; i < d; i++) {
            la.child_part.exponents[i] = a.value.exponents[k + i];
        }
        out.push_back(std::move(la));
    }
    return out;
}

}  // namespace ticodes

#endif
