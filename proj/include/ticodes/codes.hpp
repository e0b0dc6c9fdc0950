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

// Symbolic two-block codes X(f, g) Z(g-bar, f-bar) and the operations that
// relate them to hypergraph-product parents: indecomposability, parent lifts,
// compactification, family-tree parity classes and distance-bound reports.

#ifndef TICODES_CODES_HPP
#define TICODES_CODES_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "ticodes/error.hpp"
#include "ticodes/lattice.hpp"
#include "ticodes/poly.hpp"

namespace ticodes {

class DecomposableError : public Error {
  public:
    using Error::Error;
};

class TwistViolation : public Error {
  public:
    using Error::Error;
};

/// X checks f (left) and g (right); Z checks g-bar (left) and f-bar (right).
/// f and g may share variables.
class TwoBlockCode {
  public:
    TwoBlockCode(LaurentPoly f, LaurentPoly g) : f_(std::move(f)), g_(std::move(g)) {
        require_same_context(f_.context(), g_.context(), "two-block code");
    }

    const ContextPtr &context() const {
        return f_.context();
    }
    const LaurentPoly &f() const {
        return f_;
    }
    const LaurentPoly &g() const {
        return g_;
    }

    /// Left and right blocks of the Z stabilizer.
    LaurentPoly z_left() const {
        return g_.antipode();
    }
    LaurentPoly z_right() const {
        return f_.antipode();
    }

    /// Total check weight w = |f| + |g|.
    size_t weight() const {
        return f_.weight() + g_.weight();
    }

    /// Variables appearing in f or g.
    std::vector<size_t> unique_variables() const {
        std::set<size_t> s;
        for (size_t i : f_.support_variables()) {
            s.insert(i);
        }
        for (size_t i : g_.support_variables()) {
            s.insert(i);
        }
        return {s.begin(), s.end()};
    }

    /// Both generators divided by their lexicographically smallest monomial.
    TwoBlockCode normalized() const {
        return TwoBlockCode(ticodes::normalized(f_), ticodes::normalized(g_));
    }

    /// True when f and g involve disjoint variable sets.
    bool is_hypergraph_product() const {
        auto a = f_.support_variables();
        auto b = g_.support_variables();
        std::vector<size_t> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        return common.empty();
    }

    /// Equal up to independent monomial shifts of f and g.
    bool shift_equivalent(const TwoBlockCode &o) const {
        return ticodes::shift_equivalent(f_, o.f_) && ticodes::shift_equivalent(g_, o.g_);
    }

    bool operator==(const TwoBlockCode &o) const {
        return f_ == o.f_ && g_ == o.g_;
    }

  private:
    LaurentPoly f_;
    LaurentPoly g_;
};

/// A two-block code whose generators act on disjoint variables.
class HGPCode {
  public:
    explicit HGPCode(TwoBlockCode code) : code_(std::move(code)) {
        if (!code_.is_hypergraph_product()) {
            throw Error("hypergraph product requires f and g over disjoint variables");
        }
    }
    const TwoBlockCode &code() const {
        return code_;
    }

  private:
    TwoBlockCode code_;
};

/// Hypergraph product of classical generators over separate variable sets.
/// The result lives in the concatenated context (f's variables first).
inline HGPCode hgp(const LaurentPoly &f, const LaurentPoly &g) {
    std::vector<std::string> names = f.context()->names();
    for (const auto &n : g.context()->names()) {
        if (f.context()->index_of(n)) {
            throw Error("hgp: variable '" + n + "' appears in both generators");
        }
        names.push_back(n);
    }
    ContextPtr ctx = make_context(std::move(names));
    return HGPCode(TwoBlockCode(f.embed(ctx), g.embed(ctx)));
}

/// f g + g f = 0 in the group algebra.
inline bool css_commutes_symbolically(const TwoBlockCode &c) {
    return (c.f() * c.g() + c.g() * c.f()).is_zero();
}

/// Exponent vectors of the non-constant monomials of f and g, f first.
inline std::vector<std::vector<int64_t>> monomial_group_vectors(const TwoBlockCode &c) {
    std::vector<std::vector<int64_t>> out;
    for (const LaurentPoly *p : {&c.f(), &c.g()}) {
        for (const auto &t : p->terms()) {
            if (!t.is_one()) {
                out.push_back(t.exponents);
            }
        }
    }
    return out;
}

/// [Z^d : monomial group] for the normalized code; nullopt when infinite.
inline std::optional<int64_t> monomial_lattice_index(const TwoBlockCode &c) {
    return lattice_index(monomial_group_vectors(c.normalized()), c.context()->dimension());
}

/// The monomial group of the normalized generators is all of Z^d.
inline bool is_indecomposable(const TwoBlockCode &c) {
    if (c.f().is_zero() || c.g().is_zero()) {
        return false;
    }
    return lattice_saturates(monomial_group_vectors(c.normalized()), c.context()->dimension());
}

namespace detail {

/// Term differences of f and g after reduction on the finite group, where
/// terms equal modulo the relations cancel in pairs, followed by the relation
/// vectors. Empty when either generator vanishes on the group.
inline std::optional<std::vector<std::vector<int64_t>>> finite_generating_vectors(const TwoBlockCode &c,
                                                                                  const GroupPresentation &pres) {
    auto q = quotient(pres);
    if (std::holds_alternative<InfiniteQuotient>(q)) {
        throw InfiniteQuotientError("presentation has an infinite quotient");
    }
    const auto &group = std::get<FiniteAbelianGroup>(q);
    std::vector<std::vector<int64_t>> out;
    for (const LaurentPoly *p : {&c.f(), &c.g()}) {
        std::vector<size_t> elems;
        for (const auto &t : p->terms()) {
            elems.push_back(group.reduce(t));
        }
        std::sort(elems.begin(), elems.end());
        std::vector<size_t> odd;
        for (size_t i = 0; i < elems.size();) {
            size_t j = i;
            while (j < elems.size() && elems[j] == elems[i]) {
                j++;
            }
            if ((j - i) % 2 == 1) {
                odd.push_back(elems[i]);
            }
            i = j;
        }
        if (odd.empty()) {
            return std::nullopt;
        }
        Monomial base = group.representative(odd[0]);
        for (size_t i = 1; i < odd.size(); i++) {
            out.push_back((group.representative(odd[i]) * base.inverse()).exponents);
        }
    }
    out.insert(out.end(), pres.relations.begin(), pres.relations.end());
    return out;
}

}  // namespace detail

/// Indecomposability of the finite instance on Z^d / <relations>: the term
/// differences of the reduced generators together with the relations
/// generate Z^d.
inline bool is_indecomposable_finite(const TwoBlockCode &c, const GroupPresentation &pres) {
    require_same_context(c.context(), pres.context, "is_indecomposable_finite");
    auto vecs = detail::finite_generating_vectors(c, pres);
    return vecs && lattice_saturates(*vecs, c.context()->dimension());
}

/// [Z^d : reduced term differences + relations]; the number of decoupled
/// sublattices of the finite instance.
inline int64_t finite_lattice_index(const TwoBlockCode &c, const GroupPresentation &pres) {
    require_same_context(c.context(), pres.context, "finite_lattice_index");
    auto vecs = detail::finite_generating_vectors(c, pres);
    if (!vecs) {
        throw Error("finite_lattice_index: a generator vanishes on the finite group");
    }
    return *lattice_index(*vecs, c.context()->dimension());
}

/// Prints a relation vector as `lhs = rhs`, solving for the last variable
/// with coefficient +-1, or as `prod = 1` when there is none.
inline std::string relation_to_string(const std::vector<int64_t> &rel, const VarContext &ctx) {
    const size_t d = rel.size();
    for (size_t j = d; j-- > 0;) {
        if (rel[j] == 1 || rel[j] == -1) {
            Monomial rhs = Monomial::one(d);
            for (size_t i = 0; i < d; i++) {
                if (i != j) {
                    rhs.exponents[i] = rel[j] == 1 ? -rel[i] : rel[i];
                }
            }
            return ctx.name(j) + " = " + monomial_to_string(rhs, ctx);
        }
    }
    Monomial lhs = Monomial::one(d), rhs = Monomial::one(d);
    for (size_t i = 0; i < d; i++) {
        (rel[i] > 0 ? lhs : rhs).exponents[i] = std::llabs(rel[i]);
    }
    return monomial_to_string(lhs, ctx) + " = " + monomial_to_string(rhs, ctx);
}

/// Canonical (Hermite) basis of the lattice spanned by a set of twists.
inline IntMatrix canonical_twist_basis(const std::vector<std::vector<int64_t>> &twists, size_t d) {
    return hermite_normal_form(stack_vectors(twists, d));
}

/// An HGP parent over fresh variables a_1..a_k1, b_1..b_k2 together with the
/// substitution and twisted boundary conditions that compactify it to a child.
struct ParentLift {
    HGPCode parent;
    Substitution substitution;
    std::vector<std::vector<int64_t>> twists;
    /// Parent variables whose images form a basis of the child lattice;
    /// empty when no such subset exists and the twists are a plain kernel basis.
    std::vector<size_t> independent;

    const ContextPtr &parent_context() const {
        return parent.code().context();
    }
    IntMatrix canonical_twists() const {
        return canonical_twist_basis(twists, parent_context()->dimension());
    }
};

/// Parent polynomials 1 + a_1 + ... + a_k1 and 1 + b_1 + ... + b_k2.
inline HGPCode standard_parent(size_t k1, size_t k2) {
    std::vector<std::string> a, b;
    for (size_t i = 1; i <= k1; i++) {
        a.push_back("a" + std::to_string(i));
    }
    for (size_t j = 1; j <= k2; j++) {
        b.push_back("b" + std::to_string(j));
    }
    auto sum_of_vars = [](const ContextPtr &ctx) {
        LaurentPoly p = LaurentPoly::one(ctx);
        for (size_t i = 0; i < ctx->dimension(); i++) {
            p = p + LaurentPoly::variable(ctx, i);
        }
        return p;
    };
    return hgp(sum_of_vars(make_context(a)), sum_of_vars(make_context(b)));
}

/// Child (f, g) obtained by substituting into the parent generators, after
/// checking that every twist relation maps to the trivial monomial.
inline TwoBlockCode compactify(const HGPCode &parent, const Substitution &substitution,
                               const std::vector<std::vector<int64_t>> &twists) {
    const ContextPtr &pctx = parent.code().context();
    for (const auto &t : twists) {
        if (t.size() != pctx->dimension()) {
            throw DimensionMismatch("twist vector length differs from parent dimension");
        }
        if (!substitution.apply(Monomial(t)).is_one()) {
            throw TwistViolation("twist '" + relation_to_string(t, *pctx) + "' is not satisfied by the substitution");
        }
    }
    return TwoBlockCode(substitute(parent.code().f(), substitution), substitute(parent.code().g(), substitution));
}

namespace detail {

inline bool next_combination(std::vector<size_t> &idx, size_t n) {
    const size_t k = idx.size();
    for (size_t i = k; i-- > 0;) {
        if (idx[i] < n - k + i) {
            idx[i]++;
            for (size_t j = i + 1; j < k; j++) {
                idx[j] = idx[j - 1] + 1;
            }
            return true;
        }
    }
    return false;
}

/// Parent variable order: total degree, then larger exponents of earlier
/// variables first (xy, x^2*y, y^3).
inline bool graded_before(const Monomial &a, const Monomial &b) {
    int64_t da = 0, db = 0;
    for (size_t i = 0; i < a.dimension(); i++) {
        da += a.exponents[i];
        db += b.exponents[i];
    }
    if (da != db) {
        return da < db;
    }
    return b.exponents < a.exponents;
}

}  // namespace detail

/// Lifts an indecomposable two-block code to its HGP parent.
///
/// Parent variables follow the graded order of the normalized terms, f before
/// g. The independent variables are the first d-subset in lexicographic index
/// order whose monomials form a unimodular basis; each remaining variable is
/// twisted to the product of those that reproduces its monomial. When no such subset exists the twists are a
/// Z-basis of the kernel of the exponent map.
inline ParentLift lift_to_parent(const TwoBlockCode &c, size_t max_subsets = 200000) {
    TwoBlockCode n = c.normalized();
    const size_t d = c.context()->dimension();
    const size_t k1 = n.f().weight() - 1;
    const size_t k2 = n.g().weight() - 1;
    if (k1 == 0 || k2 == 0) {
        throw Error("lift_to_parent: degenerate generator equal to a single monomial");
    }
    if (d > k1 + k2) {
        throw DecomposableError("lift_to_parent: more variables (" + std::to_string(d) + ") than monomial terms (" +
                                std::to_string(k1 + k2) + ")");
    }
    if (!is_indecomposable(n)) {
        throw DecomposableError("lift_to_parent: code is decomposable");
    }

    std::vector<Monomial> images;
    for (const LaurentPoly *p : {&n.f(), &n.g()}) {
        std::vector<Monomial> part;
        for (const auto &t : p->terms()) {
            if (!t.is_one()) {
                part.push_back(t);
            }
        }
        std::sort(part.begin(), part.end(), detail::graded_before);
        images.insert(images.end(), part.begin(), part.end());
    }
    const size_t k = images.size();
    HGPCode parent = standard_parent(k1, k2);
    Substitution subst{c.context(), images};

    // d x k exponent map E: column i is the exponent vector of parent variable i.
    IntMatrix E(d, k);
    for (size_t i = 0; i < k; i++) {
        for (size_t r = 0; r < d; r++) {
            E(r, i) = images[i].exponents[r];
        }
    }

    std::vector<size_t> chosen;
    std::vector<size_t> idx(d);
    for (size_t i = 0; i < d; i++) {
        idx[i] = i;
    }
    size_t tried = 0;
    do {
        IntMatrix B(d, d);
        for (size_t r = 0; r < d; r++) {
            for (size_t j = 0; j < d; j++) {
                B(r, j) = E(r, idx[j]);
            }
        }
        int64_t det = B.determinant();
        if (det == 1 || det == -1) {
            chosen = idx;
            break;
        }
    } while (++tried < max_subsets && detail::next_combination(idx, k));

    std::vector<std::vector<int64_t>> twists;
    if (!chosen.empty()) {
        IntMatrix B(d, d);
        for (size_t r = 0; r < d; r++) {
            for (size_t j = 0; j < d; j++) {
                B(r, j) = E(r, chosen[j]);
            }
        }
        // B unimodular: U B V = I, so B^{-1} = V U.
        SmithForm sf = smith_normal_form(B);
        IntMatrix Binv = sf.V * sf.U;
        std::vector<char> is_chosen(k, 0);
        for (size_t j : chosen) {
            is_chosen[j] = 1;
        }
        for (size_t j = 0; j < k; j++) {
            if (is_chosen[j]) {
                continue;
            }
            std::vector<int64_t> rel(k, 0);
            rel[j] = 1;
            for (size_t a = 0; a < d; a++) {
                int64_t coeff = 0;
                for (size_t r = 0; r < d; r++) {
                    coeff = detail::checked_add(coeff, detail::checked_mul(Binv(a, r), E(r, j)));
                }
                rel[chosen[a]] = detail::checked_sub(rel[chosen[a]], coeff);
            }
            twists.push_back(std::move(rel));
        }
    } else {
        twists = hermite_normal_form(integer_kernel(E)).to_rows();
    }
    return ParentLift{std::move(parent), std::move(subst), std::move(twists), std::move(chosen)};
}

/// One parent-variable assignment from a lift description: the variable maps
/// to child_part * (image of parent_part). Exactly one part is non-trivial
/// unless both are (the variable maps to 1).
struct LiftAssignment {
    size_t variable;
    Monomial parent_part;
    Monomial child_part;
};

/// Substitution and twist relations implied by a list of assignments.
struct ResolvedLift {
    Substitution substitution;
    std::vector<std::vector<int64_t>> twists;
};

/// Assignments to child monomials fix images directly; assignments to parent
/// monomials are twists `var = expr` whose image follows from the others.
inline ResolvedLift resolve_lift(const ContextPtr &parent_ctx, const ContextPtr &child_ctx,
                                 const std::vector<LiftAssignment> &assignments) {
    const size_t k = parent_ctx->dimension();
    std::vector<std::optional<Monomial>> image(k);
    std::vector<std::vector<int64_t>> twists;
    std::vector<const LiftAssignment *> pending;
    for (const auto &a : assignments) {
        if (a.variable >= k || a.parent_part.dimension() != k || a.child_part.dimension() != child_ctx->dimension()) {
            throw DimensionMismatch("lift assignment does not match the parent/child contexts");
        }
        bool has_parent = !a.parent_part.is_one();
        bool has_child = !a.child_part.is_one();
        if (has_parent && has_child) {
            throw Error("lift assignment for '" + parent_ctx->name(a.variable) +
                        "' mixes parent and child variables");
        }
        if (has_parent) {
            std::vector<int64_t> rel = a.parent_part.inverse().exponents;
            rel[a.variable] = detail::checked_add(rel[a.variable], 1);
            twists.push_back(std::move(rel));
            pending.push_back(&a);
        } else {
            if (image[a.variable] && *image[a.variable] != a.child_part) {
                throw TwistViolation("conflicting images for '" + parent_ctx->name(a.variable) + "'");
            }
            image[a.variable] = a.child_part;
        }
    }
    // Propagate twist images until nothing changes.
    bool progress = true;
    while (progress) {
        progress = false;
        for (const LiftAssignment *a : pending) {
            if (image[a->variable]) {
                continue;
            }
            bool ready = true;
            Monomial img = Monomial::one(child_ctx->dimension());
            for (size_t i = 0; i < k && ready; i++) {
                int64_t e = a->parent_part.exponents[i];
                if (e == 0) {
                    continue;
                }
                if (!image[i]) {
                    ready = false;
                } else {
                    img = img * image[i]->pow(e);
                }
            }
            if (ready) {
                image[a->variable] = img;
                progress = true;
            }
        }
    }
    Substitution s{child_ctx, {}};
    for (size_t i = 0; i < k; i++) {
        if (!image[i]) {
            throw Error("parent variable '" + parent_ctx->name(i) + "' has no image");
        }
        s.images.push_back(*image[i]);
    }
    return ResolvedLift{std::move(s), std::move(twists)};
}

/// Unordered parity pair of the generator weights.
struct FamilyTreeTag {
    /// Number of odd-weight generators: 0 (even,even), 1 (odd,even), 2 (odd,odd).
    int odd_count = 0;

    std::string to_string() const {
        switch (odd_count) {
            case 0:
                return "(even,even)";
            case 1:
                return "(odd,even)";
            default:
                return "(odd,odd)";
        }
    }
    bool operator==(const FamilyTreeTag &) const = default;
};

inline FamilyTreeTag family_tree(const TwoBlockCode &c) {
    return FamilyTreeTag{static_cast<int>(c.f().weight() % 2) + static_cast<int>(c.g().weight() % 2)};
}

/// D = min(v, w - 2) (zero when w < 2).
inline size_t locality_dimension(size_t w, size_t v) {
    if (w < 2) {
        return 0;
    }
    return std::min(v, w - 2);
}

/// Distance-bound scalings for a fixed-weight code family evaluated at a
/// concrete n. Asymptotic statements carry no constants, so the numbers are
/// advisory.
struct BoundReport {
    size_t w = 0;
    size_t v = 0;
    size_t D = 0;
    double n = 0;
    bool indecomposable = false;
    bool applicable = false;
    std::optional<double> distance_upper_scale;  // n^{1 - 1/D}
    std::optional<double> distance_lower_scale;  // n^{1/D}
    std::optional<double> tradeoff_exponent;     // 2 / (D - 1)
    std::optional<size_t> observed_d;
    std::optional<size_t> observed_k;
    std::optional<double> observed_tradeoff;  // k d^{2/(D-1)}
    std::vector<std::string> statements;
    std::vector<std::string> violations;
};

inline std::string format_number(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4f", x);
    return buf;
}

inline BoundReport bound_report(const TwoBlockCode &c, double n, std::optional<size_t> observed_k = std::nullopt,
                                std::optional<size_t> observed_d = std::nullopt) {
    BoundReport r;
    r.w = c.weight();
    r.v = c.unique_variables().size();
    r.D = locality_dimension(r.w, r.v);
    r.n = n;
    r.observed_k = observed_k;
    r.observed_d = observed_d;
    r.indecomposable = is_indecomposable(c);
    if (!r.indecomposable) {
        r.violations.push_back("code is decomposable");
    }
    if (r.w < 2 || r.v > r.w - 2) {
        r.violations.push_back("v = " + std::to_string(r.v) + " exceeds w - 2 = " +
                               std::to_string(r.w >= 2 ? r.w - 2 : 0));
    }
    if (r.D == 0) {
        r.violations.push_back("locality dimension is zero");
    }
    if (!(n > 0)) {
        r.violations.push_back("n must be positive");
    }
    r.applicable = r.violations.empty();
    if (r.D == 0 || !(n > 0)) {
        return r;
    }
    const double D = static_cast<double>(r.D);
    r.distance_upper_scale = std::pow(n, 1.0 - 1.0 / D);
    r.distance_lower_scale = std::pow(n, 1.0 / D);
    const std::string Ds = std::to_string(r.D);
    const std::string ns = format_number(n);
    r.statements.push_back("locality dimension D = min(v, w - 2) = min(" + std::to_string(r.v) + ", " +
                           std::to_string(r.w - 2) + ") = " + Ds);
    r.statements.push_back("d <= O(n^(1 - 1/" + Ds + ")); n^(1 - 1/" + Ds + ") = " +
                           format_number(*r.distance_upper_scale) + " at n = " + ns);
    if (r.D >= 2) {
        r.tradeoff_exponent = 2.0 / (D - 1.0);
        r.statements.push_back("k d^(2/(" + Ds + " - 1)) <= O(n); n = " + ns);
    } else {
        r.statements.push_back("k d^(2/(D - 1)) <= O(n) is undefined for D = 1");
    }
    r.statements.push_back("O(n^(1/" + Ds + ")) <= d when no string-like operators remain in all but two directions; "
                           "n^(1/" + Ds + ") = " + format_number(*r.distance_lower_scale));
    if (observed_k && observed_d && r.tradeoff_exponent) {
        r.observed_tradeoff = static_cast<double>(*observed_k) *
                              std::pow(static_cast<double>(*observed_d), *r.tradeoff_exponent);
    }
    return r;
}

}  // namespace ticodes

#endif
