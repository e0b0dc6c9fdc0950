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

// Integer lattices: Smith and Hermite normal forms, integer kernels, and
// finite quotients Z^d / <relations> used as compactified lattices.

#ifndef TICODES_LATTICE_HPP
#define TICODES_LATTICE_HPP

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ticodes/error.hpp"
#include "ticodes/poly.hpp"

namespace ticodes {

class IntMatrix {
  public:
    IntMatrix() = default;
    IntMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    }

    static IntMatrix identity(size_t n) {
        IntMatrix m(n, n);
        for (size_t i = 0; i < n; i++) {
            m(i, i) = 1;
        }
        return m;
    }

    /// All rows must share one length; `cols` is used when `rows` is empty.
    static IntMatrix from_rows(const std::vector<std::vector<int64_t>> &rows, size_t cols = 0) {
        if (!rows.empty()) {
            cols = rows.front().size();
        }
        IntMatrix m(rows.size(), cols);
        for (size_t i = 0; i < rows.size(); i++) {
            if (rows[i].size() != cols) {
                throw DimensionMismatch("IntMatrix::from_rows: ragged rows");
            }
            for (size_t j = 0; j < cols; j++) {
                m(i, j) = rows[i][j];
            }
        }
        return m;
    }

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }

    int64_t &operator()(size_t i, size_t j) {
        return data_[i * cols_ + j];
    }
    int64_t operator()(size_t i, size_t j) const {
        return data_[i * cols_ + j];
    }

    std::vector<int64_t> row(size_t i) const {
        return {data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_};
    }
    std::vector<int64_t> col(size_t j) const {
        std::vector<int64_t> out(rows_);
        for (size_t i = 0; i < rows_; i++) {
            out[i] = (*this)(i, j);
        }
        return out;
    }
    std::vector<std::vector<int64_t>> to_rows() const {
        std::vector<std::vector<int64_t>> out;
        for (size_t i = 0; i < rows_; i++) {
            out.push_back(row(i));
        }
        return out;
    }

    IntMatrix transpose() const {
        IntMatrix t(cols_, rows_);
        for (size_t i = 0; i < rows_; i++) {
            for (size_t j = 0; j < cols_; j++) {
                t(j, i) = (*this)(i, j);
            }
        }
        return t;
    }

    IntMatrix operator*(const IntMatrix &o) const {
        if (cols_ != o.rows_) {
            throw DimensionMismatch("IntMatrix product: inner dimensions differ");
        }
        IntMatrix r(rows_, o.cols_);
        for (size_t i = 0; i < rows_; i++) {
            for (size_t j = 0; j < o.cols_; j++) {
                int64_t acc = 0;
                for (size_t k = 0; k < cols_; k++) {
                    acc = detail::checked_add(acc, detail::checked_mul((*this)(i, k), o(k, j)));
                }
                r(i, j) = acc;
            }
        }
        return r;
    }

    bool is_diagonal() const {
        for (size_t i = 0; i < rows_; i++) {
            for (size_t j = 0; j < cols_; j++) {
                if (i != j && (*this)(i, j) != 0) {
                    return false;
                }
            }
        }
        return true;
    }

    /// Fraction-free (Bareiss) determinant; square matrices only.
    int64_t determinant() const {
        if (rows_ != cols_) {
            throw DimensionMismatch("determinant of a non-square matrix");
        }
        size_t n = rows_;
        if (n == 0) {
            return 1;
        }
        std::vector<__int128> a(data_.begin(), data_.end());
        auto at = [&](size_t i, size_t j) -> __int128 & { return a[i * n + j]; };
        __int128 prev = 1;
        int sign = 1;
        for (size_t k = 0; k + 1 < n; k++) {
            if (at(k, k) == 0) {
                size_t p = k + 1;
                while (p < n && at(p, k) == 0) {
                    p++;
                }
                if (p == n) {
                    return 0;
                }
                for (size_t j = 0; j < n; j++) {
                    std::swap(at(k, j), at(p, j));
                }
                sign = -sign;
            }
            for (size_t i = k + 1; i < n; i++) {
                for (size_t j = k + 1; j < n; j++) {
                    at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
                }
            }
            prev = at(k, k);
        }
        __int128 det = at(n - 1, n - 1) * sign;
        if (det > INT64_MAX || det < INT64_MIN) {
            throw OverflowError("determinant exceeds 64 bits");
        }
        return static_cast<int64_t>(det);
    }

    bool operator==(const IntMatrix &) const = default;

    // Elementary operations used by the normal-form routines.
    void swap_rows(size_t a, size_t b) {
        for (size_t j = 0; j < cols_; j++) {
            std::swap((*this)(a, j), (*this)(b, j));
        }
    }
    void swap_cols(size_t a, size_t b) {
        for (size_t i = 0; i < rows_; i++) {
            std::swap((*this)(i, a), (*this)(i, b));
        }
    }
    /// row[dst] += q * row[src]
    void add_row(size_t dst, size_t src, int64_t q) {
        if (q == 0) {
            return;
        }
        for (size_t j = 0; j < cols_; j++) {
            (*this)(dst, j) = detail::checked_add((*this)(dst, j), detail::checked_mul(q, (*this)(src, j)));
        }
    }
    /// col[dst] += q * col[src]
    void add_col(size_t dst, size_t src, int64_t q) {
        if (q == 0) {
            return;
        }
        for (size_t i = 0; i < rows_; i++) {
            (*this)(i, dst) = detail::checked_add((*this)(i, dst), detail::checked_mul(q, (*this)(i, src)));
        }
    }
    void negate_row(size_t r) {
        for (size_t j = 0; j < cols_; j++) {
            (*this)(r, j) = detail::checked_neg((*this)(r, j));
        }
    }
    void negate_col(size_t c) {
        for (size_t i = 0; i < rows_; i++) {
            (*this)(i, c) = detail::checked_neg((*this)(i, c));
        }
    }

  private:
    size_t rows_ = 0;
    size_t cols_ = 0;
    std::vector<int64_t> data_;
};

/// U * M * V = S with U, V unimodular and S diagonal, S(i,i) | S(i+1,i+1).
/// `V_inverse` is V^{-1}, tracked alongside V.
struct SmithForm {
    IntMatrix U;
    IntMatrix S;
    IntMatrix V;
    IntMatrix V_inverse;
    size_t rank = 0;

    std::vector<int64_t> diagonal() const {
        std::vector<int64_t> d;
        for (size_t i = 0; i < std::min(S.rows(), S.cols()); i++) {
            d.push_back(S(i, i));
        }
        return d;
    }
};

/// Smallest-absolute-value pivoting with explicit transform tracking.
inline SmithForm smith_normal_form(const IntMatrix &M) {
    const size_t m = M.rows();
    const size_t n = M.cols();
    SmithForm f{IntMatrix::identity(m), M, IntMatrix::identity(n), IntMatrix::identity(n), 0};
    IntMatrix &S = f.S;

    // Column ops on V are mirrored by inverse row ops on V^{-1}.
    auto col_add = [&](size_t dst, size_t src, int64_t q) {
        S.add_col(dst, src, q);
        f.V.add_col(dst, src, q);
        f.V_inverse.add_row(src, dst, detail::checked_neg(q));
    };
    auto col_swap = [&](size_t a, size_t b) {
        S.swap_cols(a, b);
        f.V.swap_cols(a, b);
        f.V_inverse.swap_rows(a, b);
    };
    auto row_add = [&](size_t dst, size_t src, int64_t q) {
        S.add_row(dst, src, q);
        f.U.add_row(dst, src, q);
    };
    auto row_swap = [&](size_t a, size_t b) {
        S.swap_rows(a, b);
        f.U.swap_rows(a, b);
    };

    size_t t = 0;
    bool exhausted = false;
    for (; t < std::min(m, n) && !exhausted; t++) {
        while (true) {
            // Pivot: smallest nonzero |entry| in the trailing block.
            size_t pi = m, pj = n;
            int64_t best = 0;
            for (size_t i = t; i < m; i++) {
                for (size_t j = t; j < n; j++) {
                    int64_t a = S(i, j);
                    if (a != 0 && (best == 0 || std::llabs(a) < best)) {
                        best = std::llabs(a);
                        pi = i;
                        pj = j;
                    }
                }
            }
            if (best == 0) {
                exhausted = true;
                break;
            }
            if (pi != t) {
                row_swap(pi, t);
            }
            if (pj != t) {
                col_swap(pj, t);
            }
            int64_t p = S(t, t);
            bool clean = true;
            for (size_t i = t + 1; i < m; i++) {
                if (S(i, t) != 0) {
                    row_add(i, t, detail::checked_neg(S(i, t) / p));
                    clean = clean && S(i, t) == 0;
                }
            }
            for (size_t j = t + 1; j < n; j++) {
                if (S(t, j) != 0) {
                    col_add(j, t, detail::checked_neg(S(t, j) / p));
                    clean = clean && S(t, j) == 0;
                }
            }
            if (!clean) {
                continue;
            }
            // Enforce divisibility into the trailing block.
            bool divides = true;
            for (size_t i = t + 1; i < m && divides; i++) {
                for (size_t j = t + 1; j < n; j++) {
                    if (S(i, j) % p != 0) {
                        row_add(t, i, 1);
                        divides = false;
                        break;
                    }
                }
            }
            if (divides) {
                break;
            }
        }
        if (exhausted) {
            break;
        }
        if (S(t, t) < 0) {
            S.negate_row(t);
            f.U.negate_row(t);
        }
    }
    f.rank = t;
    return f;
}

/// Row-style Hermite normal form of the lattice spanned by the rows of M.
/// Zero rows are dropped; pivots are positive and entries above a pivot lie in
/// [0, pivot). Two generating sets of the same lattice give the same result.
inline IntMatrix hermite_normal_form(const IntMatrix &M) {
    IntMatrix A = M;
    const size_t m = A.rows();
    const size_t n = A.cols();
    size_t r = 0;
    for (size_t c = 0; c < n && r < m; c++) {
        while (true) {
            size_t piv = m;
            int64_t best = 0;
            for (size_t i = r; i < m; i++) {
                int64_t a = A(i, c);
                if (a != 0 && (best == 0 || std::llabs(a) < best)) {
                    best = std::llabs(a);
                    piv = i;
                }
            }
            if (piv == m) {
                break;
            }
            if (piv != r) {
                A.swap_rows(piv, r);
            }
            bool clean = true;
            for (size_t i = r + 1; i < m; i++) {
                if (A(i, c) != 0) {
                    A.add_row(i, r, detail::checked_neg(A(i, c) / A(r, c)));
                    clean = clean && A(i, c) == 0;
                }
            }
            if (clean) {
                break;
            }
        }
        if (A(r, c) == 0) {
            continue;
        }
        if (A(r, c) < 0) {
            A.negate_row(r);
        }
        int64_t p = A(r, c);
        for (size_t i = 0; i < r; i++) {
            int64_t q = A(i, c) / p;
            if (detail::mod_floor(A(i, c), p) != A(i, c) - q * p) {
                q -= 1;
            }
            A.add_row(i, r, detail::checked_neg(q));
        }
        r++;
    }
    IntMatrix out(r, n);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < n; j++) {
            out(i, j) = A(i, j);
        }
    }
    return out;
}

/// Z-basis (as rows) of { x in Z^cols : E x = 0 }.
inline IntMatrix integer_kernel(const IntMatrix &E) {
    SmithForm f = smith_normal_form(E);
    IntMatrix K(E.cols() - f.rank, E.cols());
    for (size_t j = f.rank; j < E.cols(); j++) {
        for (size_t i = 0; i < E.cols(); i++) {
            K(j - f.rank, i) = f.V(i, j);
        }
    }
    return K;
}

/// Stacks integer vectors of length d as rows.
inline IntMatrix stack_vectors(const std::vector<std::vector<int64_t>> &vectors, size_t d) {
    for (const auto &v : vectors) {
        if (v.size() != d) {
            throw DimensionMismatch("lattice vector length differs from dimension");
        }
    }
    return IntMatrix::from_rows(vectors, d);
}

/// Index [Z^d : <vectors>]; nullopt when the generated lattice has rank < d.
inline std::optional<int64_t> lattice_index(const std::vector<std::vector<int64_t>> &vectors, size_t d) {
    if (d == 0) {
        return 1;
    }
    SmithForm f = smith_normal_form(stack_vectors(vectors, d));
    if (f.rank < d) {
        return std::nullopt;
    }
    int64_t idx = 1;
    for (size_t i = 0; i < d; i++) {
        idx = detail::checked_mul(idx, f.S(i, i));
    }
    return idx;
}

/// True iff the vectors generate all of Z^d.
inline bool lattice_saturates(const std::vector<std::vector<int64_t>> &vectors, size_t d) {
    auto idx = lattice_index(vectors, d);
    return idx && *idx == 1;
}

/// Generators plus relation vectors v, each meaning prod_i x_i^{v_i} = 1.
struct GroupPresentation {
    ContextPtr context;
    std::vector<std::vector<int64_t>> relations;

    GroupPresentation(ContextPtr ctx, std::vector<std::vector<int64_t>> rels)
        : context(std::move(ctx)), relations(std::move(rels)) {
        for (const auto &r : relations) {
            if (r.size() != context->dimension()) {
                throw DimensionMismatch("relation vector length differs from context dimension");
            }
        }
    }

    /// Periodic boundary conditions x_i^{L_i} = 1.
    static GroupPresentation torus(const ContextPtr &ctx, const std::vector<int64_t> &lengths) {
        if (lengths.size() != ctx->dimension()) {
            throw DimensionMismatch("torus: one length per variable required");
        }
        std::vector<std::vector<int64_t>> rels;
        for (size_t i = 0; i < lengths.size(); i++) {
            std::vector<int64_t> r(lengths.size(), 0);
            r[i] = lengths[i];
            rels.push_back(std::move(r));
        }
        return GroupPresentation(ctx, std::move(rels));
    }

    /// Lengths when the presentation is exactly one x_i^{L_i} = 1 per variable.
    std::optional<std::vector<int64_t>> product_torus_lengths() const {
        const size_t d = context->dimension();
        std::vector<int64_t> lengths(d, 0);
        if (relations.size() != d) {
            return std::nullopt;
        }
        for (const auto &r : relations) {
            size_t nz = 0, where = 0;
            for (size_t i = 0; i < d; i++) {
                if (r[i] != 0) {
                    nz++;
                    where = i;
                }
            }
            if (nz != 1 || lengths[where] != 0) {
                return std::nullopt;
            }
            lengths[where] = std::llabs(r[where]);
        }
        return lengths;
    }
};

/// Quotient with free rank > 0; `torsion` lists the finite invariant factors.
struct InfiniteQuotient {
    size_t free_rank = 0;
    std::vector<int64_t> torsion;
};

class FiniteAbelianGroup;
std::variant<FiniteAbelianGroup, InfiniteQuotient> quotient(const GroupPresentation &pres);

/// Z^d / <relations> when that quotient is finite. Elements are indexed
/// 0..order-1 in mixed radix over `moduli()` (first coordinate most
/// significant); index 0 is the identity.
class FiniteAbelianGroup {
  public:
    const ContextPtr &context() const {
        return ctx_;
    }
    /// d_1 | d_2 | ... | d_r, each >= 2.
    const std::vector<int64_t> &invariant_factors() const {
        return factors_;
    }
    /// Radix of each indexing coordinate.
    const std::vector<int64_t> &moduli() const {
        return moduli_;
    }
    size_t order() const {
        return order_;
    }
    const std::vector<std::vector<int64_t>> &relations() const {
        return relations_;
    }

    std::vector<int64_t> coordinates(const Monomial &m) const {
        if (m.dimension() != ctx_->dimension()) {
            throw DimensionMismatch("monomial is not in the presentation context");
        }
        std::vector<int64_t> c(moduli_.size(), 0);
        for (size_t j = 0; j < moduli_.size(); j++) {
            __int128 acc = 0;
            for (size_t i = 0; i < m.exponents.size(); i++) {
                acc += static_cast<__int128>(m.exponents[i] % moduli_[j]) * (coord_map_(i, j) % moduli_[j]);
                acc %= moduli_[j];
            }
            c[j] = detail::mod_floor(static_cast<int64_t>(acc), moduli_[j]);
        }
        return c;
    }

    size_t index_of_coordinates(const std::vector<int64_t> &c) const {
        size_t idx = 0;
        for (size_t j = 0; j < moduli_.size(); j++) {
            idx = idx * static_cast<size_t>(moduli_[j]) + static_cast<size_t>(c[j]);
        }
        return idx;
    }

    std::vector<int64_t> coordinates_of_index(size_t idx) const {
        std::vector<int64_t> c(moduli_.size(), 0);
        for (size_t j = moduli_.size(); j-- > 0;) {
            c[j] = static_cast<int64_t>(idx % static_cast<size_t>(moduli_[j]));
            idx /= static_cast<size_t>(moduli_[j]);
        }
        return c;
    }

    /// Canonical element index of the image of m in the quotient.
    size_t reduce(const Monomial &m) const {
        return index_of_coordinates(coordinates(m));
    }

    size_t add(size_t a, size_t b) const {
        auto ca = coordinates_of_index(a);
        auto cb = coordinates_of_index(b);
        for (size_t j = 0; j < ca.size(); j++) {
            ca[j] = (ca[j] + cb[j]) % moduli_[j];
        }
        return index_of_coordinates(ca);
    }

    size_t negate(size_t a) const {
        auto c = coordinates_of_index(a);
        for (size_t j = 0; j < c.size(); j++) {
            c[j] = (moduli_[j] - c[j]) % moduli_[j];
        }
        return index_of_coordinates(c);
    }

    /// A monomial mapping to element `idx`.
    Monomial representative(size_t idx) const {
        auto c = coordinates_of_index(idx);
        const size_t d = ctx_->dimension();
        std::vector<int64_t> full(d, 0);
        for (size_t j = 0; j < c.size(); j++) {
            full[coord_slot_[j]] = c[j];
        }
        Monomial m = Monomial::one(d);
        for (size_t i = 0; i < d; i++) {
            int64_t acc = 0;
            for (size_t k = 0; k < d; k++) {
                acc = detail::checked_add(acc, detail::checked_mul(full[k], coord_inverse_(k, i)));
            }
            m.exponents[i] = acc;
        }
        return m;
    }

  private:
    friend std::variant<FiniteAbelianGroup, InfiniteQuotient> quotient(const GroupPresentation &);

    ContextPtr ctx_;
    std::vector<std::vector<int64_t>> relations_;
    std::vector<int64_t> factors_;
    std::vector<int64_t> moduli_;
    IntMatrix coord_map_;      // d x c: coordinates(e) = e * coord_map_ mod moduli
    IntMatrix coord_inverse_;  // d x d: full coordinate vector -> exponents
    std::vector<size_t> coord_slot_;
    size_t order_ = 1;
};

/// Invariant-factor decomposition of Z^d / <relations>.
///
/// Pure periodic tori (one x_i^{L_i} = 1 per variable) keep the natural
/// coordinates so that element x_1^{c_1}...x_d^{c_d} has index
/// c_1 L_2...L_d + ... + c_d, matching Kronecker-product circulants.
/// Otherwise the indexing coordinates are the SNF invariant factors.
inline std::variant<FiniteAbelianGroup, InfiniteQuotient> quotient(const GroupPresentation &pres) {
    const size_t d = pres.context->dimension();
    IntMatrix R = IntMatrix::from_rows(pres.relations, d);
    SmithForm f = smith_normal_form(R);
    std::vector<int64_t> factors;
    for (size_t i = 0; i < f.rank; i++) {
        if (f.S(i, i) > 1) {
            factors.push_back(f.S(i, i));
        }
    }
    if (f.rank < d) {
        return InfiniteQuotient{d - f.rank, factors};
    }

    FiniteAbelianGroup g;
    g.ctx_ = pres.context;
    g.relations_ = pres.relations;
    g.factors_ = factors;
    g.order_ = 1;
    for (int64_t x : factors) {
        g.order_ = static_cast<size_t>(detail::checked_mul(static_cast<int64_t>(g.order_), x));
    }

    if (auto lengths = pres.product_torus_lengths()) {
        g.coord_map_ = IntMatrix::identity(d);
        g.coord_inverse_ = IntMatrix::identity(d);
        g.moduli_ = *lengths;
        for (size_t i = 0; i < d; i++) {
            g.coord_slot_.push_back(i);
        }
        return g;
    }

    // e in rowspace(R) iff (e V)_i = 0 mod S(i,i); drop unit factors.
    g.coord_map_ = IntMatrix(d, factors.size());
    size_t c = 0;
    for (size_t i = 0; i < d; i++) {
        if (f.S(i, i) > 1) {
            for (size_t k = 0; k < d; k++) {
                g.coord_map_(k, c) = f.V(k, i);
            }
            g.moduli_.push_back(f.S(i, i));
            g.coord_slot_.push_back(i);
            c++;
        }
    }
    g.coord_inverse_ = f.V_inverse;
    return g;
}

/// Like quotient() but throws InfiniteQuotientError on an infinite result.
inline FiniteAbelianGroup finite_quotient(const GroupPresentation &pres) {
    auto q = quotient(pres);
    if (auto *inf = std::get_if<InfiniteQuotient>(&q)) {
        throw InfiniteQuotientError("presentation does not define a finite lattice (free rank " +
                                    std::to_string(inf->free_rank) + ")");
    }
    return std::get<FiniteAbelianGroup>(std::move(q));
}

}  // namespace ticodes

#endif
