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

// Finite instances of symbolic codes: parity-check matrices on Z^d / <relations>.
//
// Qubit order is every left qubit in group-element order, then every right
// qubit. Check h of H_X touches left qubit h*m for m in f and right qubit h*m
// for m in g; H_Z uses g-bar on the left and f-bar on the right.

#ifndef TICODES_INSTANTIATE_HPP
#define TICODES_INSTANTIATE_HPP

#include <numeric>
#include <ostream>
#include <string>
#include <vector>

#include "ticodes/bitmatrix.hpp"
#include "ticodes/codes.hpp"
#include "ticodes/lattice.hpp"

namespace ticodes {

class CommutationFailure : public Error {
  public:
    using Error::Error;
};

enum class Sector { X, Z };

inline const char *sector_name(Sector s) {
    return s == Sector::X ? "X" : "Z";
}

struct CodeInstance {
    FiniteAbelianGroup group;
    BinaryMatrix hx;
    BinaryMatrix hz;

    size_t num_qubits() const {
        return hx.cols();
    }
    size_t left(size_t element) const {
        return element;
    }
    size_t right(size_t element) const {
        return group.order() + element;
    }

    /// Checks that detect errors of the given sector (H_Z for X errors).
    const BinaryMatrix &detecting_checks(Sector s) const {
        return s == Sector::X ? hz : hx;
    }
    /// Stabilizers of the same Pauli type as the sector.
    const BinaryMatrix &stabilizers(Sector s) const {
        return s == Sector::X ? hx : hz;
    }
};

/// Circulant-style matrix of p on a finite group: row h has ones at h*m.
inline BinaryMatrix instantiate_classical(const LaurentPoly &p, const FiniteAbelianGroup &group) {
    require_same_context(p.context(), group.context(), "instantiate_classical");
    const size_t N = group.order();
    BinaryMatrix H(N, N);
    std::vector<size_t> shifts;
    for (const auto &m : p.terms()) {
        shifts.push_back(group.reduce(m));
    }
    for (size_t h = 0; h < N; h++) {
        for (size_t s : shifts) {
            H.flip(h, group.add(h, s));
        }
    }
    return H;
}

inline BinaryMatrix instantiate_classical(const LaurentPoly &p, const GroupPresentation &pres) {
    return instantiate_classical(p, finite_quotient(pres));
}

inline CodeInstance instantiate(const TwoBlockCode &c, const GroupPresentation &pres) {
    require_same_context(c.context(), pres.context, "instantiate");
    FiniteAbelianGroup group = finite_quotient(pres);
    const size_t N = group.order();
    BinaryMatrix A = instantiate_classical(c.f(), group);
    BinaryMatrix B = instantiate_classical(c.g(), group);
    BinaryMatrix Bt = instantiate_classical(c.z_left(), group);
    BinaryMatrix At = instantiate_classical(c.z_right(), group);
    BinaryMatrix hx(N, 2 * N), hz(N, 2 * N);
    for (size_t r = 0; r < N; r++) {
        for (size_t col = 0; col < N; col++) {
            if (A.get(r, col)) {
                hx.set(r, col);
            }
            if (B.get(r, col)) {
                hx.set(r, N + col);
            }
            if (Bt.get(r, col)) {
                hz.set(r, col);
            }
            if (At.get(r, col)) {
                hz.set(r, N + col);
            }
        }
    }
    if (!hx.multiply_transpose(hz).is_zero()) {
        throw CommutationFailure("instantiate: H_X H_Z^T != 0");
    }
    return CodeInstance{std::move(group), std::move(hx), std::move(hz)};
}

struct CodeParams {
    size_t n = 0;
    size_t k = 0;
    size_t rank_hx = 0;
    size_t rank_hz = 0;
};

inline CodeParams params(const CodeInstance &inst) {
    CodeParams p;
    p.n = inst.num_qubits();
    p.rank_hx = inst.hx.rank();
    p.rank_hz = inst.hz.rank();
    p.k = p.n - p.rank_hx - p.rank_hz;
    return p;
}

namespace detail {

class UnionFind {
  public:
    explicit UnionFind(size_t n) : parent_(n) {
        std::iota(parent_.begin(), parent_.end(), size_t{0});
    }
    size_t find(size_t x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) {
            parent_[a] = b;
        }
    }

  private:
    std::vector<size_t> parent_;
};

}  // namespace detail

/// Connected components of the bipartite graph on checks (rows of every
/// matrix) and bits (shared columns).
inline size_t tanner_components(const std::vector<const BinaryMatrix *> &check_sets, size_t num_bits) {
    size_t total = num_bits;
    for (const auto *m : check_sets) {
        if (m->cols() != num_bits) {
            throw DimensionMismatch("tanner_components: column counts differ");
        }
        total += m->rows();
    }
    if (total == 0) {
        return 0;
    }
    detail::UnionFind uf(total);
    size_t offset = num_bits;
    for (const auto *m : check_sets) {
        for (size_t r = 0; r < m->rows(); r++) {
            for (size_t c : m->row(r).support()) {
                uf.unite(offset + r, c);
            }
        }
        offset += m->rows();
    }
    size_t count = 0;
    for (size_t i = 0; i < total; i++) {
        count += uf.find(i) == i;
    }
    return count;
}

inline size_t tanner_components(const CodeInstance &inst) {
    return tanner_components({&inst.hx, &inst.hz}, inst.num_qubits());
}

/// k representatives of the sector's logical operators: kernel of the
/// detecting checks, independent modulo the same-type stabilizers.
inline std::vector<BitVector> logical_basis(const CodeInstance &inst, Sector s) {
    const size_t n = inst.num_qubits();
    const BinaryMatrix &stab = inst.stabilizers(s);
    SpanBuilder span(n);
    for (size_t r = 0; r < stab.rows(); r++) {
        span.insert(stab.row(r));
    }
    std::vector<BitVector> out;
    for (auto &v : inst.detecting_checks(s).nullspace()) {
        if (span.insert(v)) {
            out.push_back(std::move(v));
        }
    }
    return out;
}

inline Sector opposite(Sector s) {
    return s == Sector::X ? Sector::Z : Sector::X;
}

/// Independent check that v is a nontrivial logical operator of the sector.
inline bool is_logical_operator(const CodeInstance &inst, Sector s, const BitVector &v) {
    if (v.size() != inst.num_qubits()) {
        return false;
    }
    if (!inst.detecting_checks(s).multiply(v).is_zero()) {
        return false;
    }
    return !inst.stabilizers(s).row_space_contains(v);
}

/// Plain-text sparse coordinate list: header `rows cols`, then `row col` per one.
inline void write_coordinate_list(std::ostream &os, const BinaryMatrix &m) {
    os << m.rows() << ' ' << m.cols() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row(r).support()) {
            os << r << ' ' << c << '\n';
        }
    }
}

/// Matrix Market coordinate pattern format (1-based indices).
inline void write_matrix_market(std::ostream &os, const BinaryMatrix &m) {
    os << "%%MatrixMarket matrix coordinate pattern general\n";
    os << m.rows() << ' ' << m.cols() << ' ' << m.nonzeros() << '\n';
    for (size_t r = 0; r < m.rows(); r++) {
        for (size_t c : m.row(r).support()) {
            os << (r + 1) << ' ' << (c + 1) << '\n';
        }
    }
}

}  // namespace ticodes

#endif
