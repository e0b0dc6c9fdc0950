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

// Exact energy barriers by minimax shortest paths over the 2^n single-flip
// state graph. CSS sectors are searched independently.

#ifndef TICODES_BARRIER_HPP
#define TICODES_BARRIER_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <future>
#include <optional>
#include <string>
#include <vector>

#include "ticodes/bitmatrix.hpp"
#include "ticodes/codes.hpp"
#include "ticodes/instantiate.hpp"

namespace ticodes {

constexpr size_t kDefaultBarrierCap = 20;
constexpr size_t kMaxBarrierCap = 30;

enum class BarrierSector { X, Z, Classical };

inline const char *barrier_sector_name(BarrierSector s) {
    switch (s) {
        case BarrierSector::X:
            return "X";
        case BarrierSector::Z:
            return "Z";
        default:
            return "classical";
    }
}

inline BarrierSector to_barrier_sector(Sector s) {
    return s == Sector::X ? BarrierSector::X : BarrierSector::Z;
}

struct BarrierResult {
    size_t barrier = 0;
    BarrierSector sector = BarrierSector::Classical;
    BitVector target;
    /// Qubit flips taking 0 to target.
    std::vector<size_t> path;
    uint64_t states_visited = 0;
};

/// Syndrome weight wt(H v).
inline size_t energy(const BinaryMatrix &H, const BitVector &v) {
    if (v.size() != H.cols()) {
        throw DimensionMismatch("energy: vector length " + std::to_string(v.size()) + " != " +
                                std::to_string(H.cols()));
    }
    return H.multiply(v).weight();
}

namespace detail {

inline BitVector state_to_vector(uint64_t s, size_t n) {
    BitVector v(n);
    for (size_t i = 0; i < n; i++) {
        if ((s >> i) & 1) {
            v.set(i);
        }
    }
    return v;
}

inline uint64_t vector_to_state(const BitVector &v) {
    uint64_t s = 0;
    for (size_t i : v.support()) {
        s |= uint64_t{1} << i;
    }
    return s;
}

struct SearchOutcome {
    size_t barrier = 0;
    uint64_t state = 0;
    std::vector<size_t> path;
    uint64_t visited = 0;
};

/// Bucket-queue minimax Dijkstra from state 0. Keys only grow along a path
/// and buckets are drained in order, so a state's first key is optimal.
/// Returns the first popped state satisfying accept(state, syndrome_is_zero).
inline std::optional<SearchOutcome> bottleneck_search(const BinaryMatrix &H,
                                                      const std::function<bool(uint64_t, bool)> &accept) {
    const size_t n = H.cols();
    const size_t m = H.rows();
    const size_t W = words_for(m);
    BinaryMatrix Ht = H.transpose();
    std::vector<uint64_t> cols(n * W);
    for (size_t j = 0; j < n; j++) {
        auto w = Ht.row_words(j);
        std::copy(w.begin(), w.end(), cols.begin() + static_cast<long>(j * W));
    }
    const uint64_t total = uint64_t{1} << n;
    constexpr uint8_t kUnseen = 0xff;
    constexpr uint8_t kRoot = 0xfe;
    std::vector<uint8_t> parent(total, kUnseen);
    std::vector<std::vector<uint32_t>> buckets(m + 1);
    parent[0] = kRoot;
    buckets[0].push_back(0);
    std::vector<uint64_t> syn(W);
    SearchOutcome out;
    for (size_t key = 0; key <= m; key++) {
        // Buckets at the current key can grow while being drained.
        for (size_t idx = 0; idx < buckets[key].size(); idx++) {
            const uint64_t s = buckets[key][idx];
            out.visited++;
            std::fill(syn.begin(), syn.end(), 0);
            for (uint64_t bits = s; bits; bits &= bits - 1) {
                const size_t j = static_cast<size_t>(std::countr_zero(bits));
                for (size_t k = 0; k < W; k++) {
                    syn[k] ^= cols[j * W + k];
                }
            }
            bool zero = std::all_of(syn.begin(), syn.end(), [](uint64_t x) { return x == 0; });
            if (accept(s, zero)) {
                out.barrier = key;
                out.state = s;
                for (uint64_t cur = s; parent[cur] != kRoot;) {
                    out.path.push_back(parent[cur]);
                    cur ^= uint64_t{1} << parent[cur];
                }
                std::reverse(out.path.begin(), out.path.end());
                return out;
            }
            for (size_t j = 0; j < n; j++) {
                const uint64_t t = s ^ (uint64_t{1} << j);
                if (parent[t] != kUnseen) {
                    continue;
                }
                size_t e = 0;
                for (size_t k = 0; k < W; k++) {
                    e += static_cast<size_t>(std::popcount(syn[k] ^ cols[j * W + k]));
                }
                parent[t] = static_cast<uint8_t>(j);
                buckets[std::max(key, e)].push_back(static_cast<uint32_t>(t));
            }
        }
        std::vector<uint32_t>().swap(buckets[key]);
    }
    return std::nullopt;
}

inline void check_cap(size_t n, size_t cap, const char *op) {
    if (cap > kMaxBarrierCap) {
        throw CapExceeded(std::string(op) + ": cap " + std::to_string(cap) + " exceeds the hard limit " +
                          std::to_string(kMaxBarrierCap));
    }
    if (n > cap) {
        throw CapExceeded(std::string(op) + ": " + std::to_string(n) + " bits exceed cap " + std::to_string(cap));
    }
}

inline BarrierResult to_result(const SearchOutcome &o, size_t n, BarrierSector sector) {
    return BarrierResult{o.barrier, sector, state_to_vector(o.state, n), o.path, o.visited};
}

}  // namespace detail

/// Barrier of one fixed target in ker(H): the smallest achievable maximum of
/// wt(H v) over single-flip paths from 0 to target.
inline BarrierResult barrier(const BinaryMatrix &H, const BitVector &target, size_t cap = kDefaultBarrierCap,
                             BarrierSector sector = BarrierSector::Classical) {
    const size_t n = H.cols();
    if (target.size() != n) {
        throw DimensionMismatch("barrier: target length does not match H");
    }
    detail::check_cap(n, cap, "barrier");
    if (target.is_zero()) {
        throw Error("barrier: target is trivial");
    }
    if (!H.multiply(target).is_zero()) {
        throw Error("barrier: target is not in the kernel of H");
    }
    const uint64_t goal = detail::vector_to_state(target);
    auto o = detail::bottleneck_search(H, [goal](uint64_t s, bool) { return s == goal; });
    return detail::to_result(*o, n, sector);
}

/// Barrier of a specific logical operator of one CSS sector.
inline BarrierResult barrier(const CodeInstance &inst, Sector s, const BitVector &target,
                             size_t cap = kDefaultBarrierCap) {
    if (!is_logical_operator(inst, s, target)) {
        throw Error("barrier: target is not a nontrivial logical operator");
    }
    return barrier(inst.detecting_checks(s), target, cap, to_barrier_sector(s));
}

/// Smallest barrier over every nonzero codeword of ker(H); nullopt when the
/// kernel is trivial.
inline std::optional<BarrierResult> classical_barrier(const BinaryMatrix &H, size_t cap = kDefaultBarrierCap) {
    detail::check_cap(H.cols(), cap, "classical_barrier");
    if (H.nullspace().empty()) {
        return std::nullopt;
    }
    auto o = detail::bottleneck_search(H, [](uint64_t s, bool zero) { return zero && s != 0; });
    return detail::to_result(*o, H.cols(), BarrierSector::Classical);
}

/// Smallest barrier over every nontrivial logical operator of one sector.
inline BarrierResult sector_barrier(const CodeInstance &inst, Sector s, size_t cap = kDefaultBarrierCap) {
    const size_t n = inst.num_qubits();
    detail::check_cap(n, cap, "sector_barrier");
    auto partners = logical_basis(inst, opposite(s));
    if (partners.empty()) {
        throw Error("sector_barrier: code has k = 0");
    }
    std::vector<uint64_t> masks;
    for (const auto &p : partners) {
        masks.push_back(detail::vector_to_state(p));
    }
    auto accept = [&masks](uint64_t st, bool zero) {
        if (!zero) {
            return false;
        }
        for (uint64_t mk : masks) {
            if (std::popcount(st & mk) & 1) {
                return true;
            }
        }
        return false;
    };
    auto o = detail::bottleneck_search(inst.detecting_checks(s), accept);
    return detail::to_result(*o, n, to_barrier_sector(s));
}

struct CodeBarrierResult {
    BarrierResult best;
    std::vector<BarrierResult> sectors;
};

/// Minimum over both sectors; the sectors run concurrently when parallel is set.
inline CodeBarrierResult code_barrier(const CodeInstance &inst, size_t cap = kDefaultBarrierCap,
                                      bool parallel = false) {
    detail::check_cap(inst.num_qubits(), cap, "code_barrier");
    if (params(inst).k == 0) {
        throw Error("code_barrier: code has k = 0");
    }
    CodeBarrierResult r;
    if (parallel) {
        auto fx = std::async(std::launch::async, [&] { return sector_barrier(inst, Sector::X, cap); });
        auto fz = sector_barrier(inst, Sector::Z, cap);
        r.sectors.push_back(fx.get());
        r.sectors.push_back(std::move(fz));
    } else {
        r.sectors.push_back(sector_barrier(inst, Sector::X, cap));
        r.sectors.push_back(sector_barrier(inst, Sector::Z, cap));
    }
    r.best = r.sectors[0].barrier <= r.sectors[1].barrier ? r.sectors[0] : r.sectors[1];
    return r;
}

/// Replays the flip sequence and checks it ends at the target with the
/// reported maximum energy.
inline bool validate_path(const BinaryMatrix &H, const BarrierResult &r) {
    const size_t n = H.cols();
    if (r.target.size() != n) {
        return false;
    }
    BitVector state(n);
    size_t peak = 0;
    for (size_t q : r.path) {
        if (q >= n) {
            return false;
        }
        state.flip(q);
        peak = std::max(peak, energy(H, state));
    }
    return state == r.target && peak == r.barrier;
}

/// One term of the four-way minimum; value is empty when the classical code
/// has trivial kernel or exceeds the cap.
struct BarrierTerm {
    std::string label;
    size_t bits = 0;
    std::optional<size_t> value;
    bool skipped_cap = false;
};

struct FourWayMinimum {
    std::vector<BarrierTerm> terms;
    std::optional<size_t> minimum;
};

inline FourWayMinimum four_way_minimum(const std::vector<std::pair<std::string, const BinaryMatrix *>> &mats,
                                       size_t cap) {
    FourWayMinimum out;
    for (const auto &[label, H] : mats) {
        BarrierTerm t{label, H->cols(), std::nullopt, false};
        if (H->cols() > cap) {
            t.skipped_cap = true;
        } else if (auto b = classical_barrier(*H, cap)) {
            t.value = b->barrier;
        }
        out.terms.push_back(t);
    }
    for (const auto &t : out.terms) {
        if (t.skipped_cap) {
            out.minimum.reset();
            return out;
        }
    }
    for (const auto &t : out.terms) {
        if (t.value && (!out.minimum || *t.value < *out.minimum)) {
            out.minimum = t.value;
        }
    }
    return out;
}

struct HgpBarrierCrossCheck {
    /// From the classical seeds H1 = f and H2 = g on their own tori, and transposes.
    std::optional<FourWayMinimum> seeds;
    /// H_X, H_Z, H_X^T, H_Z^T of the instance read as classical codes.
    FourWayMinimum literal;
};

namespace detail {

/// p rewritten over the listed variables of its context (others must be absent).
inline LaurentPoly restrict_poly(const LaurentPoly &p, const std::vector<size_t> &keep) {
    std::vector<std::string> names;
    for (size_t i : keep) {
        names.push_back(p.context()->name(i));
    }
    auto sub = make_context(names);
    std::vector<Monomial> terms;
    for (const auto &t : p.terms()) {
        Monomial m = Monomial::one(keep.size());
        for (size_t j = 0; j < keep.size(); j++) {
            m.exponents[j] = t.exponents[keep[j]];
        }
        terms.push_back(std::move(m));
    }
    return LaurentPoly::from_terms(sub, std::move(terms));
}

}  // namespace detail

/// Side-by-side classical barrier quantities for a hypergraph-product
/// instance. The seed form needs a product torus so the group splits into
/// the f-variables and the g-variables.
inline HgpBarrierCrossCheck hgp_barrier_cross_check(const TwoBlockCode &c, const GroupPresentation &pres,
                                                    const CodeInstance &inst, size_t cap = kDefaultBarrierCap) {
    HgpBarrierCrossCheck out;
    BinaryMatrix hxt = inst.hx.transpose();
    BinaryMatrix hzt = inst.hz.transpose();
    out.literal = four_way_minimum({{"H_X", &inst.hx}, {"H_Z", &inst.hz}, {"H_X^T", &hxt}, {"H_Z^T", &hzt}}, cap);
    auto lengths = pres.product_torus_lengths();
    if (!c.is_hypergraph_product() || !lengths) {
        return out;
    }
    auto gvars = c.g().support_variables();
    std::vector<size_t> fside, gside;
    for (size_t i = 0; i < c.context()->dimension(); i++) {
        (std::binary_search(gvars.begin(), gvars.end(), i) ? gside : fside).push_back(i);
    }
    auto seed = [&](const LaurentPoly &p, const std::vector<size_t> &vars) {
        LaurentPoly q = detail::restrict_poly(p, vars);
        std::vector<int64_t> ls;
        for (size_t i : vars) {
            ls.push_back((*lengths)[i]);
        }
        return instantiate_classical(q, GroupPresentation::torus(q.context(), ls));
    };
    BinaryMatrix h1 = seed(c.f(), fside);
    BinaryMatrix h2 = seed(c.g(), gside);
    BinaryMatrix h1t = h1.transpose();
    BinaryMatrix h2t = h2.transpose();
    out.seeds = four_way_minimum({{"H1", &h1}, {"H2", &h2}, {"H1^T", &h1t}, {"H2^T", &h2t}}, cap);
    return out;
}

}  // namespace ticodes

#endif
