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

// Minimum distance of CSS instances: exact Gray-code enumeration over the
// kernel for small codes, and a seeded information-set search for upper
// bounds on larger ones.

#ifndef TICODES_DISTANCE_HPP
#define TICODES_DISTANCE_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <tuple>
#include <vector>

#include "ticodes/bitmatrix.hpp"
#include "ticodes/instantiate.hpp"

namespace ticodes {

enum class DistanceMethod { ExactEnumeration, RandomInformationSet };

inline const char *method_name(DistanceMethod m) {
    return m == DistanceMethod::ExactEnumeration ? "exact-enumeration" : "random-information-set";
}

struct SectorDistance {
    Sector sector = Sector::X;
    size_t distance = 0;  // upper bound, or exact for enumeration
    std::optional<BitVector> witness;
};

struct DistanceResult {
    size_t d_upper = 0;
    std::optional<size_t> d_lower;
    std::optional<BitVector> witness;
    std::optional<Sector> witness_sector;
    DistanceMethod method = DistanceMethod::ExactEnumeration;
    std::vector<SectorDistance> sectors;
    uint64_t trials = 0;
    uint64_t seed = 0;
    unsigned workers = 1;
};

constexpr size_t kDefaultExactCap = 28;

namespace detail {

/// Logical signature masks: bit j of sig(v) is <v, partner_j>.
inline std::vector<uint64_t> signatures(const std::vector<BitVector> &vectors, const std::vector<BitVector> &partners) {
    if (partners.size() > 64) {
        throw CapExceeded("more than 64 logical qubits are not supported by the distance search");
    }
    std::vector<uint64_t> out;
    out.reserve(vectors.size());
    for (const auto &v : vectors) {
        uint64_t s = 0;
        for (size_t j = 0; j < partners.size(); j++) {
            if (v.dot(partners[j])) {
                s |= uint64_t{1} << j;
            }
        }
        out.push_back(s);
    }
    return out;
}

/// Minimum weight over combinations of `basis` whose accepted() predicate
/// holds, by Gray-code traversal of all 2^r combinations.
template <typename Accept>
std::optional<BitVector> gray_code_minimum(const std::vector<BitVector> &basis, const std::vector<uint64_t> &sigs,
                                           size_t n, Accept accepted) {
    const size_t r = basis.size();
    if (r > 40) {
        throw CapExceeded("kernel dimension " + std::to_string(r) + " is too large for exact enumeration");
    }
    BitVector cur(n);
    uint64_t sig = 0;
    std::optional<BitVector> best;
    size_t best_w = SIZE_MAX;
    const uint64_t total = uint64_t{1} << r;
    for (uint64_t i = 1; i < total; i++) {
        size_t bit = static_cast<size_t>(std::countr_zero(i));
        cur ^= basis[bit];
        if (!sigs.empty()) {
            sig ^= sigs[bit];
        }
        if (!accepted(sig)) {
            continue;
        }
        size_t w = cur.weight();
        if (w < best_w) {
            best_w = w;
            best = cur;
        }
    }
    return best;
}

inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Per-trial stream, independent of how trials are split across workers.
inline uint64_t trial_seed(uint64_t seed, Sector s, uint64_t trial) {
    return splitmix64(splitmix64(seed ^ (s == Sector::X ? 0x5851f42d4c957f2dull : 0x14057b7ef767814full)) + trial);
}

}  // namespace detail

/// Exact minimum distance min(d_X, d_Z) by enumerating each kernel.
inline DistanceResult exact_distance(const CodeInstance &inst, size_t cap = kDefaultExactCap) {
    const size_t n = inst.num_qubits();
    if (n > cap) {
        throw CapExceeded("exact_distance: n = " + std::to_string(n) + " exceeds cap " + std::to_string(cap));
    }
    DistanceResult res;
    res.method = DistanceMethod::ExactEnumeration;
    res.d_upper = n;
    for (Sector s : {Sector::X, Sector::Z}) {
        auto partners = logical_basis(inst, opposite(s));
        if (partners.empty()) {
            throw Error("exact_distance: code has k = 0");
        }
        auto basis = inst.detecting_checks(s).nullspace();
        auto sigs = detail::signatures(basis, partners);
        auto best = detail::gray_code_minimum(basis, sigs, n, [](uint64_t sig) { return sig != 0; });
        SectorDistance sd{s, best ? best->weight() : n, best};
        if (best && best->weight() < res.d_upper) {
            res.d_upper = best->weight();
            res.witness = best;
            res.witness_sector = s;
        }
        res.sectors.push_back(std::move(sd));
    }
    res.d_lower = res.d_upper;
    return res;
}

/// Minimum weight of a nonzero codeword of the classical code ker(H).
inline std::optional<size_t> classical_distance(const BinaryMatrix &H, size_t cap = 40) {
    auto basis = H.nullspace();
    if (basis.empty()) {
        return std::nullopt;
    }
    if (basis.size() > cap) {
        throw CapExceeded("classical_distance: kernel dimension exceeds cap");
    }
    auto best = detail::gray_code_minimum(basis, {}, H.cols(), [](uint64_t) { return true; });
    return best->weight();
}

struct RandomSearchOptions {
    unsigned workers = 1;
    /// Also test sums of two reduced rows (Lee-Brickell with p = 2).
    bool pair_sums = true;
};

namespace detail {

struct Candidate {
    size_t weight = SIZE_MAX;
    uint64_t trial = UINT64_MAX;
    uint64_t slot = UINT64_MAX;
    BitVector vector;

    bool better_than(const Candidate &o) const {
        return std::tie(weight, trial, slot) < std::tie(o.weight, o.trial, o.slot);
    }
};

/// Information-set trials [begin, end) with stride `step` for one sector.
inline Candidate information_set_worker(const std::vector<BitVector> &basis, const std::vector<uint64_t> &base_sigs,
                                        size_t n, uint64_t seed, Sector sector, uint64_t begin, uint64_t end,
                                        uint64_t step, bool pair_sums) {
    const size_t r = basis.size();
    const size_t stride = words_for(n);
    Candidate best;
    std::vector<uint64_t> work(r * stride);
    std::vector<uint64_t> sig(r);
    std::vector<size_t> perm(n);
    std::vector<char> used(r);
    std::vector<size_t> weights(r);

    for (uint64_t t = begin; t < end; t += step) {
        std::mt19937_64 rng(trial_seed(seed, sector, t));
        std::iota(perm.begin(), perm.end(), size_t{0});
        std::shuffle(perm.begin(), perm.end(), rng);
        for (size_t i = 0; i < r; i++) {
            auto w = basis[i].words();
            std::copy(w.begin(), w.end(), work.begin() + static_cast<long>(i * stride));
            sig[i] = base_sigs[i];
        }
        std::fill(used.begin(), used.end(), 0);
        size_t pivots = 0;
        for (size_t ci = 0; ci < n && pivots < r; ci++) {
            const size_t c = perm[ci];
            const size_t wi = c >> 6;
            const uint64_t mask = uint64_t{1} << (c & 63);
            size_t p = r;
            for (size_t i = 0; i < r; i++) {
                if (!used[i] && (work[i * stride + wi] & mask)) {
                    p = i;
                    break;
                }
            }
            if (p == r) {
                continue;
            }
            used[p] = 1;
            pivots++;
            const uint64_t *src = work.data() + p * stride;
            for (size_t i = 0; i < r; i++) {
                if (i != p && (work[i * stride + wi] & mask)) {
                    uint64_t *dst = work.data() + i * stride;
                    for (size_t k = 0; k < stride; k++) {
                        dst[k] ^= src[k];
                    }
                    sig[i] ^= sig[p];
                }
            }
        }
        auto consider = [&](size_t weight, uint64_t slot, auto make_vector) {
            Candidate c{weight, t, slot, {}};
            if (c.better_than(best)) {
                c.vector = make_vector();
                best = std::move(c);
            }
        };
        for (size_t i = 0; i < r; i++) {
            size_t w = 0;
            for (size_t k = 0; k < stride; k++) {
                w += static_cast<size_t>(std::popcount(work[i * stride + k]));
            }
            weights[i] = w;
            if (sig[i] != 0 && w <= best.weight) {
                consider(w, i, [&] {
                    BitVector v(n);
                    std::copy(work.begin() + static_cast<long>(i * stride),
                              work.begin() + static_cast<long>((i + 1) * stride), v.words().begin());
                    return v;
                });
            }
        }
        if (!pair_sums) {
            continue;
        }
        for (size_t i = 0; i < r; i++) {
            const uint64_t *a = work.data() + i * stride;
            for (size_t j = i + 1; j < r; j++) {
                if ((sig[i] ^ sig[j]) == 0) {
                    continue;
                }
                const uint64_t *b = work.data() + j * stride;
                size_t w = 0;
                for (size_t k = 0; k < stride; k++) {
                    w += static_cast<size_t>(std::popcount(a[k] ^ b[k]));
                }
                if (w <= best.weight) {
                    consider(w, r + i * r + j, [&] {
                        BitVector v(n);
                        auto vw = v.words();
                        for (size_t k = 0; k < stride; k++) {
                            vw[k] = a[k] ^ b[k];
                        }
                        return v;
                    });
                }
            }
        }
    }
    return best;
}

}  // namespace detail

/// Seeded randomized upper bound on the distance. Each trial draws a random
/// column order, row-reduces a kernel basis of the detecting checks in that
/// order, and keeps the lightest logical row (or sum of two rows). Results
/// depend only on (seed, trials), not on the worker count.
inline DistanceResult random_upper_bound(const CodeInstance &inst, uint64_t trials, uint64_t seed,
                                         RandomSearchOptions opts = {}) {
    const size_t n = inst.num_qubits();
    DistanceResult res;
    res.method = DistanceMethod::RandomInformationSet;
    res.trials = trials;
    res.seed = seed;
    res.workers = std::max(1u, opts.workers);
    res.d_upper = n;
    for (Sector s : {Sector::X, Sector::Z}) {
        auto partners = logical_basis(inst, opposite(s));
        if (partners.empty()) {
            throw Error("random_upper_bound: code has k = 0");
        }
        auto basis = inst.detecting_checks(s).nullspace();
        auto sigs = detail::signatures(basis, partners);
        detail::Candidate best;
        if (trials > 0) {
            const unsigned W = res.workers;
            std::vector<detail::Candidate> partial(W);
            if (W == 1) {
                partial[0] =
                    detail::information_set_worker(basis, sigs, n, seed, s, 0, trials, 1, opts.pair_sums);
            } else {
                std::vector<std::thread> pool;
                for (unsigned w = 0; w < W; w++) {
                    pool.emplace_back([&, w] {
                        partial[w] =
                            detail::information_set_worker(basis, sigs, n, seed, s, w, trials, W, opts.pair_sums);
                    });
                }
                for (auto &th : pool) {
                    th.join();
                }
            }
            for (auto &c : partial) {
                if (c.better_than(best)) {
                    best = std::move(c);
                }
            }
        }
        SectorDistance sd{s, n, std::nullopt};
        if (best.weight != SIZE_MAX) {
            sd.distance = best.weight;
            sd.witness = best.vector;
            if (best.weight < res.d_upper) {
                res.d_upper = best.weight;
                res.witness = best.vector;
                res.witness_sector = s;
            }
        }
        res.sectors.push_back(std::move(sd));
    }
    return res;
}

}  // namespace ticodes

#endif
