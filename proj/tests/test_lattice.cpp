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

#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "ticodes/lattice.hpp"

namespace ticodes {
namespace {

IntMatrix random_matrix(std::mt19937_64 &rng, size_t r, size_t c, int64_t range) {
    std::uniform_int_distribution<int64_t> e(-range, range);
    IntMatrix m(r, c);
    for (size_t i = 0; i < r; i++) {
        for (size_t j = 0; j < c; j++) {
            m(i, j) = e(rng);
        }
    }
    return m;
}

// Determinant by cofactor expansion; oracle for the Bareiss version.
int64_t cofactor_det(const IntMatrix &m) {
    const size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    if (n == 1) {
        return m(0, 0);
    }
    int64_t det = 0;
    for (size_t j = 0; j < n; j++) {
        IntMatrix minor(n - 1, n - 1);
        for (size_t r = 1; r < n; r++) {
            for (size_t c = 0, cc = 0; c < n; c++) {
                if (c != j) {
                    minor(r - 1, cc++) = m(r, c);
                }
            }
        }
        int64_t term = m(0, j) * cofactor_det(minor);
        det += (j % 2 == 0) ? term : -term;
    }
    return det;
}

// gcd of all k x k minors; the product of the first k invariant factors.
int64_t minor_gcd(const IntMatrix &m, size_t k) {
    std::vector<size_t> rows(k), cols(k);
    int64_t g = 0;
    std::vector<bool> rsel(m.rows(), false);
    std::fill(rsel.begin(), rsel.begin() + static_cast<long>(k), true);
    do {
        std::vector<bool> csel(m.cols(), false);
        std::fill(csel.begin(), csel.begin() + static_cast<long>(k), true);
        do {
            IntMatrix sub(k, k);
            for (size_t i = 0, ri = 0; i < m.rows(); i++) {
                if (!rsel[i]) {
                    continue;
                }
                for (size_t j = 0, cj = 0; j < m.cols(); j++) {
                    if (csel[j]) {
                        sub(ri, cj++) = m(i, j);
                    }
                }
                ri++;
            }
            g = std::gcd(g, cofactor_det(sub));
        } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
    return g;
}

TEST(IntMatrix, DeterminantMatchesCofactors) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 200; i++) {
        size_t n = 1 + i % 5;
        auto m = random_matrix(rng, n, n, 6);
        EXPECT_EQ(m.determinant(), cofactor_det(m));
    }
}

TEST(Smith, FactorsDivideAndTransformsAreUnimodular) {
    std::mt19937_64 rng(17);
    for (int i = 0; i < 300; i++) {
        size_t r = 1 + i % 4, c = 1 + (i / 4) % 4;
        auto m = random_matrix(rng, r, c, 5);
        auto s = smith_normal_form(m);
        EXPECT_EQ(s.U * m * s.V, s.S);
        EXPECT_TRUE(s.S.is_diagonal());
        EXPECT_EQ(s.V * s.V_inverse, IntMatrix::identity(c));
        EXPECT_EQ(std::abs(s.U.determinant()), 1);
        auto diag = s.diagonal();
        for (size_t k = 0; k + 1 < s.rank; k++) {
            EXPECT_EQ(diag[k + 1] % diag[k], 0);
        }
        int64_t prod = 1;
        for (size_t k = 0; k < std::min(r, c); k++) {
            if (k < s.rank) {
                EXPECT_GT(diag[k], 0);
                prod *= diag[k];
            }
            EXPECT_EQ(k < s.rank ? prod : 0, minor_gcd(m, k + 1)) << "k=" << k;
        }
    }
}

TEST(Smith, KnownExample) {
    auto m = IntMatrix::from_rows({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto s = smith_normal_form(m);
    EXPECT_EQ(s.diagonal(), (std::vector<int64_t>{2, 6, 12}));
}

TEST(Hermite, CanonicalUnderRowOperations) {
    std::mt19937_64 rng(23);
    for (int i = 0; i < 200; i++) {
        auto m = random_matrix(rng, 3, 4, 4);
        auto h = hermite_normal_form(m);
        // Unimodular row mixing leaves the row lattice and hence the HNF unchanged.
        auto mixed = m;
        mixed.add_row(0, 1, 3);
        mixed.swap_rows(1, 2);
        mixed.negate_row(2);
        mixed.add_row(2, 0, -2);
        EXPECT_EQ(hermite_normal_form(mixed), h);
    }
}

TEST(Kernel, SpansIntegerKernel) {
    std::mt19937_64 rng(29);
    for (int i = 0; i < 200; i++) {
        auto m = random_matrix(rng, 2, 5, 4);
        auto k = integer_kernel(m);
        auto s = smith_normal_form(m);
        EXPECT_EQ(k.rows(), 5 - s.rank);
        for (size_t r = 0; r < k.rows(); r++) {
            for (size_t j = 0; j < m.rows(); j++) {
                int64_t dot = 0;
                for (size_t c = 0; c < 5; c++) {
                    dot += m(j, c) * k(r, c);
                }
                EXPECT_EQ(dot, 0);
            }
        }
        // Saturated: the kernel lattice has index 1 in its rational span.
        if (k.rows() > 0) {
            auto ks = smith_normal_form(k);
            for (auto x : ks.diagonal()) {
                EXPECT_EQ(x, 1);
            }
        }
    }
}

TEST(LatticeIndex, Examples) {
    EXPECT_EQ(lattice_index({{1, 0}, {0, 1}}, 2), 1);
    EXPECT_EQ(lattice_index({{1, 1}, {1, -1}}, 2), 2);
    EXPECT_EQ(lattice_index({{2, 0}, {0, 3}, {1, 1}}, 2), 1);
    EXPECT_FALSE(lattice_index({{1, 1}, {2, 2}}, 2).has_value());
    EXPECT_TRUE(lattice_saturates({{3, 1}, {2, 1}}, 2));
}

TEST(Quotient, TorusOrderAndCoordinates) {
    auto ctx = make_context({"x", "y"});
    auto g = finite_quotient(GroupPresentation::torus(ctx, {12, 6}));
    EXPECT_EQ(g.order(), 72u);
    EXPECT_EQ(g.moduli(), (std::vector<int64_t>{12, 6}));
    // First coordinate most significant.
    EXPECT_EQ(g.reduce(Monomial{{1, 0}}), 6u);
    EXPECT_EQ(g.reduce(Monomial{{0, 1}}), 1u);
    EXPECT_EQ(g.reduce(Monomial{{-1, -1}}), 71u);
}

TEST(Quotient, TwistedBoundary) {
    auto ctx = make_context({"x", "y"});
    // x^3 = 1, y^2 = x: cyclic of order 6 generated by y.
    GroupPresentation pres(ctx, {{3, 0}, {-1, 2}});
    auto g = finite_quotient(pres);
    EXPECT_EQ(g.order(), 6u);
    EXPECT_EQ(g.invariant_factors(), (std::vector<int64_t>{6}));
    EXPECT_EQ(g.reduce(Monomial{{1, 0}}), g.reduce(Monomial{{0, 2}}));
    std::set<size_t> seen;
    for (int64_t k = 0; k < 6; k++) {
        seen.insert(g.reduce(Monomial{{0, k}}));
    }
    EXPECT_EQ(seen.size(), 6u);
}

TEST(Quotient, InfiniteIsReported) {
    auto ctx = make_context({"x", "y"});
    auto q = quotient(GroupPresentation(ctx, {{2, 0}}));
    ASSERT_TRUE(std::holds_alternative<InfiniteQuotient>(q));
    EXPECT_EQ(std::get<InfiniteQuotient>(q).free_rank, 1u);
    EXPECT_THROW(finite_quotient(GroupPresentation(ctx, {{2, 0}})), InfiniteQuotientError);
}

TEST(QuotientProperty, ReduceIsHomomorphism) {
    std::mt19937_64 rng(31);
    auto ctx = make_context({"x", "y", "z"});
    std::uniform_int_distribution<int64_t> e(-9, 9);
    for (int i = 0; i < 300; i++) {
        auto rels = random_matrix(rng, 3, 3, 4);
        if (rels.determinant() == 0) {
            continue;
        }
        GroupPresentation pres(ctx, rels.to_rows());
        auto g = finite_quotient(pres);
        EXPECT_EQ(g.order(), static_cast<size_t>(std::abs(rels.determinant())));
        Monomial a{{e(rng), e(rng), e(rng)}}, b{{e(rng), e(rng), e(rng)}};
        EXPECT_EQ(g.reduce(a * b), g.add(g.reduce(a), g.reduce(b)));
        EXPECT_EQ(g.reduce(a.inverse()), g.negate(g.reduce(a)));
        for (size_t r = 0; r < 3; r++) {
            EXPECT_EQ(g.reduce(Monomial{pres.relations[r]}), 0u);
        }
        size_t idx = g.reduce(a);
        EXPECT_EQ(g.reduce(g.representative(idx)), idx);
    }
}

}  // namespace
}  // namespace ticodes
