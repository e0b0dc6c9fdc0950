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

#include <random>
#include <sstream>

#include "random_codes.hpp"
#include "ticodes/instantiate.hpp"

namespace ticodes {
namespace {

// l x m cyclic shift matrices built by hand; x = S_l (x) I_m, y = I_l (x) S_m.
BinaryMatrix shift_power(size_t l, size_t m, int64_t ex, int64_t ey) {
    BinaryMatrix out(l * m, l * m);
    for (size_t i = 0; i < l; i++) {
        for (size_t j = 0; j < m; j++) {
            size_t ti = static_cast<size_t>(detail::mod_floor(static_cast<int64_t>(i) + ex, static_cast<int64_t>(l)));
            size_t tj = static_cast<size_t>(detail::mod_floor(static_cast<int64_t>(j) + ey, static_cast<int64_t>(m)));
            out.flip(i * m + j, ti * m + tj);
        }
    }
    return out;
}

BinaryMatrix add(const BinaryMatrix &a, const BinaryMatrix &b) {
    BinaryMatrix out = a;
    for (size_t r = 0; r < a.rows(); r++) {
        for (size_t c : b.row(r).support()) {
            out.flip(r, c);
        }
    }
    return out;
}

BinaryMatrix dense_poly(const LaurentPoly &p, size_t l, size_t m) {
    BinaryMatrix out(l * m, l * m);
    for (const auto &t : p.terms()) {
        out = add(out, shift_power(l, m, t.exponents[0], t.exponents[1]));
    }
    return out;
}

TEST(Instantiate, MatchesKroneckerShifts) {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode c(parse_poly("x^3 + y + y^2", ctx), parse_poly("y^3 + x + x^2", ctx));
    auto inst = instantiate(c, GroupPresentation::torus(ctx, {12, 6}));
    auto A = dense_poly(c.f(), 12, 6), B = dense_poly(c.g(), 12, 6);
    const size_t N = 72;
    for (size_t r = 0; r < N; r++) {
        for (size_t col = 0; col < N; col++) {
            ASSERT_EQ(inst.hx.get(r, col), A.get(r, col));
            ASSERT_EQ(inst.hx.get(r, N + col), B.get(r, col));
            ASSERT_EQ(inst.hz.get(r, col), B.get(col, r));
            ASSERT_EQ(inst.hz.get(r, N + col), A.get(col, r));
        }
    }
}

TEST(Instantiate, GrossParameters) {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode c(parse_poly("1 + y + x^3*y^-1", ctx), parse_poly("1 + x + x^-1*y^3", ctx));
    auto inst = instantiate(c, GroupPresentation::torus(ctx, {12, 6}));
    EXPECT_TRUE(inst.hx.multiply_transpose(inst.hz).is_zero());
    auto p = params(inst);
    EXPECT_EQ(p.n, 144u);
    EXPECT_EQ(p.k, 12u);
    EXPECT_EQ(logical_basis(inst, Sector::X).size(), 12u);
}

TEST(Instantiate, ToricFamily) {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode c(parse_poly("1 + x", ctx), parse_poly("1 + y", ctx));
    for (int64_t L = 2; L <= 6; L++) {
        auto p = params(instantiate(c, GroupPresentation::torus(ctx, {L, L})));
        EXPECT_EQ(p.n, static_cast<size_t>(2 * L * L));
        EXPECT_EQ(p.k, 2u);
    }
}

TEST(Instantiate, TwistedBoundary) {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode c(parse_poly("1 + x", ctx), parse_poly("1 + y", ctx));
    // x^4 = 1 and y^3 = x: Z_12 generated by y.
    auto inst = instantiate(c, GroupPresentation(ctx, {{4, 0}, {-1, 3}}));
    EXPECT_EQ(inst.num_qubits(), 24u);
    EXPECT_TRUE(inst.hx.multiply_transpose(inst.hz).is_zero());
    EXPECT_EQ(params(inst).k, 2u);
}

TEST(Instantiate, Errors) {
    auto ctx = make_context({"x", "y"});
    auto other = make_context({"y", "x"});
    TwoBlockCode c(parse_poly("1 + x", ctx), parse_poly("1 + y", ctx));
    EXPECT_THROW(instantiate(c, GroupPresentation::torus(other, {3, 3})), ContextMismatch);
    EXPECT_THROW(instantiate(c, GroupPresentation(ctx, {{3, 0}})), InfiniteQuotientError);
}

TEST(Instantiate, ClassicalCirculant) {
    auto ctx = make_context({"x"});
    auto H = instantiate_classical(parse_poly("1 + x", ctx), GroupPresentation::torus(ctx, {5}));
    EXPECT_EQ(H.rank(), 4u);
    for (size_t r = 0; r < 5; r++) {
        EXPECT_EQ(H.row(r).support().size(), 2u);
        EXPECT_TRUE(H.get(r, (r + 1) % 5));
    }
}

TEST(Export, Formats) {
    auto m = BinaryMatrix::from_rows({{1, 0, 1}, {0, 1, 0}});
    std::ostringstream a, b;
    write_coordinate_list(a, m);
    write_matrix_market(b, m);
    EXPECT_EQ(a.str(), "2 3\n0 0\n0 2\n1 1\n");
    EXPECT_EQ(b.str(), "%%MatrixMarket matrix coordinate pattern general\n2 3 3\n1 1\n1 3\n2 2\n");
}

// CSS and rank properties over 1000 random codes on random twisted tori.
TEST(InstantiateProperty, CommutationAndRankIdentities) {
    std::mt19937_64 rng(777);
    auto ctx = make_context({"x", "y"});
    std::uniform_int_distribution<int64_t> len(1, 5), shear(-2, 2);
    for (int i = 0; i < 1000; i++) {
        auto f = testing_support::random_poly(rng, ctx, 4, 3);
        auto g = testing_support::random_poly(rng, ctx, 4, 3);
        TwoBlockCode c(f, g);
        int64_t l = len(rng), m = len(rng);
        GroupPresentation pres(ctx, {{l, 0}, {shear(rng), m}});
        auto inst = instantiate(c, pres);
        const size_t N = inst.group.order();
        ASSERT_EQ(N, static_cast<size_t>(l * m));
        ASSERT_TRUE(inst.hx.multiply_transpose(inst.hz).is_zero());
        auto p = params(inst);
        // H_Z is H_X up to the group inversion and a block swap.
        ASSERT_EQ(p.rank_hx, p.rank_hz);
        // k = 2 dim(ker A cap ker B).
        auto A = instantiate_classical(f, inst.group);
        auto B = instantiate_classical(g, inst.group);
        ASSERT_EQ(p.k, 2 * A.vstack(B).nullspace().size());
        ASSERT_EQ(logical_basis(inst, Sector::X).size(), p.k);
        ASSERT_EQ(logical_basis(inst, Sector::Z).size(), p.k);
    }
}

TEST(InstantiateProperty, LogicalPairingIsNondegenerate) {
    std::mt19937_64 rng(778);
    auto ctx = make_context({"x", "y"});
    for (int i = 0; i < 100; i++) {
        TwoBlockCode c(testing_support::random_generator(rng, ctx, 3, 2),
                       testing_support::random_generator(rng, ctx, 3, 2));
        auto inst = instantiate(c, GroupPresentation::torus(ctx, {int64_t(2 + rng() % 4), int64_t(2 + rng() % 4)}));
        auto lx = logical_basis(inst, Sector::X);
        auto lz = logical_basis(inst, Sector::Z);
        BinaryMatrix pair(lx.size(), lz.size());
        for (size_t a = 0; a < lx.size(); a++) {
            for (size_t b = 0; b < lz.size(); b++) {
                pair.set(a, b, lx[a].dot(lz[b]));
            }
            EXPECT_TRUE(is_logical_operator(inst, Sector::X, lx[a]));
        }
        EXPECT_EQ(pair.rank(), lx.size());
    }
}

TEST(Tanner, ComponentCount) {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode c(parse_poly("1 + x^2", ctx), parse_poly("1 + y", ctx));
    EXPECT_EQ(tanner_components(instantiate(c, GroupPresentation::torus(ctx, {4, 3}))), 2u);
    EXPECT_EQ(tanner_components(instantiate(c, GroupPresentation::torus(ctx, {5, 3}))), 1u);
}

}  // namespace
}  // namespace ticodes
