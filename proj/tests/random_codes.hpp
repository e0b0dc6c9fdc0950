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

// Random generators shared by the property tests.

#ifndef TICODES_TESTS_RANDOM_CODES_HPP
#define TICODES_TESTS_RANDOM_CODES_HPP

#include <random>
#include <vector>

#include "ticodes/poly.hpp"

namespace ticodes::testing_support {

inline Monomial random_monomial(std::mt19937_64 &rng, size_t d, int64_t range) {
    std::uniform_int_distribution<int64_t> e(-range, range);
    Monomial m = Monomial::one(d);
    for (auto &x : m.exponents) {
        x = e(rng);
    }
    return m;
}

/// Up to max_terms monomials; pairs that collide cancel, so fewer may survive.
inline LaurentPoly random_poly(std::mt19937_64 &rng, const ContextPtr &ctx, size_t max_terms, int64_t range) {
    std::uniform_int_distribution<size_t> count(0, max_terms);
    std::vector<Monomial> terms;
    size_t c = count(rng);
    for (size_t i = 0; i < c; i++) {
        terms.push_back(random_monomial(rng, ctx->dimension(), range));
    }
    return LaurentPoly::from_terms(ctx, std::move(terms));
}

/// 1 + (terms - 1) distinct non-constant monomials.
inline LaurentPoly random_generator(std::mt19937_64 &rng, const ContextPtr &ctx, size_t terms, int64_t range) {
    std::vector<Monomial> out{Monomial::one(ctx->dimension())};
    while (out.size() < terms) {
        Monomial m = random_monomial(rng, ctx->dimension(), range);
        bool fresh = true;
        for (const auto &o : out) {
            fresh = fresh && !(o == m);
        }
        if (fresh) {
            out.push_back(m);
        }
    }
    return LaurentPoly::from_terms(ctx, std::move(out));
}

}  // namespace ticodes::testing_support

#endif
