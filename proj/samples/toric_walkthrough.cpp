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

// Toric code from f = 1 + x, g = 1 + y: parameters, distance and barrier
// on small tori, then the lift of a three-variable code to its parent.

#include <cstdio>

#include "ticodes/barrier.hpp"
#include "ticodes/distance.hpp"
#include "ticodes/instantiate.hpp"

using namespace ticodes;

int main() {
    auto ctx = make_context({"x", "y"});
    TwoBlockCode toric(parse_poly("1 + x", ctx), parse_poly("1 + y", ctx));
    std::printf("family tree %s, indecomposable %d\n", family_tree(toric).to_string().c_str(),
                is_indecomposable(toric));

    for (int64_t L = 2; L <= 4; L++) {
        auto inst = instantiate(toric, GroupPresentation::torus(ctx, {L, L}));
        auto p = params(inst);
        auto d = exact_distance(inst, 32);
        std::printf("L=%lld  n=%zu k=%zu d=%zu", static_cast<long long>(L), p.n, p.k, d.d_upper);
        if (inst.num_qubits() <= kDefaultBarrierCap) {
            std::printf(" barrier=%zu", code_barrier(inst).best.barrier);
        }
        std::printf("\n");
    }

    auto xyz = make_context({"x", "y", "z"});
    TwoBlockCode child(parse_poly("1 + x*y + x^2*y + y^3", xyz), parse_poly("1 + x*z + z^2", xyz));
    ParentLift lift = lift_to_parent(child);
    const auto &pctx = *lift.parent_context();
    std::printf("parent (%s, %s)\n", lift.parent.code().f().to_string().c_str(),
                lift.parent.code().g().to_string().c_str());
    for (size_t i = 0; i < pctx.dimension(); i++) {
        std::printf("  %s -> %s\n", pctx.name(i).c_str(),
                    monomial_to_string(lift.substitution.images[i], *xyz).c_str());
    }
    for (const auto &t : lift.twists) {
        std::printf("  twist %s\n", relation_to_string(t, pctx).c_str());
    }
    TwoBlockCode back = compactify(lift.parent, lift.substitution, lift.twists);
    std::printf("compactified back to the child: %s\n", back.normalized() == child.normalized() ? "yes" : "no");
    return 0;
}
