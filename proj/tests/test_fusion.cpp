/*
   Copyright 2026 The hecke-fusion Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "doctest.h"
#include "hecke/fusion.hpp"

using namespace hecke;

namespace {

struct GridPoint {
    int m;
    int n;
};

}  // namespace

TEST_CASE("phi") {
    using F = RatFun<Rational>;
    const auto p = default_parameters(1, 2);
    const auto r = build_representation(p);
    CHECK(phi(r, 1, {}) == t_of_z(r));
    const Rational r1 = p.q[0];
    const auto expected = (AlgebraElement<F>::scalar(r.dims(), F::reciprocal_linear(r1)) + lift(r.generator(1))) * lift(r.generator(1));
    CHECK(phi(r, 2, {r1}) == expected);
    CHECK(substitute(phi(r, 2, {r1}), r1 + Rational(1)) == r.generator(1) + r.identity());
    CHECK_THROWS_AS(void(phi(r, 2, {})), Error);
    CHECK_THROWS_AS(void(phi(r, 2, {Rational(0)}).block(0)(0, 0).substitute(Rational(0))), PoleAtEvaluationPoint);
    const auto r2 = build_representation(default_parameters(2, 3));
    CHECK_THROWS_AS(void(phi(r2, 4, {})), EntryOutOfRange);
}

TEST_CASE("fused idempotents on small cases") {
    const auto r = build_representation(default_parameters(1, 2));
    const auto half = Rational::parse("1/2");
    const StandardTableau row(1, {Node{1, 1, 1}, Node{1, 1, 2}});
    const StandardTableau col(1, {Node{1, 1, 1}, Node{1, 2, 1}});
    CHECK(fused_idempotent(row, r).final == (r.identity() + r.generator(1)) * half);
    CHECK(fused_idempotent(col, r).final == (r.identity() - r.generator(1)) * half);

    const auto g = generic_parameters(2, 1);
    const auto rg = build_representation(g);
    const StandardTableau first(2, {Node{1, 1, 1}});
    const auto e = fused_idempotent(first, rg);
    CHECK(e.final == (rg.generator(0) - rg.scalar(g.q[1])) * (QFraction(1) / (g.q[0] - g.q[1])));
    REQUIRE(e.steps.size() == 1);
    CHECK(e.steps[0].target == g.q[0]);
    CHECK(e.steps[0].factor == QFraction(1) / (g.q[0] - g.q[1]));
    CHECK(e.steps[0].checksum == QFraction(1));

    const auto r0 = build_representation(default_parameters(3, 0));
    CHECK(fused_idempotent(StandardTableau::empty(3), r0).final == r0.identity());
    CHECK(jm_idempotent(StandardTableau::empty(3), r0) == r0.identity());
}

TEST_CASE("Jucys-Murphy oracle") {
    const auto r1 = build_representation(default_parameters(1, 1));
    CHECK(jm_idempotent(StandardTableau(1, {Node{1, 1, 1}}), r1) == r1.identity());
    const auto r = build_representation(default_parameters(1, 2));
    const StandardTableau row(1, {Node{1, 1, 1}, Node{1, 1, 2}});
    const auto half = Rational::parse("1/2");
    CHECK(jm_idempotent(row, r) == (jm_element(r, 2) + r.identity()) * half);
    CHECK(jm_idempotent(row, r) == (r.identity() + r.generator(1)) * half);
}

TEST_CASE("fusion, oracle and matrix unit agree") {
    for (const auto& [m, n] : std::vector<GridPoint>{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}}) {
        const auto r = build_representation(default_parameters(m, n));
        AlgebraElement<Rational> sum = r.zero();
        for (const auto& t : r.tableaux()) {
            const auto trace = fused_idempotent(t, r);
            const auto& e = trace.final;
            CHECK(e == r.matrix_unit(t));
            CHECK(e == jm_idempotent(t, r));
            CHECK(e * e == e);
            CHECK(rank(e) == 1);
            CHECK(trace.steps.size() == static_cast<std::size_t>(n));
            CHECK(trace.steps.back().checksum == Rational(1));
            for (int i = 1; i <= n; ++i) {
                const auto ji = jm_element(r, i);
                CHECK(ji * e == e * residue(t, i, r.params));
                CHECK(e * ji == e * residue(t, i, r.params));
            }
            sum += e;
        }
        CHECK(sum == r.identity());
    }
}

TEST_CASE("generic fusion at m = 2, n = 2") {
    const auto r = build_representation(generic_parameters(2, 2));
    for (const auto& t : r.tableaux()) {
        const auto e = fused_idempotent(t, r).final;
        CHECK(e == r.matrix_unit(t));
        CHECK(e == jm_idempotent(t, r));
        CHECK(verify_key_identity(t, r).ok);
        CHECK(raw_phi_product_check(t, r).ok);
    }
}

TEST_CASE("raw product of phi agrees with the step-wise path") {
    for (const auto& [m, n] : std::vector<GridPoint>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 2}}) {
        const auto r = build_representation(default_parameters(m, n));
        for (const auto& t : r.tableaux()) CHECK(raw_phi_product_check(t, r).ok);
    }
    const auto r4 = build_representation(default_parameters(1, 4));
    CHECK_THROWS_AS(void(raw_phi_product_check(r4.tableaux()[0], r4)), Error);
}

TEST_CASE("key identity") {
    for (const auto& [m, n] : std::vector<GridPoint>{{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {2, 3}, {3, 1}, {3, 2}, {3, 3}}) {
        const auto r = build_representation(default_parameters(m, n));
        for (const auto& t : r.tableaux()) CHECK(verify_key_identity(t, r).ok);
    }
}

TEST_CASE("branching of idempotents") {
    const auto r = build_representation(default_parameters(2, 3));
    for (const auto& u : all_standard_tableaux(2, 2)) {
        AlgebraElement<Rational> sum = r.zero();
        for (const auto& x : u.shape().addable()) sum += fused_idempotent(u.extended(x), r).final;
        CHECK(sum == fused_idempotent(u, r).final);
    }
}

TEST_CASE("negative control") {
    const auto r = build_representation(default_parameters(1, 3));
    const auto t = r.tableaux()[1];
    auto e = fused_idempotent(t, r).final;
    e.block(1)(0, 0) += Rational(1);
    CHECK(!(e == r.matrix_unit(t)));
    CHECK(!(e * e == e));
}

TEST_CASE("parallel map keeps order") {
    const auto out = parallel_map<int>(10, 3, [](int i) { return i * i; });
    for (int i = 0; i < 10; ++i) CHECK(out[static_cast<std::size_t>(i)] == i * i);
    CHECK_THROWS_AS(void(parallel_map<int>(4, 2, [](int i) -> int { if (i == 3) throw Error("x"); return i; })), Error);
}
