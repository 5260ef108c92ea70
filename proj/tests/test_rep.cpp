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

#include <algorithm>

#include "doctest.h"
#include "hecke/rep.hpp"

using namespace hecke;

namespace {

MultiPartition MP(std::vector<std::vector<int>> comps) {
    std::vector<Partition> out;
    for (auto& c : comps) out.emplace_back(std::move(c));
    return MultiPartition(std::move(out));
}

struct GridPoint {
    int m;
    int n;
};

const std::vector<GridPoint> kGrid{{1, 1}, {1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 1}, {2, 2},
                                   {2, 3}, {2, 4}, {3, 1}, {3, 2}, {3, 3}};

template <class S>
Matrix<S> diag(std::vector<S> v) {
    Matrix<S> m = Matrix<S>::Constant(static_cast<Eigen::Index>(v.size()), static_cast<Eigen::Index>(v.size()), S(0));
    for (std::size_t i = 0; i < v.size(); ++i) m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = v[i];
    return m;
}

}  // namespace

TEST_CASE("seminormal generators on small blocks") {
    const auto p = default_parameters(1, 3);
    const auto row = build_specht_block(MP({{2}}), default_parameters(1, 2));
    CHECK(row.gens[1] == diag<Rational>({Rational(1)}));
    const auto col = build_specht_block(MP({{1, 1}}), default_parameters(1, 2));
    CHECK(col.gens[1] == diag<Rational>({Rational(-1)}));

    // Basis order: [[1,3],[2]] then [[1,2],[3]], so J_2 = diag(-1, 1).
    const auto r = build_representation(p);
    const auto hook = r.blocks[1];
    REQUIRE(hook.shape == MP({{2, 1}}));
    CHECK(hook.basis[0].to_string() == "[[1,3],[2]]");
    const auto j2 = jm_element(r, 2);
    CHECK(j2.block(1) == diag<Rational>({Rational(-1), Rational(1)}));
    CHECK(j2.block(1) == diag<Rational>({residue(hook.basis[0], 2, p), residue(hook.basis[1], 2, p)}));

    // t_i^2 = 1 in the paired case: 1/d^2 + (1 - 1/d^2) = 1.
    const Matrix<Rational>& t2 = hook.gens[2];
    CHECK(t2 * t2 == Matrix<Rational>::Identity(2, 2));
    CHECK(t2(1, 0) == Rational(1));
    CHECK(t2(0, 0) == Rational::parse("1/2"));
    CHECK(t2(0, 1) == Rational::parse("3/4"));

    CHECK_THROWS_AS(void(build_specht_block(MP({{1}, {1}}), specialized_parameters(2, 2, {Rational(0), Rational(1)}))),
                    SeparationViolated);
}

TEST_CASE("defining relations hold on every block") {
    for (const auto& [m, n] : kGrid) {
        const auto r = build_representation(default_parameters(m, n));
        for (const auto& b : r.blocks) {
            const auto res = verify_defining_relations(b);
            CHECK_MESSAGE(res.ok, res.failure);
        }
    }
    for (int n = 1; n <= 3; ++n) {
        const auto g = build_representation(generic_parameters(2, n));
        for (const auto& b : g.blocks) CHECK(verify_defining_relations(b).ok);
    }
    const auto g3 = build_representation(generic_parameters(3, 2));
    for (const auto& b : g3.blocks) CHECK(verify_defining_relations(b).ok);
}

TEST_CASE("defining relations: negative control and m = 1") {
    auto b = build_specht_block(MP({{2, 1}}), default_parameters(1, 3));
    CHECK(b.gens[0] == Matrix<Rational>::Zero(2, 2));
    CHECK(verify_defining_relations(b).ok);
    b.gens[2](0, 1) += Rational(1);
    const auto res = verify_defining_relations(b);
    CHECK(!res.ok);
    CHECK(!res.failure.empty());

    auto c = build_specht_block(MP({{1}, {1}}), default_parameters(2, 2));
    c.gens[0](0, 0) += Rational(1);
    CHECK(verify_defining_relations(c).failure.find("cyclotomic") != std::string::npos);
}

TEST_CASE("Jucys-Murphy elements") {
    const auto p = generic_parameters(1, 2);
    const auto r = build_representation(p);
    CHECK(jm_element(r, 1) == r.generator(0));
    CHECK(jm_element(r, 2).block(0) == diag<QFraction>({p.q[0] + QFraction(1)}));
    CHECK_THROWS_AS(void(jm_element(r, 3)), EntryOutOfRange);
    for (const auto& [m, n] : kGrid) {
        const auto rr = build_representation(default_parameters(m, n));
        CHECK(verify_jm_diagonal(rr).ok);
        // Eigenvalues are the residue multisets, and the J_i commute.
        for (int i = 1; i <= n; ++i) {
            const auto ji = jm_element(rr, i);
            for (std::size_t k = 0; k < rr.blocks.size(); ++k) {
                std::vector<Rational> eig, res;
                for (Eigen::Index a = 0; a < ji.block(k).rows(); ++a) eig.push_back(ji.block(k)(a, a));
                for (const auto& t : enumerate_standard_tableaux(rr.blocks[k].shape)) res.push_back(residue(t, i, rr.params));
                std::sort(eig.begin(), eig.end());
                std::sort(res.begin(), res.end());
                CHECK(eig == res);
            }
            for (int j = i + 1; j <= n; ++j) {
                const auto jj = jm_element(rr, j);
                CHECK(ji * jj == jj * ji);
            }
        }
    }
    CHECK(verify_jm_diagonal(build_representation(generic_parameters(2, 3))).ok);
}

TEST_CASE("t(z)") {
    using F = RatFun<QFraction>;
    const auto r1 = build_representation(generic_parameters(1, 3));
    CHECK(t_of_z(r1) == AlgebraElement<F>::identity(r1.dims()));

    const auto p2 = generic_parameters(2, 2);
    const auto r2 = build_representation(p2);
    const auto tz = t_of_z(r2);
    const auto expected = AlgebraElement<F>::scalar(r2.dims(), F::linear(p2.q[0] + p2.q[1])) + lift(r2.generator(0));
    CHECK(tz == expected);

    for (const auto& [m, n] : std::vector<GridPoint>{{1, 2}, {2, 2}, {3, 2}, {3, 3}}) {
        const auto g = generic_parameters(m, n);
        const auto r = build_representation(g);
        const F f = F::polynomial(upoly::from_roots(g.q));
        const auto lhs = (AlgebraElement<F>::scalar(r.dims(), F::z()) - lift(r.generator(0))) * t_of_z(r);
        CHECK(lhs == AlgebraElement<F>::scalar(r.dims(), f));
    }
}

TEST_CASE("Baxterized elements") {
    using F = RatFun<Rational>;
    const auto r = build_representation(default_parameters(2, 3));
    CHECK_THROWS_AS(void(baxterized(r, 1, Rational(3), Rational(3))), SpectralCollision);
    CHECK_THROWS_AS(void(baxterized(r, 1, F::z(), F::z())), SpectralCollision);
    // 1/(x - y) -> 0 as x grows: the z^0 part of t_1(z, y) at infinity is t_1.
    const auto b = baxterized(r, 1, F::z(), F(Rational(2)));
    const auto diff = b - lift(r.generator(1));
    CHECK(diff == AlgebraElement<F>::scalar(r.dims(), F::reciprocal_linear(Rational(2))));

    for (const auto& [m, n] : kGrid) {
        if (n > 4) continue;
        const auto rr = build_representation(default_parameters(m, n));
        CHECK(verify_unitarity(rr, 11).ok);
        CHECK(verify_yang_baxter(rr, 12).ok);
    }
    for (int n = 2; n <= 3; ++n) {
        const auto g = build_representation(generic_parameters(2, n));
        CHECK(verify_unitarity(g, 13).ok);
        CHECK(verify_yang_baxter(g, 14).ok);
    }
}

TEST_CASE("reflection equation") {
    for (const auto& [m, n] : kGrid) {
        if (n < 2 || n > 4) continue;
        const auto rr = build_representation(default_parameters(m, n));
        const auto res = verify_reflection_equation(rr, 21);
        CHECK_MESSAGE(res.ok, res.failure);
    }
    for (int m = 1; m <= 3; ++m) {
        const auto g = build_representation(generic_parameters(m, 2));
        CHECK(verify_reflection_equation(g, 22).ok);
    }
    CHECK(verify_reflection_equation(build_representation(generic_parameters(2, 3)), 23).ok);

    // The four-term form holds for m = 1 and fails once m >= 2.
    for (int n = 2; n <= 4; ++n)
        CHECK(verify_reflection_equation(build_representation(default_parameters(1, n)), 25, 5, ReflectionForm::FourTerm).ok);
    CHECK(!verify_reflection_equation(build_representation(generic_parameters(2, 2)), 26, 5, ReflectionForm::FourTerm).ok);
    CHECK(!verify_reflection_equation(build_representation(default_parameters(3, 2)), 27, 5, ReflectionForm::FourTerm).ok);

    // Negative control: perturb one entry of t(z).
    const auto r = build_representation(default_parameters(2, 2));
    auto tz = t_of_z(r);
    tz.block(2)(0, 0) += RatFun<Rational>(1);
    CHECK(!verify_reflection_equation(r, tz, 24).ok);
}

TEST_CASE("symmetric polynomials in Jucys-Murphy elements are central") {
    CHECK(verify_center(build_representation(default_parameters(2, 2)), 1).ok);
    CHECK(verify_center(build_representation(default_parameters(3, 1)), 1).ok);
    for (const auto& [m, n] : kGrid) {
        const auto rr = build_representation(default_parameters(m, n));
        for (int k = 1; k <= n; ++k) CHECK(verify_center(rr, k).ok);
    }
    const auto g = build_representation(generic_parameters(2, 2));
    CHECK(verify_center(g, 1).ok);
    CHECK(verify_center(g, 2).ok);
    // J_1 alone is not central once n >= 2.
    const auto r = build_representation(default_parameters(2, 2));
    const auto j1 = jm_element(r, 1);
    CHECK(!(j1 * r.generator(1) == r.generator(1) * j1));
}

TEST_CASE("empty algebra") {
    const auto r = build_representation(default_parameters(2, 0));
    REQUIRE(r.blocks.size() == 1);
    CHECK(r.dims() == std::vector<int>{1});
    CHECK(verify_defining_relations(r.blocks[0]).ok);
    CHECK(r.matrix_unit(StandardTableau::empty(2)) == r.identity());
}
