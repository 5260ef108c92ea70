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

#pragma once

// Primitive idempotents by consecutive evaluation of φ-products, the
// Jucys-Murphy inductive formula used as an independent oracle, and the
// battery of checks relating them to the seminormal matrix units.

#include <string>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/errors.hpp"
#include "hecke/exact/ratfun.hpp"
#include "hecke/parallel.hpp"
#include "hecke/rep.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// φ_k(r_1, ..., r_{k-1}; z): φ_1 = t(z), φ_{j+1} = t_j(z, r_j) φ_j t_j.
template <class S>
[[nodiscard]] AlgebraElement<RatFun<S>> phi(const Representation<S>& r, int k, const std::vector<S>& prefix) {
    using F = RatFun<S>;
    if (k < 1 || k > r.n()) throw EntryOutOfRange("phi index " + std::to_string(k));
    if (static_cast<int>(prefix.size()) != k - 1) throw Error("phi_" + std::to_string(k) + " needs " + std::to_string(k - 1) + " residues");
    AlgebraElement<F> out = t_of_z(r);
    for (int j = 1; j < k; ++j)
        out = baxterized(r, j, F::z(), F(prefix[static_cast<std::size_t>(j - 1)])) * out * lift(r.generator(j));
    return out;
}

/// Trace of an element over the whole representation.
template <class S>
[[nodiscard]] S trace(const AlgebraElement<S>& e) {
    S v(0);
    for (const auto& b : e.blocks())
        for (Eigen::Index i = 0; i < b.rows(); ++i) v += b(i, i);
    return v;
}

template <class S>
struct FusionStep {
    int k = 0;
    /// res_t(k), the value substituted for z.
    S target;
    /// Θ_{t|<=k}(res_t(k)).
    S factor;
    /// Trace of the idempotent after step k.
    S checksum;
};

template <class S>
struct FusionTrace {
    StandardTableau tableau;
    std::vector<FusionStep<S>> steps;
    AlgebraElement<S> final;
};

/// E_t by k = 1..|t| steps E^{(k)} = [Θ_{t|<=k}(z) φ_k(r_1..r_{k-1}; z) E^{(k-1)}]_{z = r_k},
/// E^{(0)} = 1. Tableaux smaller than the representation give E_t inside H_n.
template <class S>
[[nodiscard]] FusionTrace<S> fused_idempotent(const StandardTableau& t, const Representation<S>& r) {
    using F = RatFun<S>;
    if (t.size() > r.n() || t.m() != r.params.m) throw Error("tableau " + t.to_string() + " does not fit the representation");
    FusionTrace<S> trace_out{t, {}, r.identity()};
    const auto res = residue_sequence(t, r.params);
    AlgebraElement<S> e = r.identity();
    S product(1);
    for (int k = 1; k <= t.size(); ++k) {
        const StandardTableau sub = t.restrict(k);
        const std::vector<S> prefix(res.begin(), res.begin() + (k - 1));
        const F theta = theta_tableau(sub, r.params);
        AlgebraElement<F> g = phi(r, k, prefix) * lift(e);
        g *= theta;
        const S& rk = res[static_cast<std::size_t>(k - 1)];
        try {
            e = substitute(g, rk);
        } catch (const PoleAtEvaluationPoint& err) {
            throw InvariantBreach(std::string("fusion step ") + std::to_string(k) + " of " + t.to_string() + ": " + err.what());
        }
        const S factor = theta_tableau_at_top(sub, r.params);
        product *= factor;
        trace_out.steps.push_back({k, rk, factor, trace(e)});
    }
    if (!(product == theta_multipartition(t.shape(), r.params)))
        throw InvariantBreach("step factors do not multiply to the weight of " + t.shape().to_string());
    trace_out.final = e;
    return trace_out;
}

/// Θ_λ(Q) Φ(z_1, ..., z_n) at z_1 = r_1, ..., z_n = r_n, substituted in
/// increasing order, compared with the step-wise result.
template <class S>
[[nodiscard]] CheckResult raw_phi_product_check(const StandardTableau& t, const Representation<S>& r) {
    const int n = t.size();
    if (n > 3) throw Error("raw phi product check is limited to n <= 3");
    if (n != r.n()) throw Error("raw phi product check needs |t| = n");
    const auto res = residue_sequence(t, r.params);
    AlgebraElement<S> prod = r.identity();
    for (int k = 1; k <= n; ++k) {
        const std::vector<S> prefix(res.begin(), res.begin() + (k - 1));
        prod = substitute(phi(r, k, prefix) * lift(prod), res[static_cast<std::size_t>(k - 1)]);
    }
    prod *= theta_multipartition(t.shape(), r.params);
    if (!(prod == fused_idempotent(t, r).final)) return CheckResult::fail("raw product differs from fusion for " + t.to_string());
    return CheckResult::pass();
}

/// E_t = E_u ∏_{β∈A(μ), β≠α} (J_n - res β)/(r_n - res β), E_∅ = 1.
template <class S>
[[nodiscard]] AlgebraElement<S> jm_idempotent(const StandardTableau& t, const Representation<S>& r) {
    if (t.size() > r.n() || t.m() != r.params.m) throw Error("tableau " + t.to_string() + " does not fit the representation");
    AlgebraElement<S> e = r.identity();
    for (int k = 1; k <= t.size(); ++k) {
        const Node alpha = t.node_of(k);
        const S rk = residue(alpha, r.params);
        const auto jk = jm_element(r, k);
        const auto [addable, removable] = addable_removable(t.restrict(k - 1).shape());
        for (const auto& b : addable) {
            if (b == alpha) continue;
            const S rb = residue(b, r.params);
            const S den = rk - rb;
            if (den.is_zero()) throw ZeroDenominator("residues of " + t.to_string() + " collide");
            e = e * ((jk - r.scalar(rb)) * (S(1) / den));
        }
    }
    return e;
}

/// Θ_t(z) φ_n(r_1..r_{n-1}; z) E_u = (z - r_n)(z - J_n)^{-1} E_u as exact
/// identities in z, with E_u the step-wise idempotent of t without n.
template <class S>
[[nodiscard]] CheckResult verify_key_identity(const StandardTableau& t, const Representation<S>& r) {
    using F = RatFun<S>;
    const int n = t.size();
    if (n == 0) return CheckResult::pass();
    const auto res = residue_sequence(t, r.params);
    const S& rn = res.back();
    const auto eu = lift(fused_idempotent(t.restrict(n - 1), r).final);
    const std::vector<S> prefix(res.begin(), res.end() - 1);
    AlgebraElement<F> lhs = phi(r, n, prefix) * eu;
    lhs *= theta_tableau(t, r.params);

    const auto jn = jm_element(r, n);
    AlgebraElement<F> resolvent = AlgebraElement<F>::zero(r.dims());
    for (std::size_t k = 0; k < jn.block_count(); ++k) {
        const auto& b = jn.block(k);
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (i != j && !b(i, j).is_zero()) throw InvariantBreach("J_n is not diagonal");
            resolvent.block(k)(i, i) = F::linear(rn) * F::reciprocal_linear(b(i, i));
        }
    }
    if (!(lhs == resolvent * eu)) return CheckResult::fail("key identity fails for " + t.to_string());
    return CheckResult::pass();
}

/// Sum of the ranks of the blocks.
template <class S>
[[nodiscard]] int rank(const AlgebraElement<S>& e) {
    int total = 0;
    for (const auto& b : e.blocks()) total += exact_rank<S>(b);
    return total;
}

}  // namespace hecke
