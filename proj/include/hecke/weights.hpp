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

// Weights Θ_λ(Q), Θ_{λ,μ}(x, y), Θ_t(z) and the identities relating them.

#include <string>
#include <utility>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/errors.hpp"
#include "hecke/exact/ratfun.hpp"
#include "hecke/parameters.hpp"
#include "hecke/residue.hpp"

namespace hecke {

namespace detail {

template <class S>
S reciprocal_factor(const S& v) {
    if (v.is_zero()) throw ZeroDenominator("weight factor");
    return S(1) / v;
}

inline int content(const Cell& c) { return c.col - c.row; }

}  // namespace detail

/// Θ_λ(Q) from the triple product over components s, nodes of λ^s, components t.
template <class S>
[[nodiscard]] S theta_multipartition_definition(const MultiPartition& lambda, const Parameters<S>& p) {
    S v(1);
    for (int s = 1; s <= lambda.m(); ++s) {
        const Partition& ls = lambda.component(s);
        for (int i = 1; i <= ls.length(); ++i)
            for (int j = 1; j <= ls.row(i); ++j)
                for (int t = 1; t <= lambda.m(); ++t) {
                    const int h = generalized_hook_value(ls, lambda.component(t), i, j);
                    v *= detail::reciprocal_factor(S(h) + p.q[static_cast<std::size_t>(s - 1)] -
                                                   p.q[static_cast<std::size_t>(t - 1)]);
                }
    }
    return v;
}

/// Θ_λ(Q) with the own-component hook product split out.
template <class S>
[[nodiscard]] S theta_multipartition_reformulated(const MultiPartition& lambda, const Parameters<S>& p) {
    long hooks = 1;
    S cross(1);
    for (int s = 1; s <= lambda.m(); ++s) {
        const Partition& ls = lambda.component(s);
        for (int i = 1; i <= ls.length(); ++i)
            for (int j = 1; j <= ls.row(i); ++j) {
                hooks *= ls.hook(i, j);
                for (int t = 1; t <= lambda.m(); ++t) {
                    if (t == s) continue;
                    const int h = generalized_hook_value(ls, lambda.component(t), i, j);
                    cross *= detail::reciprocal_factor(S(h) + p.q[static_cast<std::size_t>(s - 1)] -
                                                       p.q[static_cast<std::size_t>(t - 1)]);
                }
            }
    }
    return cross / S(hooks);
}

/// Θ_λ(Q). Both displays are computed and must agree.
template <class S>
[[nodiscard]] S theta_multipartition(const MultiPartition& lambda, const Parameters<S>& p) {
    S v = theta_multipartition_definition(lambda, p);
    if (!(v == theta_multipartition_reformulated(lambda, p)))
        throw InvariantBreach("theta displays disagree for " + lambda.to_string());
    return v;
}

/// Θ_{λ,μ}(x, y) as a function of u = x - y.
[[nodiscard]] inline RatFun<Rational> theta_pair(const Partition& lambda, const Partition& mu) {
    using R = RatFun<Rational>;
    R v(1);
    for (int i = 1; i <= mu.length(); ++i)
        for (int j = 1; j <= mu.row(i); ++j) v *= R::reciprocal_linear(Rational(-generalized_hook_value(lambda, mu, i, j)));
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = 1; j <= lambda.row(i); ++j) v *= -R::reciprocal_linear(Rational(generalized_hook_value(mu, lambda, i, j)));
    return v;
}

/// Θ_{λ,μ}/Θ_{ν,μ} against the product over R(μ) and A(μ), ν = λ - {α}.
[[nodiscard]] inline bool theta_pair_ratio_check(const Partition& lambda, const Partition& mu, const Cell& alpha) {
    using R = RatFun<Rational>;
    const Partition nu = lambda.with_removed(alpha);
    const int ca = detail::content(alpha);
    R rhs(1);
    for (const auto& b : mu.removable()) rhs *= -R::linear(Rational(detail::content(b) - ca));
    for (const auto& g : mu.addable()) rhs *= -R::reciprocal_linear(Rational(detail::content(g) - ca));
    return theta_pair(lambda, mu) == theta_pair(nu, mu) * rhs;
}

/// Both product forms of (∏_μ hooks)/(∏_λ hooks), μ = λ - {α}.
[[nodiscard]] inline bool hook_ratio_check(const Partition& lambda, const Cell& alpha) {
    const Partition mu = lambda.with_removed(alpha);
    auto hook_product = [](const Partition& l) {
        Rational v(1);
        for (int i = 1; i <= l.length(); ++i)
            for (int j = 1; j <= l.row(i); ++j) v *= Rational(l.hook(i, j));
        return v;
    };
    const Rational ratio = hook_product(mu) / hook_product(lambda);
    const int ca = detail::content(alpha);
    Rational first(1);
    Rational second(1);
    for (const auto& b : mu.removable()) {
        first *= Rational(detail::content(b) - ca);
        second *= Rational(ca - detail::content(b));
    }
    for (const auto& g : mu.addable()) {
        if (g == alpha) continue;
        first /= Rational(detail::content(g) - ca);
        second /= Rational(ca - detail::content(g));
    }
    return ratio == first && ratio == second;
}

/// ∏_{β∈R(μ)} (r_n - res β) and ∏_{γ∈A(μ), γ≠α} (r_n - res γ) for the node
/// α of n in t and μ the shape without α.
template <class S>
[[nodiscard]] std::pair<S, S> branching_factors(const StandardTableau& t, const Parameters<S>& p) {
    const Node alpha = t.node_of(t.size());
    const S rn = residue(alpha, p);
    S num(1);
    S den(1);
    const auto [addable, removable] = addable_removable(t.shape().with_removed(alpha));
    for (const auto& b : removable) num *= rn - residue(b, p);
    for (const auto& g : addable)
        if (!(g == alpha)) den *= rn - residue(g, p);
    return {num, den};
}

/// Θ_λ Θ_μ^{-1} = ∏_{R(μ)} (r_n - res β) / ∏_{A(μ)∖α} (r_n - res γ).
template <class S>
[[nodiscard]] bool theta_branching_check(const StandardTableau& t, const Parameters<S>& p) {
    if (t.size() == 0) return true;
    const auto [num, den] = branching_factors(t, p);
    const MultiPartition mu = t.shape().with_removed(t.node_of(t.size()));
    return theta_multipartition(t.shape(), p) * den == theta_multipartition(mu, p) * num;
}

/// (z - r_n)/f(z) ∏_{i<n} (z - r_i)^2 / ((z - r_i + 1)(z - r_i - 1)).
template <class S>
[[nodiscard]] RatFun<S> theta_tableau_definition(const StandardTableau& t, const Parameters<S>& p) {
    const int n = t.size();
    if (n == 0) return RatFun<S>(1);
    const auto r = residue_sequence(t, p);
    std::vector<S> zeros{r.back()};
    std::vector<S> poles(p.q.begin(), p.q.end());
    for (int i = 0; i + 1 < n; ++i) {
        const S& ri = r[static_cast<std::size_t>(i)];
        zeros.push_back(ri);
        zeros.push_back(ri);
        poles.push_back(ri - S(1));
        poles.push_back(ri + S(1));
    }
    return RatFun<S>::from_parts(upoly::from_roots(zeros), std::move(poles));
}

/// (z - r_n) ∏_{β∈R(μ)} (z - res β) / ∏_{γ∈A(μ)} (z - res γ).
template <class S>
[[nodiscard]] RatFun<S> theta_tableau_product(const StandardTableau& t, const Parameters<S>& p) {
    const int n = t.size();
    if (n == 0) return RatFun<S>(1);
    const Node alpha = t.node_of(n);
    const auto [addable, removable] = addable_removable(t.shape().with_removed(alpha));
    std::vector<S> zeros{residue(alpha, p)};
    for (const auto& b : removable) zeros.push_back(residue(b, p));
    std::vector<S> poles;
    for (const auto& g : addable) poles.push_back(residue(g, p));
    return RatFun<S>::from_parts(upoly::from_roots(zeros), std::move(poles));
}

/// Θ_t(z) in lowest terms; the two forms must agree.
template <class S>
[[nodiscard]] RatFun<S> theta_tableau(const StandardTableau& t, const Parameters<S>& p) {
    RatFun<S> v = theta_tableau_definition(t, p);
    if (!(v == theta_tableau_product(t, p))) throw InvariantBreach("theta_t forms disagree for " + t.to_string());
    return v;
}

/// Θ_t(res_t(n)), checked against Θ_λ/Θ_μ.
template <class S>
[[nodiscard]] S theta_tableau_at_top(const StandardTableau& t, const Parameters<S>& p) {
    const int n = t.size();
    if (n == 0) return S(1);
    const S v = theta_tableau(t, p).substitute(residue(t, n, p));
    const MultiPartition mu = t.shape().with_removed(t.node_of(n));
    if (!(v * theta_multipartition(mu, p) == theta_multipartition(t.shape(), p)))
        throw InvariantBreach("theta_t at top disagrees with weight ratio for " + t.to_string());
    return v;
}

}  // namespace hecke
