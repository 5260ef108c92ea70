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

#include <string>
#include <type_traits>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/exact/qfraction.hpp"
#include "hecke/exact/rational.hpp"

namespace hecke {

/// Whether S carries q_1..q_m as formal symbols.
template <class S>
inline constexpr bool is_generic_scalar_v = std::is_same_v<S, QFraction>;

/// The tuple (m, n, Q) fixing one algebra H_{m,n}(Q).
///
/// Specialized mode uses S = Rational with concrete q values; generic mode
/// uses S = QFraction with q_i the formal symbols.
template <class S>
struct Parameters {
    int m = 1;
    int n = 0;
    std::vector<S> q;

    [[nodiscard]] static constexpr bool generic() { return is_generic_scalar_v<S>; }

    /// f(z) = (z - q_1)...(z - q_m) as its list of roots.
    [[nodiscard]] const std::vector<S>& cyclotomic_roots() const { return q; }
};

/// q_i = (n+1)(i-1): every difference q_i - q_j (i != j) is a multiple of
/// n+1, so no separation factor d + q_i - q_j with |d| <= n vanishes.
[[nodiscard]] inline Parameters<Rational> default_parameters(int m, int n) {
    Parameters<Rational> p{m, n, {}};
    for (int i = 1; i <= m; ++i) p.q.emplace_back((n + 1) * (i - 1));
    return p;
}

[[nodiscard]] inline Parameters<Rational> specialized_parameters(int m, int n, std::vector<Rational> q) {
    if (static_cast<int>(q.size()) != m)
        throw Error("expected " + std::to_string(m) + " q values, got " + std::to_string(q.size()));
    return Parameters<Rational>{m, n, std::move(q)};
}

[[nodiscard]] inline Parameters<QFraction> generic_parameters(int m, int n) {
    Parameters<QFraction> p{m, n, {}};
    for (int i = 0; i < m; ++i) p.q.push_back(QFraction::variable(i));
    return p;
}

/// n! * prod_{i<j} prod_{|d|<=n} (d + q_i - q_j). Zero means Q is rejected.
template <class S>
[[nodiscard]] S separation_value(const Parameters<S>& p) {
    S v(factorial(p.n));
    for (int i = 0; i < p.m; ++i)
        for (int j = i + 1; j < p.m; ++j)
            for (int d = -p.n; d <= p.n; ++d) v *= S(d) + p.q[static_cast<std::size_t>(i)] - p.q[static_cast<std::size_t>(j)];
    return v;
}

/// Throws SeparationViolated unless the separation value is nonzero.
template <class S>
void require_separation(const Parameters<S>& p) {
    if (separation_value(p).is_zero()) throw SeparationViolated("m=" + std::to_string(p.m) + ", n=" + std::to_string(p.n));
}

}  // namespace hecke
