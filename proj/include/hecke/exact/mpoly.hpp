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

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hecke/exact/rational.hpp"

namespace hecke {

/// Exponent vector; entry i is the exponent of q_{i+1}. Trailing zeros are
/// always trimmed so that equal monomials compare equal.
using Monomial = std::vector<std::uint16_t>;

/// Sparse multivariate polynomial in q_1, q_2, ... with Rational coefficients.
class MPoly {
  public:
    using Terms = std::map<Monomial, Rational>;

    MPoly() = default;
    MPoly(const Rational& c);
    template <std::integral I>
    MPoly(I c) : MPoly(Rational(c)) {}

    /// The variable q_{index+1}.
    static MPoly variable(int index);

    [[nodiscard]] bool is_zero() const noexcept { return terms_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept;
    [[nodiscard]] Rational constant_term() const;
    [[nodiscard]] int total_degree() const;
    [[nodiscard]] int degree_in(int var) const;
    /// One past the largest variable index that occurs.
    [[nodiscard]] int variable_count() const;
    /// Coefficient of the largest monomial in the map order.
    [[nodiscard]] Rational leading_coefficient() const;
    [[nodiscard]] const Terms& terms() const noexcept { return terms_; }

    MPoly& operator+=(const MPoly& o);
    MPoly& operator-=(const MPoly& o);
    MPoly& operator*=(const Rational& c);

    friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
    friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
    friend MPoly operator-(MPoly a) { return a *= Rational(-1); }
    friend MPoly operator*(const MPoly& a, const MPoly& b);
    friend MPoly operator*(MPoly a, const Rational& c) { return a *= c; }

    [[nodiscard]] Rational evaluate(std::span<const Rational> values) const;
    /// Replaces q_{var+1} by `value`.
    [[nodiscard]] MPoly substitute(int var, const MPoly& value) const;
    /// Exact quotient by (q_{var+1} - root) when it divides; `root` must not
    /// involve q_{var+1}.
    [[nodiscard]] std::optional<MPoly> divide_by_linear(int var, const MPoly& root) const;

    /// e.g. "q1^2*q2 - 3/2*q1 + 1"; "0" for the zero polynomial.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MPoly&, const MPoly&) = default;
    friend std::strong_ordering operator<=>(const MPoly& a, const MPoly& b);

  private:
    void add_term(const Monomial& mono, const Rational& c);

    Terms terms_;
};

}  // namespace hecke
