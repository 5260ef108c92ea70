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
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hecke/exact/mpoly.hpp"
#include "hecke/exact/rational.hpp"

namespace hecke {

/// The linear form q_s - q_t + d with 0-based s < t.
struct LinearForm {
    int s = 0;
    int t = 1;
    Rational d;

    [[nodiscard]] MPoly to_poly() const;
    [[nodiscard]] Rational evaluate(std::span<const Rational> q) const { return q[s] - q[t] + d; }
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const LinearForm&, const LinearForm&) = default;
    friend auto operator<=>(const LinearForm&, const LinearForm&) = default;
};

/// Element of the generic base field: a polynomial in q_1..q_m over Q divided
/// by a product of linear forms (d + q_s - q_t).
///
/// Canonical form: no denominator factor divides the numerator, the factor
/// multiset is sorted, and zero has an empty denominator. Division is only
/// defined when the divisor's numerator is a constant times a product of such
/// linear forms; anything else raises NonAdmissibleDivisor.
class QFraction {
  public:
    QFraction() = default;
    QFraction(const Rational& c) : num_(c) {}
    template <std::integral I>
    QFraction(I c) : num_(Rational(c)) {}

    /// The formal symbol q_{index+1}.
    static QFraction variable(int index) { return QFraction(MPoly::variable(index), {}); }

    /// d + q_{s+1} - q_{t+1} for any s, t (s == t yields the constant d).
    static QFraction linear(int s, int t, const Rational& d);

    [[nodiscard]] bool is_zero() const noexcept { return num_.is_zero(); }
    [[nodiscard]] bool is_one() const { return den_.empty() && num_ == MPoly(Rational(1)); }
    [[nodiscard]] const MPoly& numerator() const noexcept { return num_; }
    [[nodiscard]] const std::vector<LinearForm>& denominator() const noexcept { return den_; }

    QFraction& operator+=(const QFraction& o);
    QFraction& operator-=(const QFraction& o) { return *this += -o; }
    QFraction& operator*=(const QFraction& o);
    QFraction& operator/=(const QFraction& o);

    friend QFraction operator+(QFraction a, const QFraction& b) { return a += b; }
    friend QFraction operator-(QFraction a, const QFraction& b) { return a -= b; }
    friend QFraction operator*(QFraction a, const QFraction& b) { return a *= b; }
    friend QFraction operator/(QFraction a, const QFraction& b) { return a /= b; }
    friend QFraction operator-(QFraction a) {
        a.num_ *= Rational(-1);
        return a;
    }

    [[nodiscard]] QFraction inverse() const { return QFraction(1) / *this; }

    /// Substitutes numeric values for q_1..q_m.
    [[nodiscard]] Rational specialize(std::span<const Rational> q) const;

    /// Numerator split as const * monic polynomial (leading monomial coefficient 1).
    [[nodiscard]] std::pair<Rational, MPoly> split_constant() const;

    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const QFraction&, const QFraction&) = default;
    friend std::strong_ordering operator<=>(const QFraction& a, const QFraction& b);
    friend std::ostream& operator<<(std::ostream& os, const QFraction& q);

  private:
    QFraction(MPoly num, std::vector<LinearForm> den) : num_(std::move(num)), den_(std::move(den)) {}

    void reduce();

    MPoly num_;
    std::vector<LinearForm> den_;
};

/// Factors `p` as constant * product of admissible linear forms, or throws
/// NonAdmissibleDivisor. Linear candidates of degree >= 2 are searched over
/// integer shifts |d| <= 64.
std::pair<Rational, std::vector<LinearForm>> factor_admissible(const MPoly& p);

}  // namespace hecke
