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
#include <concepts>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hecke {

/// Arbitrary precision rational number, always in lowest terms with a
/// positive denominator. Thin value wrapper around mpq_class so that every
/// arithmetic expression yields a Rational (no gmpxx expression templates
/// leak into generic code such as Eigen kernels).
class Rational {
  public:
    Rational() = default;

    template <std::integral I>
    Rational(I v) : v_(static_cast<long>(v)) {}

    Rational(const mpz_class& num, const mpz_class& den);

    explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" with decimal integers.
    static Rational parse(std::string_view text);

    [[nodiscard]] const mpq_class& raw() const noexcept { return v_; }
    [[nodiscard]] mpz_class numerator() const { return v_.get_num(); }
    [[nodiscard]] mpz_class denominator() const { return v_.get_den(); }

    [[nodiscard]] bool is_zero() const noexcept { return sgn(v_) == 0; }
    [[nodiscard]] bool is_one() const noexcept { return v_ == 1; }
    [[nodiscard]] bool is_integer() const noexcept { return v_.get_den() == 1; }
    [[nodiscard]] int sign() const noexcept { return sgn(v_); }

    /// "p" for integers, "p/q" otherwise.
    [[nodiscard]] std::string to_string() const;

    Rational& operator+=(const Rational& o) {
        v_ += o.v_;
        return *this;
    }
    Rational& operator-=(const Rational& o) {
        v_ -= o.v_;
        return *this;
    }
    Rational& operator*=(const Rational& o) {
        v_ *= o.v_;
        return *this;
    }
    Rational& operator/=(const Rational& o);

    [[nodiscard]] Rational inverse() const;

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.v_)); }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        const int c = cmp(a.v_, b.v_);
        return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
    }

    friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  private:
    mpq_class v_;
};

[[nodiscard]] inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

/// n! as a Rational.
[[nodiscard]] Rational factorial(int n);

}  // namespace hecke
