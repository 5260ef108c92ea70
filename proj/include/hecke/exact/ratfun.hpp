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

#include <algorithm>
#include <compare>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hecke/errors.hpp"
#include "hecke/exact/qfraction.hpp"
#include "hecke/exact/rational.hpp"

namespace hecke {

/// Dense univariate polynomials over a field S; index k holds the z^k coefficient.
namespace upoly {

template <class S>
using Poly = std::vector<S>;

template <class S>
void trim(Poly<S>& p) {
    while (!p.empty() && p.back().is_zero()) p.pop_back();
}

template <class S>
[[nodiscard]] Poly<S> add(const Poly<S>& a, const Poly<S>& b) {
    Poly<S> out(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    trim(out);
    return out;
}

template <class S>
[[nodiscard]] Poly<S> mul(const Poly<S>& a, const Poly<S>& b) {
    if (a.empty() || b.empty()) return {};
    Poly<S> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!b[j].is_zero()) out[i + j] += a[i] * b[j];
    }
    trim(out);
    return out;
}

template <class S>
[[nodiscard]] Poly<S> scale(Poly<S> p, const S& c) {
    if (c.is_zero()) return {};
    for (auto& x : p) x *= c;
    return p;
}

/// Multiplies by (z - c).
template <class S>
[[nodiscard]] Poly<S> mul_linear(const Poly<S>& p, const S& c) {
    if (p.empty()) return {};
    Poly<S> out(p.size() + 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        out[i + 1] += p[i];
        out[i] -= c * p[i];
    }
    trim(out);
    return out;
}

/// Synthetic division by (z - c): returns (quotient, remainder).
template <class S>
[[nodiscard]] std::pair<Poly<S>, S> div_linear(const Poly<S>& p, const S& c) {
    if (p.empty()) return {{}, S(0)};
    Poly<S> q(p.size() - 1);
    S carry = p.back();
    for (std::size_t k = p.size() - 1; k > 0; --k) {
        q[k - 1] = carry;
        carry = p[k - 1] + c * carry;
    }
    return {std::move(q), std::move(carry)};
}

template <class S>
[[nodiscard]] S eval(const Poly<S>& p, const S& c) {
    S acc(0);
    for (std::size_t k = p.size(); k-- > 0;) acc = acc * c + p[k];
    return acc;
}

template <class S>
[[nodiscard]] Poly<S> from_roots(const std::vector<S>& roots) {
    Poly<S> p{S(1)};
    for (const auto& r : roots) p = mul_linear(p, r);
    return p;
}

template <class S>
[[nodiscard]] std::string to_string(const Poly<S>& p, const std::string& var) {
    if (p.empty()) return "0";
    std::string out;
    for (std::size_t k = p.size(); k-- > 0;) {
        if (p[k].is_zero()) continue;
        if (!out.empty()) out += " + ";
        std::string c = p[k].to_string();
        if (k == 0) {
            out += c;
            continue;
        }
        if (c != "1") out += (c.find_first_of(" +-/") != std::string::npos ? "(" + c + ")" : c) + "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

}  // namespace upoly

/// Roots of a polynomial that splits into linear factors over S; throws when
/// no complete split is found. Used only by RatFun::inverse.
std::vector<Rational> split_linear_roots(const upoly::Poly<Rational>& p);
std::vector<QFraction> split_linear_roots(const upoly::Poly<QFraction>& p);

/// Rational function in one live indeterminate z over the field S.
///
/// The denominator is kept factored as a monic product of linear factors
/// (z - b_j), stored as the sorted multiset of roots b_j. Normalization is
/// eager: no root of the denominator is a root of the numerator, which makes
/// gcd(numerator, denominator) a unit and the representation canonical.
template <class S>
class RatFun {
  public:
    using Poly = upoly::Poly<S>;

    RatFun() = default;
    RatFun(const S& c) {
        if (!c.is_zero()) num_.push_back(c);
    }
    template <std::integral I>
    RatFun(I c) : RatFun(S(c)) {}

    /// num / prod (z - roots), normalized.
    static RatFun from_parts(Poly num, std::vector<S> roots) {
        RatFun r;
        r.num_ = std::move(num);
        r.roots_ = std::move(roots);
        std::sort(r.roots_.begin(), r.roots_.end());
        r.normalize();
        return r;
    }
    static RatFun polynomial(Poly p) { return from_parts(std::move(p), {}); }
    static RatFun z() { return polynomial(Poly{S(0), S(1)}); }
    /// z - c
    static RatFun linear(const S& c) { return polynomial(Poly{-c, S(1)}); }
    /// 1 / (z - c)
    static RatFun reciprocal_linear(const S& c) {
        RatFun r;
        r.num_ = Poly{S(1)};
        r.roots_ = {c};
        return r;
    }

    [[nodiscard]] const Poly& numerator() const noexcept { return num_; }
    [[nodiscard]] const std::vector<S>& denominator_roots() const noexcept { return roots_; }
    [[nodiscard]] Poly denominator() const { return upoly::from_roots(roots_); }

    [[nodiscard]] bool is_zero() const noexcept { return num_.empty(); }
    [[nodiscard]] bool is_polynomial() const noexcept { return roots_.empty(); }
    [[nodiscard]] bool is_constant() const noexcept { return roots_.empty() && num_.size() <= 1; }
    [[nodiscard]] S constant_value() const {
        if (!is_constant()) throw Error("rational function is not constant");
        return num_.empty() ? S(0) : num_[0];
    }

    RatFun& operator+=(const RatFun& o) {
        if (o.is_zero()) return *this;
        if (is_zero()) return *this = o;
        if (roots_ == o.roots_) {
            num_ = upoly::add(num_, o.num_);
            normalize();
            return *this;
        }
        std::vector<S> lcm;
        std::vector<S> missing_self;
        std::vector<S> missing_other;
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < roots_.size() || j < o.roots_.size()) {
            if (j == o.roots_.size() || (i < roots_.size() && roots_[i] < o.roots_[j])) {
                lcm.push_back(roots_[i]);
                missing_other.push_back(roots_[i++]);
            } else if (i == roots_.size() || o.roots_[j] < roots_[i]) {
                lcm.push_back(o.roots_[j]);
                missing_self.push_back(o.roots_[j++]);
            } else {
                lcm.push_back(roots_[i]);
                ++i;
                ++j;
            }
        }
        Poly a = num_;
        for (const auto& r : missing_self) a = upoly::mul_linear(a, r);
        Poly b = o.num_;
        for (const auto& r : missing_other) b = upoly::mul_linear(b, r);
        num_ = upoly::add(a, b);
        roots_ = std::move(lcm);
        normalize();
        return *this;
    }
    RatFun& operator-=(const RatFun& o) { return *this += -o; }

    RatFun& operator*=(const RatFun& o) {
        if (is_zero()) return *this;
        if (o.is_zero()) return *this = RatFun();
        if (o.is_constant()) return *this *= o.num_[0];
        if (is_constant()) {
            const S c = num_[0];
            *this = o;
            return *this *= c;
        }
        num_ = upoly::mul(num_, o.num_);
        std::vector<S> merged;
        merged.reserve(roots_.size() + o.roots_.size());
        std::merge(roots_.begin(), roots_.end(), o.roots_.begin(), o.roots_.end(), std::back_inserter(merged));
        roots_ = std::move(merged);
        normalize();
        return *this;
    }
    RatFun& operator*=(const S& c) {
        if (c.is_zero()) return *this = RatFun();
        for (auto& x : num_) x *= c;
        return *this;
    }
    RatFun& operator/=(const RatFun& o) { return *this *= o.inverse(); }

    friend RatFun operator+(RatFun a, const RatFun& b) { return a += b; }
    friend RatFun operator-(RatFun a, const RatFun& b) { return a -= b; }
    friend RatFun operator*(RatFun a, const RatFun& b) { return a *= b; }
    friend RatFun operator*(RatFun a, const S& c) { return a *= c; }
    friend RatFun operator*(const S& c, RatFun a) { return a *= c; }
    friend RatFun operator/(RatFun a, const RatFun& b) { return a /= b; }
    friend RatFun operator-(RatFun a) {
        for (auto& x : a.num_) x = -x;
        return a;
    }

    /// Reciprocal. The numerator must split into linear factors over S.
    [[nodiscard]] RatFun inverse() const {
        if (is_zero()) throw DivisionByZero();
        RatFun r;
        r.num_ = upoly::scale(upoly::from_roots(roots_), num_.back().inverse());
        r.roots_ = split_linear_roots(num_);
        std::sort(r.roots_.begin(), r.roots_.end());
        r.normalize();
        return r;
    }

    /// Value at z = c of the reduced fraction. Because the stored form is
    /// already fully cancelled, a denominator root equal to c is a genuine pole.
    [[nodiscard]] S substitute(const S& c) const {
        for (const auto& r : roots_)
            if (r == c) throw PoleAtEvaluationPoint(c.to_string());
        S v = upoly::eval(num_, c);
        for (const auto& r : roots_) v /= (c - r);
        return v;
    }

    /// num(c) / den(c) without consulting the factored form.
    [[nodiscard]] S evaluate_naive(const S& c) const {
        const S den = upoly::eval(denominator(), c);
        if (den.is_zero()) throw PoleAtEvaluationPoint(c.to_string());
        return upoly::eval(num_, c) / den;
    }

    [[nodiscard]] std::string to_string(const std::string& var = "z") const {
        std::string num = upoly::to_string(num_, var);
        if (roots_.empty()) return num;
        std::string den;
        for (const auto& r : roots_) {
            if (!den.empty()) den += "*";
            den += "(" + var + (r.is_zero() ? "" : " - (" + r.to_string() + ")") + ")";
        }
        return "(" + num + ")/(" + den + ")";
    }

    friend bool operator==(const RatFun&, const RatFun&) = default;
    friend std::ostream& operator<<(std::ostream& os, const RatFun& r) { return os << r.to_string(); }

  private:
    void normalize() {
        upoly::trim(num_);
        if (num_.empty()) {
            roots_.clear();
            return;
        }
        std::vector<S> kept;
        kept.reserve(roots_.size());
        for (std::size_t i = 0; i < roots_.size();) {
            std::size_t j = i;
            while (j < roots_.size() && roots_[j] == roots_[i]) ++j;
            std::size_t remaining = j - i;
            while (remaining > 0) {
                auto [q, rem] = upoly::div_linear(num_, roots_[i]);
                if (!rem.is_zero()) break;
                num_ = std::move(q);
                --remaining;
            }
            kept.insert(kept.end(), remaining, roots_[i]);
            i = j;
        }
        roots_ = std::move(kept);
    }

    Poly num_;
    std::vector<S> roots_;
};

}  // namespace hecke
