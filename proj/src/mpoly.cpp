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

#include "hecke/exact/mpoly.hpp"

#include <algorithm>
#include <numeric>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

void trim(Monomial& m) {
    while (!m.empty() && m.back() == 0) m.pop_back();
}

Monomial multiply(const Monomial& a, const Monomial& b) {
    Monomial out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
}

int exponent(const Monomial& m, int var) {
    return static_cast<std::size_t>(var) < m.size() ? m[static_cast<std::size_t>(var)] : 0;
}

Monomial without(Monomial m, int var) {
    if (static_cast<std::size_t>(var) < m.size()) m[static_cast<std::size_t>(var)] = 0;
    trim(m);
    return m;
}

}  // namespace

MPoly::MPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

MPoly MPoly::variable(int index) {
    if (index < 0) throw Error("negative variable index");
    MPoly p;
    Monomial m(static_cast<std::size_t>(index) + 1, 0);
    m.back() = 1;
    p.terms_.emplace(std::move(m), Rational(1));
    return p;
}

bool MPoly::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty()); }

Rational MPoly::constant_term() const {
    auto it = terms_.find(Monomial{});
    return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::total_degree() const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, std::accumulate(m.begin(), m.end(), 0));
    return d;
}

int MPoly::degree_in(int var) const {
    int d = 0;
    for (const auto& [m, c] : terms_) d = std::max(d, exponent(m, var));
    return d;
}

int MPoly::variable_count() const {
    std::size_t n = 0;
    for (const auto& [m, c] : terms_) n = std::max(n, m.size());
    return static_cast<int>(n);
}

Rational MPoly::leading_coefficient() const { return terms_.empty() ? Rational(0) : terms_.rbegin()->second; }

void MPoly::add_term(const Monomial& mono, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(mono, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

MPoly& MPoly::operator+=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

MPoly& MPoly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) out.add_term(multiply(ma, mb), ca * cb);
    return out;
}

Rational MPoly::evaluate(std::span<const Rational> values) const {
    Rational sum;
    for (const auto& [m, c] : terms_) {
        Rational term = c;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (i >= values.size()) throw Error("evaluate: missing value for q" + std::to_string(i + 1));
            for (int e = 0; e < m[i]; ++e) term *= values[i];
        }
        sum += term;
    }
    return sum;
}

MPoly MPoly::substitute(int var, const MPoly& value) const {
    std::vector<MPoly> powers{MPoly(Rational(1))};
    MPoly out;
    for (const auto& [m, c] : terms_) {
        const int e = exponent(m, var);
        while (static_cast<int>(powers.size()) <= e) powers.push_back(powers.back() * value);
        MPoly mono;
        mono.add_term(without(m, var), c);
        out += mono * powers[static_cast<std::size_t>(e)];
    }
    return out;
}

std::optional<MPoly> MPoly::divide_by_linear(int var, const MPoly& root) const {
    if (is_zero()) return MPoly();
    const int deg = degree_in(var);
    if (deg == 0) return std::nullopt;
    // Coefficients C_k, free of q_var, with P = sum_k C_k q_var^k.
    std::vector<MPoly> coeff(static_cast<std::size_t>(deg) + 1);
    for (const auto& [m, c] : terms_) coeff[static_cast<std::size_t>(exponent(m, var))].add_term(without(m, var), c);
    // Synthetic division by (q_var - root).
    std::vector<MPoly> quot(static_cast<std::size_t>(deg));
    quot[static_cast<std::size_t>(deg) - 1] = coeff[static_cast<std::size_t>(deg)];
    for (int k = deg - 1; k >= 1; --k)
        quot[static_cast<std::size_t>(k) - 1] = coeff[static_cast<std::size_t>(k)] + root * quot[static_cast<std::size_t>(k)];
    if (!(coeff[0] + root * quot[0]).is_zero()) return std::nullopt;
    MPoly out;
    const MPoly x = variable(var);
    MPoly power(Rational(1));
    for (std::size_t k = 0; k < quot.size(); ++k) {
        out += quot[k] * power;
        power = power * x;
    }
    return out;
}

std::string MPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        Rational mag = abs(c);
        if (first) {
            if (c.sign() < 0) out += "-";
        } else {
            out += c.sign() < 0 ? " - " : " + ";
        }
        first = false;
        std::string mono;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "q" + std::to_string(i + 1);
            if (m[i] > 1) mono += "^" + std::to_string(m[i]);
        }
        if (mono.empty())
            out += mag.to_string();
        else if (mag.is_one())
            out += mono;
        else
            out += mag.to_string() + "*" + mono;
    }
    return out;
}

std::strong_ordering operator<=>(const MPoly& a, const MPoly& b) {
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end() && ib != b.terms_.end(); ++ia, ++ib) {
        if (auto c = ia->first <=> ib->first; c != 0) return c;
        if (auto c = ia->second <=> ib->second; c != 0) return c;
    }
    return a.terms_.size() <=> b.terms_.size();
}

}  // namespace hecke
