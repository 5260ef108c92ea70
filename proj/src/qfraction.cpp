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

#include "hecke/exact/qfraction.hpp"

#include <algorithm>
#include <ostream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr int kShiftSearchBound = 64;

MPoly product(const std::vector<LinearForm>& forms) {
    MPoly p(Rational(1));
    for (const auto& f : forms) p = p * f.to_poly();
    return p;
}

std::optional<MPoly> divide(const MPoly& p, const LinearForm& f) {
    // q_s - (q_t - d)
    return p.divide_by_linear(f.s, MPoly::variable(f.t) - MPoly(f.d));
}

/// Recognizes alpha * (q_s - q_t + d); returns nullopt otherwise.
std::optional<std::pair<Rational, LinearForm>> as_linear_form(const MPoly& p) {
    std::vector<std::pair<int, Rational>> vars;
    Rational constant;
    for (const auto& [m, c] : p.terms()) {
        if (m.empty()) {
            constant = c;
            continue;
        }
        int var = -1;
        int deg = 0;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            deg += m[i];
            var = static_cast<int>(i);
        }
        if (deg != 1) return std::nullopt;
        vars.emplace_back(var, c);
    }
    if (vars.size() != 2) return std::nullopt;
    std::sort(vars.begin(), vars.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const auto& [s, a] = vars[0];
    const auto& [t, b] = vars[1];
    if (a != -b) return std::nullopt;
    return std::make_pair(a, LinearForm{s, t, constant / a});
}

}  // namespace

MPoly LinearForm::to_poly() const { return MPoly::variable(s) - MPoly::variable(t) + MPoly(d); }

std::string LinearForm::to_string() const {
    std::string out = "q" + std::to_string(s + 1) + " - q" + std::to_string(t + 1);
    if (d.sign() > 0) out += " + " + d.to_string();
    if (d.sign() < 0) out += " - " + abs(d).to_string();
    return out;
}

QFraction QFraction::linear(int s, int t, const Rational& d) {
    if (s == t) return QFraction(d);
    if (s < t) return QFraction(LinearForm{s, t, d}.to_poly(), {});
    return -QFraction(LinearForm{t, s, -d}.to_poly(), {});
}

void QFraction::reduce() {
    if (num_.is_zero()) {
        den_.clear();
        return;
    }
    std::vector<LinearForm> kept;
    kept.reserve(den_.size());
    for (std::size_t i = 0; i < den_.size();) {
        std::size_t j = i;
        while (j < den_.size() && den_[j] == den_[i]) ++j;
        std::size_t remaining = j - i;
        while (remaining > 0) {
            auto q = divide(num_, den_[i]);
            if (!q) break;
            num_ = std::move(*q);
            --remaining;
        }
        kept.insert(kept.end(), remaining, den_[i]);
        i = j;
    }
    den_ = std::move(kept);
}

QFraction& QFraction::operator+=(const QFraction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        reduce();
        return *this;
    }
    // Least common multiple of the two factor multisets.
    std::vector<LinearForm> lcm;
    std::vector<LinearForm> missing_self;
    std::vector<LinearForm> missing_other;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < den_.size() || j < o.den_.size()) {
        if (j == o.den_.size() || (i < den_.size() && den_[i] < o.den_[j])) {
            lcm.push_back(den_[i]);
            missing_other.push_back(den_[i++]);
        } else if (i == den_.size() || o.den_[j] < den_[i]) {
            lcm.push_back(o.den_[j]);
            missing_self.push_back(o.den_[j++]);
        } else {
            lcm.push_back(den_[i]);
            ++i;
            ++j;
        }
    }
    num_ = num_ * product(missing_self) + o.num_ * product(missing_other);
    den_ = std::move(lcm);
    reduce();
    return *this;
}

QFraction& QFraction::operator*=(const QFraction& o) {
    if (is_zero() || o.is_zero()) return *this = QFraction();
    num_ = num_ * o.num_;
    std::vector<LinearForm> merged;
    merged.reserve(den_.size() + o.den_.size());
    std::merge(den_.begin(), den_.end(), o.den_.begin(), o.den_.end(), std::back_inserter(merged));
    den_ = std::move(merged);
    reduce();
    return *this;
}

QFraction& QFraction::operator/=(const QFraction& o) {
    if (o.is_zero()) throw DivisionByZero();
    auto [c, forms] = factor_admissible(o.num_);
    num_ = num_ * product(o.den_);
    num_ *= c.inverse();
    std::sort(forms.begin(), forms.end());
    std::vector<LinearForm> merged;
    std::merge(den_.begin(), den_.end(), forms.begin(), forms.end(), std::back_inserter(merged));
    den_ = std::move(merged);
    reduce();
    return *this;
}

Rational QFraction::specialize(std::span<const Rational> q) const {
    Rational v = num_.evaluate(q);
    for (const auto& f : den_) v /= f.evaluate(q);
    return v;
}

std::pair<Rational, MPoly> QFraction::split_constant() const {
    if (num_.is_zero()) return {Rational(0), MPoly()};
    const Rational lc = num_.leading_coefficient();
    return {lc, num_ * lc.inverse()};
}

std::string QFraction::to_string() const {
    if (den_.empty()) return num_.to_string();
    std::string out = "(" + num_.to_string() + ")/(";
    for (std::size_t i = 0; i < den_.size(); ++i) {
        if (i) out += "*";
        out += "(" + den_[i].to_string() + ")";
    }
    return out + ")";
}

std::strong_ordering operator<=>(const QFraction& a, const QFraction& b) {
    if (auto c = a.den_ <=> b.den_; c != 0) return c;
    return a.num_ <=> b.num_;
}

std::ostream& operator<<(std::ostream& os, const QFraction& q) { return os << q.to_string(); }

std::pair<Rational, std::vector<LinearForm>> factor_admissible(const MPoly& p) {
    if (p.is_zero()) throw DivisionByZero();
    Rational c(1);
    std::vector<LinearForm> forms;
    MPoly cur = p;
    while (true) {
        const int deg = cur.total_degree();
        if (deg == 0) {
            c *= cur.constant_term();
            break;
        }
        if (deg == 1) {
            auto lf = as_linear_form(cur);
            if (!lf) throw NonAdmissibleDivisor(p.to_string());
            c *= lf->first;
            forms.push_back(lf->second);
            break;
        }
        bool found = false;
        const int nv = cur.variable_count();
        for (int s = 0; s < nv && !found; ++s)
            for (int t = s + 1; t < nv && !found; ++t)
                for (int d = -kShiftSearchBound; d <= kShiftSearchBound && !found; ++d) {
                    LinearForm f{s, t, Rational(d)};
                    if (auto q = divide(cur, f)) {
                        cur = std::move(*q);
                        forms.push_back(f);
                        found = true;
                    }
                }
        if (!found) throw NonAdmissibleDivisor(p.to_string());
    }
    std::sort(forms.begin(), forms.end());
    return {c, forms};
}

}  // namespace hecke
