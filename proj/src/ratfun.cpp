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

#include "hecke/exact/ratfun.hpp"

namespace hecke {

namespace {

constexpr long kMaxDivisorSearch = 1'000'000'000'000L;
constexpr int kShiftSearchBound = 64;

std::vector<mpz_class> positive_divisors(mpz_class a) {
    if (a < 0) a = -a;
    if (a > kMaxDivisorSearch) throw NonAdmissibleDivisor("coefficient too large for rational root search");
    std::vector<mpz_class> small;
    std::vector<mpz_class> large;
    for (mpz_class d = 1; d * d <= a; ++d) {
        if (a % d != 0) continue;
        small.push_back(d);
        if (d * d != a) large.push_back(a / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

template <class S>
int degree(const upoly::Poly<S>& p) {
    return static_cast<int>(p.size()) - 1;
}

}  // namespace

std::vector<Rational> split_linear_roots(const upoly::Poly<Rational>& p) {
    std::vector<Rational> roots;
    upoly::Poly<Rational> cur = p;
    upoly::trim(cur);
    while (degree(cur) >= 1) {
        if (degree(cur) == 1) {
            roots.push_back(-cur[0] / cur[1]);
            break;
        }
        if (cur[0].is_zero()) {
            roots.emplace_back(0);
            cur = upoly::div_linear(cur, Rational(0)).first;
            continue;
        }
        // Clear denominators and apply the rational root theorem.
        mpz_class lcm = 1;
        for (const auto& c : cur) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.raw().get_den_mpz_t());
        const mpz_class a0 = (cur.front() * Rational(lcm, 1)).numerator();
        const mpz_class an = (cur.back() * Rational(lcm, 1)).numerator();
        bool found = false;
        for (const auto& num : positive_divisors(a0)) {
            for (const auto& den : positive_divisors(an)) {
                for (int sign : {1, -1}) {
                    Rational cand(num * sign, den);
                    auto [q, rem] = upoly::div_linear(cur, cand);
                    if (!rem.is_zero()) continue;
                    roots.push_back(cand);
                    cur = std::move(q);
                    found = true;
                    break;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (!found) throw NonAdmissibleDivisor("numerator does not split over Q");
    }
    return roots;
}

std::vector<QFraction> split_linear_roots(const upoly::Poly<QFraction>& p) {
    std::vector<QFraction> roots;
    upoly::Poly<QFraction> cur = p;
    upoly::trim(cur);
    int nv = 0;
    for (const auto& c : cur) nv = std::max(nv, c.numerator().variable_count());
    while (degree(cur) >= 1) {
        if (degree(cur) == 1) {
            roots.push_back(-cur[0] / cur[1]);
            break;
        }
        bool found = false;
        for (int var = -1; var < nv && !found; ++var) {
            for (int d = -kShiftSearchBound; d <= kShiftSearchBound && !found; ++d) {
                QFraction cand = var < 0 ? QFraction(d) : QFraction::variable(var) + QFraction(d);
                auto [q, rem] = upoly::div_linear(cur, cand);
                if (!rem.is_zero()) continue;
                roots.push_back(cand);
                cur = std::move(q);
                found = true;
            }
        }
        if (!found) throw NonAdmissibleDivisor("numerator has no root of the form q_c + d");
    }
    return roots;
}

}  // namespace hecke
