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

// Block-diagonal seminormal model of H_{m,n}(Q): one Specht block per
// multipartition, generator matrices, Jucys-Murphy elements, t(z) and the
// Baxterized elements, plus exact checks of every relation among them.

#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/errors.hpp"
#include "hecke/exact/eigen_support.hpp"
#include "hecke/exact/ratfun.hpp"
#include "hecke/parameters.hpp"
#include "hecke/residue.hpp"

namespace hecke {

/// Outcome of an identity check; `failure` names the first failed relation.
struct CheckResult {
    bool ok = true;
    std::string failure;

    static CheckResult pass() { return {}; }
    static CheckResult fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

/// An element of the algebra as one dense matrix per Specht block.
template <class T>
class AlgebraElement {
  public:
    AlgebraElement() = default;
    explicit AlgebraElement(std::vector<Matrix<T>> blocks) : blocks_(std::move(blocks)) {}

    static AlgebraElement zero(const std::vector<int>& dims) {
        std::vector<Matrix<T>> b;
        for (int d : dims) b.push_back(Matrix<T>::Constant(d, d, T(0)));
        return AlgebraElement(std::move(b));
    }
    static AlgebraElement identity(const std::vector<int>& dims) { return scalar(dims, T(1)); }
    static AlgebraElement scalar(const std::vector<int>& dims, const T& c) {
        AlgebraElement e = zero(dims);
        for (auto& b : e.blocks_)
            for (Eigen::Index i = 0; i < b.rows(); ++i) b(i, i) = c;
        return e;
    }

    [[nodiscard]] std::size_t block_count() const noexcept { return blocks_.size(); }
    [[nodiscard]] const Matrix<T>& block(std::size_t k) const { return blocks_.at(k); }
    [[nodiscard]] Matrix<T>& block(std::size_t k) { return blocks_.at(k); }
    [[nodiscard]] const std::vector<Matrix<T>>& blocks() const noexcept { return blocks_; }
    [[nodiscard]] std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& b : blocks_) d.push_back(static_cast<int>(b.rows()));
        return d;
    }

    [[nodiscard]] bool is_zero() const {
        for (const auto& b : blocks_)
            if (!is_zero_matrix(b)) return false;
        return true;
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        for (std::size_t k = 0; k < blocks_.size(); ++k) blocks_[k] -= o.blocks_[k];
        return *this;
    }
    AlgebraElement& operator*=(const T& c) {
        for (auto& b : blocks_) b *= c;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const T& c) { return a *= c; }
    friend AlgebraElement operator*(const T& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        AlgebraElement out;
        out.blocks_.reserve(a.blocks_.size());
        for (std::size_t k = 0; k < a.blocks_.size(); ++k) {
            const auto& x = a.blocks_[k];
            const auto& y = b.blocks_[k];
            if (is_zero_matrix(x) || is_zero_matrix(y))
                out.blocks_.push_back(Matrix<T>::Constant(x.rows(), y.cols(), T(0)));
            else
                out.blocks_.push_back(x * y);
        }
        return out;
    }
    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        if (a.blocks_.size() != b.blocks_.size()) return false;
        for (std::size_t k = 0; k < a.blocks_.size(); ++k)
            if (a.blocks_[k].rows() != b.blocks_[k].rows() || a.blocks_[k] != b.blocks_[k]) return false;
        return true;
    }

    /// Entry-wise image under f.
    template <class F>
    [[nodiscard]] auto map(F f) const -> AlgebraElement<decltype(f(std::declval<const T&>()))> {
        using U = decltype(f(std::declval<const T&>()));
        std::vector<Matrix<U>> out;
        out.reserve(blocks_.size());
        for (const auto& b : blocks_) {
            Matrix<U> m(b.rows(), b.cols());
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                for (Eigen::Index i = 0; i < b.rows(); ++i) m(i, j) = f(b(i, j));
            out.push_back(std::move(m));
        }
        return AlgebraElement<U>(std::move(out));
    }

  private:
    std::vector<Matrix<T>> blocks_;
};

/// Embeds scalar entries as constant rational functions.
template <class S>
[[nodiscard]] AlgebraElement<RatFun<S>> lift(const AlgebraElement<S>& e) {
    return e.map([](const S& x) { return RatFun<S>(x); });
}

/// Substitutes z = c in every entry.
template <class S>
[[nodiscard]] AlgebraElement<S> substitute(const AlgebraElement<RatFun<S>>& e, const S& c) {
    return e.map([&](const RatFun<S>& f) { return f.substitute(c); });
}

/// The Specht module S^λ in its seminormal basis.
template <class S>
struct SpechtBlock {
    MultiPartition shape;
    std::vector<StandardTableau> basis;
    /// gens[0] is t, gens[i] is t_i.
    std::vector<Matrix<S>> gens;
    std::vector<S> q;

    [[nodiscard]] int dim() const noexcept { return static_cast<int>(basis.size()); }
    [[nodiscard]] int n() const noexcept { return shape.size(); }
};

/// t acts by res_t(1); t_i fixes span{v_t, v_s} for s = t(i,i+1), with
/// t_i v_t = v_t/d + v_s and t_i v_s = (1 - 1/d^2) v_t - v_s/d when t precedes
/// s, d = res_t(i+1) - res_t(i), and t_i v_t = v_t/d when s is not standard.
template <class S>
[[nodiscard]] SpechtBlock<S> build_specht_block(const MultiPartition& lambda, const Parameters<S>& p) {
    require_separation(p);
    SpechtBlock<S> b;
    b.shape = lambda;
    b.basis = enumerate_standard_tableaux(lambda);
    b.q = p.q;
    const int n = lambda.size();
    const auto dim = static_cast<Eigen::Index>(b.basis.size());
    if (n == 0) return b;
    std::map<StandardTableau, Eigen::Index> index;
    for (Eigen::Index a = 0; a < dim; ++a) index.emplace(b.basis[static_cast<std::size_t>(a)], a);

    Matrix<S> t = Matrix<S>::Constant(dim, dim, S(0));
    for (Eigen::Index a = 0; a < dim; ++a) t(a, a) = residue(b.basis[static_cast<std::size_t>(a)], 1, p);
    b.gens.push_back(std::move(t));

    for (int i = 1; i < n; ++i) {
        Matrix<S> g = Matrix<S>::Constant(dim, dim, S(0));
        for (Eigen::Index a = 0; a < dim; ++a) {
            const auto& tab = b.basis[static_cast<std::size_t>(a)];
            const S d = residue(tab, i + 1, p) - residue(tab, i, p);
            const S inv = S(1) / d;
            const auto s = tab.swapped(i);
            if (!s) {
                g(a, a) = inv;
                continue;
            }
            const Eigen::Index c = index.at(*s);
            if (c < a) continue;
            g(a, a) = inv;
            g(c, a) = S(1);
            g(a, c) = S(1) - inv * inv;
            g(c, c) = -inv;
        }
        b.gens.push_back(std::move(g));
    }
    return b;
}

namespace detail {

template <class T>
bool commute(const Matrix<T>& a, const Matrix<T>& b) {
    return a * b == b * a;
}

}  // namespace detail

/// Every defining relation of the algebra as an exact matrix identity.
template <class S>
[[nodiscard]] CheckResult verify_defining_relations(const SpechtBlock<S>& b) {
    const int n = b.n();
    if (n == 0) return CheckResult::pass();
    const std::string where = " in block " + b.shape.to_string();
    const auto dim = static_cast<Eigen::Index>(b.dim());
    const Matrix<S> id = Matrix<S>::Identity(dim, dim);
    const Matrix<S>& t = b.gens[0];

    Matrix<S> cyc = id;
    for (const auto& qi : b.q) cyc = cyc * (t - qi * id);
    if (!is_zero_matrix(cyc)) return CheckResult::fail("cyclotomic relation" + where);

    if (n >= 2) {
        const Matrix<S>& t1 = b.gens[1];
        const Matrix<S> x = t1 * t * t1 + t1;
        if (!detail::commute(t, x)) return CheckResult::fail("t commutes with t_1 t t_1 + t_1" + where);
    }
    for (int i = 1; i < n; ++i) {
        const Matrix<S>& ti = b.gens[static_cast<std::size_t>(i)];
        if (!(ti * ti == id)) return CheckResult::fail("t_" + std::to_string(i) + "^2 = 1" + where);
        if (i >= 2 && !detail::commute(t, ti)) return CheckResult::fail("t t_" + std::to_string(i) + " = t_" + std::to_string(i) + " t" + where);
        if (i + 1 < n) {
            const Matrix<S>& tj = b.gens[static_cast<std::size_t>(i + 1)];
            if (!(ti * tj * ti == tj * ti * tj)) return CheckResult::fail("braid relation at " + std::to_string(i) + where);
        }
        for (int j = i + 2; j < n; ++j)
            if (!detail::commute(ti, b.gens[static_cast<std::size_t>(j)]))
                return CheckResult::fail("t_" + std::to_string(i) + " t_" + std::to_string(j) + " commute" + where);
    }
    return CheckResult::pass();
}

/// The direct sum of all Specht blocks of H_{m,n}(Q), in shape order.
template <class S>
struct Representation {
    Parameters<S> params;
    std::vector<SpechtBlock<S>> blocks;

    [[nodiscard]] int n() const noexcept { return params.n; }
    [[nodiscard]] std::vector<int> dims() const {
        std::vector<int> d;
        for (const auto& b : blocks) d.push_back(b.dim());
        return d;
    }
    [[nodiscard]] AlgebraElement<S> identity() const { return AlgebraElement<S>::identity(dims()); }
    [[nodiscard]] AlgebraElement<S> zero() const { return AlgebraElement<S>::zero(dims()); }
    [[nodiscard]] AlgebraElement<S> scalar(const S& c) const { return AlgebraElement<S>::scalar(dims(), c); }

    /// t for i = 0, t_i for 1 <= i < n.
    [[nodiscard]] AlgebraElement<S> generator(int i) const {
        if (i < 0 || i >= std::max(params.n, 1) || params.n == 0) throw Error("generator index " + std::to_string(i) + " out of range");
        std::vector<Matrix<S>> out;
        for (const auto& b : blocks) out.push_back(b.gens[static_cast<std::size_t>(i)]);
        return AlgebraElement<S>(std::move(out));
    }

    /// (block index, basis index) of a tableau.
    [[nodiscard]] std::pair<std::size_t, Eigen::Index> locate(const StandardTableau& t) const {
        for (std::size_t k = 0; k < blocks.size(); ++k) {
            if (!(blocks[k].shape == t.shape())) continue;
            for (std::size_t a = 0; a < blocks[k].basis.size(); ++a)
                if (blocks[k].basis[a] == t) return {k, static_cast<Eigen::Index>(a)};
        }
        throw Error("tableau " + t.to_string() + " is not in the representation");
    }

    /// The seminormal matrix unit: 1 at (t, t) of its block, 0 elsewhere.
    [[nodiscard]] AlgebraElement<S> matrix_unit(const StandardTableau& t) const {
        const auto [k, a] = locate(t);
        AlgebraElement<S> e = zero();
        e.block(k)(a, a) = S(1);
        return e;
    }

    /// All standard tableaux in block then basis order.
    [[nodiscard]] std::vector<StandardTableau> tableaux() const {
        std::vector<StandardTableau> out;
        for (const auto& b : blocks) out.insert(out.end(), b.basis.begin(), b.basis.end());
        return out;
    }
};

template <class S>
[[nodiscard]] Representation<S> build_representation(const Parameters<S>& p) {
    require_separation(p);
    Representation<S> r{p, {}};
    for (const auto& shape : enumerate_multipartitions(p.m, p.n)) r.blocks.push_back(build_specht_block(shape, p));
    return r;
}

/// J_1 = t, J_{i+1} = t_i J_i t_i + t_i.
template <class S>
[[nodiscard]] AlgebraElement<S> jm_element(const Representation<S>& r, int i) {
    if (i < 1 || i > r.n()) throw EntryOutOfRange("Jucys-Murphy index " + std::to_string(i));
    AlgebraElement<S> j = r.generator(0);
    for (int k = 1; k < i; ++k) {
        const AlgebraElement<S> tk = r.generator(k);
        j = tk * j * tk + tk;
    }
    return j;
}

/// f(z) (z - t)^{-1}. The model has t diagonal, so each entry is f(z)/(z - res)
/// with the factor cancelled exactly.
template <class S>
[[nodiscard]] AlgebraElement<RatFun<S>> t_of_z(const Representation<S>& r) {
    using F = RatFun<S>;
    const AlgebraElement<S> t = r.generator(0);
    const F f = F::polynomial(upoly::from_roots(r.params.q));
    AlgebraElement<F> out = AlgebraElement<F>::zero(r.dims());
    for (std::size_t k = 0; k < t.block_count(); ++k) {
        const auto& b = t.block(k);
        for (Eigen::Index i = 0; i < b.rows(); ++i)
            for (Eigen::Index j = 0; j < b.cols(); ++j)
                if (i != j && !b(i, j).is_zero()) throw InvariantBreach("t is not diagonal");
        for (Eigen::Index i = 0; i < b.rows(); ++i) {
            const F entry = f * F::reciprocal_linear(b(i, i));
            if (!entry.is_polynomial()) throw InvariantBreach("t(z) has a pole");
            out.block(k)(i, i) = entry;
        }
    }
    return out;
}

/// t(x) at a number x: the polynomial entries of t(z) evaluated at x.
template <class S>
[[nodiscard]] AlgebraElement<S> t_at(const AlgebraElement<RatFun<S>>& tz, const S& x) {
    return substitute(tz, x);
}

/// t_i(a, b) = 1/(a - b) + t_i, with a, b rational functions of the live
/// variable (one of them is typically z, the other a number).
template <class S>
[[nodiscard]] AlgebraElement<RatFun<S>> baxterized(const Representation<S>& r, int i, const RatFun<S>& a, const RatFun<S>& b) {
    using F = RatFun<S>;
    const F diff = a - b;
    if (diff.is_zero()) throw SpectralCollision();
    return AlgebraElement<F>::scalar(r.dims(), diff.inverse()) + lift(r.generator(i));
}

/// Numeric spectral parameters.
template <class S>
[[nodiscard]] AlgebraElement<S> baxterized(const Representation<S>& r, int i, const S& a, const S& b) {
    const S diff = a - b;
    if (diff.is_zero()) throw SpectralCollision();
    return r.scalar(S(1) / diff) + r.generator(i);
}

namespace detail {

/// Distinct small rationals drawn from rng, avoiding `avoid`.
template <class S>
std::vector<S> spectral_values(std::mt19937_64& rng, int count, const std::vector<S>& avoid = {}) {
    std::vector<S> out;
    while (static_cast<int>(out.size()) < count) {
        const long num = static_cast<long>(rng() % 199) - 99;
        const long den = static_cast<long>(rng() % 7) + 1;
        const S v{Rational(mpz_class(num), mpz_class(den))};
        bool fresh = true;
        for (const auto& w : out) fresh = fresh && !(w == v);
        for (const auto& w : avoid) fresh = fresh && !(w == v);
        if (fresh) out.push_back(v);
    }
    return out;
}

}  // namespace detail

/// t_i(x,y) t_i(y,x) = 1 - (x-y)^{-2}: exact in x with y numeric, and fully
/// numeric, for `samples` seeded values.
template <class S>
[[nodiscard]] CheckResult verify_unitarity(const Representation<S>& r, std::uint64_t seed, int samples = 3) {
    using F = RatFun<S>;
    std::mt19937_64 rng(seed);
    for (int i = 1; i < r.n(); ++i) {
        for (const S& y : detail::spectral_values<S>(rng, samples)) {
            const F x = F::z();
            const F pole = F::reciprocal_linear(y);
            const auto lhs = baxterized(r, i, x, F(y)) * baxterized(r, i, F(y), x);
            const auto rhs = AlgebraElement<F>::scalar(r.dims(), F(1) - pole * pole);
            if (!(lhs == rhs)) return CheckResult::fail("unitarity of t_" + std::to_string(i) + " at y=" + y.to_string());
            const auto xy = detail::spectral_values<S>(rng, 2);
            const S dd = xy[0] - xy[1];
            const auto nl = baxterized(r, i, xy[0], xy[1]) * baxterized(r, i, xy[1], xy[0]);
            if (!(nl == r.scalar(S(1) - S(1) / (dd * dd))))
                return CheckResult::fail("numeric unitarity of t_" + std::to_string(i));
        }
    }
    return CheckResult::pass();
}

/// t_i(x,y) t_{i+1}(x,z) t_i(y,z) = t_{i+1}(y,z) t_i(x,z) t_{i+1}(x,y): exact
/// in x with (y, z) numeric, and at numeric triples.
template <class S>
[[nodiscard]] CheckResult verify_yang_baxter(const Representation<S>& r, std::uint64_t seed, int samples = 3) {
    using F = RatFun<S>;
    std::mt19937_64 rng(seed);
    for (int i = 1; i + 1 < r.n(); ++i) {
        for (int k = 0; k < samples; ++k) {
            const auto yz = detail::spectral_values<S>(rng, 2);
            const F x = F::z();
            const F y(yz[0]);
            const F z(yz[1]);
            const auto lhs = baxterized(r, i, x, y) * baxterized(r, i + 1, x, z) * baxterized(r, i, y, z);
            const auto rhs = baxterized(r, i + 1, y, z) * baxterized(r, i, x, z) * baxterized(r, i + 1, x, y);
            if (!(lhs == rhs)) return CheckResult::fail("Yang-Baxter at i=" + std::to_string(i) + " (live x)");
            const auto v = detail::spectral_values<S>(rng, 3);
            const auto nl = baxterized(r, i, v[0], v[1]) * baxterized(r, i + 1, v[0], v[2]) * baxterized(r, i, v[1], v[2]);
            const auto nr = baxterized(r, i + 1, v[1], v[2]) * baxterized(r, i, v[0], v[2]) * baxterized(r, i + 1, v[0], v[1]);
            if (!(nl == nr)) return CheckResult::fail("Yang-Baxter at i=" + std::to_string(i) + " (numeric)");
        }
    }
    return CheckResult::pass();
}

/// Which reflection identity to check.
enum class ReflectionForm {
    /// t_1(x,y) t(x) t_1 t(y) = t(y) t_1 t(x) t_1(x,y)
    Braided,
    /// t(x) t_1(x,y) t(y) t_1 + t(x) t_1(x,y) = t_1(x,y) t(x) + t_1 t(y) t_1(x,y) t(x);
    /// holds for m = 1 only.
    FourTerm,
};

namespace detail {

template <class E>
bool reflection_holds(ReflectionForm form, const E& tx, const E& ty, const E& b, const E& s1) {
    if (form == ReflectionForm::Braided) return b * tx * s1 * ty == ty * s1 * tx * b;
    return tx * b * ty * s1 + tx * b == b * tx + s1 * ty * b * tx;
}

}  // namespace detail

/// The reflection identity for a supplied t(z), at `samples` seeded values of
/// y: exact in x, and at a numeric x as well.
template <class S>
[[nodiscard]] CheckResult verify_reflection_equation(const Representation<S>& r, const AlgebraElement<RatFun<S>>& tz,
                                                     std::uint64_t seed, int samples = 5,
                                                     ReflectionForm form = ReflectionForm::Braided) {
    using F = RatFun<S>;
    if (r.n() < 2) return CheckResult::pass();
    std::mt19937_64 rng(seed);
    const auto t1 = lift(r.generator(1));
    for (int k = 0; k < samples; ++k) {
        const auto v = detail::spectral_values<S>(rng, 2);
        const S& x = v[0];
        const S& y = v[1];
        if (!detail::reflection_holds(form, tz, lift(t_at(tz, y)), baxterized(r, 1, F::z(), F(y)), t1))
            return CheckResult::fail("reflection equation at y=" + y.to_string() + " (live x)");
        if (!detail::reflection_holds(form, t_at(tz, x), t_at(tz, y), baxterized(r, 1, x, y), r.generator(1)))
            return CheckResult::fail("reflection equation at x=" + x.to_string() + ", y=" + y.to_string());
    }
    return CheckResult::pass();
}

template <class S>
[[nodiscard]] CheckResult verify_reflection_equation(const Representation<S>& r, std::uint64_t seed, int samples = 5,
                                                     ReflectionForm form = ReflectionForm::Braided) {
    return verify_reflection_equation(r, t_of_z(r), seed, samples, form);
}

/// e_k(J_1, ..., J_n).
template <class S>
[[nodiscard]] AlgebraElement<S> elementary_symmetric_jm(const Representation<S>& r, int k) {
    std::vector<AlgebraElement<S>> e(static_cast<std::size_t>(k + 1), r.zero());
    e[0] = r.identity();
    for (int i = 1; i <= r.n(); ++i) {
        const auto ji = jm_element(r, i);
        for (int j = std::min(k, i); j >= 1; --j) e[static_cast<std::size_t>(j)] += e[static_cast<std::size_t>(j - 1)] * ji;
    }
    return e[static_cast<std::size_t>(k)];
}

/// e_k(J_1, ..., J_n) commutes with t and every t_i.
template <class S>
[[nodiscard]] CheckResult verify_center(const Representation<S>& r, int k) {
    if (k < 1 || k > r.n()) throw EntryOutOfRange("symmetric polynomial degree " + std::to_string(k));
    const auto e = elementary_symmetric_jm(r, k);
    for (int i = 0; i < r.n(); ++i) {
        const auto g = r.generator(i);
        if (!(e * g == g * e)) return CheckResult::fail("e_" + std::to_string(k) + " does not commute with generator " + std::to_string(i));
    }
    return CheckResult::pass();
}

/// J_i acts diagonally by res_t(i) in every block.
template <class S>
[[nodiscard]] CheckResult verify_jm_diagonal(const Representation<S>& r) {
    for (int i = 1; i <= r.n(); ++i) {
        const auto j = jm_element(r, i);
        for (std::size_t k = 0; k < r.blocks.size(); ++k) {
            const auto& b = r.blocks[k];
            Matrix<S> expected = Matrix<S>::Constant(b.dim(), b.dim(), S(0));
            for (int a = 0; a < b.dim(); ++a) expected(a, a) = residue(b.basis[static_cast<std::size_t>(a)], i, r.params);
            if (!(j.block(k) == expected))
                return CheckResult::fail("J_" + std::to_string(i) + " is not diag(res) in block " + b.shape.to_string());
        }
    }
    return CheckResult::pass();
}

}  // namespace hecke
