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

// Eigen traits for the exact scalar types. Every type here is an exact field
// element with heap storage, so costs are nominal and initialization is
// required.

#include <Eigen/Core>

#include "hecke/exact/qfraction.hpp"
#include "hecke/exact/ratfun.hpp"
#include "hecke/exact/rational.hpp"

namespace hecke::detail {

template <class T>
struct ExactNumTraits : Eigen::GenericNumTraits<T> {
    using Real = T;
    using NonInteger = T;
    using Nested = T;
    using Literal = T;
    enum {
        IsComplex = 0,
        IsInteger = 0,
        IsSigned = 1,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 8,
        MulCost = 16
    };
    static inline T epsilon() { return T(0); }
    static inline T dummy_precision() { return T(0); }
    static inline int digits10() { return 0; }
};

}  // namespace hecke::detail

namespace Eigen {

template <>
struct NumTraits<hecke::Rational> : hecke::detail::ExactNumTraits<hecke::Rational> {};

template <>
struct NumTraits<hecke::QFraction> : hecke::detail::ExactNumTraits<hecke::QFraction> {};

template <class S>
struct NumTraits<hecke::RatFun<S>> : hecke::detail::ExactNumTraits<hecke::RatFun<S>> {};

}  // namespace Eigen

namespace hecke {

template <class T>
using Matrix = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;

/// Exact zero test over every entry.
template <class Derived>
[[nodiscard]] bool is_zero_matrix(const Eigen::MatrixBase<Derived>& m) {
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i)
            if (!m(i, j).is_zero()) return false;
    return true;
}

/// Entry-wise cast between exact scalar types (e.g. S -> RatFun<S>).
template <class To, class From>
[[nodiscard]] Matrix<To> cast_matrix(const Matrix<From>& m) {
    Matrix<To> out(m.rows(), m.cols());
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        for (Eigen::Index i = 0; i < m.rows(); ++i) out(i, j) = To(m(i, j));
    return out;
}

/// Exact rank by Gaussian elimination over the field S.
template <class S>
[[nodiscard]] int exact_rank(Matrix<S> a) {
    int rank = 0;
    const Eigen::Index rows = a.rows();
    for (Eigen::Index col = 0; col < a.cols() && rank < rows; ++col) {
        Eigen::Index pivot = -1;
        for (Eigen::Index r = rank; r < rows; ++r)
            if (!a(r, col).is_zero()) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        a.row(pivot).swap(a.row(rank));
        const S inv = S(1) / a(rank, col);
        for (Eigen::Index r = rank + 1; r < rows; ++r) {
            if (a(r, col).is_zero()) continue;
            const S factor = a(r, col) * inv;
            for (Eigen::Index c = col; c < a.cols(); ++c) a(r, c) -= factor * a(rank, c);
        }
        ++rank;
    }
    return rank;
}

}  // namespace hecke
