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

// JSON encoding of scalars, matrices, algebra elements, tableaux and reports.

#include <string>

#include <json.hpp>

#include "hecke/combinat.hpp"
#include "hecke/exact/eigen_support.hpp"
#include "hecke/exact/qfraction.hpp"
#include "hecke/exact/rational.hpp"
#include "hecke/report.hpp"
#include "hecke/rep.hpp"

namespace hecke::json {

using Json = nlohmann::ordered_json;

/// "p/q", or "p" for integers.
inline Json encode(const Rational& r) { return r.to_string(); }

/// {"const": c, "num": monic numerator, "den": [[d, s, t], ...]} meaning
/// const * num / prod (d + q_s - q_t), with 1-based s < t.
inline Json encode(const QFraction& x) {
    const auto [c, monic] = x.split_constant();
    Json den = Json::array();
    for (const auto& f : x.denominator()) den.push_back(Json::array({f.d.to_string(), f.s + 1, f.t + 1}));
    return Json{{"const", c.to_string()}, {"num", monic.to_string()}, {"den", den}};
}

template <class S>
Json encode(const Matrix<S>& a) {
    Json rows = Json::array();
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        Json row = Json::array();
        for (Eigen::Index j = 0; j < a.cols(); ++j) row.push_back(encode(a(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Json encode(const Node& x) { return Json::array({x.comp, x.row, x.col}); }

inline Json encode(const Partition& p) { return p.parts(); }

inline Json encode(const MultiPartition& l) {
    Json out = Json::array();
    for (const auto& c : l.components()) out.push_back(encode(c));
    return out;
}

/// Per-component row arrays of entries.
inline Json encode(const StandardTableau& t) { return t.rows(); }

/// [{"shape": ..., "matrix": ...}] in block order.
template <class S>
Json encode(const Representation<S>& r, const AlgebraElement<S>& e) {
    Json out = Json::array();
    for (std::size_t k = 0; k < r.blocks.size(); ++k)
        out.push_back(Json{{"shape", encode(r.blocks[k].shape)}, {"matrix", encode(e.block(k))}});
    return out;
}

inline Json encode(const CheckRecord& r) {
    Json out{{"suite", r.suite}, {"name", r.name}, {"instance", r.instance}, {"ok", r.ok}};
    if (!r.ok) out["witness"] = r.witness;
    return out;
}

inline Json encode(const Report& rep) {
    Json records = Json::array();
    for (const auto& r : rep.records) records.push_back(encode(r));
    return Json{{"records", records},
                {"summary", {{"total", rep.records.size()}, {"passed", rep.passed()}, {"failed", rep.failed()}}}};
}

inline std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hecke::json
