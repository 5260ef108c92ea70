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

#include <vector>

#include "hecke/combinat.hpp"
#include "hecke/errors.hpp"
#include "hecke/parameters.hpp"

namespace hecke {

/// res(x) = col - row + q_comp.
template <class S>
[[nodiscard]] S residue(const Node& x, const Parameters<S>& p) {
    if (x.comp < 1 || x.comp > p.m) throw Error("node component out of range");
    return S(x.content()) + p.q[static_cast<std::size_t>(x.comp - 1)];
}

/// res_t(i) for the node holding i.
template <class S>
[[nodiscard]] S residue(const StandardTableau& t, int i, const Parameters<S>& p) {
    return residue(t.node_of(i), p);
}

template <class S>
[[nodiscard]] std::vector<S> residue_sequence(const StandardTableau& t, const Parameters<S>& p) {
    std::vector<S> out;
    out.reserve(static_cast<std::size_t>(t.size()));
    for (int i = 1; i <= t.size(); ++i) out.push_back(residue(t, i, p));
    return out;
}

/// Every standard tableau of every m-multipartition of n, shapes in
/// enumerate_multipartitions order.
[[nodiscard]] inline std::vector<StandardTableau> all_standard_tableaux(int m, int n) {
    std::vector<StandardTableau> out;
    for (const auto& shape : enumerate_multipartitions(m, n))
        for (auto& t : enumerate_standard_tableaux(shape)) out.push_back(std::move(t));
    return out;
}

/// Exhaustive check that (1) residue sequences determine tableaux across all
/// shapes and (2) same-shape tableaux whose sequences agree off {i, i+1} are
/// equal or differ by exchanging i and i+1.
template <class S>
[[nodiscard]] bool residues_separate(int m, int n, const Parameters<S>& p) {
    const auto tabs = all_standard_tableaux(m, n);
    std::vector<std::vector<S>> seqs;
    seqs.reserve(tabs.size());
    for (const auto& t : tabs) seqs.push_back(residue_sequence(t, p));
    for (std::size_t a = 0; a < tabs.size(); ++a) {
        for (std::size_t b = a + 1; b < tabs.size(); ++b) {
            if (seqs[a] == seqs[b]) return false;
            if (tabs[a].shape() != tabs[b].shape()) continue;
            for (int i = 1; i < n; ++i) {
                bool agree = true;
                for (int k = 1; k <= n && agree; ++k)
                    if (k != i && k != i + 1) agree = seqs[a][static_cast<std::size_t>(k - 1)] == seqs[b][static_cast<std::size_t>(k - 1)];
                if (!agree) continue;
                const auto swapped = tabs[a].swapped(i);
                if (!swapped || !(*swapped == tabs[b])) return false;
            }
        }
    }
    return true;
}

}  // namespace hecke
