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

#include "hecke/combinat.hpp"

#include <algorithm>
#include <functional>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::string node_string(const Node& x) {
    return "(" + std::to_string(x.comp) + "," + std::to_string(x.row) + "," + std::to_string(x.col) + ")";
}

}  // namespace

// ---------------------------------------------------------------- Partition

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw Error("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw Error("partition parts must be weakly decreasing");
        size_ += parts_[i];
    }
}

int Partition::row(int i) const noexcept { return i >= 1 && i <= length() ? parts_[static_cast<std::size_t>(i - 1)] : 0; }

int Partition::column(int j) const noexcept {
    if (j < 1) return 0;
    int len = 0;
    while (len < length() && parts_[static_cast<std::size_t>(len)] >= j) ++len;
    return len;
}

Partition Partition::conjugate() const {
    std::vector<int> out;
    for (int j = 1; j <= row(1); ++j) out.push_back(column(j));
    return Partition(std::move(out));
}

int Partition::hook(int i, int j) const {
    if (!contains(i, j)) throw NodeOutsideDiagram("(" + std::to_string(i) + "," + std::to_string(j) + ") in " + to_string());
    return row(i) - i + column(j) - j + 1;
}

std::vector<Cell> Partition::addable() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length() + 1; ++i)
        if (i == 1 || row(i - 1) > row(i)) out.push_back({i, row(i) + 1});
    return out;
}

std::vector<Cell> Partition::removable() const {
    std::vector<Cell> out;
    for (int i = 1; i <= length(); ++i)
        if (row(i) > row(i + 1)) out.push_back({i, row(i)});
    return out;
}

Partition Partition::with_added(Cell c) const {
    const auto add = addable();
    if (std::find(add.begin(), add.end(), c) == add.end())
        throw Error("cell (" + std::to_string(c.row) + "," + std::to_string(c.col) + ") is not addable to " + to_string());
    std::vector<int> p = parts_;
    if (c.row > length())
        p.push_back(1);
    else
        ++p[static_cast<std::size_t>(c.row - 1)];
    return Partition(std::move(p));
}

Partition Partition::with_removed(Cell c) const {
    const auto rem = removable();
    if (std::find(rem.begin(), rem.end(), c) == rem.end())
        throw NotRemovable("(" + std::to_string(c.row) + "," + std::to_string(c.col) + ") in " + to_string());
    std::vector<int> p = parts_;
    if (--p[static_cast<std::size_t>(c.row - 1)] == 0) p.pop_back();
    return Partition(std::move(p));
}

std::string Partition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(parts_[i]);
    }
    return out + ")";
}

int generalized_hook(const Partition& lambda, const Partition& mu, int i, int j) {
    if (!lambda.contains(i, j))
        throw NodeOutsideDiagram("(" + std::to_string(i) + "," + std::to_string(j) + ") in " + lambda.to_string());
    return generalized_hook_value(lambda, mu, i, j);
}

int generalized_hook_value(const Partition& lambda, const Partition& mu, int i, int j) noexcept {
    return lambda.row(i) - i + mu.column(j) - j + 1;
}

std::vector<Partition> enumerate_partitions(int n) {
    std::vector<Partition> out;
    std::vector<int> parts;
    std::function<void(int, int)> rec = [&](int remaining, int max_part) {
        if (remaining == 0) {
            out.emplace_back(parts);
            return;
        }
        for (int p = std::min(remaining, max_part); p >= 1; --p) {
            parts.push_back(p);
            rec(remaining - p, p);
            parts.pop_back();
        }
    };
    if (n >= 0) rec(n, n);
    return out;
}

// ----------------------------------------------------------- MultiPartition

MultiPartition::MultiPartition(std::vector<Partition> components) : comps_(std::move(components)) {
    if (comps_.empty()) throw Error("a multipartition needs at least one component");
}

MultiPartition MultiPartition::empty(int m) { return MultiPartition(std::vector<Partition>(static_cast<std::size_t>(m))); }

int MultiPartition::size() const noexcept {
    int s = 0;
    for (const auto& p : comps_) s += p.size();
    return s;
}

bool MultiPartition::contains(const Node& x) const {
    return x.comp >= 1 && x.comp <= m() && component(x.comp).contains(x.row, x.col);
}

std::vector<Node> MultiPartition::addable() const {
    std::vector<Node> out;
    for (int c = 1; c <= m(); ++c)
        for (const auto& cell : component(c).addable()) out.push_back({c, cell.row, cell.col});
    return out;
}

std::vector<Node> MultiPartition::removable() const {
    std::vector<Node> out;
    for (int c = 1; c <= m(); ++c)
        for (const auto& cell : component(c).removable()) out.push_back({c, cell.row, cell.col});
    return out;
}

MultiPartition MultiPartition::with_added(const Node& x) const {
    if (x.comp < 1 || x.comp > m()) throw Error("component out of range: " + node_string(x));
    auto comps = comps_;
    comps[static_cast<std::size_t>(x.comp - 1)] = component(x.comp).with_added({x.row, x.col});
    return MultiPartition(std::move(comps));
}

MultiPartition MultiPartition::with_removed(const Node& x) const {
    if (x.comp < 1 || x.comp > m()) throw NotRemovable(node_string(x));
    auto comps = comps_;
    comps[static_cast<std::size_t>(x.comp - 1)] = component(x.comp).with_removed({x.row, x.col});
    return MultiPartition(std::move(comps));
}

std::string MultiPartition::to_string() const {
    std::string out = "(";
    for (std::size_t i = 0; i < comps_.size(); ++i) {
        if (i) out += ";";
        out += comps_[i].to_string();
    }
    return out + ")";
}

std::pair<std::vector<Node>, std::vector<Node>> addable_removable(const MultiPartition& lambda) {
    return {lambda.addable(), lambda.removable()};
}

std::vector<MultiPartition> enumerate_multipartitions(int m, int n) {
    if (m < 1) throw Error("m must be positive");
    if (n < 0) throw Error("n must be non-negative");
    std::vector<MultiPartition> out;
    std::vector<int> sizes(static_cast<std::size_t>(m), 0);
    std::vector<Partition> chosen(static_cast<std::size_t>(m));

    std::function<void(std::size_t)> fill = [&](std::size_t c) {
        if (c == sizes.size()) {
            out.emplace_back(chosen);
            return;
        }
        for (const auto& p : enumerate_partitions(sizes[c])) {
            chosen[c] = p;
            fill(c + 1);
        }
    };
    std::function<void(std::size_t, int)> compose = [&](std::size_t c, int remaining) {
        if (c + 1 == sizes.size()) {
            sizes[c] = remaining;
            fill(0);
            return;
        }
        for (int k = remaining; k >= 0; --k) {
            sizes[c] = k;
            compose(c + 1, remaining - k);
        }
    };
    compose(0, n);
    return out;
}

// ---------------------------------------------------------- StandardTableau

StandardTableau::StandardTableau(int m, std::vector<Node> positions) : positions_(std::move(positions)) {
    MultiPartition shape = MultiPartition::empty(m);
    for (const auto& x : positions_) {
        // Adding entries in increasing order keeps rows and columns increasing
        // exactly when every step adds an addable node.
        const auto add = shape.addable();
        if (std::find(add.begin(), add.end(), x) == add.end())
            throw Error("not a standard filling: node " + node_string(x) + " is not addable at its step");
        shape = shape.with_added(x);
    }
    shape_ = std::move(shape);
}

const Node& StandardTableau::node_of(int k) const {
    if (k < 1 || k > size()) throw EntryOutOfRange(std::to_string(k) + " not in 1.." + std::to_string(size()));
    return positions_[static_cast<std::size_t>(k - 1)];
}

int StandardTableau::entry_at(const Node& x) const {
    for (std::size_t k = 0; k < positions_.size(); ++k)
        if (positions_[k] == x) return static_cast<int>(k) + 1;
    return 0;
}

StandardTableau StandardTableau::restrict(int k) const {
    if (k < 0 || k > size()) throw EntryOutOfRange(std::to_string(k));
    return StandardTableau(m(), std::vector<Node>(positions_.begin(), positions_.begin() + k));
}

std::optional<StandardTableau> StandardTableau::swapped(int i) const {
    if (i < 1 || i >= size()) throw EntryOutOfRange(std::to_string(i));
    auto pos = positions_;
    std::swap(pos[static_cast<std::size_t>(i - 1)], pos[static_cast<std::size_t>(i)]);
    try {
        return StandardTableau(m(), std::move(pos));
    } catch (const Error&) {
        return std::nullopt;
    }
}

StandardTableau StandardTableau::extended(const Node& x) const {
    auto pos = positions_;
    pos.push_back(x);
    return StandardTableau(m(), std::move(pos));
}

std::vector<std::vector<std::vector<int>>> StandardTableau::rows() const {
    std::vector<std::vector<std::vector<int>>> out(static_cast<std::size_t>(m()));
    for (int c = 1; c <= m(); ++c) {
        const auto& p = shape_.component(c);
        auto& comp = out[static_cast<std::size_t>(c - 1)];
        for (int i = 1; i <= p.length(); ++i) comp.emplace_back(static_cast<std::size_t>(p.row(i)), 0);
    }
    for (std::size_t k = 0; k < positions_.size(); ++k) {
        const auto& x = positions_[k];
        out[static_cast<std::size_t>(x.comp - 1)][static_cast<std::size_t>(x.row - 1)][static_cast<std::size_t>(x.col - 1)] =
            static_cast<int>(k) + 1;
    }
    return out;
}

std::string StandardTableau::to_string() const {
    std::string out;
    const auto r = rows();
    for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) out += " | ";
        out += "[";
        for (std::size_t i = 0; i < r[c].size(); ++i) {
            if (i) out += ",";
            out += "[";
            for (std::size_t j = 0; j < r[c][i].size(); ++j) {
                if (j) out += ",";
                out += std::to_string(r[c][i][j]);
            }
            out += "]";
        }
        out += "]";
    }
    return out;
}

std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b) {
    if (auto c = a.size() <=> b.size(); c != 0) return c;
    for (int k = a.size(); k >= 1; --k)
        if (auto c = a.node_of(k) <=> b.node_of(k); c != 0) return c;
    return a.m() <=> b.m();
}

std::vector<StandardTableau> enumerate_standard_tableaux(const MultiPartition& lambda) {
    const int n = lambda.size();
    std::vector<StandardTableau> out;
    std::vector<Node> pos(static_cast<std::size_t>(n));
    std::function<void(const MultiPartition&, int)> rec = [&](const MultiPartition& shape, int k) {
        if (k == 0) {
            out.emplace_back(lambda.m(), pos);
            return;
        }
        for (const auto& x : shape.removable()) {
            pos[static_cast<std::size_t>(k - 1)] = x;
            rec(shape.with_removed(x), k - 1);
        }
    };
    rec(lambda, n);
    return out;
}

long count_standard_tableaux(const MultiPartition& lambda) {
    long count = 0;
    std::function<void(const MultiPartition&)> rec = [&](const MultiPartition& shape) {
        if (shape.size() == 0) {
            ++count;
            return;
        }
        for (const auto& x : shape.removable()) rec(shape.with_removed(x));
    };
    rec(lambda);
    return count;
}

}  // namespace hecke
