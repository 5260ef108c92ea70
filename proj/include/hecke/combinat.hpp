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

// Partitions, multipartitions, nodes, hooks and standard tableaux.
//
// Rows, columns and components are 1-based throughout, matching the usual
// diagram conventions. Node sets are always returned sorted by
// (comp, row, col).

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace hecke {

/// A box (row, col) of a single partition diagram.
struct Cell {
    int row = 1;
    int col = 1;

    friend bool operator==(const Cell&, const Cell&) = default;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A box (row, col) in component `comp` of a multipartition diagram.
struct Node {
    int comp = 1;
    int row = 1;
    int col = 1;

    /// col - row; the residue is this plus q_comp.
    [[nodiscard]] int content() const noexcept { return col - row; }

    friend bool operator==(const Node&, const Node&) = default;
    friend auto operator<=>(const Node&, const Node&) = default;
};

class Partition {
  public:
    Partition() = default;
    /// Throws hecke::Error unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    [[nodiscard]] const std::vector<int>& parts() const noexcept { return parts_; }
    [[nodiscard]] int size() const noexcept { return size_; }
    [[nodiscard]] int length() const noexcept { return static_cast<int>(parts_.size()); }
    [[nodiscard]] bool empty() const noexcept { return parts_.empty(); }

    /// lambda_i, zero beyond the last row.
    [[nodiscard]] int row(int i) const noexcept;
    /// Length of column j (the conjugate part), zero beyond the first row.
    [[nodiscard]] int column(int j) const noexcept;
    [[nodiscard]] bool contains(int i, int j) const noexcept { return i >= 1 && j >= 1 && j <= row(i); }

    [[nodiscard]] Partition conjugate() const;
    [[nodiscard]] int hook(int i, int j) const;

    [[nodiscard]] std::vector<Cell> addable() const;
    [[nodiscard]] std::vector<Cell> removable() const;
    [[nodiscard]] Partition with_added(Cell c) const;
    [[nodiscard]] Partition with_removed(Cell c) const;

    /// "(3,1)"; the empty partition prints as "()".
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
    friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

  private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// lambda_i - i + conj(mu)_j - j + 1 with (i, j) in lambda.
[[nodiscard]] int generalized_hook(const Partition& lambda, const Partition& mu, int i, int j);

/// The same expression without the membership precondition.
[[nodiscard]] int generalized_hook_value(const Partition& lambda, const Partition& mu, int i, int j) noexcept;

/// Partitions of n, largest first in reverse lexicographic order: (n), (n-1,1), ...
[[nodiscard]] std::vector<Partition> enumerate_partitions(int n);

class MultiPartition {
  public:
    MultiPartition() = default;
    explicit MultiPartition(std::vector<Partition> components);
    /// The m-multipartition with every component empty.
    static MultiPartition empty(int m);

    [[nodiscard]] int m() const noexcept { return static_cast<int>(comps_.size()); }
    [[nodiscard]] int size() const noexcept;
    [[nodiscard]] const std::vector<Partition>& components() const noexcept { return comps_; }
    [[nodiscard]] const Partition& component(int c) const { return comps_.at(static_cast<std::size_t>(c - 1)); }

    [[nodiscard]] bool contains(const Node& x) const;
    [[nodiscard]] std::vector<Node> addable() const;
    [[nodiscard]] std::vector<Node> removable() const;
    [[nodiscard]] MultiPartition with_added(const Node& x) const;
    [[nodiscard]] MultiPartition with_removed(const Node& x) const;

    /// "((2,1);(1))"
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const MultiPartition&, const MultiPartition&) = default;
    friend auto operator<=>(const MultiPartition& a, const MultiPartition& b) { return a.comps_ <=> b.comps_; }

  private:
    std::vector<Partition> comps_;
};

/// (A(lambda), R(lambda)): addable and removable nodes, sorted.
[[nodiscard]] std::pair<std::vector<Node>, std::vector<Node>> addable_removable(const MultiPartition& lambda);

/// All m-multipartitions of n. Component sizes run through compositions of n
/// in reverse lexicographic order ((n,0,..) first); within a composition,
/// component 1 varies slowest and each component follows enumerate_partitions.
[[nodiscard]] std::vector<MultiPartition> enumerate_multipartitions(int m, int n);

class StandardTableau {
  public:
    StandardTableau() = default;
    /// positions[k-1] is the node holding k. Throws hecke::Error if the nodes do
    /// not form a multipartition diagram or the filling is not standard.
    StandardTableau(int m, std::vector<Node> positions);
    /// The unique tableau of the empty m-multipartition.
    static StandardTableau empty(int m) { return StandardTableau(m, {}); }

    [[nodiscard]] int size() const noexcept { return static_cast<int>(positions_.size()); }
    [[nodiscard]] int m() const noexcept { return shape_.m(); }
    [[nodiscard]] const MultiPartition& shape() const noexcept { return shape_; }
    [[nodiscard]] const std::vector<Node>& positions() const noexcept { return positions_; }
    /// Node containing entry k (1-based); throws EntryOutOfRange.
    [[nodiscard]] const Node& node_of(int k) const;
    /// Entry at a node of the shape, 0 if absent.
    [[nodiscard]] int entry_at(const Node& x) const;

    /// Subtableau holding 1..k.
    [[nodiscard]] StandardTableau restrict(int k) const;
    /// The tableau with entries i and i+1 exchanged, if it is still standard.
    [[nodiscard]] std::optional<StandardTableau> swapped(int i) const;
    /// Appends entry n+1 at an addable node.
    [[nodiscard]] StandardTableau extended(const Node& x) const;

    /// Per-component row arrays of entries.
    [[nodiscard]] std::vector<std::vector<std::vector<int>>> rows() const;
    /// "[[1,2],[3]] | [[4]]"
    [[nodiscard]] std::string to_string() const;

    /// Compares the location sequences of n, n-1, ..., 1 under (comp,row,col).
    friend std::strong_ordering operator<=>(const StandardTableau& a, const StandardTableau& b);
    friend bool operator==(const StandardTableau& a, const StandardTableau& b) {
        return a.positions_ == b.positions_ && a.m() == b.m();
    }

  private:
    MultiPartition shape_;
    std::vector<Node> positions_;
};

/// Std(lambda), ordered by location of the largest entry first; generated by
/// recursive removal of the node holding the largest entry.
[[nodiscard]] std::vector<StandardTableau> enumerate_standard_tableaux(const MultiPartition& lambda);

/// Number of standard tableaux, by enumeration.
[[nodiscard]] long count_standard_tableaux(const MultiPartition& lambda);

}  // namespace hecke
