#ifndef MSNL_CORE_SHDI_MATRIX_HPP_
#define MSNL_CORE_SHDI_MATRIX_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace msnl {

using NodeIndex = std::uint32_t;
using EntryIndex = std::size_t;

/// One observed undirected edge in canonical form (row <= col).
struct Entry {
  NodeIndex row = 0;
  NodeIndex col = 0;
  double weight = 0.0;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// One slot of the symmetric adjacency view. `entry` points back into the
/// canonical entry list.
struct Neighbor {
  NodeIndex node = 0;
  double weight = 0.0;
  EntryIndex entry = 0;
};

/**
 * Sparse symmetric store of an undirected weighted network.
 *
 * Every observed pair is kept once in `entries()`, sorted by (row, col) with
 * row <= col. `neighbors(j)` is the observed set of node j covering both
 * orientations; a diagonal entry appears in its row exactly once. Observed
 * zeros are ordinary entries. Instances are immutable after construction.
 *
 * Adjacency slots are numbered globally: slot s of row j lives at
 * `slot_begin(j) + k`. `mirror_slot(s)` gives the slot holding the same entry
 * seen from the other endpoint (itself for diagonal entries).
 */
class ShdiMatrix {
 public:
  ShdiMatrix() = default;

  /// Canonicalizes orientation and sorts. Throws std::invalid_argument on
  /// negative or non-finite weights, out-of-range nodes, or repeated pairs.
  /// `labels`, when non-empty, must hold one external id per node.
  ShdiMatrix(std::size_t node_count, std::vector<Entry> entries,
             std::vector<std::string> labels = {});

  std::size_t node_count() const noexcept { return node_count_; }
  std::size_t entry_count() const noexcept { return entries_.size(); }
  std::span<const Entry> entries() const noexcept { return entries_; }
  const Entry& entry(EntryIndex e) const { return entries_.at(e); }

  std::span<const Neighbor> neighbors(NodeIndex j) const {
    return {neighbors_.data() + offsets_[j], offsets_[j + 1] - offsets_[j]};
  }
  std::size_t degree(NodeIndex j) const {
    return offsets_[j + 1] - offsets_[j];
  }
  std::size_t slot_begin(NodeIndex j) const { return offsets_[j]; }
  std::size_t slot_count() const noexcept { return neighbors_.size(); }
  std::size_t mirror_slot(std::size_t slot) const { return mirror_[slot]; }

  /// Observed weight of the pair, in either orientation.
  std::optional<double> weight(NodeIndex m, NodeIndex n) const;

  /// |Λ| / (|N| (|N| + 1) / 2).
  double density() const;

  const std::vector<std::string>& labels() const noexcept { return labels_; }
  /// External id of node j; the decimal index when no labels were given.
  std::string label(NodeIndex j) const;
  std::optional<NodeIndex> find_label(const std::string& label) const;

  /// Same nodes and labels, restricted to the listed entries. `origin()` of
  /// the result maps its entries back to indices of this matrix.
  ShdiMatrix subset(std::span<const EntryIndex> entry_indices) const;

  /// Parent entry index of each entry; empty for a matrix that is not a
  /// subset.
  std::span<const EntryIndex> origin() const noexcept { return origin_; }
  EntryIndex origin_of(EntryIndex e) const {
    return origin_.empty() ? e : origin_[e];
  }

 private:
  void build_adjacency();

  std::size_t node_count_ = 0;
  std::vector<Entry> entries_;
  std::vector<std::string> labels_;
  std::vector<std::size_t> offsets_{0};
  std::vector<Neighbor> neighbors_;
  std::vector<std::size_t> mirror_;
  std::vector<EntryIndex> origin_;
};

}  // namespace msnl

#endif  // MSNL_CORE_SHDI_MATRIX_HPP_
