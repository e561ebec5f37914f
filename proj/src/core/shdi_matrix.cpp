#include "msnl/core/shdi_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_map>

namespace msnl {

ShdiMatrix::ShdiMatrix(std::size_t node_count, std::vector<Entry> entries,
                       std::vector<std::string> labels)
    : node_count_(node_count),
      entries_(std::move(entries)),
      labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != node_count_) {
    throw std::invalid_argument("label count " + std::to_string(labels_.size()) +
                                " does not match node count " +
                                std::to_string(node_count_));
  }
  for (auto& e : entries_) {
    if (e.row >= node_count_ || e.col >= node_count_) {
      throw std::invalid_argument("entry (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) +
                                  ") outside node range");
    }
    if (!std::isfinite(e.weight) || e.weight < 0.0) {
      throw std::invalid_argument("entry (" + std::to_string(e.row) + ", " +
                                  std::to_string(e.col) +
                                  ") has a negative or non-finite weight");
    }
    if (e.row > e.col) std::swap(e.row, e.col);
  }
  std::sort(entries_.begin(), entries_.end(), [](const Entry& a, const Entry& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  for (std::size_t i = 1; i < entries_.size(); ++i) {
    if (entries_[i].row == entries_[i - 1].row &&
        entries_[i].col == entries_[i - 1].col) {
      throw std::invalid_argument("duplicate entry (" +
                                  std::to_string(entries_[i].row) + ", " +
                                  std::to_string(entries_[i].col) + ")");
    }
  }
  build_adjacency();
}

void ShdiMatrix::build_adjacency() {
  std::vector<std::size_t> counts(node_count_ + 1, 0);
  for (const auto& e : entries_) {
    ++counts[e.row + 1];
    if (e.row != e.col) ++counts[e.col + 1];
  }
  offsets_.assign(node_count_ + 1, 0);
  for (std::size_t j = 0; j < node_count_; ++j) {
    offsets_[j + 1] = offsets_[j] + counts[j + 1];
  }
  neighbors_.assign(offsets_.back(), Neighbor{});
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  // Entries are sorted by (row, col), so filling in entry order leaves each
  // row's neighbor list sorted by node: lower-index neighbors arrive through
  // their own (earlier) rows first.
  std::vector<std::size_t> slot_of_row(entries_.size());
  std::vector<std::size_t> slot_of_col(entries_.size());
  for (EntryIndex i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    slot_of_row[i] = cursor[e.row];
    neighbors_[cursor[e.row]++] = {e.col, e.weight, i};
    if (e.row != e.col) {
      slot_of_col[i] = cursor[e.col];
      neighbors_[cursor[e.col]++] = {e.row, e.weight, i};
    } else {
      slot_of_col[i] = slot_of_row[i];
    }
  }
  mirror_.assign(neighbors_.size(), 0);
  for (EntryIndex i = 0; i < entries_.size(); ++i) {
    mirror_[slot_of_row[i]] = slot_of_col[i];
    mirror_[slot_of_col[i]] = slot_of_row[i];
  }
}

std::optional<double> ShdiMatrix::weight(NodeIndex m, NodeIndex n) const {
  if (m >= node_count_ || n >= node_count_) return std::nullopt;
  const auto row = neighbors(m);
  auto it = std::lower_bound(
      row.begin(), row.end(), n,
      [](const Neighbor& nb, NodeIndex key) { return nb.node < key; });
  if (it == row.end() || it->node != n) return std::nullopt;
  return it->weight;
}

double ShdiMatrix::density() const {
  if (node_count_ == 0) return 0.0;
  const double n = static_cast<double>(node_count_);
  return static_cast<double>(entries_.size()) / (n * (n + 1.0) / 2.0);
}

std::string ShdiMatrix::label(NodeIndex j) const {
  return labels_.empty() ? std::to_string(j) : labels_.at(j);
}

std::optional<NodeIndex> ShdiMatrix::find_label(const std::string& label) const {
  if (labels_.empty()) {
    try {
      std::size_t pos = 0;
      const unsigned long long v = std::stoull(label, &pos);
      if (pos == label.size() && v < node_count_) return static_cast<NodeIndex>(v);
    } catch (const std::exception&) {
    }
    return std::nullopt;
  }
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<NodeIndex>(it - labels_.begin());
}

ShdiMatrix ShdiMatrix::subset(std::span<const EntryIndex> entry_indices) const {
  std::vector<EntryIndex> picked(entry_indices.begin(), entry_indices.end());
  std::sort(picked.begin(), picked.end());
  std::vector<Entry> chosen;
  chosen.reserve(picked.size());
  for (EntryIndex e : picked) chosen.push_back(entries_.at(e));
  ShdiMatrix out(node_count_, std::move(chosen), labels_);
  out.origin_.reserve(picked.size());
  for (EntryIndex e : picked) out.origin_.push_back(origin_of(e));
  return out;
}

}  // namespace msnl
