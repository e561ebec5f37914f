#include "msnl/core/split.hpp"

#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "msnl/core/errors.hpp"
#include "msnl/core/random.hpp"

namespace msnl {

SplitPlan::SplitPlan(std::vector<std::uint8_t> fold_assignment,
                     std::uint64_t seed, int rotation)
    : folds_(std::move(fold_assignment)), seed_(seed) {
  for (auto f : folds_) {
    if (f >= kFoldCount) throw std::invalid_argument("fold index out of range");
  }
  if (rotation < 0) throw std::invalid_argument("negative rotation");
  rotation_ = rotation % kFoldCount;
  roles_.fill(FoldRole::kTrain);
  roles_[rotation_] = FoldRole::kValidation;
  for (int k = 1; k <= kTestFolds; ++k) {
    roles_[(rotation_ + k) % kFoldCount] = FoldRole::kTest;
  }
}

SplitPlan SplitPlan::rotated(int rotation) const {
  return SplitPlan(folds_, seed_, rotation);
}

FoldRole SplitPlan::role_of_fold(int fold) const { return roles_.at(fold); }

std::vector<EntryIndex> SplitPlan::entries_with(FoldRole role) const {
  std::vector<EntryIndex> out;
  for (EntryIndex e = 0; e < folds_.size(); ++e) {
    if (roles_[folds_[e]] == role) out.push_back(e);
  }
  return out;
}

std::vector<EntryIndex> SplitPlan::entries_in_folds(const std::vector<int>& folds) const {
  std::array<bool, kFoldCount> wanted{};
  for (int f : folds) wanted.at(f) = true;
  std::vector<EntryIndex> out;
  for (EntryIndex e = 0; e < folds_.size(); ++e) {
    if (wanted[folds_[e]]) out.push_back(e);
  }
  return out;
}

std::array<std::size_t, kFoldCount> SplitPlan::fold_sizes() const {
  std::array<std::size_t, kFoldCount> sizes{};
  for (auto f : folds_) ++sizes[f];
  return sizes;
}

SplitPlan make_split(const ShdiMatrix& matrix, std::uint64_t seed) {
  const std::size_t count = matrix.entry_count();
  if (count < static_cast<std::size_t>(kFoldCount)) {
    throw std::invalid_argument("a tenfold split needs at least 10 observed "
                                "entries, got " + std::to_string(count));
  }
  std::vector<EntryIndex> order(count);
  std::iota(order.begin(), order.end(), EntryIndex{0});
  Rng rng(seed);
  for (std::size_t i = count - 1; i > 0; --i) {
    std::swap(order[i], order[uniform_index(rng, i + 1)]);
  }
  std::vector<std::uint8_t> folds(count);
  for (std::size_t pos = 0; pos < count; ++pos) {
    folds[order[pos]] = static_cast<std::uint8_t>(pos % kFoldCount);
  }
  return SplitPlan(std::move(folds), seed, 0);
}

void write_split(const SplitPlan& split, std::ostream& out) {
  out << "# seed " << split.seed() << '\n'
      << "# rotation " << split.rotation() << '\n';
  const auto& folds = split.fold_assignment();
  for (std::size_t e = 0; e < folds.size(); ++e) {
    out << e << ' ' << static_cast<int>(folds[e]) << '\n';
  }
}

SplitPlan read_split(std::istream& in) {
  std::uint64_t seed = 0;
  int rotation = 0;
  std::vector<std::uint8_t> folds;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    std::istringstream fields(line);
    if (line.front() == '#') {
      std::string hash, key;
      fields >> hash >> key;
      if (key == "seed") fields >> seed;
      if (key == "rotation") fields >> rotation;
      continue;
    }
    std::size_t index = 0;
    int fold = -1;
    if (!(fields >> index >> fold) || fold < 0 || fold >= kFoldCount) {
      throw ParseError("expected 'entry_index fold'", line_no);
    }
    if (index != folds.size()) {
      throw ParseError("entry indices must be consecutive from 0", line_no);
    }
    folds.push_back(static_cast<std::uint8_t>(fold));
  }
  return SplitPlan(std::move(folds), seed, rotation);
}

}  // namespace msnl
