#ifndef MSNL_CORE_SPLIT_HPP_
#define MSNL_CORE_SPLIT_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

inline constexpr int kFoldCount = 10;
inline constexpr int kTrainFolds = 7;
inline constexpr int kValidationFolds = 1;
inline constexpr int kTestFolds = 2;

enum class FoldRole { kTrain, kValidation, kTest };

/**
 * Tenfold partition of the observed entries with a 7/1/2 role rotation.
 *
 * Rotation r makes fold r the validation fold, folds r+1 and r+2 (mod 10) the
 * test folds and the remaining seven folds the training set, so rotations
 * 0..9 give each fold every role in turn.
 */
class SplitPlan {
 public:
  SplitPlan() = default;
  SplitPlan(std::vector<std::uint8_t> fold_assignment, std::uint64_t seed,
            int rotation = 0);

  std::size_t entry_count() const noexcept { return folds_.size(); }
  int fold_of(EntryIndex e) const { return folds_.at(e); }
  const std::vector<std::uint8_t>& fold_assignment() const noexcept { return folds_; }
  std::uint64_t seed() const noexcept { return seed_; }
  int rotation() const noexcept { return rotation_; }

  /// Same assignment with a different role rotation.
  SplitPlan rotated(int rotation) const;

  FoldRole role_of_fold(int fold) const;
  FoldRole role_of(EntryIndex e) const { return role_of_fold(fold_of(e)); }
  const std::array<FoldRole, kFoldCount>& role_map() const noexcept { return roles_; }

  std::vector<EntryIndex> entries_with(FoldRole role) const;
  std::vector<EntryIndex> entries_in_folds(const std::vector<int>& folds) const;
  std::array<std::size_t, kFoldCount> fold_sizes() const;

 private:
  std::vector<std::uint8_t> folds_;
  std::uint64_t seed_ = 0;
  int rotation_ = 0;
  std::array<FoldRole, kFoldCount> roles_{};
};

/// Uniformly random balanced fold assignment; deterministic in `seed`.
/// Throws std::invalid_argument when the matrix has fewer than 10 entries.
SplitPlan make_split(const ShdiMatrix& matrix, std::uint64_t seed);

// Text form: comment lines with seed and rotation, then one
// `entry_index fold` pair per line.
void write_split(const SplitPlan& split, std::ostream& out);
SplitPlan read_split(std::istream& in);

}  // namespace msnl

#endif  // MSNL_CORE_SPLIT_HPP_
