#ifndef MSNL_CORE_ACCESS_LOG_HPP_
#define MSNL_CORE_ACCESS_LOG_HPP_

#include <cstdint>
#include <vector>

#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

/// Records which observed entries the update rules read. Indices are entries
/// of the matrix being trained on.
class AccessLog {
 public:
  explicit AccessLog(std::size_t entry_count) : touched_(entry_count, 0) {}

  void touch(EntryIndex e) { touched_[e] = 1; }
  bool touched(EntryIndex e) const { return touched_.at(e) != 0; }
  std::size_t entry_count() const noexcept { return touched_.size(); }

  std::vector<EntryIndex> touched_entries() const {
    std::vector<EntryIndex> out;
    for (EntryIndex e = 0; e < touched_.size(); ++e) {
      if (touched_[e]) out.push_back(e);
    }
    return out;
  }

 private:
  std::vector<std::uint8_t> touched_;
};

}  // namespace msnl

#endif  // MSNL_CORE_ACCESS_LOG_HPP_
