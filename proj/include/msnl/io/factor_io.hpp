#ifndef MSNL_IO_FACTOR_IO_HPP_
#define MSNL_IO_FACTOR_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string>
#include <variant>

#include "msnl/admm/factor_state.hpp"
#include "msnl/admm/train_config.hpp"
#include "msnl/baseline/nlf.hpp"
#include "msnl/model_kind.hpp"

namespace msnl {

/// A trained model as stored on disk.
struct FactorFile {
  std::variant<FactorState, NlfState> state;
  TrainConfig config;
  std::string dataset_ref;  // path of the dataset (and its id map)

  ModelKind kind() const {
    return std::holds_alternative<FactorState>(state) ? ModelKind::kMsnl
                                                      : ModelKind::kNlf;
  }
  std::size_t node_count() const;
  int dim() const;
  /// The model's estimate for (m, n): X X^T for msnl, P X^T for nlf.
  double predict(NodeIndex m, NodeIndex n) const;
};

// Binary container, little-endian:
//
//   char[8]  "MSNLFACT"
//   u32      format version (1)
//   u32      model kind (0 msnl, 1 nlf)
//   u64      node count, u64 dim
//   u64 len + bytes   config as JSON
//   u64 len + bytes   dataset reference
//   f64[]    msnl: theta1, theta2, then Q Y P X U V W row-major
//            nlf:  P X row-major
//
// Doubles are stored raw, so load(save(s)) == s exactly.

inline constexpr std::uint32_t kFactorFormatVersion = 1;

void write_factors(const FactorFile& file, std::ostream& out);
FactorFile read_factors(std::istream& in);

void save_factors(const FactorFile& file, const std::filesystem::path& path);
FactorFile load_factors(const std::filesystem::path& path);

}  // namespace msnl

#endif  // MSNL_IO_FACTOR_IO_HPP_
