#ifndef MSNL_CORE_DATASET_IO_HPP_
#define MSNL_CORE_DATASET_IO_HPP_

#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "msnl/core/ingest.hpp"
#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

// Canonical dataset file:
//
//   %%ShdiDataset 1
//   <node_count> <entry_count>
//   <label of node 0>
//   ...
//   <row> <col> <weight>      (0-based, row <= col, one line per entry)
//
// Weights use shortest round-trip formatting, so save/load is exact.

void write_dataset(const ShdiMatrix& matrix, std::ostream& out);
ShdiMatrix read_dataset(std::istream& in);

enum class DatasetFormat { kAuto, kEdgeList, kMatrixMarket, kCanonical };

DatasetFormat parse_dataset_format(std::string_view name);

/// Loads any supported format. kAuto sniffs the first line. Throws IoError when
/// the file cannot be opened and ParseError on bad content.
ShdiMatrix load_matrix(const std::filesystem::path& path,
                       DatasetFormat format = DatasetFormat::kAuto,
                       const IngestOptions& options = {});

void save_dataset(const ShdiMatrix& matrix, const std::filesystem::path& path);

}  // namespace msnl

#endif  // MSNL_CORE_DATASET_IO_HPP_
