#include "msnl/core/dataset_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "msnl/core/errors.hpp"
#include "msnl/core/format.hpp"

namespace msnl {

namespace {
constexpr std::string_view kMagic = "%%ShdiDataset 1";
}

void write_dataset(const ShdiMatrix& matrix, std::ostream& out) {
  out << kMagic << '\n'
      << matrix.node_count() << ' ' << matrix.entry_count() << '\n';
  for (NodeIndex j = 0; j < matrix.node_count(); ++j) {
    out << matrix.label(j) << '\n';
  }
  for (const auto& e : matrix.entries()) {
    out << e.row << ' ' << e.col << ' ' << format_double(e.weight) << '\n';
  }
}

ShdiMatrix read_dataset(std::istream& in) {
  std::string line;
  std::size_t line_no = 1;
  if (!std::getline(in, line) || line.rfind(kMagic, 0) != 0) {
    throw ParseError("not a canonical dataset file (missing '" +
                         std::string(kMagic) + "')",
                     line_no);
  }
  std::size_t node_count = 0, entry_count = 0;
  ++line_no;
  if (!std::getline(in, line)) throw ParseError("missing counts", line_no);
  {
    std::istringstream counts(line);
    if (!(counts >> node_count >> entry_count)) {
      throw ParseError("malformed counts line", line_no);
    }
  }
  std::vector<std::string> labels(node_count);
  for (auto& label : labels) {
    ++line_no;
    if (!std::getline(in, label)) throw ParseError("truncated label block", line_no);
    if (!label.empty() && label.back() == '\r') label.pop_back();
  }
  std::vector<Entry> entries;
  entries.reserve(entry_count);
  for (std::size_t k = 0; k < entry_count; ++k) {
    ++line_no;
    if (!std::getline(in, line)) throw ParseError("truncated entry block", line_no);
    std::istringstream fields(line);
    std::string weight_text;
    Entry e;
    if (!(fields >> e.row >> e.col >> weight_text) ||
        !parse_double(weight_text, e.weight)) {
      throw ParseError("malformed entry", line_no);
    }
    entries.push_back(e);
  }
  try {
    return ShdiMatrix(node_count, std::move(entries), std::move(labels));
  } catch (const std::invalid_argument& err) {
    throw ParseError(err.what(), 0);
  }
}

DatasetFormat parse_dataset_format(std::string_view name) {
  if (name == "auto") return DatasetFormat::kAuto;
  if (name == "edges" || name == "edgelist") return DatasetFormat::kEdgeList;
  if (name == "mtx" || name == "mm") return DatasetFormat::kMatrixMarket;
  if (name == "dataset" || name == "canonical") return DatasetFormat::kCanonical;
  throw ConfigError("unknown dataset format '" + std::string(name) + "'");
}

ShdiMatrix load_matrix(const std::filesystem::path& path, DatasetFormat format,
                       const IngestOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  if (format == DatasetFormat::kAuto) {
    std::string first;
    std::getline(in, first);
    if (first.rfind(kMagic, 0) == 0) {
      format = DatasetFormat::kCanonical;
    } else if (first.rfind("%%MatrixMarket", 0) == 0) {
      format = DatasetFormat::kMatrixMarket;
    } else {
      format = DatasetFormat::kEdgeList;
    }
    in.clear();
    in.seekg(0);
  }
  switch (format) {
    case DatasetFormat::kCanonical: return read_dataset(in);
    case DatasetFormat::kMatrixMarket: return ingest_matrix_market(in);
    default: return ingest_edge_list(in, options);
  }
}

void save_dataset(const ShdiMatrix& matrix, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  write_dataset(matrix, out);
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

}  // namespace msnl
