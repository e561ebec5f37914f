#ifndef MSNL_CORE_INGEST_HPP_
#define MSNL_CORE_INGEST_HPP_

#include <iosfwd>
#include <string_view>

#include "msnl/core/shdi_matrix.hpp"

namespace msnl {

/// What to do when the same undirected pair is listed with different weights.
/// Repeats with an identical weight always collapse silently.
enum class DuplicatePolicy { kError, kLastWins, kMean };

DuplicatePolicy parse_duplicate_policy(std::string_view name);
std::string_view to_string(DuplicatePolicy policy);

struct IngestOptions {
  DuplicatePolicy duplicates = DuplicatePolicy::kError;
};

/**
 * Reads `i j w` lines separated by whitespace and/or commas. Blank lines and
 * lines starting with '#' are skipped. Node ids are re-indexed densely: when
 * every id is a nonnegative integer they are ordered numerically, otherwise by
 * first appearance. The original ids become the matrix labels.
 *
 * Throws ParseError (with the 1-based line number) on malformed lines,
 * negative or non-finite weights, and conflicting duplicates under
 * DuplicatePolicy::kError.
 */
ShdiMatrix ingest_edge_list(std::istream& in, const IngestOptions& options = {});

/// Coordinate-format MatrixMarket, `real` or `integer` field, `symmetric` or
/// `general` symmetry. General files must be numerically symmetric (relative
/// tolerance 1e-12) and are folded to canonical form. Labels are the 1-based
/// ids of the file.
ShdiMatrix ingest_matrix_market(std::istream& in);

/// Writes `label label weight` lines that ingest_edge_list reads back into the
/// same canonical entry set.
void export_edge_list(const ShdiMatrix& matrix, std::ostream& out);

}  // namespace msnl

#endif  // MSNL_CORE_INGEST_HPP_
