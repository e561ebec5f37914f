#include "msnl/core/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <unordered_map>
#include <vector>

#include "msnl/core/errors.hpp"
#include "msnl/core/format.hpp"

namespace msnl {

DuplicatePolicy parse_duplicate_policy(std::string_view name) {
  if (name == "error") return DuplicatePolicy::kError;
  if (name == "last") return DuplicatePolicy::kLastWins;
  if (name == "mean") return DuplicatePolicy::kMean;
  throw ConfigError("unknown duplicate policy '" + std::string(name) +
                    "' (expected error, last or mean)");
}

std::string_view to_string(DuplicatePolicy policy) {
  switch (policy) {
    case DuplicatePolicy::kError: return "error";
    case DuplicatePolicy::kLastWins: return "last";
    case DuplicatePolicy::kMean: return "mean";
  }
  return "error";
}

namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  auto is_sep = [](char c) {
    return c == ' ' || c == '\t' || c == ',' || c == '\r';
  };
  while (i < line.size()) {
    while (i < line.size() && is_sep(line[i])) ++i;
    const std::size_t start = i;
    while (i < line.size() && !is_sep(line[i])) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

bool parse_uint(std::string_view s, std::uint64_t& out) {
  if (s.empty()) return false;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size();
}

using PairKey = std::pair<std::size_t, std::size_t>;

struct Accumulated {
  double weight = 0.0;
  double sum = 0.0;
  std::size_t count = 0;
  std::size_t first_line = 0;
};

// Folds one observation into the running per-pair state according to the
// duplicate policy.
void accumulate(std::map<PairKey, Accumulated>& pairs, PairKey key,
                double weight, std::size_t line, DuplicatePolicy policy,
                const std::string& a, const std::string& b) {
  auto [it, inserted] = pairs.try_emplace(key);
  auto& acc = it->second;
  if (inserted) {
    acc = {weight, weight, 1, line};
    return;
  }
  switch (policy) {
    case DuplicatePolicy::kError:
      if (acc.weight != weight) {
        throw ParseError("conflicting duplicate for pair (" + a + ", " + b +
                             "): weight " + format_double(weight) +
                             " vs " + format_double(acc.weight) +
                             " first seen on line " +
                             std::to_string(acc.first_line),
                         line);
      }
      break;
    case DuplicatePolicy::kLastWins:
      acc.weight = weight;
      break;
    case DuplicatePolicy::kMean:
      acc.sum += weight;
      ++acc.count;
      acc.weight = acc.sum / static_cast<double>(acc.count);
      break;
  }
}

}  // namespace

ShdiMatrix ingest_edge_list(std::istream& in, const IngestOptions& options) {
  struct RawEdge {
    std::string a, b;
    double weight;
    std::size_t line;
  };
  std::vector<RawEdge> raw;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    const auto fields = split_fields(body);
    if (fields.size() != 3) {
      throw ParseError("expected 'i j w', found " +
                           std::to_string(fields.size()) + " field(s)",
                       line_no);
    }
    double w = 0.0;
    if (!parse_double(fields[2], w) || !std::isfinite(w)) {
      throw ParseError("weight '" + std::string(fields[2]) +
                           "' is not a finite number",
                       line_no);
    }
    if (w < 0.0) {
      throw ParseError("negative weight " + std::string(fields[2]) +
                           " (edge weights must be nonnegative)",
                       line_no);
    }
    raw.push_back({std::string(fields[0]), std::string(fields[1]), w, line_no});
  }

  // Dense re-indexing of node ids.
  bool all_numeric = true;
  for (const auto& e : raw) {
    std::uint64_t v;
    if (!parse_uint(e.a, v) || !parse_uint(e.b, v)) {
      all_numeric = false;
      break;
    }
  }
  std::unordered_map<std::string, NodeIndex> index_of;
  std::vector<std::string> labels;
  if (all_numeric) {
    std::map<std::uint64_t, std::string> ids;
    for (const auto& e : raw) {
      std::uint64_t va = 0, vb = 0;
      parse_uint(e.a, va);
      parse_uint(e.b, vb);
      ids.try_emplace(va, e.a);
      ids.try_emplace(vb, e.b);
    }
    // "007" and "7" name the same node; labels use the canonical decimal form.
    for (const auto& [value, text] : ids) {
      index_of.emplace(std::to_string(value), static_cast<NodeIndex>(labels.size()));
      labels.push_back(std::to_string(value));
    }
  } else {
    for (const auto& e : raw) {
      for (const auto* id : {&e.a, &e.b}) {
        if (index_of.try_emplace(*id, static_cast<NodeIndex>(labels.size())).second) {
          labels.push_back(*id);
        }
      }
    }
  }
  auto lookup = [&](const std::string& id) {
    if (all_numeric) {
      std::uint64_t v = 0;
      parse_uint(id, v);
      return index_of.at(std::to_string(v));
    }
    return index_of.at(id);
  };

  std::map<PairKey, Accumulated> pairs;
  for (const auto& e : raw) {
    std::size_t m = lookup(e.a), n = lookup(e.b);
    if (m > n) std::swap(m, n);
    accumulate(pairs, {m, n}, e.weight, e.line, options.duplicates,
               labels[m], labels[n]);
  }
  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (const auto& [key, acc] : pairs) {
    entries.push_back({static_cast<NodeIndex>(key.first),
                       static_cast<NodeIndex>(key.second), acc.weight});
  }
  const std::size_t node_count = labels.size();
  return ShdiMatrix(node_count, std::move(entries), std::move(labels));
}

ShdiMatrix ingest_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty MatrixMarket input", 0);
  ++line_no;
  std::string lowered = line;
  std::transform(lowered.begin(), lowered.end(), lowered.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  const auto header = split_fields(lowered);
  if (header.size() != 5 || header[0] != "%%matrixmarket" || header[1] != "matrix") {
    throw ParseError("missing '%%MatrixMarket matrix' header", line_no);
  }
  if (header[2] != "coordinate") {
    throw ParseError("only coordinate format is supported, got '" +
                         std::string(header[2]) + "'",
                     line_no);
  }
  if (header[3] == "pattern") {
    throw ParseError("pattern matrices carry no weights; a real or integer "
                     "field is required",
                     line_no);
  }
  if (header[3] != "real" && header[3] != "integer" && header[3] != "double") {
    throw ParseError("unsupported field '" + std::string(header[3]) + "'", line_no);
  }
  const bool symmetric = header[4] == "symmetric";
  if (!symmetric && header[4] != "general") {
    throw ParseError("unsupported symmetry '" + std::string(header[4]) +
                         "' (expected symmetric or general)",
                     line_no);
  }

  std::uint64_t rows = 0, cols = 0, nnz = 0;
  bool have_size = false;
  struct Triplet {
    std::uint64_t i, j;
    double w;
    std::size_t line;
  };
  std::vector<Triplet> triplets;
  while (std::getline(in, line)) {
    ++line_no;
    const auto body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    const auto fields = split_fields(body);
    if (!have_size) {
      if (fields.size() != 3 || !parse_uint(fields[0], rows) ||
          !parse_uint(fields[1], cols) || !parse_uint(fields[2], nnz)) {
        throw ParseError("malformed size line", line_no);
      }
      if (rows != cols) {
        throw ParseError("matrix is " + std::to_string(rows) + "x" +
                             std::to_string(cols) + ", not square",
                         line_no);
      }
      have_size = true;
      triplets.reserve(nnz);
      continue;
    }
    Triplet t{0, 0, 0.0, line_no};
    if (fields.size() != 3 || !parse_uint(fields[0], t.i) ||
        !parse_uint(fields[1], t.j) || !parse_double(fields[2], t.w) ||
        !std::isfinite(t.w)) {
      throw ParseError("expected 'i j value'", line_no);
    }
    if (t.i < 1 || t.i > rows || t.j < 1 || t.j > cols) {
      throw ParseError("index out of range", line_no);
    }
    if (t.w < 0.0) throw ParseError("negative value", line_no);
    triplets.push_back(t);
  }
  if (!have_size) throw ParseError("missing size line", line_no);
  if (triplets.size() != nnz) {
    throw ParseError("size line declares " + std::to_string(nnz) +
                         " entries, found " + std::to_string(triplets.size()),
                     0);
  }

  std::map<PairKey, Accumulated> pairs;
  if (symmetric) {
    for (const auto& t : triplets) {
      PairKey key{std::min(t.i, t.j) - 1, std::max(t.i, t.j) - 1};
      accumulate(pairs, key, t.w, t.line, DuplicatePolicy::kError,
                 std::to_string(t.i), std::to_string(t.j));
    }
  } else {
    std::map<PairKey, const Triplet*> stored;
    for (const auto& t : triplets) {
      if (!stored.try_emplace({t.i, t.j}, &t).second) {
        throw ParseError("duplicate entry (" + std::to_string(t.i) + ", " +
                             std::to_string(t.j) + ")",
                         t.line);
      }
    }
    for (const auto& t : triplets) {
      auto mirror = stored.find({t.j, t.i});
      const bool ok =
          mirror != stored.end() &&
          std::abs(mirror->second->w - t.w) <=
              1e-12 * std::max(std::abs(mirror->second->w), std::abs(t.w));
      if (!ok) {
        std::string detail =
            mirror == stored.end()
                ? "(" + std::to_string(t.j) + ", " + std::to_string(t.i) + ") missing"
                : "a(" + std::to_string(t.j) + ", " + std::to_string(t.i) +
                      ") = " + format_double(mirror->second->w);
        throw ParseError("general matrix is not symmetric: a(" +
                             std::to_string(t.i) + ", " + std::to_string(t.j) +
                             ") = " + format_double(t.w) + " but " + detail,
                         t.line);
      }
      if (t.i <= t.j) pairs.try_emplace({t.i - 1, t.j - 1}, Accumulated{t.w, t.w, 1, t.line});
    }
  }

  std::vector<Entry> entries;
  entries.reserve(pairs.size());
  for (const auto& [key, acc] : pairs) {
    entries.push_back({static_cast<NodeIndex>(key.first),
                       static_cast<NodeIndex>(key.second), acc.weight});
  }
  std::vector<std::string> labels(rows);
  for (std::uint64_t k = 0; k < rows; ++k) labels[k] = std::to_string(k + 1);
  return ShdiMatrix(rows, std::move(entries), std::move(labels));
}

void export_edge_list(const ShdiMatrix& matrix, std::ostream& out) {
  for (const auto& e : matrix.entries()) {
    out << matrix.label(e.row) << ' ' << matrix.label(e.col) << ' '
        << format_double(e.weight) << '\n';
  }
}

}  // namespace msnl
