#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <sstream>

#include "doctest.h"
#include "msnl/core/dataset_io.hpp"
#include "msnl/core/errors.hpp"
#include "msnl/core/ingest.hpp"
#include "msnl/core/metrics.hpp"
#include "msnl/core/split.hpp"
#include "support/oracles.hpp"

using namespace msnl;

namespace {

ShdiMatrix ingest(const std::string& text, DuplicatePolicy policy = DuplicatePolicy::kError) {
  std::istringstream in(text);
  return ingest_edge_list(in, {policy});
}

ShdiMatrix ingest_mm(const std::string& text) {
  std::istringstream in(text);
  return ingest_matrix_market(in);
}

// A matrix with exactly `count` entries spread over enough nodes.
ShdiMatrix matrix_with_entries(std::size_t count) {
  std::size_t nodes = 1;
  while (nodes * (nodes + 1) / 2 < count) ++nodes;
  std::vector<Entry> entries;
  for (NodeIndex m = 0; m < nodes && entries.size() < count; ++m) {
    for (NodeIndex n = m; n < nodes && entries.size() < count; ++n) {
      entries.push_back({m, n, 1.0});
    }
  }
  return ShdiMatrix(nodes, std::move(entries));
}

}  // namespace

TEST_CASE("edge list: both orientations collapse to one canonical entry") {
  const auto a = ingest("0 1 0.5\n1 0 0.5");
  CHECK(a.node_count() == 2);
  REQUIRE(a.entry_count() == 1);
  CHECK(a.entry(0) == Entry{0, 1, 0.5});
  CHECK(a.degree(0) == 1);
  CHECK(a.degree(1) == 1);
}

TEST_CASE("edge list: diagonal entry appears once in its row") {
  const auto a = ingest("0 0 2.0");
  CHECK(a.node_count() == 1);
  REQUIRE(a.entry_count() == 1);
  CHECK(a.entry(0) == Entry{0, 0, 2.0});
  REQUIRE(a.neighbors(0).size() == 1);
  CHECK(a.neighbors(0)[0].node == 0);
  CHECK(a.neighbors(0)[0].weight == 2.0);
  CHECK(a.mirror_slot(0) == 0);
}

TEST_CASE("edge list: separators, comments and blank lines") {
  const auto a = ingest("# header\n\n0,1,0.25\n  1\t2  0.75 \n# tail\n");
  CHECK(a.node_count() == 3);
  CHECK(a.entry_count() == 2);
  CHECK(a.weight(2, 1) == 0.75);
  CHECK_FALSE(a.weight(0, 2).has_value());
}

TEST_CASE("edge list: string ids are re-indexed by first appearance") {
  const auto a = ingest("P53 MDM2 0.9\nMDM2 ATM 0.4\n");
  CHECK(a.node_count() == 3);
  CHECK(a.label(0) == "P53");
  CHECK(a.label(1) == "MDM2");
  CHECK(a.label(2) == "ATM");
  CHECK(a.find_label("ATM") == NodeIndex{2});
  CHECK_FALSE(a.find_label("BRCA1").has_value());
}

TEST_CASE("edge list: numeric ids are ordered numerically") {
  const auto a = ingest("10 2 1\n2 7 1\n");
  REQUIRE(a.node_count() == 3);
  CHECK(a.label(0) == "2");
  CHECK(a.label(1) == "7");
  CHECK(a.label(2) == "10");
}

TEST_CASE("edge list: observed zero is an entry") {
  const auto a = ingest("0 1 0\n");
  CHECK(a.entry_count() == 1);
  CHECK(a.weight(0, 1) == 0.0);
}

TEST_CASE("edge list: negative weight is rejected") {
  try {
    ingest("0 1 0.5\n1 2 -0.1\n");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(std::string(e.what()).find("negative") != std::string::npos);
  }
}

TEST_CASE("edge list: malformed lines report their line number") {
  for (const std::string bad : {"0 1\n", "0 1 abc\n", "0 1 nan\n", "0 1 inf\n", "0 1 2 3\n"}) {
    try {
      ingest("# ok\n" + bad);
      FAIL("expected a ParseError for " << bad);
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}

TEST_CASE("edge list: duplicate policies") {
  const std::string text = "0 1 1.0\n1 0 3.0\n0 1 2.0\n";
  SUBCASE("error names the pair") {
    try {
      ingest(text);
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
      CHECK(std::string(e.what()).find("(0, 1)") != std::string::npos);
    }
  }
  SUBCASE("last wins") { CHECK(ingest(text, DuplicatePolicy::kLastWins).weight(0, 1) == 2.0); }
  SUBCASE("mean") { CHECK(ingest(text, DuplicatePolicy::kMean).weight(0, 1) == 2.0); }
  SUBCASE("identical repeats are not conflicts") {
    CHECK(ingest("0 1 1.5\n1 0 1.5\n0 1 1.5\n").entry_count() == 1);
  }
  CHECK(parse_duplicate_policy("mean") == DuplicatePolicy::kMean);
  CHECK_THROWS_AS(parse_duplicate_policy("sum"), ConfigError);
}

TEST_CASE("matrix market: symmetric file is 1-based") {
  const auto a = ingest_mm("%%MatrixMarket matrix coordinate real symmetric\n% c\n2 2 1\n2 1 3.0\n");
  CHECK(a.node_count() == 2);
  REQUIRE(a.entry_count() == 1);
  CHECK(a.entry(0) == Entry{0, 1, 3.0});
  CHECK(a.label(0) == "1");
}

TEST_CASE("matrix market: explicit zeros are observed") {
  const auto a = ingest_mm("%%MatrixMarket matrix coordinate real symmetric\n3 3 2\n2 1 0\n3 3 0.0\n");
  CHECK(a.entry_count() == 2);
  CHECK(a.weight(0, 1) == 0.0);
  CHECK(a.weight(2, 2) == 0.0);
  CHECK(a.degree(2) == 1);
}

TEST_CASE("matrix market: general file must be symmetric") {
  const auto ok = ingest_mm(
      "%%MatrixMarket matrix coordinate real general\n3 3 3\n1 2 1.0\n2 1 1.0\n3 3 4\n");
  CHECK(ok.entry_count() == 2);
  CHECK(ok.weight(1, 0) == 1.0);

  try {
    ingest_mm("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 2 1.0\n2 1 2.0\n");
    FAIL("expected an asymmetry error");
  } catch (const ParseError& e) {
    CHECK(std::string(e.what()).find("not symmetric") != std::string::npos);
    CHECK(std::string(e.what()).find("a(1, 2)") != std::string::npos);
  }
  CHECK_THROWS_AS(
      ingest_mm("%%MatrixMarket matrix coordinate real general\n2 2 1\n1 2 1.0\n"),
      ParseError);
}

TEST_CASE("matrix market: unsupported variants") {
  CHECK_THROWS_AS(ingest_mm("%%MatrixMarket matrix coordinate pattern symmetric\n2 2 1\n2 1\n"),
                  ParseError);
  CHECK_THROWS_AS(ingest_mm("%%MatrixMarket matrix array real general\n2 2\n"), ParseError);
  CHECK_THROWS_AS(ingest_mm("%%MatrixMarket matrix coordinate real symmetric\n2 3 0\n"),
                  ParseError);
  CHECK_THROWS_AS(ingest_mm("%%MatrixMarket matrix coordinate real symmetric\n2 2 1\n2 1 -1\n"),
                  ParseError);
  CHECK_THROWS_AS(ingest_mm("%%MatrixMarket matrix coordinate real symmetric\n2 2 2\n2 1 1\n"),
                  ParseError);
}

TEST_CASE("ShdiMatrix rejects invalid entries") {
  CHECK_THROWS_AS(ShdiMatrix(2, {{0, 1, -1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ShdiMatrix(2, {{0, 2, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ShdiMatrix(2, {{0, 1, 1.0}, {1, 0, 1.0}}), std::invalid_argument);
  CHECK_THROWS_AS(ShdiMatrix(2, {{0, 1, 1.0}}, {"only-one"}), std::invalid_argument);
}

TEST_CASE("ShdiMatrix: density and subset origin") {
  const ShdiMatrix a(3, {{0, 0, 1}, {0, 1, 2}, {1, 2, 3}});
  CHECK(a.density() == doctest::Approx(3.0 / 6.0));
  const std::vector<EntryIndex> keep{2, 0};
  const auto sub = a.subset(keep);
  CHECK(sub.node_count() == 3);
  REQUIRE(sub.entry_count() == 2);
  CHECK(sub.origin_of(0) == 0);
  CHECK(sub.origin_of(1) == 2);
  CHECK(sub.entry(1) == Entry{1, 2, 3});
  CHECK(sub.degree(0) == 1);
}

TEST_CASE("property: adjacency is symmetric and consistent with entries") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto a = testing::random_matrix(rng, 1 + uniform_index(rng, 30));
    std::size_t slots = 0;
    for (NodeIndex j = 0; j < a.node_count(); ++j) {
      for (const auto& nb : a.neighbors(j)) {
        ++slots;
        const auto back = a.weight(nb.node, j);
        REQUIRE(back.has_value());
        CHECK(*back == nb.weight);
        const auto& e = a.entry(nb.entry);
        CHECK(e.row == std::min(j, nb.node));
        CHECK(e.col == std::max(j, nb.node));
        CHECK(e.weight == nb.weight);
      }
      for (std::size_t k = 0; k < a.degree(j); ++k) {
        const std::size_t slot = a.slot_begin(j) + k;
        CHECK(a.mirror_slot(a.mirror_slot(slot)) == slot);
      }
    }
    std::size_t diagonal = 0;
    for (const auto& e : a.entries()) diagonal += e.row == e.col ? 1 : 0;
    CHECK(slots == 2 * a.entry_count() - diagonal);
    CHECK(a.entry_count() <= a.node_count() * (a.node_count() + 1) / 2);
  }
}

TEST_CASE("property: edge-list export round-trips the canonical entry set") {
  Rng rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testing::random_matrix(rng, 2 + uniform_index(rng, 25));
    std::stringstream text;
    export_edge_list(a, text);
    const auto b = ingest_edge_list(text);
    std::map<std::pair<std::string, std::string>, double> lhs, rhs;
    for (const auto& e : a.entries()) lhs[{a.label(e.row), a.label(e.col)}] = e.weight;
    for (const auto& e : b.entries()) rhs[{b.label(e.row), b.label(e.col)}] = e.weight;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("canonical dataset file is exact") {
  Rng rng(9);
  const auto a = testing::random_matrix(rng, 12);
  std::stringstream text;
  write_dataset(a, text);
  const auto b = read_dataset(text);
  CHECK(b.node_count() == a.node_count());
  CHECK(std::equal(a.entries().begin(), a.entries().end(), b.entries().begin(), b.entries().end()));
  CHECK(b.labels().size() == a.node_count());
}

TEST_CASE("make_split: balanced, disjoint, deterministic") {
  SUBCASE("divisible") {
    const auto split = make_split(matrix_with_entries(100), 3);
    for (auto size : split.fold_sizes()) CHECK(size == 10);
  }
  SUBCASE("remainder") {
    const auto split = make_split(matrix_with_entries(103), 3);
    std::size_t total = 0;
    for (auto size : split.fold_sizes()) {
      CHECK((size == 10 || size == 11));
      total += size;
    }
    CHECK(total == 103);
  }
  SUBCASE("determinism") {
    const auto a = matrix_with_entries(500);
    CHECK(make_split(a, 42).fold_assignment() == make_split(a, 42).fold_assignment());
    CHECK(make_split(a, 42).fold_assignment() != make_split(a, 43).fold_assignment());
  }
  SUBCASE("too small") { CHECK_THROWS_AS(make_split(matrix_with_entries(9), 1), std::invalid_argument); }
}

TEST_CASE("property: split invariants over random sizes") {
  Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    // Log-uniform size in [10, 1e5].
    const auto count = static_cast<std::size_t>(std::exp(testing::uniform(rng, std::log(10.0), std::log(1e5))));
    const auto a = matrix_with_entries(count);
    const std::uint64_t seed = rng();
    const auto split = make_split(a, seed);
    REQUIRE(split.entry_count() == count);
    const auto sizes = split.fold_sizes();
    const auto [lo, hi] = std::minmax_element(sizes.begin(), sizes.end());
    CHECK(*hi - *lo <= 1);
    CHECK(make_split(a, seed).fold_assignment() == split.fold_assignment());

    for (int r = 0; r < kFoldCount; ++r) {
      const auto rotated = split.rotated(r);
      int train = 0, validation = 0, test = 0;
      for (auto role : rotated.role_map()) {
        train += role == FoldRole::kTrain;
        validation += role == FoldRole::kValidation;
        test += role == FoldRole::kTest;
      }
      CHECK(train == 7);
      CHECK(validation == 1);
      CHECK(test == 2);
      const auto tr = rotated.entries_with(FoldRole::kTrain);
      const auto va = rotated.entries_with(FoldRole::kValidation);
      const auto te = rotated.entries_with(FoldRole::kTest);
      CHECK(tr.size() + va.size() + te.size() == count);
      std::set<EntryIndex> all(tr.begin(), tr.end());
      all.insert(va.begin(), va.end());
      all.insert(te.begin(), te.end());
      CHECK(all.size() == count);
    }
  }
}

TEST_CASE("split file round trip") {
  const auto split = make_split(matrix_with_entries(37), 77).rotated(4);
  std::stringstream text;
  write_split(split, text);
  const auto back = read_split(text);
  CHECK(back.fold_assignment() == split.fold_assignment());
  CHECK(back.seed() == 77);
  CHECK(back.rotation() == 4);

  std::istringstream bad("0 3\n2 1\n");
  CHECK_THROWS_AS(read_split(bad), ParseError);
}

TEST_CASE("rmse examples") {
  const std::vector<double> t{1.0, 2.0, 3.0};
  CHECK(rmse(t, t) == 0.0);
  const std::vector<double> one{1.0}, half{0.5};
  CHECK(rmse(one, half) == 0.5);
  const std::vector<double> p{1.1, 1.9, 3.3};
  // Hand-summed: (0.01 + 0.01 + 0.09) / 3.
  CHECK(rmse(t, p) == doctest::Approx(std::sqrt(0.11 / 3.0)).epsilon(1e-12));
  CHECK(rmse(t, p) == doctest::Approx(testing::rmse_oracle(t, p)).epsilon(1e-14));
  CHECK_THROWS_AS(rmse(std::vector<double>{}, std::vector<double>{}), std::invalid_argument);
  CHECK_THROWS_AS(rmse(t, one), std::invalid_argument);
}

TEST_CASE("property: rmse is symmetric and scales linearly") {
  Rng rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + uniform_index(rng, 50);
    std::vector<double> t(n), p(n);
    for (std::size_t i = 0; i < n; ++i) {
      t[i] = testing::uniform(rng, -5, 5);
      p[i] = testing::uniform(rng, -5, 5);
    }
    const double base = rmse(t, p);
    CHECK(rmse(p, t) == doctest::Approx(base).epsilon(1e-14));
    const double c = testing::uniform(rng, -4, 4);
    std::vector<double> ct(n), cp(n);
    for (std::size_t i = 0; i < n; ++i) {
      ct[i] = c * t[i];
      cp[i] = c * p[i];
    }
    CHECK(rmse(ct, cp) == doctest::Approx(std::abs(c) * base).epsilon(1e-12));
  }
}
