#include <doctest.h>

#include "enumbers/canonical.hpp"
#include "enumbers/constructions.hpp"
#include "enumbers/errors.hpp"
#include "enumbers/feasibility.hpp"
#include "enumbers/graph6.hpp"
#include "enumbers/oracle.hpp"

using namespace enumbers;

namespace {

const BoundsTable& table() { return BoundsTable::embedded(); }

}  // namespace

TEST_CASE("small e-numbers") {
  const OracleResult r48 = min_edges_exhaustive(4, 8);
  CHECK(r48.value == Count(10));
  REQUIRE(r48.witness.has_value());
  CHECK(classify(*r48.witness).is_ramsey_graph(4, 8, 10));

  const OracleResult r49 = min_edges_exhaustive(4, 9);
  CHECK(r49.value.is_infinite());
  CHECK_FALSE(r49.witness.has_value());

  // Fewer vertices than the independence bound: the empty graph works.
  for (int l = 2; l <= 8; ++l) CHECK(min_edges_exhaustive(l, l - 1).value == Count(0));
  CHECK(min_edges_exhaustive(2, 1).value == Count(0));
  CHECK(min_edges_exhaustive(2, 2).value == Count(1));
  CHECK(min_edges_exhaustive(2, 3).value.is_infinite());
  CHECK(min_edges_exhaustive(3, 5).value == Count(5));
  CHECK(min_edges_exhaustive(3, 6).value.is_infinite());
}

TEST_CASE("the unique (3,5;13,26)-graph") {
  const OracleResult r = min_edges_exhaustive(5, 13);
  CHECK(r.value == Count(26));
  REQUIRE(r.witness.has_value());
  CHECK(canonical_key(*r.witness) == canonical_key(cyclic_13_1_5()));
}

TEST_CASE("oracle agrees with the table for l <= 5") {
  const auto report = cross_validate(2, 5, 14, table());
  CHECK(report.all_pass());
  for (const auto& c : report.cells) {
    CAPTURE(c.l);
    CAPTURE(c.n);
    CHECK(c.pass);
    if (c.witness) {
      const GraphClass k = classify(*c.witness);
      CHECK(k.is_ramsey_graph(c.l, c.n, c.oracle.value()));
      // Minimum witnesses pass the degree counting under every refinement.
      CHECK(assess(DegreeDistribution::of(*c.witness), c.l, c.n, c.oracle.value(), table(),
                   kAllRefinements)
                .feasible());
    }
  }
  CHECK(report.matrix().find("FAIL") == std::string::npos);
}

TEST_CASE("naive enumeration agrees with the search") {
  for (int n = 1; n <= 7; ++n) {
    for (int l = 2; l <= n + 1; ++l) {
      CAPTURE(l);
      CAPTURE(n);
      CHECK(min_edges_naive(l, n) == min_edges_exhaustive(l, n).value);
    }
  }
  CHECK_THROWS_AS(naive_min_edges_by_alpha(8), DomainError);
  CHECK_THROWS_AS(naive_min_edges_by_alpha(0), DomainError);
}

TEST_CASE("seed changes the order, not the answer") {
  const OracleResult base = min_edges_exhaustive(5, 12);
  for (std::uint64_t seed : {1U, 7U, 12345U}) {
    OracleOptions opts;
    opts.seed = seed;
    const OracleResult r = min_edges_exhaustive(5, 12, opts);
    CHECK(r.value == base.value);
    REQUIRE(r.witness.has_value());
    CHECK(write_graph6(*r.witness) == write_graph6(*base.witness));
  }
}

TEST_CASE("budget exhaustion is inconclusive") {
  OracleOptions opts;
  opts.budget = 10;
  CHECK_THROWS_AS(min_edges_exhaustive(5, 12, opts), Inconclusive);
  CHECK_THROWS_AS(min_edges_exhaustive(1, 4), DomainError);
  CHECK_THROWS_AS(min_edges_exhaustive(4, 0), DomainError);
  CHECK_THROWS_AS(min_edges_exhaustive(4, 129), DomainError);
}
