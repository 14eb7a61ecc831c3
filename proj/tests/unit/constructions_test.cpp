#include <doctest.h>

#include <random>
#include <vector>

#include "enumbers/constructions.hpp"
#include "enumbers/errors.hpp"
#include "enumbers/formulas.hpp"
#include "enumbers/graph.hpp"
#include "test_support.hpp"

using namespace enumbers;
using namespace enumbers::testing;

TEST_CASE("circulants") {
  const std::vector<int> cube{1, 4};
  const Graph w8 = circulant(8, cube);
  CHECK(w8.order() == 8);
  CHECK(w8.size() == 12);  // the antipodal offset contributes 4 edges, not 8
  for (int v = 0; v < 8; ++v) CHECK(w8.degree(v) == 3);
  CHECK(w8.adjacent(0, 4));
  CHECK(w8.adjacent(7, 0));

  const Graph w13 = cyclic_13_1_5();
  CHECK(w13.size() == 26);
  for (int v = 0; v < 13; ++v) {
    CHECK(w13.degree(v) == 4);
    CHECK(w13.adjacent(v, (v + 5) % 13));
    CHECK(w13.adjacent(v, (v + 8) % 13));
  }

  const std::vector<int> one{1};
  CHECK(circulant(3, one) == complete(3));
  CHECK(circulant(6, one) == cycle(6));
}

TEST_CASE("circulant arguments are validated") {
  const std::vector<int> zero{0};
  const std::vector<int> big{5};
  const std::vector<int> ok{1};
  CHECK_THROWS_AS(circulant(8, zero), DomainError);
  CHECK_THROWS_AS(circulant(8, big), DomainError);
  CHECK_THROWS_AS(circulant(2, ok), DomainError);
}

TEST_CASE("twisted tesseract") {
  const Graph g = twisted_tesseract();
  CHECK(g.order() == 16);
  CHECK(g.size() == 32);
  for (int v = 0; v < 16; ++v) CHECK(g.degree(v) == 4);
  // Cross edges follow i -> 5i mod 8.
  for (int i = 0; i < 8; ++i) CHECK(g.adjacent(i, 8 + (5 * i) % 8));
  CHECK(is_triangle_free(g));
  CHECK(independence_number(g) == 5);
}

TEST_CASE("Petersen graph") {
  const Graph p = petersen();
  CHECK(p.order() == 10);
  CHECK(p.size() == 15);
  for (int v = 0; v < 10; ++v) CHECK(p.degree(v) == 3);
  CHECK(is_triangle_free(p));
  CHECK(independence_number(p) == 4);
}

TEST_CASE("pattern predictions") {
  const auto pet = summarize_pattern(petersen());
  CHECK(pet.vertices == 10);
  CHECK(pet.edges == 15);
  CHECK(pet.degree_squares == 90);
  CHECK(pattern_predict(pet) == PatternPrediction{10, 35, 85});

  CHECK(pattern_predict(summarize_pattern(cycle(4))) == PatternPrediction{4, 12, 20});
  CHECK(pattern_predict(summarize_pattern(Graph(1))) == PatternPrediction{1, 2, 1});
}

TEST_CASE("pattern arguments are validated") {
  CHECK_THROWS_AS(pattern_predict({2, 5, 10}), DomainError);   // e > 2n
  CHECK_THROWS_AS(pattern_predict({4, 4, 15}), DomainError);   // odd square sum
  CHECK_THROWS_AS(pattern_predict({4, 4, 14}), DomainError);   // below (2e)^2 / n = 16
}

// A patterned graph has alpha = k, so it is a (3, k+1; n)-graph. With pattern
// degrees all 3 or 4 it lands exactly on 9n - 23k, at or above 8n - 19.5k.
TEST_CASE("property: {3,4}-degree patterns meet the conjectured bound with equality") {
  std::mt19937_64 rng(5);
  int checked = 0;
  for (int trial = 0; trial < 4000 && checked < 200; ++trial) {
    const int n = 5 + static_cast<int>(rng() % 16);
    const Graph t = random_graph(rng, n, 0.3 + 0.2 * static_cast<double>(rng() % 2));
    bool ok = true;
    for (int v = 0; v < n; ++v) ok = ok && (t.degree(v) == 3 || t.degree(v) == 4);
    if (!ok) continue;
    ++checked;
    const auto p = pattern_predict(summarize_pattern(t));
    const std::int64_t k = p.alpha;
    CHECK(Rational(p.e) == f3(p.n, k));
    CHECK(f3(p.n, k) >= f2(p.n, k));
    CHECK(p.e == conjectured_lower_bound(p.n, k).as_edge_count());
  }
  // Regular cubic and quartic circulants are always available.
  for (int n = 8; n <= 20; ++n) {
    const std::vector<int> cubic{1, n / 2};
    const std::vector<int> quartic{1, 2};
    for (const Graph& t : {circulant(n, quartic)}) {
      const auto p = pattern_predict(summarize_pattern(t));
      CHECK(Rational(p.e) == f3(p.n, p.alpha));
    }
    if (n % 2 == 0) {
      const auto p = pattern_predict(summarize_pattern(circulant(n, cubic)));
      CHECK(Rational(p.e) == f3(p.n, p.alpha));
    }
  }
  CHECK(checked > 0);
}
