#include <doctest.h>

#include <random>
#include <set>

#include "enumbers/canonical.hpp"
#include "enumbers/constructions.hpp"
#include "test_support.hpp"

using namespace enumbers;
using namespace enumbers::testing;

namespace {

// Distinct canonical keys over all labelled graphs on n vertices.
std::size_t count_classes(int n, bool triangle_free_only) {
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::set<std::string> keys;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    }
    if (triangle_free_only && !is_triangle_free(g)) continue;
    keys.insert(canonical_key(g));
  }
  return keys.size();
}

}  // namespace

TEST_CASE("isomorphism class counts") {
  CHECK(count_classes(1, false) == 1);
  CHECK(count_classes(4, false) == 11);
  CHECK(count_classes(5, false) == 34);
  CHECK(count_classes(6, false) == 156);
  CHECK(count_classes(7, true) == 107);
}

TEST_CASE("labelling is reported") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = random_graph(rng, 1 + static_cast<int>(rng() % 20), 0.4);
    const CanonicalForm c = canonical_form(g);
    CHECK(c.graph == g.relabel(c.labelling));
  }
}

TEST_CASE("property: canonical form ignores vertex names") {
  std::mt19937_64 rng(17);
  std::vector<Graph> graphs{cyclic_13_1_5(), twisted_tesseract(), petersen(), Graph(0), Graph(9),
                            complete(8), complete_bipartite(5, 6)};
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 30);
    graphs.push_back(trial % 2 == 0 ? random_graph(rng, n, 0.3)
                                    : random_triangle_free(rng, n, 0.8));
  }
  for (const Graph& g : graphs) {
    const std::string key = canonical_key(g);
    for (int r = 0; r < 5; ++r) {
      const Graph h = g.relabel(random_permutation(rng, g.order()));
      CHECK(canonical_key(h) == key);
    }
  }
}

TEST_CASE("non-isomorphic graphs get different keys") {
  // Same degree sequence, different structure: C6 versus two triangles.
  Graph two_triangles(6);
  for (int base : {0, 3}) {
    two_triangles.add_edge(base, base + 1);
    two_triangles.add_edge(base + 1, base + 2);
    two_triangles.add_edge(base, base + 2);
  }
  CHECK(canonical_key(cycle(6)) != canonical_key(two_triangles));
  // Both 3-regular on 10 vertices with girth >= 4, only one is Petersen.
  const std::vector<int> offsets{1, 5};
  CHECK(canonical_key(petersen()) != canonical_key(circulant(10, offsets)));
}
