#include "enumbers/constructions.hpp"

#include <array>
#include <string>

#include "enumbers/errors.hpp"

namespace enumbers {

Graph circulant(int n, std::span<const int> offsets) {
  if (n < 3 || n > Graph::kMaxVertices) {
    throw DomainError("circulant order " + std::to_string(n) + " outside [3, 128]");
  }
  for (int s : offsets) {
    if (s < 1 || s > n / 2) {
      throw DomainError("offset " + std::to_string(s) + " outside [1, " + std::to_string(n / 2) +
                        "]");
    }
  }
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int s : offsets) g.add_edge(u, (u + s) % n);
  }
  return g;
}

Graph cyclic_13_1_5() {
  constexpr std::array offsets{1, 5};
  return circulant(13, offsets);
}

Graph twisted_tesseract() {
  constexpr std::array offsets{1, 4};
  const Graph w8 = circulant(8, offsets);
  Graph g(16);
  for (auto [u, v] : w8.edge_list()) {
    g.add_edge(u, v);
    g.add_edge(u + 8, v + 8);
  }
  for (int i = 0; i < 8; ++i) g.add_edge(i, 8 + (5 * i) % 8);
  return g;
}

Graph petersen() {
  Graph g(10);
  for (int i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(5 + i, 5 + (i + 2) % 5);
    g.add_edge(i, 5 + i);
  }
  return g;
}

PatternSummary summarize_pattern(const Graph& t) {
  PatternSummary p{t.order(), t.size(), 0};
  for (int v = 0; v < t.order(); ++v) {
    const std::int64_t d = t.degree(v);
    p.degree_squares += d * d;
  }
  return p;
}

PatternPrediction pattern_predict(const PatternSummary& p) {
  if (p.vertices < 1 || p.edges < 0) throw DomainError("pattern graph must have a vertex");
  if (p.edges > 2 * p.vertices) {
    throw DomainError("inadmissible pattern: e(T) = " + std::to_string(p.edges) + " > 2 n(T)");
  }
  if (p.degree_squares % 2 != 0) {
    throw DomainError("odd degree-square sum; predicted edge count is not integral");
  }
  if (p.degree_squares * p.vertices < 4 * p.edges * p.edges) {
    throw DomainError("degree-square sum below the Cauchy-Schwarz minimum");
  }
  return {p.vertices, 2 * p.vertices + p.edges, p.vertices + 2 * p.edges + p.degree_squares / 2};
}

}  // namespace enumbers
