#pragma once

#include <cstdint>
#include <span>

#include "enumbers/graph.hpp"

namespace enumbers {

/// Circulant graph on Z_n: u ~ v iff the cyclic distance of u and v is one of
/// `offsets`. Requires n >= 3 and 1 <= s <= n/2 for each offset; an offset of
/// exactly n/2 contributes n/2 edges.
Graph circulant(int n, std::span<const int> offsets);

/// The 4-regular (3,5;13,26)-graph: circulant(13, {1, 5}).
Graph cyclic_13_1_5();

/// Two copies A, B of circulant(8, {1, 4}) joined by the edges A_i -- B_{5i mod 8}.
/// A (3,6;16,32)-graph.
Graph twisted_tesseract();

/// The Petersen graph (outer 5-cycle, inner pentagram, spokes).
Graph petersen();

/// Vertex count, edge count and sum of squared degrees of a pattern graph T.
struct PatternSummary {
  std::int64_t vertices = 0;
  std::int64_t edges = 0;
  std::int64_t degree_squares = 0;
};

/// (alpha, n, e) of the graph an extension pattern produces.
struct PatternPrediction {
  std::int64_t alpha = 0;
  std::int64_t n = 0;
  std::int64_t e = 0;
  friend bool operator==(const PatternPrediction&, const PatternPrediction&) = default;
};

PatternSummary summarize_pattern(const Graph& t);

/// alpha = n(T), n = 2 n(T) + e(T), e = n(T) + 2 e(T) + sum deg^2 / 2.
///
/// Throws DomainError when e(T) > 2 n(T), when the degree-square sum is odd
/// (e would not be integral), or when it is below the Cauchy-Schwarz minimum
/// (2 e(T))^2 / n(T).
PatternPrediction pattern_predict(const PatternSummary& p);

}  // namespace enumbers
