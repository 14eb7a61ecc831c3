#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "enumbers/bounds.hpp"
#include "enumbers/graph.hpp"

namespace enumbers {

struct OracleOptions {
  /// Search nodes (candidate neighbourhoods examined) before giving up.
  std::uint64_t budget = 200'000'000;
  /// Non-zero seeds shuffle the order in which candidates are tried. The
  /// value and canonical witness do not depend on it.
  std::uint64_t seed = 0;
};

struct OracleResult {
  Count value;
  /// A minimum witness in canonical labelling: among all minimum witnesses,
  /// the one whose canonical graph6 string is smallest.
  std::optional<Graph> witness;
  std::uint64_t nodes_explored = 0;
};

/// Exact e(3,l;n) by exhaustive search: vertex-by-vertex augmentation where
/// the new vertex always has maximum degree, isomorph rejection by canonical
/// form, and pruning by e + (remaining vertices) * (max degree), which no
/// completion can beat. Desk scale is n <= 12.
///
/// Throws Inconclusive when the node budget runs out and DomainError for
/// l < 2 or n outside [1, 128].
OracleResult min_edges_exhaustive(int l, int n, const OracleOptions& options = {});

/// Minimum edge count per independence number over all 2^(n(n-1)/2) labelled
/// triangle-free graphs on n <= 7 vertices. Entry a is the fewest edges of a
/// triangle-free graph with alpha = a (infinity if none).
std::vector<Count> naive_min_edges_by_alpha(int n);

/// e(3,l;n) from naive_min_edges_by_alpha.
Count min_edges_naive(int l, int n);

struct CrossValidationCell {
  int l = 0;
  int n = 0;
  Count oracle;
  EBound table;
  bool pass = false;
  std::optional<Graph> witness;
};

struct CrossValidationReport {
  std::vector<CrossValidationCell> cells;
  bool all_pass() const;
  /// One row per n, one column per l, "ok" / "FAIL".
  std::string matrix() const;
};

/// Oracle against lookup for l in [l_min, l_max], n in [1, n_max]: equality on
/// exact cells, containment in [lower, upper] otherwise.
CrossValidationReport cross_validate(int l_min, int l_max, int n_max, const BoundsTable& table,
                                     const OracleOptions& options = {});

}  // namespace enumbers
