#pragma once

#include <string>
#include <vector>

#include "enumbers/graph.hpp"

namespace enumbers {

/// Canonical relabelling by individualisation-refinement: equitable colour
/// refinement, branching on the first smallest non-singleton cell, keeping the
/// lexicographically smallest relabelled adjacency matrix. Automorphisms found
/// at equal leaves prune sibling branches.
///
/// Isomorphic graphs map to identical graphs. Intended for the small graphs
/// the exhaustive oracle works with.
struct CanonicalForm {
  Graph graph;
  /// labelling[v] is the canonical label of original vertex v.
  std::vector<int> labelling;
};

CanonicalForm canonical_form(const Graph& g);

/// graph6 string of the canonical form; equal iff the graphs are isomorphic.
std::string canonical_key(const Graph& g);

}  // namespace enumbers
