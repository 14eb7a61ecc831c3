#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "enumbers/vertex_set.hpp"

namespace enumbers {

/// Undirected simple graph on vertices 0..n-1, n <= 128, stored as adjacency bitsets.
///
/// Triangle-freeness is not enforced: the verifier has to be able to load
/// arbitrary graphs. Operations that assume it say so.
class Graph {
 public:
  static constexpr int kMaxVertices = VertexSet::kCapacity;

  Graph() = default;
  /// Edgeless graph on n vertices. Throws DomainError if n is outside [0, 128].
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<int, int>> edges);

  int order() const { return n_; }
  /// Number of edges.
  std::int64_t size() const { return edges_; }

  /// Throws DomainError on loops or out-of-range endpoints. Idempotent.
  void add_edge(int u, int v);
  void remove_edge(int u, int v);

  bool adjacent(int u, int v) const { return adj_[u].contains(v); }
  const VertexSet& neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return adj_[v].size(); }
  VertexSet vertices() const { return VertexSet::prefix(n_); }

  int min_degree() const;
  int max_degree() const;
  std::vector<std::pair<int, int>> edge_list() const;

  /// Induced subgraph on `keep`, relabelled in increasing vertex order.
  Graph induced(const VertexSet& keep) const;

  /// Graph with vertex v renamed to perm[v].
  Graph relabel(std::span<const int> perm) const;

  friend bool operator==(const Graph& a, const Graph& b);

 private:
  void check_vertex(int v) const;

  int n_ = 0;
  std::int64_t edges_ = 0;
  std::array<VertexSet, kMaxVertices> adj_{};
};

/// Triangle-freeness, independence number and counts of one graph.
struct GraphClass {
  bool triangle_free = false;
  int alpha = 0;
  int n = 0;
  std::int64_t e = 0;

  /// True iff the graph is a (3,l;n,e)-graph for the given parameters.
  bool is_ramsey_graph(int l, int n_claim, std::int64_t e_claim) const {
    return triangle_free && alpha < l && n == n_claim && e == e_claim;
  }
  friend bool operator==(const GraphClass&, const GraphClass&) = default;
};

struct InducedK24 {
  std::array<int, 2> small_side{};
  std::array<int, 4> large_side{};
};

bool is_triangle_free(const Graph& g);

/// Exact independence number by branch and bound (max-degree branching,
/// greedy clique-cover bound).
int independence_number(const Graph& g);

/// Exact independence number of the subgraph induced on `within`. The search
/// stops early once an independent set of size `stop_at` is found, so the
/// result is exact only when it is below `stop_at`.
int independence_number(const Graph& g, const VertexSet& within, int stop_at);

/// A maximum independent set of g.
VertexSet maximum_independent_set(const Graph& g);

/// Sum of the degrees of v's neighbours. Throws DomainError if v is out of range.
std::int64_t second_degree(const Graph& g, int v);

/// Subgraph induced on the vertices outside v's closed neighbourhood.
/// Throws DomainError if v is out of range.
Graph reduced_graph(const Graph& g, int v);

/// e - 6n + 13*alpha. Precondition: g is triangle-free (asserted in debug builds).
std::int64_t t_invariant(const Graph& g);

GraphClass classify(const Graph& g);

/// An induced K_{2,4}: two non-adjacent vertices with four pairwise
/// non-adjacent common neighbours. First hit in lexicographic order.
std::optional<InducedK24> find_induced_k24(const Graph& g);

}  // namespace enumbers
