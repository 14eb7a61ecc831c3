#include "enumbers/graph.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "enumbers/errors.hpp"

namespace enumbers {

Graph::Graph(int n) : n_(n) {
  if (n < 0 || n > kMaxVertices) {
    throw DomainError("vertex count " + std::to_string(n) + " outside [0, 128]");
  }
}

Graph Graph::from_edges(int n, std::span<const std::pair<int, int>> edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::check_vertex(int v) const {
  if (v < 0 || v >= n_) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for graph of order " +
                      std::to_string(n_));
  }
}

void Graph::add_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (u == v) throw DomainError("self-loop at vertex " + std::to_string(u));
  if (adj_[u].contains(v)) return;
  adj_[u].insert(v);
  adj_[v].insert(u);
  ++edges_;
}

void Graph::remove_edge(int u, int v) {
  check_vertex(u);
  check_vertex(v);
  if (!adj_[u].contains(v)) return;
  adj_[u].erase(v);
  adj_[v].erase(u);
  --edges_;
}

int Graph::min_degree() const {
  int d = n_ == 0 ? 0 : kMaxVertices;
  for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
  return d;
}

int Graph::max_degree() const {
  int d = 0;
  for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
  return d;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(static_cast<std::size_t>(edges_));
  for (int u = 0; u < n_; ++u) {
    for (int v = adj_[u].next(u); v != -1; v = adj_[u].next(v)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::induced(const VertexSet& keep) const {
  std::array<int, kMaxVertices> index{};
  int m = 0;
  for (int v : keep) {
    if (v >= n_) break;
    index[v] = m++;
  }
  Graph h(m);
  for (int u : keep) {
    if (u >= n_) break;
    for (int v : adj_[u] & keep) {
      if (v > u) h.add_edge(index[u], index[v]);
    }
  }
  return h;
}

Graph Graph::relabel(std::span<const int> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw DomainError("permutation size mismatch");
  Graph h(n_);
  for (auto [u, v] : edge_list()) h.add_edge(perm[u], perm[v]);
  return h;
}

bool operator==(const Graph& a, const Graph& b) {
  if (a.n_ != b.n_ || a.edges_ != b.edges_) return false;
  for (int v = 0; v < a.n_; ++v) {
    if (!(a.adj_[v] == b.adj_[v])) return false;
  }
  return true;
}

bool is_triangle_free(const Graph& g) {
  for (int u = 0; u < g.order(); ++u) {
    const auto& nu = g.neighbors(u);
    for (int v = nu.next(u); v != -1; v = nu.next(v)) {
      if (!(nu & g.neighbors(v)).empty()) return false;
    }
  }
  return true;
}

namespace {

class IndependentSetSearch {
 public:
  IndependentSetSearch(const Graph& g, int stop_at) : g_(g), stop_at_(stop_at) {}

  void run(const VertexSet& candidates) {
    VertexSet chosen;
    expand(candidates, chosen);
  }

  int best_size() const { return best_size_; }
  const VertexSet& best() const { return best_; }

 private:
  // Partition `p` greedily into cliques; the count bounds alpha(G[p]).
  int clique_cover_bound(VertexSet p) const {
    int cliques = 0;
    while (!p.empty()) {
      const int v = p.first();
      p.erase(v);
      VertexSet common = p & g_.neighbors(v);
      while (!common.empty()) {
        const int w = common.first();
        p.erase(w);
        common &= g_.neighbors(w);
      }
      ++cliques;
    }
    return cliques;
  }

  void expand(VertexSet p, VertexSet chosen) {
    if (best_size_ >= stop_at_) return;

    // Vertices with no neighbour left in p always join the set.
    int pivot = -1;
    int pivot_degree = -1;
    for (int v : p) {
      const int d = (p & g_.neighbors(v)).size();
      if (d == 0) {
        chosen.insert(v);
        p.erase(v);
      } else if (d > pivot_degree) {
        pivot = v;
        pivot_degree = d;
      }
    }
    const int have = chosen.size();
    if (have > best_size_) {
      best_size_ = have;
      best_ = chosen;
    }
    if (p.empty()) return;
    if (have + clique_cover_bound(p) <= best_size_) return;

    VertexSet with = chosen;
    with.insert(pivot);
    expand(p - g_.neighbors(pivot) - VertexSet::single(pivot), with);

    VertexSet without = p;
    without.erase(pivot);
    expand(without, chosen);
  }

  const Graph& g_;
  int stop_at_;
  int best_size_ = 0;
  VertexSet best_;
};

}  // namespace

int independence_number(const Graph& g, const VertexSet& within, int stop_at) {
  IndependentSetSearch search(g, stop_at);
  search.run(within & g.vertices());
  return search.best_size();
}

int independence_number(const Graph& g) {
  return independence_number(g, g.vertices(), Graph::kMaxVertices + 1);
}

VertexSet maximum_independent_set(const Graph& g) {
  IndependentSetSearch search(g, Graph::kMaxVertices + 1);
  search.run(g.vertices());
  return search.best();
}

std::int64_t second_degree(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  std::int64_t sum = 0;
  for (int w : g.neighbors(v)) sum += g.degree(w);
  return sum;
}

Graph reduced_graph(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) throw DomainError("vertex " + std::to_string(v) + " out of range");
  VertexSet keep = g.vertices() - g.neighbors(v);
  keep.erase(v);
  return g.induced(keep);
}

std::int64_t t_invariant(const Graph& g) {
  assert(is_triangle_free(g));
  return g.size() - 6 * static_cast<std::int64_t>(g.order()) +
         13 * static_cast<std::int64_t>(independence_number(g));
}

GraphClass classify(const Graph& g) {
  return {is_triangle_free(g), independence_number(g), g.order(), g.size()};
}

namespace {

// Four pairwise non-adjacent members of `pool`, lexicographically first.
std::optional<std::array<int, 4>> independent_quadruple(const Graph& g, const VertexSet& pool) {
  std::array<int, 4> pick{};
  auto search = [&](auto&& self, int depth, const VertexSet& allowed) -> bool {
    if (depth == 4) return true;
    for (int v : allowed) {
      pick[depth] = v;
      VertexSet rest = allowed - g.neighbors(v);
      // Only larger labels, so each set is visited once.
      rest -= VertexSet::prefix(v + 1);
      if (rest.size() + depth + 1 < 4) continue;
      if (self(self, depth + 1, rest)) return true;
    }
    return false;
  };
  if (search(search, 0, pool)) return pick;
  return std::nullopt;
}

}  // namespace

std::optional<InducedK24> find_induced_k24(const Graph& g) {
  for (int a = 0; a < g.order(); ++a) {
    if (g.degree(a) < 4) continue;
    for (int b = a + 1; b < g.order(); ++b) {
      if (g.adjacent(a, b)) continue;
      const VertexSet common = g.neighbors(a) & g.neighbors(b);
      if (common.size() < 4) continue;
      if (auto quad = independent_quadruple(g, common)) {
        return InducedK24{{a, b}, *quad};
      }
    }
  }
  return std::nullopt;
}

}  // namespace enumbers
