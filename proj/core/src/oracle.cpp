#include "enumbers/oracle.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <unordered_set>

#include "enumbers/canonical.hpp"
#include "enumbers/errors.hpp"
#include "enumbers/graph6.hpp"

namespace enumbers {

namespace {

class MinEdgeSearch {
 public:
  MinEdgeSearch(int l, int n, const OracleOptions& options)
      : l_(l), n_(n), options_(options), rng_(options.seed), seen_(static_cast<std::size_t>(n) + 1) {}

  OracleResult run() {
    Graph root(1);
    seen_[1].insert(canonical_key(root));
    expand(root);
    OracleResult result;
    result.value = best_;
    result.nodes_explored = nodes_;
    if (best_.is_finite()) result.witness = parse_graph6_line(best_key_);
    return result;
  }

 private:
  struct Candidate {
    VertexSet neighbours;
    int size;
  };

  // Independent sets of g with size in [min_size, max_size].
  void independent_sets(const Graph& g, int min_size, int max_size, std::vector<Candidate>& out) {
    VertexSet chosen;
    auto walk = [&](auto&& self, const VertexSet& allowed, int size) -> void {
      if (size >= min_size) out.push_back({chosen, size});
      if (size == max_size) return;
      for (int v : allowed) {
        if (size + 1 + (allowed - VertexSet::prefix(v + 1)).size() < min_size) break;
        chosen.insert(v);
        self(self, allowed - VertexSet::prefix(v + 1) - g.neighbors(v), size + 1);
        chosen.erase(v);
      }
    };
    walk(walk, g.vertices(), 0);
  }

  void record(const Graph& g) {
    const Count e(g.size());
    if (e > best_) return;
    const std::string key = canonical_key(g);
    if (e < best_ || key < best_key_) {
      best_ = e;
      best_key_ = key;
    }
  }

  void expand(const Graph& g) {
    const int m = g.order();
    if (m == n_) {
      record(g);
      return;
    }
    const std::int64_t remaining = n_ - m;
    int max_size = l_ - 1;
    if (best_.is_finite()) {
      // The new vertex adds |S| edges and every later vertex at least |S| more.
      const std::int64_t slack = best_.value() - g.size();
      if (slack < 0) return;
      max_size = static_cast<int>(std::min<std::int64_t>(max_size, slack / remaining));
    }
    const int min_size = g.max_degree();
    if (min_size > max_size) return;

    std::vector<Candidate> candidates;
    independent_sets(g, min_size, max_size, candidates);
    if (options_.seed != 0) std::shuffle(candidates.begin(), candidates.end(), rng_);

    for (const auto& c : candidates) {
      if (++nodes_ > options_.budget) {
        throw Inconclusive("oracle budget of " + std::to_string(options_.budget) +
                           " nodes exhausted for e(3," + std::to_string(l_) + ";" +
                           std::to_string(n_) + ")");
      }
      if (best_.is_finite() && g.size() + c.size * remaining > best_.value()) continue;
      // The new vertex must have maximum degree in the child.
      bool top = true;
      for (int u : c.neighbours) top = top && g.degree(u) + 1 <= c.size;
      if (!top) continue;
      // Every independent set avoiding N(v) extends by v.
      const VertexSet rest = g.vertices() - c.neighbours;
      if (independence_number(g, rest, l_ - 1) >= l_ - 1) continue;

      Graph child(m + 1);
      for (auto [u, w] : g.edge_list()) child.add_edge(u, w);
      for (int u : c.neighbours) child.add_edge(u, m);
      const CanonicalForm canon = canonical_form(child);
      if (!seen_[static_cast<std::size_t>(m + 1)].insert(write_graph6(canon.graph)).second) continue;
      expand(canon.graph);
    }
  }

  int l_;
  int n_;
  OracleOptions options_;
  std::mt19937_64 rng_;
  std::vector<std::unordered_set<std::string>> seen_;
  Count best_ = Count::infinity();
  std::string best_key_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

OracleResult min_edges_exhaustive(int l, int n, const OracleOptions& options) {
  if (l < 2) throw DomainError("oracle needs l >= 2");
  if (n < 1 || n > Graph::kMaxVertices) throw DomainError("oracle needs 1 <= n <= 128");
  return MinEdgeSearch(l, n, options).run();
}

std::vector<Count> naive_min_edges_by_alpha(int n) {
  if (n < 1 || n > 7) throw DomainError("naive enumeration supports 1 <= n <= 7");
  std::vector<std::pair<int, int>> pairs;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) pairs.emplace_back(i, j);
  }
  std::vector<Count> best(static_cast<std::size_t>(n) + 1, Count::infinity());
  const std::uint64_t total = std::uint64_t{1} << pairs.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t b = 0; b < pairs.size(); ++b) {
      if ((mask >> b) & 1U) g.add_edge(pairs[b].first, pairs[b].second);
    }
    if (!is_triangle_free(g)) continue;
    auto& slot = best[static_cast<std::size_t>(independence_number(g))];
    slot = min(slot, Count(g.size()));
  }
  return best;
}

Count min_edges_naive(int l, int n) {
  const auto by_alpha = naive_min_edges_by_alpha(n);
  Count out = Count::infinity();
  for (int a = 0; a < l && a <= n; ++a) out = min(out, by_alpha[static_cast<std::size_t>(a)]);
  return out;
}

bool CrossValidationReport::all_pass() const {
  return std::all_of(cells.begin(), cells.end(), [](const auto& c) { return c.pass; });
}

std::string CrossValidationReport::matrix() const {
  if (cells.empty()) return {};
  int l_min = cells.front().l;
  int l_max = l_min;
  int n_max = 0;
  for (const auto& c : cells) {
    l_min = std::min(l_min, c.l);
    l_max = std::max(l_max, c.l);
    n_max = std::max(n_max, c.n);
  }
  std::ostringstream out;
  out << "n\\l";
  for (int l = l_min; l <= l_max; ++l) out << '\t' << l;
  out << '\n';
  for (int n = 1; n <= n_max; ++n) {
    out << n;
    for (int l = l_min; l <= l_max; ++l) {
      const auto it = std::find_if(cells.begin(), cells.end(),
                                   [&](const auto& c) { return c.l == l && c.n == n; });
      out << '\t' << (it == cells.end() ? "" : it->pass ? "ok" : "FAIL");
    }
    out << '\n';
  }
  return out.str();
}

CrossValidationReport cross_validate(int l_min, int l_max, int n_max, const BoundsTable& table,
                                     const OracleOptions& options) {
  CrossValidationReport report;
  for (int l = l_min; l <= l_max; ++l) {
    for (int n = 1; n <= n_max; ++n) {
      CrossValidationCell cell;
      cell.l = l;
      cell.n = n;
      cell.table = table.lookup(l, n);
      OracleResult r = min_edges_exhaustive(l, n, options);
      cell.oracle = r.value;
      cell.witness = std::move(r.witness);
      if (cell.table.is_exact() || cell.table.status() == BoundStatus::infinite) {
        cell.pass = cell.oracle == cell.table.lower;
      } else {
        cell.pass = cell.table.lower <= cell.oracle &&
                    (!cell.table.upper || cell.oracle <= *cell.table.upper);
      }
      report.cells.push_back(std::move(cell));
    }
  }
  return report;
}

}  // namespace enumbers
