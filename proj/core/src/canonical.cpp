#include "enumbers/canonical.hpp"

#include <algorithm>
#include <numeric>

#include "enumbers/graph6.hpp"

namespace enumbers {

namespace {

using Cells = std::vector<std::vector<int>>;
using Certificate = std::vector<VertexSet>;

constexpr std::size_t kMaxStoredAutomorphisms = 128;

// Splits cells by neighbour counts into each splitter until nothing changes.
void refine(const Graph& g, Cells& cells) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t si = 0; si < cells.size(); ++si) {
      VertexSet splitter;
      for (int v : cells[si]) splitter.insert(v);
      Cells next;
      next.reserve(cells.size());
      for (auto& cell : cells) {
        if (cell.size() == 1) {
          next.push_back(std::move(cell));
          continue;
        }
        std::vector<std::pair<int, int>> keyed;
        keyed.reserve(cell.size());
        for (int v : cell) keyed.emplace_back((g.neighbors(v) & splitter).size(), v);
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& a, const auto& b) { return a.first < b.first; });
        std::size_t start = 0;
        for (std::size_t i = 1; i <= keyed.size(); ++i) {
          if (i == keyed.size() || keyed[i].first != keyed[start].first) {
            auto& part = next.emplace_back();
            for (std::size_t j = start; j < i; ++j) part.push_back(keyed[j].second);
            start = i;
          }
        }
        if (keyed.front().first != keyed.back().first) changed = true;
      }
      cells = std::move(next);
    }
  }
}

class Labeller {
 public:
  explicit Labeller(const Graph& g) : g_(g), n_(g.order()) {}

  CanonicalForm run() {
    Cells cells;
    if (n_ > 0) {
      cells.emplace_back(static_cast<std::size_t>(n_));
      std::iota(cells.front().begin(), cells.front().end(), 0);
      refine(g_, cells);
    }
    std::vector<int> prefix;
    search(cells, prefix);
    CanonicalForm out{g_.relabel(best_labels_), best_labels_};
    return out;
  }

 private:
  Certificate certificate(const std::vector<int>& labels) const {
    Certificate rows(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) {
      VertexSet row;
      for (int w : g_.neighbors(v)) row.insert(labels[w]);
      rows[static_cast<std::size_t>(labels[v])] = row;
    }
    return rows;
  }

  void record_automorphism(const std::vector<int>& labels, const std::vector<int>& ref_labels) {
    if (automorphisms_.size() >= kMaxStoredAutomorphisms) return;
    std::vector<int> ref_inverse(static_cast<std::size_t>(n_));
    for (int v = 0; v < n_; ++v) ref_inverse[ref_labels[v]] = v;
    std::vector<int> map(static_cast<std::size_t>(n_));
    bool identity = true;
    for (int v = 0; v < n_; ++v) {
      map[v] = ref_inverse[labels[v]];
      identity = identity && map[v] == v;
    }
    if (!identity) automorphisms_.push_back(std::move(map));
  }

  void leaf(const Cells& cells) {
    std::vector<int> labels(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < cells.size(); ++i) labels[cells[i].front()] = static_cast<int>(i);
    Certificate cert = certificate(labels);
    if (!have_best_) {
      have_best_ = true;
      first_labels_ = labels;
      first_cert_ = cert;
      best_labels_ = labels;
      best_cert_ = std::move(cert);
      return;
    }
    if (cert == first_cert_) {
      record_automorphism(labels, first_labels_);
    } else if (cert == best_cert_) {
      record_automorphism(labels, best_labels_);
    } else if (cert < best_cert_) {
      best_cert_ = std::move(cert);
      best_labels_ = std::move(labels);
    }
  }

  // Orbit representative of v under the automorphisms that fix `prefix` pointwise.
  std::vector<int> orbits_fixing(const std::vector<int>& prefix) const {
    std::vector<int> parent(static_cast<std::size_t>(n_));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    for (const auto& a : automorphisms_) {
      const bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](int p) { return a[p] == p; });
      if (!fixes) continue;
      for (int v = 0; v < n_; ++v) {
        const int x = find(v);
        const int y = find(a[v]);
        if (x != y) parent[std::max(x, y)] = std::min(x, y);
      }
    }
    for (int v = 0; v < n_; ++v) parent[v] = find(v);
    return parent;
  }

  void search(const Cells& cells, std::vector<int>& prefix) {
    std::size_t target = cells.size();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (cells[i].size() > 1 && (target == cells.size() || cells[i].size() < cells[target].size())) {
        target = i;
      }
    }
    if (target == cells.size()) {
      leaf(cells);
      return;
    }
    std::vector<int> explored;
    for (int v : cells[target]) {
      if (!explored.empty()) {
        const auto orbit = orbits_fixing(prefix);
        const bool redundant = std::any_of(explored.begin(), explored.end(),
                                           [&](int u) { return orbit[u] == orbit[v]; });
        if (redundant) continue;
      }
      explored.push_back(v);
      Cells child;
      child.reserve(cells.size() + 1);
      for (std::size_t i = 0; i < cells.size(); ++i) {
        if (i != target) {
          child.push_back(cells[i]);
          continue;
        }
        child.push_back({v});
        auto& rest = child.emplace_back();
        for (int w : cells[i]) {
          if (w != v) rest.push_back(w);
        }
      }
      refine(g_, child);
      prefix.push_back(v);
      search(child, prefix);
      prefix.pop_back();
    }
  }

  const Graph& g_;
  int n_;
  bool have_best_ = false;
  std::vector<int> first_labels_;
  Certificate first_cert_;
  std::vector<int> best_labels_;
  Certificate best_cert_;
  std::vector<std::vector<int>> automorphisms_;
};

}  // namespace

CanonicalForm canonical_form(const Graph& g) { return Labeller(g).run(); }

std::string canonical_key(const Graph& g) { return write_graph6(canonical_form(g).graph); }

}  // namespace enumbers
