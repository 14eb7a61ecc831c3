#include "enumbers/feasibility.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "enumbers/errors.hpp"

namespace enumbers {

namespace {

int parse_small_int(std::string_view s, std::string_view whole) {
  int v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty() || v < 0) {
    throw DomainError("bad degree distribution '" + std::string(whole) + "'");
  }
  return v;
}

// Degrees a vertex may have in a (3,l;n)-graph before any cap is consulted.
std::pair<int, int> degree_window(int l, int n, const BoundsTable& table) {
  int lo = 0;
  if (l - 1 >= 1 && l - 1 <= BoundsTable::kMaxL) {
    if (const auto& r = table.ramsey(l - 1); r.upper) lo = std::max(0, n - *r.upper);
  }
  return {lo, std::min(l - 1, n - 1)};
}

// Adjusts `report` in place; returns false once the distribution is eliminated.
bool apply_refinements(DefectReport& report, Refinement refinements) {
  const auto& counts = report.distribution.counts;
  if (counts.empty()) return true;
  auto& caps = report.per_degree_cap;
  const int min_deg = counts.begin()->first;
  const int max_deg = counts.rbegin()->first;

  if (has(refinements, Refinement::r1)) {
    int below_max = 0;
    if (counts.size() >= 2) below_max = std::prev(counts.end(), 2)->first;
    const bool lone_max = counts.rbegin()->second == 1;
    std::int64_t effective = 0;
    for (auto& [d, cap] : caps) {
      const int neighbour_max = (lone_max && d == max_deg) ? below_max : max_deg;
      cap = std::min<std::int64_t>(cap, static_cast<std::int64_t>(d) * neighbour_max);
      if (static_cast<std::int64_t>(d) * min_deg > cap) {
        report.eliminated_by = "r1";
        return false;
      }
      effective += counts.at(d) * (cap - static_cast<std::int64_t>(d) * d);
    }
    report.effective_defect = effective;
    if (effective < 0) {
      report.eliminated_by = "r1";
      return false;
    }
  }

  if (has(refinements, Refinement::r2) && min_deg > 0) {
    // The min_deg smallest degrees among the other n - 1 vertices.
    std::int64_t need = 0;
    int remaining = min_deg;
    for (const auto& [d, c] : counts) {
      const int available = d == min_deg ? c - 1 : c;
      const int take = std::min(available, remaining);
      need += static_cast<std::int64_t>(take) * d;
      remaining -= take;
      if (remaining == 0) break;
    }
    if (remaining > 0 || need > caps.at(min_deg)) {
      report.eliminated_by = "r2";
      return false;
    }
  }

  if (has(refinements, Refinement::r3) && min_deg > 0) {
    const int low_count = counts.begin()->second;
    int needed = min_deg;  // regular: every neighbour has the minimum degree
    if (counts.size() >= 2) {
      const int next_deg = std::next(counts.begin())->first;
      const std::int64_t cap = caps.at(min_deg);
      needed = -1;
      for (int j = 0; j <= min_deg; ++j) {
        if (static_cast<std::int64_t>(j) * min_deg +
                static_cast<std::int64_t>(min_deg - j) * next_deg <=
            cap) {
          needed = j;
          break;
        }
      }
    }
    const std::int64_t mantel = 2 * ((static_cast<std::int64_t>(low_count) * low_count) / 4);
    if (needed < 0 || static_cast<std::int64_t>(needed) * low_count > mantel) {
      report.eliminated_by = "r3";
      return false;
    }
  }
  return true;
}

class Enumerator {
 public:
  Enumerator(int l, int n, std::int64_t e, const BoundsTable& table, Refinement refinements,
             const std::function<bool(const DefectReport&)>& visit)
      : l_(l), n_(n), e_(e), table_(table), refinements_(refinements), visit_(visit) {
    const auto [lo, hi] = degree_window(l, n, table);
    for (int d = lo; d <= hi; ++d) {
      const DegreeCap cap = degree_cap(l, n, e, d, table);
      if (!cap.cap) continue;
      degrees_.push_back(d);
      slack_.push_back(*cap.cap - static_cast<std::int64_t>(d) * d);
    }
    counts_.assign(degrees_.size(), 0);
  }

  std::size_t run() {
    if (n_ >= 1 && 2 * e_ >= 0) descend(0, n_, 2 * e_, 0);
    return delivered_;
  }

 private:
  // Fractional upper bound on the slack the remaining vertices can add.
  // Returns false when r vertices cannot reach degree sum s at all.
  bool slack_bound(std::size_t from, std::int64_t r, std::int64_t s, std::int64_t& num,
                   std::int64_t& den) const {
    if (r == 0) {
      num = 0;
      den = 1;
      return s == 0;
    }
    bool any = false;
    for (std::size_t a = from; a < degrees_.size(); ++a) {
      const std::int64_t da = degrees_[a];
      if (da * r > s) break;
      if (da * r == s) {
        take(r * slack_[a], 1, any, num, den);
      }
      for (std::size_t b = a + 1; b < degrees_.size(); ++b) {
        const std::int64_t db = degrees_[b];
        if (db * r < s) continue;
        take((db * r - s) * slack_[a] + (s - da * r) * slack_[b], db - da, any, num, den);
      }
    }
    return any;
  }

  static void take(std::int64_t n, std::int64_t d, bool& any, std::int64_t& num,
                   std::int64_t& den) {
    if (!any || n * den > num * d) {
      num = n;
      den = d;
      any = true;
    }
  }

  void descend(std::size_t i, std::int64_t r, std::int64_t s, std::int64_t defect) {
    if (stopped_) return;
    if (i == degrees_.size()) {
      if (r == 0 && s == 0 && defect >= 0) leaf();
      return;
    }
    std::int64_t num = 0;
    std::int64_t den = 1;
    if (!slack_bound(i, r, s, num, den)) return;
    if (defect * den + num < 0) return;

    const std::int64_t d = degrees_[i];
    for (std::int64_t c = 0; c <= r && c * d <= s; ++c) {
      counts_[i] = static_cast<int>(c);
      descend(i + 1, r - c, s - c * d, defect + c * slack_[i]);
      if (stopped_) break;
    }
    counts_[i] = 0;
  }

  void leaf() {
    DegreeDistribution dist;
    for (std::size_t i = 0; i < degrees_.size(); ++i) {
      if (counts_[i] > 0) dist.counts[degrees_[i]] = counts_[i];
    }
    const DefectReport report = assess(dist, l_, n_, e_, table_, refinements_);
    if (!report.feasible()) return;
    ++delivered_;
    if (!visit_(report)) stopped_ = true;
  }

  int l_;
  int n_;
  std::int64_t e_;
  const BoundsTable& table_;
  Refinement refinements_;
  const std::function<bool(const DefectReport&)>& visit_;
  std::vector<int> degrees_;
  std::vector<std::int64_t> slack_;
  std::vector<int> counts_;
  std::size_t delivered_ = 0;
  bool stopped_ = false;
};

}  // namespace

DegreeDistribution DegreeDistribution::of(const Graph& g) {
  DegreeDistribution dist;
  for (int v = 0; v < g.order(); ++v) ++dist.counts[g.degree(v)];
  return dist;
}

DegreeDistribution DegreeDistribution::parse(std::string_view text) {
  DegreeDistribution dist;
  const std::string_view whole = text;
  while (!text.empty()) {
    const auto sep = text.find_first_of(", ");
    const std::string_view item = text.substr(0, sep);
    text.remove_prefix(sep == std::string_view::npos ? text.size() : sep + 1);
    if (item.empty()) continue;
    const auto colon = item.find(':');
    if (colon == std::string_view::npos) {
      throw DomainError("bad degree distribution '" + std::string(whole) + "'");
    }
    const int d = parse_small_int(item.substr(0, colon), whole);
    const int c = parse_small_int(item.substr(colon + 1), whole);
    if (c > 0) dist.counts[d] += c;
  }
  return dist;
}

int DegreeDistribution::vertices() const {
  int total = 0;
  for (const auto& [d, c] : counts) total += c;
  return total;
}

std::int64_t DegreeDistribution::degree_sum() const {
  std::int64_t total = 0;
  for (const auto& [d, c] : counts) total += static_cast<std::int64_t>(d) * c;
  return total;
}

std::string DegreeDistribution::compact() const {
  std::ostringstream out;
  out << '(';
  for (int d = min_degree(); !counts.empty() && d <= max_degree(); ++d) {
    if (d != min_degree()) out << ", ";
    const auto it = counts.find(d);
    out << (it == counts.end() ? 0 : it->second);
  }
  out << ')';
  return out.str();
}

std::string DegreeDistribution::str() const {
  std::ostringstream out;
  bool first = true;
  for (const auto& [d, c] : counts) {
    if (!first) out << ' ';
    first = false;
    out << d << ':' << c;
  }
  return out.str();
}

bool operator<(const DegreeDistribution& a, const DegreeDistribution& b) {
  const int top = std::max(a.max_degree(), b.max_degree());
  for (int d = 0; d <= top; ++d) {
    const auto ia = a.counts.find(d);
    const auto ib = b.counts.find(d);
    const int ca = ia == a.counts.end() ? 0 : ia->second;
    const int cb = ib == b.counts.end() ? 0 : ib->second;
    if (ca != cb) return ca < cb;
  }
  return false;
}

Refinement parse_refinements(std::string_view text) {
  Refinement out = Refinement::none;
  while (!text.empty()) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    text.remove_prefix(comma == std::string_view::npos ? text.size() : comma + 1);
    if (item == "r1") {
      out = out | Refinement::r1;
    } else if (item == "r2") {
      out = out | Refinement::r2;
    } else if (item == "r3") {
      out = out | Refinement::r3;
    } else if (item == "all") {
      out = out | kAllRefinements;
    } else if (item != "none" && !item.empty()) {
      throw DomainError("unknown refinement '" + std::string(item) + "'");
    }
  }
  return out;
}

DegreeCap degree_cap(int l, int n, std::int64_t e, int d, const BoundsTable& table) {
  if (l < 2 || n < 1 || d < 0 || d > l - 1 || d > n - 1) {
    throw DomainError("degree " + std::to_string(d) + " outside [0, min(l-1, n-1)]");
  }
  const SourcedLower lower = table.lower_bound(l - 1, n - 1 - d);
  if (lower.value.is_infinite()) return {std::nullopt, lower.sources};
  return {e - lower.value.value(), lower.sources};
}

DefectReport total_defect(const DegreeDistribution& dist, int l, int n, std::int64_t e,
                          const BoundsTable& table) {
  if (dist.vertices() != n || dist.degree_sum() != 2 * e) {
    throw DomainError("distribution " + dist.str() + " does not have " + std::to_string(n) +
                      " vertices and degree sum " + std::to_string(2 * e));
  }
  DefectReport report;
  report.distribution = dist;
  std::int64_t defect = 0;
  for (const auto& [d, c] : dist.counts) {
    const DegreeCap cap = degree_cap(l, n, e, d, table);
    report.cap_sources[d] = cap.sources;
    if (!cap.cap) {
      report.eliminated_by = "impossible-degree";
      continue;
    }
    report.per_degree_cap[d] = *cap.cap;
    defect += c * (*cap.cap - static_cast<std::int64_t>(d) * d);
  }
  report.total_defect = defect;
  report.effective_defect = defect;
  if (!report.eliminated_by && defect < 0) report.eliminated_by = "defect";
  return report;
}

DefectReport assess(const DegreeDistribution& dist, int l, int n, std::int64_t e,
                    const BoundsTable& table, Refinement refinements) {
  DefectReport report = total_defect(dist, l, n, e, table);
  if (report.feasible()) apply_refinements(report, refinements);
  return report;
}

std::size_t for_each_feasible(int l, int n, std::int64_t e, const BoundsTable& table,
                              Refinement refinements,
                              const std::function<bool(const DefectReport&)>& visit) {
  if (l < 2 || n < 1 || e < 0) throw DomainError("feasibility needs l >= 2, n >= 1, e >= 0");
  return Enumerator(l, n, e, table, refinements, visit).run();
}

std::vector<DefectReport> enumerate_feasible(int l, int n, std::int64_t e, const BoundsTable& table,
                                             Refinement refinements) {
  std::vector<DefectReport> out;
  for_each_feasible(l, n, e, table, refinements, [&](const DefectReport& r) {
    out.push_back(r);
    return true;
  });
  return out;
}

RaiseResult raise_lower_bound(int l, int n, const BoundsTable& table, Refinement refinements) {
  RaiseResult result;
  result.table_lower = table.lookup(l, n).lower;
  result.scan_start = table.finite_case_lower(l, n);
  result.bound = Count::infinity();
  const std::int64_t max_edges = static_cast<std::int64_t>(n) * (l - 1) / 2;
  for (std::int64_t e = result.scan_start.value(); e <= max_edges; ++e) {
    for_each_feasible(l, n, e, table, refinements, [&](const DefectReport& r) {
      result.first_feasible = r;
      return false;
    });
    if (result.first_feasible) {
      result.bound = e;
      break;
    }
  }
  return result;
}

}  // namespace enumbers
