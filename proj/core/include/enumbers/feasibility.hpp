#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumbers/bounds.hpp"
#include "enumbers/graph.hpp"

namespace enumbers {

/// Multiset of vertex degrees: degree -> number of vertices (absent = 0).
struct DegreeDistribution {
  std::map<int, int> counts;

  static DegreeDistribution of(const Graph& g);
  /// Parses "6:11,7:30" (degree:count pairs). Throws DomainError.
  static DegreeDistribution parse(std::string_view text);

  int vertices() const;
  std::int64_t degree_sum() const;
  int min_degree() const { return counts.empty() ? 0 : counts.begin()->first; }
  int max_degree() const { return counts.empty() ? 0 : counts.rbegin()->first; }

  /// Counts from the lowest to the highest present degree, zeros inside kept:
  /// "(12, 28, 1)".
  std::string compact() const;
  /// "6:12 7:28 8:1"
  std::string str() const;

  friend bool operator==(const DegreeDistribution&, const DegreeDistribution&) = default;
  /// Lexicographic on (n_0, n_1, ...).
  friend bool operator<(const DegreeDistribution& a, const DegreeDistribution& b);
};

/// Refinement rules that eliminate degree distributions no graph can realise.
///   r1  a lone maximum-degree vertex only sees lower degrees; caps shrink to
///       d * (largest degree a neighbour can have) and every present degree
///       must allow deg^2 >= d * min degree
///   r2  a minimum-degree vertex's neighbours are at least the smallest other
///       degrees present
///   r3  minimum-degree vertices that need several minimum-degree neighbours
///       must fit a triangle-free subgraph among themselves
enum class Refinement : unsigned { none = 0, r1 = 1, r2 = 2, r3 = 4 };

constexpr Refinement operator|(Refinement a, Refinement b) {
  return static_cast<Refinement>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr bool has(Refinement set, Refinement r) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(r)) != 0;
}
constexpr Refinement kAllRefinements = Refinement::r1 | Refinement::r2 | Refinement::r3;

/// Parses "r1,r2,r3", "none" or "". Throws DomainError.
Refinement parse_refinements(std::string_view text);

/// Cap on deg^2 for a degree-d vertex, or empty when degree d is impossible.
struct DegreeCap {
  std::optional<std::int64_t> cap;
  Source sources = Source::none;
};

/// Defect accounting for one distribution in one (l, n, e) context.
struct DefectReport {
  DegreeDistribution distribution;
  /// Degree -> cap on deg^2; only degrees present in the distribution.
  std::map<int, std::int64_t> per_degree_cap;
  /// Provenance of the lower bound behind each cap.
  std::map<int, Source> cap_sources;
  /// sum n_d * cap(d) - sum n_d * d^2.
  std::int64_t total_defect = 0;
  /// The same sum after refinements lowered caps (equals total_defect if none did).
  std::int64_t effective_defect = 0;
  /// Why the distribution was rejected: "impossible-degree", "defect", "r1", "r2", "r3".
  std::optional<std::string> eliminated_by;

  bool feasible() const { return !eliminated_by; }
};

/// e - lower(3, l-1; n-1-d). Empty when that lower bound is infinite.
/// Throws UnknownRegion when the bounds table cannot answer.
DegreeCap degree_cap(int l, int n, std::int64_t e, int d, const BoundsTable& table);

/// Raw defect for a distribution. Throws DomainError unless the distribution
/// has n vertices and degree sum 2e. A degree with no possible cap yields a
/// report eliminated as "impossible-degree"; a negative defect as "defect".
DefectReport total_defect(const DegreeDistribution& dist, int l, int n, std::int64_t e,
                          const BoundsTable& table);

/// total_defect followed by the enabled refinements, in order r1, r2, r3.
DefectReport assess(const DegreeDistribution& dist, int l, int n, std::int64_t e,
                    const BoundsTable& table, Refinement refinements);

/// All distributions with n vertices, degree sum 2e, degrees in the allowed
/// window, non-negative defect, surviving the enabled refinements. Order is
/// lexicographic by (n_0, n_1, ...).
std::vector<DefectReport> enumerate_feasible(int l, int n, std::int64_t e, const BoundsTable& table,
                                             Refinement refinements = Refinement::r1);

/// Streams the same sequence; stop by returning false from the visitor.
/// Returns the number of reports delivered.
std::size_t for_each_feasible(int l, int n, std::int64_t e, const BoundsTable& table,
                              Refinement refinements,
                              const std::function<bool(const DefectReport&)>& visit);

struct RaiseResult {
  /// Smallest e at or above the starting bound with a feasible distribution,
  /// or infinity if the scan found none.
  Count bound;
  /// Where the scan started: the table's finite-case lower bound.
  Count scan_start;
  /// The merged table lower bound (may be infinite).
  Count table_lower;
  std::optional<DefectReport> first_feasible;
};

/// Scans e from finite_case_lower(l, n) up to floor(n (l-1) / 2).
RaiseResult raise_lower_bound(int l, int n, const BoundsTable& table,
                              Refinement refinements = Refinement::r1);

}  // namespace enumbers
