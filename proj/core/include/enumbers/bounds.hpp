#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "enumbers/formulas.hpp"

namespace enumbers {

/// Sources that contributed to a bound, as a bit set.
enum class Source : unsigned {
  none = 0,
  formula = 1U << 0,            ///< general closed-form bounds
  table = 1U << 1,              ///< a tabulated cell that the formulas already determine
  sporadic = 1U << 2,           ///< a tabulated cell the formulas do not determine
  ramsey = 1U << 3,             ///< Ramsey-number knowledge (infinite cells)
  preliminary_upper = 1U << 4,  ///< upper bound from a crude construction
};

constexpr Source operator|(Source a, Source b) {
  return static_cast<Source>(static_cast<unsigned>(a) | static_cast<unsigned>(b));
}
constexpr Source& operator|=(Source& a, Source b) { return a = a | b; }
constexpr bool has(Source set, Source flag) {
  return (static_cast<unsigned>(set) & static_cast<unsigned>(flag)) != 0;
}

/// Tag names in bit order, e.g. {"formula", "sporadic-table"}.
std::vector<std::string> source_names(Source s);
Source source_from_name(std::string_view name);

enum class BoundStatus { exact, range, infinite, open_above };

std::string_view status_name(BoundStatus s);

/// Lower/upper bound on one e-number.
///
/// `upper` is empty when no upper bound is known; an infinite upper means the
/// graphs might not exist at all. The status is derived, so the exact and
/// infinite invariants cannot drift from the stored values.
struct EBound {
  Count lower;
  std::optional<Count> upper;
  Source sources = Source::none;

  BoundStatus status() const;
  bool is_exact() const { return status() == BoundStatus::exact; }

  friend bool operator==(const EBound&, const EBound&) = default;
};

/// R(3,l) lies in [lower, upper]; no upper when none is known.
struct RamseyInterval {
  int lower = 1;
  std::optional<int> upper;

  static RamseyInterval unbounded() { return {1 << 30, std::nullopt}; }
};

/// Bound on e(3,k+1;n) from the closed-form results alone.
///
/// With 4n - 13k = D:
///   D <= -4 or D == 0       exact f1
///   -4 < D < 0              exact f1 + 1
///   0 < D <= 2              exact f1 + 2
///   2 < D <= 6              exact f1 + 3
///   D > 6                   lower max(f1 + 4, ceil f4) for k <= 12,
///                           max(f1 + 3, ceil f4) otherwise; upper unknown
/// n >= upper(R) gives an infinite bound; lower(R) <= n < upper(R) keeps the
/// lower bound above and marks the cell open above.
EBound general_value(int k, int n, const RamseyInterval& r);

/// One record of the bounds data file.
struct CellRecord {
  int l = 0;
  int n = 0;
  Count lower;
  std::optional<Count> upper;
  bool preliminary_upper = false;
  std::string source;
};

struct RamseyRecord {
  int l = 0;
  RamseyInterval interval;
  std::string source;
};

/// Parsed contents of a bounds data file (see core/data/ebounds.csv).
struct BoundsData {
  int version = 0;
  std::vector<CellRecord> cells;
  std::vector<RamseyRecord> ramsey;

  /// Throws ParseError with the offending line number.
  static BoundsData parse(std::string_view text);
  static BoundsData load(const std::string& path);
  /// The data file compiled into the library.
  static const BoundsData& embedded();
};

/// A lower bound together with where it came from.
struct SourcedLower {
  Count value;
  Source sources = Source::none;
};

/// Merged e(3,l;n) knowledge for 2 <= l <= 13, 1 <= n <= 43. Immutable after
/// construction.
class BoundsTable {
 public:
  static constexpr int kMinL = 2;
  static constexpr int kMaxL = 13;
  static constexpr int kMinN = 1;
  static constexpr int kMaxN = 43;

  /// Merges formula bounds with the data records: max of lowers, min of
  /// uppers, then infinity propagated down each column. Throws
  /// BoundsConflict if any cell ends with lower > upper.
  explicit BoundsTable(const BoundsData& data);

  static const BoundsTable& embedded();

  static bool in_domain(int l, int n) {
    return l >= kMinL && l <= kMaxL && n >= kMinN && n <= kMaxN;
  }

  /// Throws DomainError outside the table domain.
  const EBound& lookup(int l, int n) const;

  /// Interval for R(3,l), 1 <= l <= 13. Throws UnknownRegion otherwise.
  const RamseyInterval& ramsey(int l) const;

  /// Lower bound on e(3,l;n) over an extended domain: n = 0 gives 0, l = 1
  /// gives infinity, table cells come from lookup, and n > 43 falls back to
  /// the formulas for l <= 13. Anything else throws UnknownRegion.
  SourcedLower lower_bound(int l, int n) const;

  /// Best finite lower bound for (l,n), ignoring infinity claims: the bound
  /// any (3,l;n)-graph would have to meet if one existed.
  Count finite_case_lower(int l, int n) const;

 private:
  struct Cell {
    EBound bound;
    Count finite_lower;
  };

  static int index(int l, int n) { return (l - kMinL) * kMaxN + (n - kMinN); }

  std::array<RamseyInterval, kMaxL + 1> ramsey_{};
  std::array<bool, kMaxL + 1> ramsey_known_{};
  std::vector<Cell> cells_;
};

}  // namespace enumbers
