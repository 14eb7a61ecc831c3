#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

namespace enumbers {

using Rational = boost::rational<std::int64_t>;

/// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

/// A nonnegative edge count or +infinity.
class Count {
 public:
  constexpr Count() = default;
  constexpr Count(std::int64_t v) : value_(v) {}  // NOLINT(google-explicit-constructor)
  static constexpr Count infinity() {
    Count c;
    c.infinite_ = true;
    return c;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  /// Precondition: finite.
  constexpr std::int64_t value() const { return value_; }

  /// Decimal, or "inf".
  std::string str() const;
  /// Accepts a decimal or "inf" / "∞". Throws ParseError.
  static Count parse(const std::string& text);

  friend constexpr bool operator==(const Count& a, const Count& b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(const Count& a, const Count& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator>(const Count& a, const Count& b) { return b < a; }
  friend constexpr bool operator<=(const Count& a, const Count& b) { return !(b < a); }
  friend constexpr bool operator>=(const Count& a, const Count& b) { return !(a < b); }

 private:
  std::int64_t value_ = 0;
  bool infinite_ = false;
};

constexpr Count max(const Count& a, const Count& b) { return a < b ? b : a; }
constexpr Count min(const Count& a, const Count& b) { return b < a ? b : a; }

/// max(0, n-k, 3n-5k, 5n-10k, 6n-13k).
std::int64_t f1(std::int64_t n, std::int64_t k);
/// 8n - 19.5k
Rational f2(std::int64_t n, std::int64_t k);
/// 9n - 23k
Rational f3(std::int64_t n, std::int64_t k);
/// 6.8n - 15.6k
Rational f4(std::int64_t n, std::int64_t k);

/// max(f2, f3): a conjectured, unproven lower bound on e(3,k+1;n). Carried in
/// its own type so it cannot be mixed into proven bounds by accident.
struct ConjecturalBound {
  Rational value;
  /// ceil(value) clamped at 0.
  std::int64_t as_edge_count() const;
};

ConjecturalBound conjectured_lower_bound(std::int64_t n, std::int64_t k);

}  // namespace enumbers
