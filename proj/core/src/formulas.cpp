#include "enumbers/formulas.hpp"

#include <algorithm>
#include <charconv>

#include "enumbers/errors.hpp"

namespace enumbers {

std::int64_t ceil(const Rational& r) {
  // boost::rational keeps the denominator positive.
  const auto num = r.numerator();
  const auto den = r.denominator();
  auto q = num / den;
  if (num % den != 0 && num > 0) ++q;
  return q;
}

std::string Count::str() const { return infinite_ ? "inf" : std::to_string(value_); }

Count Count::parse(const std::string& text) {
  if (text == "inf" || text == "∞") return infinity();
  std::int64_t v = 0;
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc{} || ptr != end || text.empty() || v < 0) {
    throw ParseError("not a count: '" + text + "'");
  }
  return Count(v);
}

std::int64_t f1(std::int64_t n, std::int64_t k) {
  return std::max({std::int64_t{0}, n - k, 3 * n - 5 * k, 5 * n - 10 * k, 6 * n - 13 * k});
}

Rational f2(std::int64_t n, std::int64_t k) { return Rational(16 * n - 39 * k, 2); }

Rational f3(std::int64_t n, std::int64_t k) { return Rational(9 * n - 23 * k); }

Rational f4(std::int64_t n, std::int64_t k) { return Rational(34 * n - 78 * k, 5); }

std::int64_t ConjecturalBound::as_edge_count() const { return std::max<std::int64_t>(0, ceil(value)); }

ConjecturalBound conjectured_lower_bound(std::int64_t n, std::int64_t k) {
  return {std::max(f2(n, k), f3(n, k))};
}

}  // namespace enumbers
