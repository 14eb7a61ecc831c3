#include <doctest.h>

#include <string>

#include "enumbers/bounds.hpp"
#include "enumbers/constructions.hpp"
#include "enumbers/errors.hpp"
#include "enumbers/formulas.hpp"
#include "enumbers/graph.hpp"

using namespace enumbers;

namespace {

const BoundsTable& table() { return BoundsTable::embedded(); }

EBound exact(std::int64_t v) { return {v, Count(v), Source::none}; }

}  // namespace

TEST_CASE("closed forms") {
  CHECK(f1(35, 10) == 80);
  CHECK(f1(13, 4) == 26);
  CHECK(f1(11, 4) == 15);
  CHECK(f1(1, 1) == 0);
  CHECK(f1(2, 5) == 0);

  CHECK(f2(39, 10) == Rational(117));
  CHECK(f2(1, 1) == Rational(-23, 2));
  CHECK(f3(43, 11) == Rational(134));
  CHECK(f4(10, 4) == Rational(28, 5));
  CHECK(ceil(f4(10, 4)) == 6);
  CHECK(ceil(Rational(-7, 2)) == -3);
  CHECK(ceil(Rational(4)) == 4);
}

TEST_CASE("f1 is 6n - 13k from n = 3k on") {
  for (int k = 1; k <= 40; ++k) {
    for (int n = 3 * k; n <= 5 * k + 10; ++n) CHECK(f1(n, k) == 6 * n - 13 * k);
  }
}

TEST_CASE("conjectured bound is kept apart") {
  CHECK(conjectured_lower_bound(35, 10).value == Rational(85));
  CHECK(conjectured_lower_bound(13, 4).value == Rational(26));
  CHECK(conjectured_lower_bound(13, 4).as_edge_count() == 26);
  CHECK(conjectured_lower_bound(3, 4).value == Rational(-54));
  CHECK(conjectured_lower_bound(3, 4).as_edge_count() == 0);
}

TEST_CASE("edge counts with infinity") {
  CHECK(Count::infinity() > Count(1'000'000));
  CHECK(max(Count(3), Count::infinity()).is_infinite());
  CHECK(min(Count(3), Count::infinity()) == Count(3));
  CHECK(Count::parse("inf").is_infinite());
  CHECK(Count::parse("∞").is_infinite());
  CHECK(Count::parse("42") == Count(42));
  CHECK(Count::infinity().str() == "inf");
  CHECK_THROWS_AS(Count::parse("x"), ParseError);
  CHECK_THROWS_AS(Count::parse("-3"), ParseError);
}

TEST_CASE("general values") {
  const auto& t = table();
  const EBound a = general_value(5, 17, t.ramsey(6));
  CHECK(a.is_exact());
  CHECK(a.lower == Count(40));
  CHECK(general_value(5, 16, t.ramsey(6)).lower == Count(32));
  CHECK(general_value(5, 16, t.ramsey(6)).is_exact());
  CHECK(general_value(4, 13, t.ramsey(5)).lower == Count(26));
  CHECK(general_value(4, 13, t.ramsey(5)).is_exact());

  // f1 + 1 strictly inside (3.25k - 1, 3.25k); n = 3.25k - 1 itself is f1.
  CHECK(general_value(7, 22, t.ramsey(8)).lower == Count(f1(22, 7) + 1));
  CHECK(general_value(4, 12, t.ramsey(5)).lower == Count(f1(12, 4)));
  // f1 + 2 for 0 < n - 3.25k <= 0.5.
  CHECK(general_value(2, 7, t.ramsey(3)).status() == BoundStatus::infinite);
  CHECK(general_value(6, 20, RamseyInterval::unbounded()).lower == Count(f1(20, 6) + 2));
  // Far region: only a lower bound.
  const EBound far = general_value(8, 34, RamseyInterval::unbounded());
  CHECK(far.status() == BoundStatus::range);
  CHECK_FALSE(far.upper.has_value());
  CHECK(far.lower == Count(std::max<std::int64_t>(f1(34, 8) + 4, ceil(f4(34, 8)))));

  // Ramsey knowledge.
  CHECK(general_value(3, 9, t.ramsey(4)).status() == BoundStatus::infinite);
  CHECK(general_value(3, 8, t.ramsey(4)).lower == Count(10));
  const EBound open = general_value(9, 40, t.ramsey(10));
  CHECK(open.status() == BoundStatus::open_above);
  CHECK(open.upper == Count::infinity());

  CHECK_THROWS_AS(general_value(0, 5, t.ramsey(2)), DomainError);
}

TEST_CASE("general values are exact across the small-n region") {
  const auto& t = table();
  int checked = 0;
  for (int l = BoundsTable::kMinL; l <= BoundsTable::kMaxL; ++l) {
    const int k = l - 1;
    for (int n = 1; n <= BoundsTable::kMaxN; ++n) {
      // n <= 3.25k + 1.5, i.e. 4n <= 13k + 6.
      if (4 * n > 13 * k + 6 || n >= t.ramsey(l).lower) continue;
      const EBound g = general_value(k, n, t.ramsey(l));
      CHECK(g.is_exact());
      CHECK(t.lookup(l, n).lower == g.lower);
      ++checked;
    }
  }
  CHECK(checked > 200);
}

TEST_CASE("lookup") {
  const auto& t = table();
  CHECK(t.lookup(10, 33).is_exact());
  CHECK(t.lookup(10, 33).lower == Count(90));

  const EBound r = t.lookup(11, 35);
  CHECK(r.status() == BoundStatus::range);
  CHECK(r.lower == Count(84));
  CHECK(r.upper == Count(85));

  CHECK(t.lookup(9, 36).status() == BoundStatus::infinite);

  const EBound big = t.lookup(12, 43);
  CHECK(big.lower == Count(129));
  CHECK(big.upper == Count(134));
  CHECK(has(big.sources, Source::sporadic));

  CHECK(has(t.lookup(10, 37).sources, Source::preliminary_upper));
  CHECK_FALSE(has(t.lookup(10, 39).sources, Source::preliminary_upper));
  CHECK(t.lookup(10, 41).status() == BoundStatus::open_above);
  CHECK(t.lookup(10, 43).status() == BoundStatus::infinite);
  CHECK(t.lookup(4, 8).lower == Count(10));
  CHECK(t.lookup(4, 9).status() == BoundStatus::infinite);
  CHECK(t.lookup(2, 1).lower == Count(0));
  CHECK(t.lookup(2, 2).lower == Count(1));
  CHECK(t.lookup(2, 3).status() == BoundStatus::infinite);

  CHECK_THROWS_AS(t.lookup(1, 5), DomainError);
  CHECK_THROWS_AS(t.lookup(14, 5), DomainError);
  CHECK_THROWS_AS(t.lookup(5, 44), DomainError);
  CHECK_THROWS_AS(t.lookup(5, 0), DomainError);
}

TEST_CASE("exactly fifteen sporadic cells up to 34 vertices") {
  const auto& t = table();
  int sporadic = 0;
  for (int l = BoundsTable::kMinL; l <= BoundsTable::kMaxL; ++l) {
    for (int n = 1; n <= 34; ++n) {
      if (!has(t.lookup(l, n).sources, Source::sporadic)) continue;
      ++sporadic;
      CHECK(n >= 22);
      CHECK(l >= 7);
      CHECK(l <= 10);
    }
  }
  CHECK(sporadic == 15);
  CHECK(has(t.lookup(10, 33).sources, Source::sporadic));
  CHECK_FALSE(has(t.lookup(6, 16).sources, Source::sporadic));
  CHECK_FALSE(has(t.lookup(6, 17).sources, Source::sporadic));
}

TEST_CASE("merged table invariants") {
  const auto& t = table();
  for (int l = BoundsTable::kMinL; l <= BoundsTable::kMaxL; ++l) {
    bool infinite = false;
    for (int n = 1; n <= BoundsTable::kMaxN; ++n) {
      const EBound& b = t.lookup(l, n);
      CAPTURE(l);
      CAPTURE(n);
      if (infinite) CHECK(b.status() == BoundStatus::infinite);
      infinite = infinite || b.status() == BoundStatus::infinite;
      if (b.upper) CHECK(b.lower <= *b.upper);
      if (n > 1) CHECK(t.lookup(l, n - 1).lower <= b.lower);
      // Independence bound l - 1 < l gives a weaker constraint.
      if (l > BoundsTable::kMinL) CHECK(t.lookup(l - 1, n).lower >= b.lower);

      const EBound formula = general_value(l - 1, n, t.ramsey(l));
      CHECK(b.lower >= formula.lower);
      if (formula.upper && b.upper) CHECK(*b.upper <= *formula.upper);
    }
  }
}

TEST_CASE("lower bounds beyond the table") {
  const auto& t = table();
  CHECK(t.lower_bound(5, 0).value == Count(0));
  CHECK(t.lower_bound(1, 3).value.is_infinite());
  CHECK(t.lower_bound(1, 0).value == Count(0));
  CHECK(t.lower_bound(11, 35).value == Count(84));
  CHECK(t.lower_bound(13, 44).value == general_value(12, 44, t.ramsey(13)).lower);
  CHECK(t.lower_bound(6, 50).value.is_infinite());
  CHECK_THROWS_AS(t.lower_bound(14, 50), UnknownRegion);
  CHECK_THROWS_AS(t.ramsey(14), UnknownRegion);

  CHECK(t.finite_case_lower(7, 23) == Count(64));
  CHECK(t.lookup(7, 23).status() == BoundStatus::infinite);
}

TEST_CASE("named witnesses realise their cells") {
  const auto& t = table();
  const Graph w = cyclic_13_1_5();
  const GraphClass cw = classify(w);
  CHECK(cw.triangle_free);
  CHECK(t.lookup(cw.alpha + 1, cw.n) == EBound{exact(26).lower, exact(26).upper,
                                               t.lookup(5, 13).sources});
  CHECK(t.lookup(5, 13).lower == Count(cw.e));

  const GraphClass ct = classify(twisted_tesseract());
  CHECK(t.lookup(ct.alpha + 1, ct.n).is_exact());
  CHECK(t.lookup(ct.alpha + 1, ct.n).lower == Count(ct.e));
}

TEST_CASE("source names") {
  CHECK(source_names(Source::formula | Source::sporadic) ==
        std::vector<std::string>{"formula", "sporadic-table"});
  CHECK(source_from_name("preliminary-upper") == Source::preliminary_upper);
  CHECK_THROWS_AS(source_from_name("nope"), ParseError);
  CHECK(status_name(BoundStatus::open_above) == "open-above");
}

TEST_CASE("bounds data parsing") {
  const std::string header = "version,1,,,,,\n";
  std::string ramsey;
  for (int l = 1; l <= 13; ++l) {
    const int r[] = {0, 1, 3, 6, 9, 14, 18, 23, 28, 36, 40, 44, 44, 44};
    ramsey += "ramsey," + std::to_string(l) + ",," + std::to_string(r[l]) + "," +
              (l <= 9 ? std::to_string(r[l]) : "?") + ",,classical\n";
  }

  SUBCASE("minimal data builds a table from the formulas") {
    const BoundsTable t(BoundsData::parse(header + ramsey));
    CHECK(t.lookup(5, 13).lower == Count(26));
    CHECK(t.lookup(10, 33).lower < Count(90));
  }
  SUBCASE("a record that contradicts an exact formula value conflicts") {
    CHECK_THROWS_AS(BoundsTable(BoundsData::parse(header + ramsey + "cell,5,13,30,30,,test\n")),
                    BoundsConflict);
  }
  SUBCASE("a record with lower above upper conflicts") {
    CHECK_THROWS_AS(BoundsTable(BoundsData::parse(header + ramsey + "cell,11,40,140,130,,test\n")),
                    BoundsConflict);
  }
  SUBCASE("missing Ramsey data") {
    CHECK_THROWS_AS(BoundsTable(BoundsData::parse(header)), DomainError);
  }
  SUBCASE("syntax errors carry the line number") {
    try {
      BoundsData::parse(header + "cell,5,13,abc,30,,x\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
    CHECK_THROWS_AS(BoundsData::parse("cell,5,13,26,26,,x\n"), ParseError);
    CHECK_THROWS_AS(BoundsData::parse(header + "cell,5,13,26\n"), ParseError);
    CHECK_THROWS_AS(BoundsData::parse(header + "cell,5,13,26,26,weird,x\n"), ParseError);
    CHECK_THROWS_AS(BoundsData::parse(header + "thing,5,13,26,26,,x\n"), ParseError);
    CHECK_THROWS_AS(BoundsData::parse("version,2,,,,,\n"), ParseError);
  }
  SUBCASE("the shipped file matches the embedded copy") {
    const BoundsData disk = BoundsData::load(ENUMBERS_DATA_FILE);
    CHECK(disk.cells.size() == BoundsData::embedded().cells.size());
    CHECK(disk.ramsey.size() == BoundsData::embedded().ramsey.size());
    CHECK_THROWS_AS(BoundsData::load("/nonexistent/ebounds.csv"), ParseError);
  }
}
