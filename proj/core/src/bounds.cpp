#include "enumbers/bounds.hpp"

#include <fstream>
#include <sstream>

#include "enumbers/errors.hpp"

namespace enumbers {

extern const std::string_view kEmbeddedBoundsData;

namespace {

constexpr std::array<std::pair<Source, std::string_view>, 5> kSourceNames{{
    {Source::formula, "formula"},
    {Source::table, "table"},
    {Source::sporadic, "sporadic-table"},
    {Source::ramsey, "ramsey"},
    {Source::preliminary_upper, "preliminary-upper"},
}};

std::optional<Count> min_upper(const std::optional<Count>& a, const std::optional<Count>& b) {
  if (!a) return b;
  if (!b) return a;
  return min(*a, *b);
}

std::vector<std::string> split_csv(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    const auto comma = line.find(',', start);
    auto field = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
    while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
    while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r')) {
      field.remove_suffix(1);
    }
    fields.emplace_back(field);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return fields;
}

int parse_int(const std::string& text) {
  const Count c = Count::parse(text);
  if (c.is_infinite()) throw ParseError("expected an integer, got '" + text + "'");
  return static_cast<int>(c.value());
}

std::optional<Count> parse_upper(const std::string& text) {
  if (text == "?") return std::nullopt;
  return Count::parse(text);
}

}  // namespace

std::vector<std::string> source_names(Source s) {
  std::vector<std::string> out;
  for (auto [flag, name] : kSourceNames) {
    if (has(s, flag)) out.emplace_back(name);
  }
  return out;
}

Source source_from_name(std::string_view name) {
  for (auto [flag, n] : kSourceNames) {
    if (n == name) return flag;
  }
  throw ParseError("unknown source tag '" + std::string(name) + "'");
}

std::string_view status_name(BoundStatus s) {
  switch (s) {
    case BoundStatus::exact: return "exact";
    case BoundStatus::range: return "range";
    case BoundStatus::infinite: return "infinite";
    case BoundStatus::open_above: return "open-above";
  }
  return "?";
}

BoundStatus EBound::status() const {
  if (lower.is_infinite()) return BoundStatus::infinite;
  if (upper && upper->is_infinite()) return BoundStatus::open_above;
  if (upper && *upper == lower) return BoundStatus::exact;
  return BoundStatus::range;
}

EBound general_value(int k, int n, const RamseyInterval& r) {
  if (k < 1 || n < 1) throw DomainError("general_value needs k >= 1 and n >= 1");
  if (r.upper && n >= *r.upper) {
    return {Count::infinity(), Count::infinity(), Source::ramsey};
  }

  const std::int64_t base = f1(n, k);
  // 4 (n - 3.25k), kept integral so the window tests are exact.
  const std::int64_t d = 4 * static_cast<std::int64_t>(n) - 13 * static_cast<std::int64_t>(k);
  EBound b;
  b.sources = Source::formula;
  if (d <= -4 || d == 0) {
    b.lower = base;
  } else if (d < 0) {
    b.lower = base + 1;
  } else if (d <= 2) {
    b.lower = base + 2;
  } else if (d <= 6) {
    b.lower = base + 3;
  } else {
    const std::int64_t step = k <= 12 ? base + 4 : base + 3;
    b.lower = std::max(step, ceil(f4(n, k)));
  }
  if (d <= 6) b.upper = b.lower;

  if (n >= r.lower) {
    b.upper = Count::infinity();
    b.sources |= Source::ramsey;
  }
  return b;
}

BoundsData BoundsData::parse(std::string_view text) {
  BoundsData data;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (line.empty() || line.front() == '#' || line.find_first_not_of(" \t\r") == line.npos) {
      continue;
    }
    try {
      const auto f = split_csv(line);
      if (f.size() != 7) throw ParseError("expected 7 fields, got " + std::to_string(f.size()));
      const std::string& kind = f[0];
      if (kind == "version") {
        data.version = parse_int(f[1]);
        if (data.version != 1) throw ParseError("unsupported data version " + f[1]);
      } else if (kind == "ramsey") {
        RamseyRecord rec;
        rec.l = parse_int(f[1]);
        rec.interval.lower = parse_int(f[3]);
        if (f[4] != "?") rec.interval.upper = parse_int(f[4]);
        rec.source = f[6];
        data.ramsey.push_back(rec);
      } else if (kind == "cell") {
        CellRecord rec;
        rec.l = parse_int(f[1]);
        rec.n = parse_int(f[2]);
        rec.lower = Count::parse(f[3]);
        rec.upper = parse_upper(f[4]);
        if (f[5] == "preliminary-upper") {
          rec.preliminary_upper = true;
        } else if (!f[5].empty()) {
          throw ParseError("unknown flag '" + f[5] + "'");
        }
        rec.source = f[6];
        data.cells.push_back(rec);
      } else {
        throw ParseError("unknown record kind '" + kind + "'");
      }
    } catch (const Error& err) {
      throw ParseError("bounds data line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  if (data.version == 0) throw ParseError("bounds data has no version record");
  return data;
}

BoundsData BoundsData::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open bounds data file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse(ss.str());
}

const BoundsData& BoundsData::embedded() {
  static const BoundsData data = parse(kEmbeddedBoundsData);
  return data;
}

BoundsTable::BoundsTable(const BoundsData& data) {
  for (const auto& rec : data.ramsey) {
    if (rec.l < 1 || rec.l > kMaxL) {
      throw DomainError("Ramsey record for l = " + std::to_string(rec.l) + " outside [1, 13]");
    }
    ramsey_[rec.l] = rec.interval;
    ramsey_known_[rec.l] = true;
  }
  for (int l = kMinL; l <= kMaxL; ++l) {
    if (!ramsey_known_[l]) throw DomainError("bounds data lacks R(3," + std::to_string(l) + ")");
  }

  std::vector<const CellRecord*> records(static_cast<std::size_t>((kMaxL - kMinL + 1) * kMaxN));
  for (const auto& rec : data.cells) {
    if (!in_domain(rec.l, rec.n)) {
      throw DomainError("cell record (" + std::to_string(rec.l) + "," + std::to_string(rec.n) +
                        ") outside the table domain");
    }
    records[static_cast<std::size_t>(index(rec.l, rec.n))] = &rec;
  }

  cells_.resize(records.size());
  for (int l = kMinL; l <= kMaxL; ++l) {
    bool column_infinite = false;
    for (int n = kMinN; n <= kMaxN; ++n) {
      const auto at = static_cast<std::size_t>(index(l, n));
      const EBound formula = general_value(l - 1, n, ramsey_[l]);
      const CellRecord* rec = records[at];

      EBound merged = formula;
      Count finite_lower = general_value(l - 1, n, RamseyInterval::unbounded()).lower;
      if (rec != nullptr) {
        merged.lower = max(formula.lower, rec->lower);
        merged.upper = min_upper(formula.upper, rec->upper);
        if (rec->lower.is_finite()) {
          finite_lower = max(finite_lower, rec->lower);
          merged.sources |= formula.is_exact() ? Source::table : Source::sporadic;
        } else {
          merged.sources |= Source::table | Source::ramsey;
        }
        if (rec->preliminary_upper && rec->upper && merged.upper == rec->upper &&
            !(formula.upper && *formula.upper == *rec->upper)) {
          merged.sources |= Source::preliminary_upper;
        }
      }
      if (column_infinite && merged.lower.is_finite()) {
        merged.lower = Count::infinity();
        merged.sources |= Source::ramsey;
      }
      if (merged.lower.is_infinite()) {
        column_infinite = true;
        merged.upper = merged.upper.value_or(Count::infinity());
      }
      if (merged.upper && merged.lower > *merged.upper) {
        throw BoundsConflict("conflicting bounds for e(3," + std::to_string(l) + ";" +
                             std::to_string(n) + "): lower " + merged.lower.str() + " > upper " +
                             merged.upper->str());
      }
      cells_[at] = {merged, finite_lower};
    }
  }
}

const BoundsTable& BoundsTable::embedded() {
  static const BoundsTable table(BoundsData::embedded());
  return table;
}

const EBound& BoundsTable::lookup(int l, int n) const {
  if (!in_domain(l, n)) {
    throw DomainError("(l, n) = (" + std::to_string(l) + ", " + std::to_string(n) +
                      ") outside 2 <= l <= 13, 1 <= n <= 43");
  }
  return cells_[static_cast<std::size_t>(index(l, n))].bound;
}

const RamseyInterval& BoundsTable::ramsey(int l) const {
  if (l < 1 || l > kMaxL || !ramsey_known_[l]) {
    throw UnknownRegion("no Ramsey data for R(3," + std::to_string(l) + ")");
  }
  return ramsey_[l];
}

SourcedLower BoundsTable::lower_bound(int l, int n) const {
  if (n < 0 || l < 1) throw DomainError("lower_bound needs l >= 1 and n >= 0");
  if (n == 0) return {0, Source::formula};
  if (l == 1) return {Count::infinity(), Source::ramsey};
  if (in_domain(l, n)) {
    const EBound& b = lookup(l, n);
    return {b.lower, b.sources};
  }
  if (l <= kMaxL) {
    const EBound b = general_value(l - 1, n, ramsey(l));
    return {b.lower, b.sources};
  }
  throw UnknownRegion("no lower bound available for e(3," + std::to_string(l) + ";" +
                      std::to_string(n) + ")");
}

Count BoundsTable::finite_case_lower(int l, int n) const {
  if (!in_domain(l, n)) (void)lookup(l, n);
  return cells_[static_cast<std::size_t>(index(l, n))].finite_lower;
}

}  // namespace enumbers
