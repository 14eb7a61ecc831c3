#include "enumbers/table_render.hpp"

#include <charconv>
#include <sstream>

#include <json.hpp>

#include "enumbers/errors.hpp"

namespace enumbers {

namespace {

constexpr std::string_view kSchema = "enumbers.table/1";
constexpr std::string_view kDash = "–";
constexpr std::string_view kInfinity = "∞";

using Json = nlohmann::json;

Json count_to_json(const Count& c) { return c.is_infinite() ? Json("inf") : Json(c.value()); }

Count count_from_json(const Json& j) {
  if (j.is_string() && j.get<std::string>() == "inf") return Count::infinity();
  if (j.is_number_integer()) return Count(j.get<std::int64_t>());
  throw ParseError("bad count in table JSON: " + j.dump());
}

// Grid of rendered cells, rows n, columns l, with the infinity style applied.
std::vector<std::vector<std::string>> render_grid(const BoundsTable& table, IntRange l, IntRange n,
                                                  InfinityStyle style) {
  std::vector<std::vector<std::string>> grid;
  std::vector<bool> seen_infinity(static_cast<std::size_t>(l.last - l.first + 1), false);
  for (int row = n.first; row <= n.last; ++row) {
    auto& cells = grid.emplace_back();
    for (int col = l.first; col <= l.last; ++col) {
      const EBound& b = table.lookup(col, row);
      const auto c = static_cast<std::size_t>(col - l.first);
      if (b.status() == BoundStatus::infinite) {
        const bool show = style == InfinityStyle::every || !seen_infinity[c];
        seen_infinity[c] = true;
        cells.push_back(show ? std::string(kInfinity) : std::string());
      } else {
        cells.push_back(render_cell(b));
      }
    }
  }
  return grid;
}

}  // namespace

IntRange IntRange::parse(std::string_view text) {
  auto number = [&](std::string_view s) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
      throw DomainError("bad range '" + std::string(text) + "'");
    }
    return v;
  };
  const auto dash = text.find('-', 1);
  if (dash == std::string_view::npos) {
    const int v = number(text);
    return {v, v};
  }
  return {number(text.substr(0, dash)), number(text.substr(dash + 1))};
}

std::string render_cell(const EBound& b) {
  switch (b.status()) {
    case BoundStatus::infinite: return std::string(kInfinity);
    case BoundStatus::exact: return b.lower.str();
    case BoundStatus::open_above: return b.lower.str() + std::string(kDash) + std::string(kInfinity);
    case BoundStatus::range: break;
  }
  std::string upper = "?";
  if (b.upper) {
    upper = b.upper->str();
    if (has(b.sources, Source::preliminary_upper)) upper = "(" + upper + ")";
  }
  return b.lower.str() + std::string(kDash) + upper;
}

std::string emit_table(const BoundsTable& table, IntRange l, IntRange n, TableFormat format,
                       InfinityStyle style) {
  if (format == TableFormat::json) {
    Json cells = Json::array();
    if (!l.empty() && !n.empty()) {
      for (int row = n.first; row <= n.last; ++row) {
        for (int col = l.first; col <= l.last; ++col) {
          const EBound& b = table.lookup(col, row);
          cells.push_back({{"l", col},
                           {"n", row},
                           {"lower", count_to_json(b.lower)},
                           {"upper", b.upper ? count_to_json(*b.upper) : Json(nullptr)},
                           {"status", status_name(b.status())},
                           {"sources", source_names(b.sources)},
                           {"text", render_cell(b)}});
        }
      }
    }
    const Json doc = {{"schema", kSchema}, {"cells", cells}};
    return doc.dump(2) + "\n";
  }

  if (l.empty() || n.empty()) return {};
  const auto grid = render_grid(table, l, n, style);
  std::ostringstream out;
  if (format == TableFormat::markdown) {
    out << "| n \\ l |";
    for (int col = l.first; col <= l.last; ++col) out << ' ' << col << " |";
    out << "\n|---|";
    for (int col = l.first; col <= l.last; ++col) out << "---|";
    out << '\n';
    for (int row = n.first; row <= n.last; ++row) {
      out << "| " << row << " |";
      for (const auto& cell : grid[static_cast<std::size_t>(row - n.first)]) {
        out << ' ' << cell << " |";
      }
      out << '\n';
    }
  } else {
    out << "n\\l";
    for (int col = l.first; col <= l.last; ++col) out << ',' << col;
    out << '\n';
    for (int row = n.first; row <= n.last; ++row) {
      out << row;
      for (const auto& cell : grid[static_cast<std::size_t>(row - n.first)]) out << ',' << cell;
      out << '\n';
    }
  }
  return out.str();
}

std::vector<TableCell> parse_table_json(std::string_view text) {
  std::vector<TableCell> out;
  try {
    const Json doc = Json::parse(text);
    if (doc.at("schema").get<std::string>() != kSchema) {
      throw ParseError("unsupported table schema " + doc.at("schema").dump());
    }
    for (const auto& c : doc.at("cells")) {
      TableCell cell;
      cell.l = c.at("l").get<int>();
      cell.n = c.at("n").get<int>();
      cell.bound.lower = count_from_json(c.at("lower"));
      if (!c.at("upper").is_null()) cell.bound.upper = count_from_json(c.at("upper"));
      for (const auto& s : c.at("sources")) cell.bound.sources |= source_from_name(s.get<std::string>());
      out.push_back(cell);
    }
  } catch (const Json::exception& err) {
    throw ParseError(std::string("table JSON: ") + err.what());
  }
  return out;
}

}  // namespace enumbers
