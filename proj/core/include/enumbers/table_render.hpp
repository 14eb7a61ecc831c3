#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "enumbers/bounds.hpp"

namespace enumbers {

enum class TableFormat { markdown, csv, json };

/// Which infinite cells of a column are printed: only the topmost one in the
/// printed range (the rest left blank) or all of them.
enum class InfinityStyle { top_only, every };

/// Inclusive integer range; empty when first > last.
struct IntRange {
  int first = 1;
  int last = 0;
  bool empty() const { return first > last; }

  /// "7-10" or "9". Throws DomainError.
  static IntRange parse(std::string_view text);
};

/// "v" for exact cells, "lo–hi" for ranges ("(hi)" when the upper bound is
/// preliminary, "?" when unknown), "lo–∞" open above, "∞" for infinite cells.
std::string render_cell(const EBound& b);

/// Rows n, columns l. Markdown and CSV carry the rendered cell text; JSON
/// carries the full structured cells. Empty ranges give an empty string
/// (markdown, CSV) or an empty cell list (JSON).
std::string emit_table(const BoundsTable& table, IntRange l, IntRange n, TableFormat format,
                       InfinityStyle style = InfinityStyle::top_only);

struct TableCell {
  int l = 0;
  int n = 0;
  EBound bound;
};

/// Reads the cells back from emit_table's JSON output. Throws ParseError.
std::vector<TableCell> parse_table_json(std::string_view json);

}  // namespace enumbers
