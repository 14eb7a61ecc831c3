// Command-line front end for the enumbers library.
//
// Exit codes: 0 success, 1 negative result (verification failed, nothing
// feasible, cross-validation mismatch), 2 usage or input error, 3 inconclusive
// search or internal error.

#include <algorithm>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "enumbers/bounds.hpp"
#include "enumbers/constructions.hpp"
#include "enumbers/errors.hpp"
#include "enumbers/feasibility.hpp"
#include "enumbers/graph.hpp"
#include "enumbers/graph6.hpp"
#include "enumbers/oracle.hpp"
#include "enumbers/table_render.hpp"

namespace {

using namespace enumbers;
using Json = nlohmann::json;

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kUsage = 2;
constexpr int kInconclusive = 3;

std::string schema(const std::string& command) { return "enumbers." + command + "/1"; }

Json count_json(const Count& c) { return c.is_infinite() ? Json("inf") : Json(c.value()); }

Json bound_json(const EBound& b) {
  return {{"lower", count_json(b.lower)},
          {"upper", b.upper ? count_json(*b.upper) : Json(nullptr)},
          {"status", status_name(b.status())},
          {"sources", source_names(b.sources)},
          {"text", render_cell(b)}};
}

Json report_json(const DefectReport& r) {
  Json caps = Json::object();
  for (const auto& [d, cap] : r.per_degree_cap) caps[std::to_string(d)] = cap;
  Json counts = Json::object();
  for (const auto& [d, c] : r.distribution.counts) counts[std::to_string(d)] = c;
  return {{"distribution", counts},
          {"compact", r.distribution.compact()},
          {"caps", caps},
          {"total_defect", r.total_defect},
          {"effective_defect", r.effective_defect},
          {"eliminated_by", r.eliminated_by ? Json(*r.eliminated_by) : Json(nullptr)}};
}

std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += sep;
    out += p;
  }
  return out;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw DomainError("bad integer list '" + text + "'");
    out.push_back(v);
  }
  return out;
}

// The bounds table, from --data or the compiled-in copy.
class TableSource {
 public:
  std::string path;
  const BoundsTable& get() {
    if (path.empty()) return BoundsTable::embedded();
    if (!loaded_) loaded_ = std::make_unique<BoundsTable>(BoundsData::load(path));
    return *loaded_;
  }

 private:
  std::unique_ptr<BoundsTable> loaded_;
};

// Reads graph6 records from a file or stdin, one line at a time.
class Graph6Reader {
 public:
  explicit Graph6Reader(const std::string& path) {
    if (path.empty() || path == "-") {
      in_ = &std::cin;
    } else {
      file_.open(path);
      if (!file_) throw ParseError("cannot open '" + path + "'");
      in_ = &file_;
    }
  }

  // Next non-blank record; false at end of input.
  bool next(std::string& line, std::size_t& line_no) {
    while (std::getline(*in_, line)) {
      ++line_no_;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line == ">>graph6<<") continue;
      line_no = line_no_;
      return true;
    }
    return false;
  }

 private:
  std::ifstream file_;
  std::istream* in_ = nullptr;
  std::size_t line_no_ = 0;
};

struct VerifyRecord {
  std::size_t line = 0;
  std::string text;
  std::string error;
  GraphClass cls;
  int min_degree = 0;
  bool has_k24 = false;
  bool pass = false;
};

void verify_one(VerifyRecord& rec, int l, std::optional<int> n, std::optional<std::int64_t> e) {
  try {
    const Graph g = parse_graph6_line(rec.text);
    rec.cls = classify(g);
    rec.min_degree = g.min_degree();
    rec.has_k24 = find_induced_k24(g).has_value();
    rec.pass = rec.cls.triangle_free && rec.cls.alpha < l && (!n || rec.cls.n == *n) &&
               (!e || rec.cls.e == *e);
  } catch (const ParseError& err) {
    rec.error = "line " + std::to_string(rec.line) + ": " + err.what();
  }
}

// ---------------------------------------------------------------------------

struct Globals {
  TableSource table;
};

int run_bounds(Globals& g, int l, int n, const std::string& format) {
  const EBound& b = g.table.get().lookup(l, n);
  if (format == "json") {
    Json out = bound_json(b);
    out["schema"] = schema("bounds");
    out["l"] = l;
    out["n"] = n;
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "e(3," << l << ";" << n << ") = " << render_cell(b) << "  ["
              << status_name(b.status()) << "; " << join(source_names(b.sources), ", ") << "]\n";
  }
  return kOk;
}

int run_table(Globals& g, const std::string& l_text, const std::string& n_text,
              const std::string& format, const std::string& infinity) {
  TableFormat f = TableFormat::markdown;
  if (format == "csv") f = TableFormat::csv;
  if (format == "json") f = TableFormat::json;
  const InfinityStyle style = infinity == "all" ? InfinityStyle::every : InfinityStyle::top_only;
  std::cout << emit_table(g.table.get(), IntRange::parse(l_text), IntRange::parse(n_text), f, style);
  return kOk;
}

int run_feasible(Globals& g, int l, int n, std::int64_t e, const std::string& refine,
                 const std::string& format) {
  const Refinement r = parse_refinements(refine);
  Json items = Json::array();
  std::size_t count = 0;
  for_each_feasible(l, n, e, g.table.get(), r, [&](const DefectReport& rep) {
    ++count;
    if (format == "json") {
      items.push_back(report_json(rep));
    } else {
      std::cout << rep.distribution.str() << "  " << rep.distribution.compact()
                << "  defect " << rep.total_defect;
      if (rep.effective_defect != rep.total_defect) std::cout << " (effective " << rep.effective_defect << ")";
      std::cout << '\n';
    }
    return true;
  });
  if (format == "json") {
    Json out = {{"schema", schema("feasible")}, {"l", l}, {"n", n}, {"e", e},
                {"refinements", refine}, {"distributions", items}};
    std::cout << out.dump(2) << '\n';
  } else if (count == 0) {
    std::cout << "no feasible degree distribution for a (3," << l << ";" << n << "," << e
              << ")-graph\n";
  }
  return count == 0 ? kNegative : kOk;
}

int run_raise(Globals& g, int l, int n, const std::string& refine, const std::string& format) {
  const RaiseResult r = raise_lower_bound(l, n, g.table.get(), parse_refinements(refine));
  if (format == "json") {
    Json out = {{"schema", schema("raise")},         {"l", l},
                {"n", n},                            {"bound", count_json(r.bound)},
                {"scan_start", count_json(r.scan_start)}, {"table_lower", count_json(r.table_lower)},
                {"first_feasible", r.first_feasible ? report_json(*r.first_feasible) : Json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "e(3," << l << ";" << n << ") >= " << r.bound.str() << "  (scan from "
              << r.scan_start.str() << ", table lower " << r.table_lower.str() << ")\n";
    if (r.first_feasible) {
      std::cout << "first feasible: " << r.first_feasible->distribution.str() << "  defect "
                << r.first_feasible->total_defect << '\n';
    }
  }
  return kOk;
}

int run_construct(const std::string& which, int n, const std::string& offsets) {
  Graph g(0);
  if (which == "w13") {
    g = cyclic_13_1_5();
  } else if (which == "tesseract") {
    g = twisted_tesseract();
  } else if (which == "petersen") {
    g = petersen();
  } else {
    const std::vector<int> offs = parse_int_list(offsets);
    g = circulant(n, offs);
  }
  std::cout << write_graph6(g) << '\n';
  return kOk;
}

int run_oracle(int l, int n, std::uint64_t budget, std::uint64_t seed, bool emit_witness,
               const std::string& format) {
  OracleOptions opts;
  opts.budget = budget;
  opts.seed = seed;
  const OracleResult r = min_edges_exhaustive(l, n, opts);
  if (format == "json") {
    Json out = {{"schema", schema("oracle")}, {"l", l}, {"n", n}, {"value", count_json(r.value)},
                {"nodes", r.nodes_explored},
                {"witness", r.witness ? Json(write_graph6(*r.witness)) : Json(nullptr)}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "e(3," << l << ";" << n << ") = " << r.value.str() << "  (" << r.nodes_explored
              << " nodes)\n";
    if (emit_witness && r.witness) std::cout << write_graph6(*r.witness) << '\n';
  }
  return kOk;
}

int run_crossval(Globals& g, int l_min, int l_max, int n_max, std::uint64_t budget,
                 const std::string& format) {
  OracleOptions opts;
  opts.budget = budget;
  const CrossValidationReport report = cross_validate(l_min, l_max, n_max, g.table.get(), opts);
  if (format == "json") {
    Json cells = Json::array();
    for (const auto& c : report.cells) {
      cells.push_back({{"l", c.l}, {"n", c.n}, {"oracle", count_json(c.oracle)},
                       {"table", bound_json(c.table)}, {"pass", c.pass}});
    }
    Json out = {{"schema", schema("crossval")}, {"pass", report.all_pass()}, {"cells", cells}};
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << report.matrix();
    std::cout << (report.all_pass() ? "all cells agree\n" : "MISMATCH\n");
  }
  return report.all_pass() ? kOk : kNegative;
}

int run_pattern(const std::string& path, const std::string& format) {
  Graph6Reader reader(path);
  std::string line;
  std::size_t line_no = 0;
  Json items = Json::array();
  while (reader.next(line, line_no)) {
    const PatternSummary s = summarize_pattern(parse_graph6_line(line));
    const PatternPrediction p = pattern_predict(s);
    if (format == "json") {
      items.push_back({{"pattern", line}, {"alpha", p.alpha}, {"n", p.n}, {"e", p.e}});
    } else {
      std::cout << line << "  -> (alpha " << p.alpha << ", n " << p.n << ", e " << p.e << ")\n";
    }
  }
  if (format == "json") std::cout << Json{{"schema", schema("pattern")}, {"patterns", items}}.dump(2) << '\n';
  return kOk;
}

int run_verify(const std::string& path, int l, std::optional<int> n, std::optional<std::int64_t> e,
               unsigned jobs, const std::string& format) {
  constexpr std::size_t kChunk = 4096;
  Graph6Reader reader(path);
  jobs = std::max(1U, jobs);

  std::size_t total = 0;
  std::size_t passed = 0;
  std::size_t with_k24 = 0;
  std::optional<int> min_degree;
  std::optional<std::string> first_error;
  bool done = false;
  std::vector<VerifyRecord> chunk;

  while (!done) {
    chunk.clear();
    std::string line;
    std::size_t line_no = 0;
    while (chunk.size() < kChunk && reader.next(line, line_no)) {
      chunk.push_back({line_no, line, {}, {}, 0, false, false});
    }
    done = chunk.size() < kChunk;

    // Graphs are independent; output stays in input order.
    std::vector<std::thread> workers;
    const unsigned used = static_cast<unsigned>(std::min<std::size_t>(jobs, chunk.size()));
    for (unsigned w = 0; w < used; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t i = w; i < chunk.size(); i += used) verify_one(chunk[i], l, n, e);
      });
    }
    for (auto& t : workers) t.join();

    for (const auto& rec : chunk) {
      if (!rec.error.empty()) {
        first_error = rec.error;
        done = true;
        break;
      }
      ++total;
      passed += rec.pass ? 1 : 0;
      with_k24 += rec.has_k24 ? 1 : 0;
      min_degree = std::min(min_degree.value_or(rec.min_degree), rec.min_degree);
      if (format == "json") {
        std::cout << Json{{"line", rec.line},
                          {"n", rec.cls.n},
                          {"e", rec.cls.e},
                          {"alpha", rec.cls.alpha},
                          {"triangle_free", rec.cls.triangle_free},
                          {"min_degree", rec.min_degree},
                          {"induced_k24", rec.has_k24},
                          {"pass", rec.pass}}
                         .dump()
                  << '\n';
      } else {
        std::cout << rec.line << ": n=" << rec.cls.n << " e=" << rec.cls.e << " alpha=" << rec.cls.alpha
                  << (rec.cls.triangle_free ? " triangle-free" : " has-triangle") << " min-degree="
                  << rec.min_degree << (rec.has_k24 ? " induced-K24" : "") << "  "
                  << (rec.pass ? "pass" : "FAIL") << '\n';
      }
    }
  }
  if (first_error) throw ParseError(*first_error);

  const bool ok = total > 0 && passed == total;
  if (format == "json") {
    std::cout << Json{{"schema", schema("verify")},
                      {"graphs", total},
                      {"passed", passed},
                      {"min_degree", min_degree ? Json(*min_degree) : Json(nullptr)},
                      {"all_contain_induced_k24", total > 0 && with_k24 == total},
                      {"pass", ok}}
                     .dump()
              << '\n';
  } else {
    std::cout << "summary: " << passed << "/" << total << " pass";
    if (min_degree) std::cout << ", min degree " << *min_degree;
    std::cout << ", induced K24 in " << with_k24 << "/" << total << '\n';
  }
  return ok ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bounds, feasibility checks and exhaustive search for e(3,l;n)"};
  app.require_subcommand(1);
  Globals globals;
  app.add_option("--data", globals.table.path, "Bounds data file replacing the built-in copy")
      ->check(CLI::ExistingFile);

  int l = 0;
  int n = 0;
  std::int64_t e = 0;
  std::string format = "text";
  const std::vector<std::string> text_formats{"text", "json"};

  auto* bounds = app.add_subcommand("bounds", "Best known bounds on e(3,l;n)");
  bounds->add_option("--l", l, "Independence bound l")->required();
  bounds->add_option("--n", n, "Vertex count")->required();
  bounds->add_option("--format", format)->check(CLI::IsMember(text_formats));

  std::string l_range;
  std::string n_range;
  std::string table_format = "md";
  std::string infinity = "top";
  auto* table = app.add_subcommand("table", "Render a block of the bounds table");
  table->add_option("--l,--l-range", l_range, "Columns, e.g. 7-10")->required();
  table->add_option("--n,--n-range", n_range, "Rows, e.g. 22-34")->required();
  table->add_option("--format", table_format)->check(CLI::IsMember({"md", "csv", "json"}));
  table->add_option("--infinity", infinity, "Print only the top infinity of a column or all")
      ->check(CLI::IsMember({"top", "all"}));

  std::string refine = "r1";
  auto* feasible = app.add_subcommand("feasible", "Degree distributions with non-negative defect");
  feasible->add_option("--l", l)->required();
  feasible->add_option("--n", n)->required();
  feasible->add_option("--e", e)->required();
  feasible->add_option("--refine", refine, "r1,r2,r3 | all | none");
  feasible->add_option("--format", format)->check(CLI::IsMember(text_formats));

  auto* raise = app.add_subcommand("raise", "Smallest edge count the degree counting allows");
  raise->add_option("--l", l)->required();
  raise->add_option("--n", n)->required();
  raise->add_option("--refine", refine, "r1,r2,r3 | all | none");
  raise->add_option("--format", format)->check(CLI::IsMember(text_formats));

  std::string which;
  std::string offsets;
  auto* construct = app.add_subcommand("construct", "Write a named graph as graph6");
  construct->add_option("graph", which)
      ->required()
      ->check(CLI::IsMember({"w13", "tesseract", "petersen", "circulant"}));
  auto* n_opt = construct->add_option("--n", n, "Order of a circulant");
  auto* offsets_opt = construct->add_option("--offsets", offsets, "Circulant offsets, e.g. 1,5");

  std::uint64_t budget = OracleOptions{}.budget;
  std::uint64_t seed = 0;
  bool emit_witness = false;
  auto* oracle = app.add_subcommand("oracle", "Exact e(3,l;n) by exhaustive search");
  oracle->add_option("--l", l)->required();
  oracle->add_option("--n", n)->required();
  oracle->add_option("--budget", budget, "Search nodes before giving up");
  oracle->add_option("--seed", seed, "Shuffle candidate order (result unchanged)");
  oracle->add_flag("--emit-witness", emit_witness, "Print a minimum witness as graph6");
  oracle->add_option("--format", format)->check(CLI::IsMember(text_formats));

  int l_min = 2;
  int l_max = 5;
  int n_max = 11;
  auto* crossval = app.add_subcommand("crossval", "Compare the search with the table");
  crossval->add_option("--l-min", l_min);
  crossval->add_option("--l-max", l_max);
  crossval->add_option("--n-max", n_max);
  crossval->add_option("--budget", budget);
  crossval->add_option("--format", format)->check(CLI::IsMember(text_formats));

  std::string input;
  auto* pattern = app.add_subcommand("pattern", "Predict (alpha, n, e) for pattern graphs in graph6");
  pattern->add_option("file", input, "graph6 input (default stdin)");
  pattern->add_option("--format", format)->check(CLI::IsMember(text_formats));

  std::optional<int> verify_n;
  std::optional<std::int64_t> verify_e;
  unsigned jobs = 1;
  auto* verify = app.add_subcommand("verify", "Check graph6 graphs are (3,l;n,e)-graphs");
  verify->add_option("file", input, "graph6 input (default stdin)");
  verify->add_option("--l", l)->required();
  verify->add_option("--n", verify_n);
  verify->add_option("--e", verify_e);
  verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  verify->add_option("--format", format)->check(CLI::IsMember(text_formats));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*bounds) return run_bounds(globals, l, n, format);
    if (*table) return run_table(globals, l_range, n_range, table_format, infinity);
    if (*feasible) return run_feasible(globals, l, n, e, refine, format);
    if (*raise) return run_raise(globals, l, n, refine, format);
    if (*construct) {
      if (which == "circulant" && (n_opt->count() == 0 || offsets_opt->count() == 0)) {
        std::cerr << "error: circulant needs --n and --offsets\n";
        return kUsage;
      }
      return run_construct(which, n, offsets);
    }
    if (*oracle) return run_oracle(l, n, budget, seed, emit_witness, format);
    if (*crossval) return run_crossval(globals, l_min, l_max, n_max, budget, format);
    if (*pattern) return run_pattern(input, format);
    if (*verify) return run_verify(input, l, verify_n, verify_e, jobs, format);
  } catch (const Inconclusive& err) {
    std::cerr << "inconclusive: " << err.what() << '\n';
    return kInconclusive;
  } catch (const ParseError& err) {
    std::cerr << "input error: " << err.what() << '\n';
    return kUsage;
  } catch (const DomainError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const BoundsConflict& err) {
    std::cerr << "data error: " << err.what() << '\n';
    return kUsage;
  } catch (const UnknownRegion& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kUsage;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kInconclusive;
  }
  return kUsage;
}
