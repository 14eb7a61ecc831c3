#include "enumbers/graph6.hpp"

#include "enumbers/errors.hpp"

namespace enumbers {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";
constexpr int kBias = 63;

int decode_byte(char c) {
  const int v = static_cast<unsigned char>(c) - kBias;
  if (v < 0 || v > 63) {
    throw ParseError("byte " + std::to_string(static_cast<unsigned char>(c)) +
                     " outside the graph6 range 63..126");
  }
  return v;
}

}  // namespace

Graph parse_graph6_line(std::string_view line) {
  if (line.starts_with(kHeader)) line.remove_prefix(kHeader.size());
  if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  if (line.empty()) throw ParseError("empty graph6 record");
  if (line.front() == ':' || line.front() == ';') throw ParseError("sparse6 input is not supported");
  if (line.front() == '&') throw ParseError("digraph6 input is not supported");

  std::size_t pos = 0;
  long n = 0;
  if (line[0] != '~') {
    n = decode_byte(line[0]);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == '~') {
    if (line.size() < 8) throw ParseError("truncated 8-byte vertex count");
    for (std::size_t i = 2; i < 8; ++i) n = (n << 6) | decode_byte(line[i]);
    pos = 8;
  } else {
    if (line.size() < 4) throw ParseError("truncated 4-byte vertex count");
    for (std::size_t i = 1; i < 4; ++i) n = (n << 6) | decode_byte(line[i]);
    pos = 4;
  }
  if (n > Graph::kMaxVertices) {
    throw ParseError("vertex count " + std::to_string(n) + " exceeds the supported 128");
  }

  const long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  const std::string_view body = line.substr(pos);
  if (body.size() < need) {
    throw ParseError("truncated bit stream: expected " + std::to_string(need) + " bytes, got " +
                     std::to_string(body.size()));
  }
  if (body.size() > need) throw ParseError("trailing bytes after graph6 record");

  Graph g(static_cast<int>(n));
  long k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = decode_byte(body[static_cast<std::size_t>(k / 6)]);
      if ((byte >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  // Padding bits must be zero in a well-formed record.
  for (; k < static_cast<long>(need) * 6; ++k) {
    const int byte = decode_byte(body[static_cast<std::size_t>(k / 6)]);
    if ((byte >> (5 - k % 6)) & 1) throw ParseError("non-zero padding bits");
  }
  return g;
}

std::vector<Graph> parse_graph6(std::string_view text) {
  std::vector<Graph> out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty() || line == kHeader) continue;
    try {
      out.push_back(parse_graph6_line(line));
    } catch (const ParseError& err) {
      throw ParseError("line " + std::to_string(line_no) + ": " + err.what());
    }
  }
  return out;
}

std::string write_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }
  }
  int acc = 0;
  int filled = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + kBias));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + kBias));
  return out;
}

}  // namespace enumbers
