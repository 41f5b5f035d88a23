#include "colorder/matrix_market.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace colorder {

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
      line_(line) {}

namespace {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool next(std::string_view& line) {
    if (pos_ >= text_.size()) return false;
    const auto end = text_.find('\n', pos_);
    const auto stop = end == std::string_view::npos ? text_.size() : end;
    line = text_.substr(pos_, stop - pos_);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    pos_ = stop + 1;
    ++number_;
    return true;
  }

  std::size_t number() const { return number_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t number_ = 0;
};

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    const std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    if (i > start) out.push_back(line.substr(start, i - start));
  }
  return out;
}

bool is_blank(std::string_view line) {
  return std::all_of(line.begin(), line.end(),
                     [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line, const char* what) {
  std::uint64_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) {
    throw ParseError(line, std::string("expected a nonnegative integer for ") + what + ", got '" +
                               std::string(token) + "'");
  }
  return value;
}

ParsedGraph finish(std::size_t n, std::vector<Edge>& edges, ParseStats stats) {
  std::size_t off_diagonal = 0;
  for (const auto& [u, v] : edges) off_diagonal += (u != v);
  ParsedGraph out{Graph::from_edge_list(n, edges), stats};
  out.stats.duplicates_merged = off_diagonal - out.graph.num_edges();
  return out;
}

}  // namespace

ParsedGraph parse_matrix_market(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  if (!reader.next(line)) throw ParseError(1, "empty input");

  const auto banner = split_ws(line);
  if (banner.empty() || lower(banner[0]) != "%%matrixmarket") {
    throw ParseError(1, "missing %%MatrixMarket banner");
  }
  if (banner.size() != 5) throw ParseError(1, "banner must have object, format, field, symmetry");
  if (lower(banner[1]) != "matrix") throw ParseError(1, "unsupported object '" + std::string(banner[1]) + "'");
  if (lower(banner[2]) != "coordinate") {
    throw ParseError(1, "only the coordinate format is supported, got '" + std::string(banner[2]) + "'");
  }
  const std::string field = lower(banner[3]);
  if (field != "pattern" && field != "real" && field != "integer" && field != "complex") {
    throw ParseError(1, "unknown field '" + std::string(banner[3]) + "'");
  }
  const std::string symmetry = lower(banner[4]);
  if (symmetry != "general" && symmetry != "symmetric" && symmetry != "skew-symmetric" &&
      symmetry != "hermitian") {
    throw ParseError(1, "unknown symmetry '" + std::string(banner[4]) + "'");
  }

  ParseStats stats;
  stats.symmetric_header = symmetry != "general";

  std::vector<std::string_view> size_tokens;
  while (reader.next(line)) {
    if (is_blank(line) || line.front() == '%') continue;
    size_tokens = split_ws(line);
    break;
  }
  if (size_tokens.empty()) throw ParseError(reader.number(), "missing size line");
  if (size_tokens.size() != 3) throw ParseError(reader.number(), "size line must be 'rows cols nnz'");
  const std::uint64_t rows = parse_uint(size_tokens[0], reader.number(), "rows");
  const std::uint64_t cols = parse_uint(size_tokens[1], reader.number(), "cols");
  const std::uint64_t nnz = parse_uint(size_tokens[2], reader.number(), "nnz");
  const std::uint64_t n = std::max(rows, cols);
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(reader.number(), "dimension exceeds 32-bit vertex ids");
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(std::min<std::uint64_t>(nnz, 1u << 26)));
  while (stats.entries < nnz && reader.next(line)) {
    if (is_blank(line) || line.front() == '%') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() < 2) throw ParseError(reader.number(), "entry needs a row and a column index");
    const std::uint64_t i = parse_uint(tokens[0], reader.number(), "row index");
    const std::uint64_t j = parse_uint(tokens[1], reader.number(), "column index");
    if (i < 1 || i > rows || j < 1 || j > cols) {
      throw ParseError(reader.number(), "index (" + std::to_string(i) + ", " + std::to_string(j) +
                                            ") outside declared " + std::to_string(rows) + "x" +
                                            std::to_string(cols));
    }
    ++stats.entries;
    if (i == j) {
      ++stats.diagonal_dropped;
      continue;
    }
    edges.emplace_back(static_cast<VertexId>(i - 1), static_cast<VertexId>(j - 1));
  }
  if (stats.entries < nnz) {
    throw ParseError(reader.number(), "expected " + std::to_string(nnz) + " entries, found " +
                                          std::to_string(stats.entries));
  }
  while (reader.next(line)) {
    if (!is_blank(line) && line.front() != '%') {
      throw ParseError(reader.number(), "more entries than the declared " + std::to_string(nnz));
    }
  }
  return finish(static_cast<std::size_t>(n), edges, stats);
}

ParsedGraph parse_edge_list(std::string_view text) {
  LineReader reader(text);
  std::string_view line;
  std::vector<std::string_view> header;
  while (reader.next(line)) {
    if (is_blank(line) || line.front() == '#' || line.front() == '%') continue;
    header = split_ws(line);
    break;
  }
  if (header.size() != 2) throw ParseError(reader.number(), "edge list must start with 'n m'");
  const std::uint64_t n = parse_uint(header[0], reader.number(), "n");
  const std::uint64_t m = parse_uint(header[1], reader.number(), "m");
  if (n > std::numeric_limits<VertexId>::max()) {
    throw ParseError(reader.number(), "vertex count exceeds 32-bit vertex ids");
  }

  ParseStats stats;
  std::vector<Edge> edges;
  while (reader.next(line)) {
    if (is_blank(line) || line.front() == '#' || line.front() == '%') continue;
    const auto tokens = split_ws(line);
    if (tokens.size() != 2) throw ParseError(reader.number(), "edge line must be 'u v'");
    const std::uint64_t u = parse_uint(tokens[0], reader.number(), "u");
    const std::uint64_t v = parse_uint(tokens[1], reader.number(), "v");
    if (u >= n || v >= n) {
      throw ParseError(reader.number(), "endpoint out of range for n = " + std::to_string(n));
    }
    ++stats.entries;
    if (u == v) ++stats.diagonal_dropped;
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  if (stats.entries != m) {
    throw ParseError(reader.number(), "header declares " + std::to_string(m) + " edges, found " +
                                          std::to_string(stats.entries));
  }
  return finish(static_cast<std::size_t>(n), edges, stats);
}

ParsedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, "cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = std::move(buffer).str();
  if (text.rfind("%%MatrixMarket", 0) == 0 || text.rfind("%%matrixmarket", 0) == 0) {
    return parse_matrix_market(text);
  }
  return parse_edge_list(text);
}

std::string write_matrix_market(const Graph& g) {
  std::ostringstream out;
  out << "%%MatrixMarket matrix coordinate pattern symmetric\n";
  out << g.num_vertices() << ' ' << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << (v + 1) << ' ' << (u + 1) << '\n';
  return std::move(out).str();
}

std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return std::move(out).str();
}

}  // namespace colorder
