#include "graphlet/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <string>

namespace graphlet {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j])))
      ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::int64_t parse_int(std::string_view tok, std::size_t line_no,
                       const char* what) {
  std::int64_t v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("line " + std::to_string(line_no) + ": malformed " +
                     what + " '" + std::string(tok) + "'");
  return v;
}

std::string lower(std::string_view s) {
  std::string out(s);
  for (auto& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

EdgeCollection parse_edge_list(std::istream& in) {
  EdgeCollection ec;
  ec.origin = EdgeOrigin::kEdgeList;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '#' || body.front() == '%') continue;
    auto toks = split_ws(body);
    if (toks.size() != 2)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'u v', got " + std::to_string(toks.size()) +
                       " tokens");
    vertex_t u = parse_int(toks[0], line_no, "vertex id");
    vertex_t v = parse_int(toks[1], line_no, "vertex id");
    if (u < 0 || v < 0)
      throw ParseError("line " + std::to_string(line_no) +
                       ": negative vertex id");
    ec.edges.emplace_back(u, v);
  }
  return ec;
}

EdgeCollection parse_matrix_market(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty Matrix Market stream");
  ++line_no;
  auto banner = split_ws(line);
  if (banner.size() < 5 || lower(banner[0]) != "%%matrixmarket" ||
      lower(banner[1]) != "matrix")
    throw ParseError("line 1: missing %%MatrixMarket matrix banner");
  std::string format = lower(banner[2]);
  std::string field = lower(banner[3]);
  std::string symmetry = lower(banner[4]);
  if (format != "coordinate")
    throw ParseError("line 1: only coordinate format is supported, got '" +
                     format + "'");
  bool has_value;
  if (field == "pattern")
    has_value = false;
  else if (field == "real" || field == "integer")
    has_value = true;
  else
    throw ParseError("line 1: unsupported field '" + field + "'");
  bool symmetric;
  if (symmetry == "general")
    symmetric = false;
  else if (symmetry == "symmetric")
    symmetric = true;
  else
    throw ParseError("line 1: unsupported symmetry '" + symmetry + "'");

  // size line, after any comments
  std::int64_t rows = 0, cols = 0, nnz = 0;
  for (;;) {
    if (!std::getline(in, line))
      throw ParseError("unexpected end of stream before size line");
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    auto toks = split_ws(body);
    if (toks.size() != 3)
      throw ParseError("line " + std::to_string(line_no) +
                       ": expected 'rows cols nnz'");
    rows = parse_int(toks[0], line_no, "row count");
    cols = parse_int(toks[1], line_no, "column count");
    nnz = parse_int(toks[2], line_no, "entry count");
    break;
  }
  if (rows != cols)
    throw ParseError("dimension mismatch: adjacency must be square, got " +
                     std::to_string(rows) + "x" + std::to_string(cols));
  if (rows < 0 || nnz < 0) throw ParseError("negative size header");

  EdgeCollection ec;
  ec.origin = symmetric ? EdgeOrigin::kMatrixMarketSymmetric
                        : EdgeOrigin::kMatrixMarketGeneral;
  ec.declared_n = rows;
  ec.edges.reserve(static_cast<std::size_t>(nnz));
  std::int64_t seen = 0;
  while (seen < nnz) {
    if (!std::getline(in, line))
      throw ParseError("unexpected end of stream: got " +
                       std::to_string(seen) + " of " + std::to_string(nnz) +
                       " entries");
    ++line_no;
    std::string_view body = trim(line);
    if (body.empty() || body.front() == '%') continue;
    auto toks = split_ws(body);
    std::size_t expected = has_value ? 3 : 2;
    if (toks.size() != expected)
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected) + " tokens per entry");
    vertex_t i = parse_int(toks[0], line_no, "row index");
    vertex_t j = parse_int(toks[1], line_no, "column index");
    if (i < 1 || i > rows || j < 1 || j > cols)
      throw ParseError("line " + std::to_string(line_no) + ": entry (" +
                       std::to_string(i) + "," + std::to_string(j) +
                       ") out of declared range " + std::to_string(rows));
    ec.edges.emplace_back(i - 1, j - 1);
    ++seen;
  }
  return ec;
}

SparseAdjacency::SparseAdjacency(std::vector<std::int64_t> row_offsets,
                                 std::vector<vertex_t> col_indices)
    : row_offsets_(std::move(row_offsets)),
      col_indices_(std::move(col_indices)) {
  n_ = static_cast<vertex_t>(row_offsets_.size()) - 1;
  m_ = static_cast<count_t>(col_indices_.size()) / 2;
  for (vertex_t v = 0; v < n_; ++v) d_max_ = std::max(d_max_, degree(v));
}

bool SparseAdjacency::has_edge(vertex_t u, vertex_t v) const {
  auto r = row(u);
  return std::binary_search(r.begin(), r.end(), v);
}

void SparseAdjacency::validate() const {
  if (row_offsets_.empty() || row_offsets_.front() != 0 ||
      row_offsets_.back() != static_cast<std::int64_t>(col_indices_.size()))
    throw StructuralError("corrupt row offsets");
  for (vertex_t v = 0; v < n_; ++v) {
    auto r = row(v);
    for (std::size_t k = 0; k < r.size(); ++k) {
      if (r[k] < 0 || r[k] >= n_) throw StructuralError("column out of range");
      if (r[k] == v) throw StructuralError("self-loop in adjacency");
      if (k > 0 && r[k] <= r[k - 1])
        throw StructuralError("row not strictly increasing");
      if (!has_edge(r[k], v))
        throw StructuralError("asymmetric adjacency at (" +
                              std::to_string(v) + "," + std::to_string(r[k]) +
                              ")");
    }
  }
}

BuildResult build_adjacency(const EdgeCollection& ec,
                            const SanitizeOptions& opt) {
  vertex_t n = ec.declared_n.value_or(0);
  for (auto [u, v] : ec.edges) {
    if (u < 0 || v < 0)
      throw StructuralError("negative vertex id in edge collection");
    n = std::max(n, std::max(u, v) + 1);
  }

  BuildReport report;
  bool mirror = opt.symmetrize || ec.declared_symmetric();
  std::vector<std::pair<vertex_t, vertex_t>> directed;
  directed.reserve(ec.edges.size() * (mirror ? 2 : 1));
  for (auto [u, v] : ec.edges) {
    if (u == v) {
      if (!opt.drop_self_loops)
        throw StructuralError("self-loop at vertex " + std::to_string(u) +
                              " (drop_self_loops is off)");
      ++report.self_loops_dropped;
      continue;
    }
    directed.emplace_back(u, v);
    if (mirror) directed.emplace_back(v, u);
  }

  std::sort(directed.begin(), directed.end());
  auto last = std::unique(directed.begin(), directed.end());
  std::size_t removed = static_cast<std::size_t>(directed.end() - last);
  directed.erase(last, directed.end());
  if (removed > 0) {
    if (!opt.dedupe)
      throw StructuralError("duplicate edges present (dedupe is off)");
    report.duplicates_merged = static_cast<count_t>(removed) / 2;
  }

  std::vector<std::int64_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (auto [u, v] : directed) ++offsets[static_cast<std::size_t>(u) + 1];
  for (std::size_t i = 1; i < offsets.size(); ++i) offsets[i] += offsets[i - 1];
  std::vector<vertex_t> cols(directed.size());
  for (std::size_t k = 0; k < directed.size(); ++k)
    cols[k] = directed[k].second;  // sorted pairs: rows contiguous, cols ascending

  SparseAdjacency g(std::move(offsets), std::move(cols));
  if (!mirror) {
    if (directed.size() % 2 != 0)
      throw StructuralError(
          "asymmetric input: odd number of directed entries with symmetrize "
          "off");
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
      for (vertex_t u : g.row(v))
        if (!g.has_edge(u, v))
          throw StructuralError("asymmetric input: (" + std::to_string(v) +
                                "," + std::to_string(u) +
                                ") present without its reverse and "
                                "symmetrize off");
  }
  return {std::move(g), report};
}

std::vector<count_t> degree_vector(const SparseAdjacency& g) {
  std::vector<count_t> p1(static_cast<std::size_t>(g.num_vertices()));
  for (vertex_t v = 0; v < g.num_vertices(); ++v)
    p1[static_cast<std::size_t>(v)] = static_cast<count_t>(g.degree(v));
  return p1;
}

}  // namespace graphlet
