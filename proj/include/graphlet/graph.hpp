#pragma once

#include <istream>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "graphlet/types.hpp"

namespace graphlet {

enum class EdgeOrigin {
  kEdgeList,
  kMatrixMarketGeneral,
  kMatrixMarketSymmetric,
  kSynthetic,
};

// Staging area between the parsers and build_adjacency. May still contain
// duplicates, self-loops, and single orientations.
struct EdgeCollection {
  std::vector<std::pair<vertex_t, vertex_t>> edges;
  std::optional<vertex_t> declared_n;
  EdgeOrigin origin = EdgeOrigin::kSynthetic;

  bool declared_symmetric() const {
    return origin == EdgeOrigin::kMatrixMarketSymmetric;
  }
};

struct SanitizeOptions {
  bool symmetrize = true;
  bool drop_self_loops = true;
  bool dedupe = true;
};

// Immutable symmetric 0/1 adjacency in CSR form. Invariants: zero diagonal,
// column indices strictly increasing within each row, j in row(i) iff
// i in row(j). Safe to share across threads.
class SparseAdjacency {
 public:
  SparseAdjacency() = default;
  SparseAdjacency(std::vector<std::int64_t> row_offsets,
                  std::vector<vertex_t> col_indices);

  vertex_t num_vertices() const { return n_; }
  count_t num_edges() const { return m_; }  // undirected edge count
  vertex_t max_degree() const { return d_max_; }

  vertex_t degree(vertex_t v) const {
    return static_cast<vertex_t>(row_offsets_[v + 1] - row_offsets_[v]);
  }

  std::span<const vertex_t> row(vertex_t v) const {
    return {col_indices_.data() + row_offsets_[v],
            col_indices_.data() + row_offsets_[v + 1]};
  }

  bool has_edge(vertex_t u, vertex_t v) const;

  const std::vector<std::int64_t>& row_offsets() const { return row_offsets_; }
  const std::vector<vertex_t>& col_indices() const { return col_indices_; }

  // Full invariant check; throws StructuralError on violation.
  void validate() const;

 private:
  vertex_t n_ = 0;
  count_t m_ = 0;
  vertex_t d_max_ = 0;
  std::vector<std::int64_t> row_offsets_{0};
  std::vector<vertex_t> col_indices_;
};

struct BuildReport {
  count_t self_loops_dropped = 0;
  count_t duplicates_merged = 0;  // undirected edges merged away
};

struct BuildResult {
  SparseAdjacency graph;
  BuildReport report;
};

// Whitespace-separated "u v" pairs, one per line; '#'/'%' comment lines and
// blank lines are skipped. Ids are nonnegative integers used verbatim as
// 0-based vertex ids.
EdgeCollection parse_edge_list(std::istream& in);

// Matrix Market coordinate format, pattern/real field, general/symmetric
// symmetry. 1-based ids are shifted to 0-based; declared_n comes from the
// size header; symmetric files emit each stored entry once.
EdgeCollection parse_matrix_market(std::istream& in);

BuildResult build_adjacency(const EdgeCollection& ec,
                            const SanitizeOptions& opt = {});

// p1 = A e, the ordinary degree of every vertex.
std::vector<count_t> degree_vector(const SparseAdjacency& g);

}  // namespace graphlet
