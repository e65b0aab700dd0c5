#pragma once

#include <string>
#include <utility>
#include <vector>

#include "graphlet/fields.hpp"
#include "graphlet/graph.hpp"
#include "graphlet/instrumentation.hpp"
#include "graphlet/types.hpp"

namespace graphlet {

// Symmetric count matrix sharing the adjacency's CSR pattern; used for the
// per-edge triangle counts. Never denser than A. Its value storage is
// charged to the scratch tracker for its whole lifetime.
class SparseCountMatrix {
 public:
  SparseCountMatrix() = default;
  SparseCountMatrix(const SparseAdjacency& pattern, std::vector<count_t> values)
      : pattern_(&pattern),
        values_(std::move(values)),
        lease_(words_of<count_t>(values_.size())) {}

  const SparseAdjacency& pattern() const { return *pattern_; }

  // Values aligned with pattern().row(v).
  std::span<const count_t> row_values(vertex_t v) const {
    const auto& off = pattern_->row_offsets();
    return {values_.data() + off[v], values_.data() + off[v + 1]};
  }

  const std::vector<count_t>& values() const { return values_; }
  bool empty() const { return pattern_ == nullptr; }

 private:
  const SparseAdjacency* pattern_ = nullptr;
  std::vector<count_t> values_;
  ScratchLease lease_;
};

// p2 = A p1 - c2 with c2 = p1; the 2-path matrix is never formed.
std::vector<count_t> compute_p2(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                int threads = 1);

// Per-edge triangle counts (A masked onto A^2, built row by row from
// neighbor-list intersections) and c3 = row sums / 2.
std::pair<std::vector<count_t>, SparseCountMatrix> compute_c3_C3(
    const SparseAdjacency& g, int threads = 1);

// p3 = A p2 - p1 (x) (p1 - 1) - 2 c3; the 3-path matrix is never formed.
std::vector<count_t> compute_p3(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                const std::vector<count_t>& p2,
                                const std::vector<count_t>& c3,
                                int threads = 1);

struct FourCycleResult {
  std::vector<count_t> c4;    // 4-cycles through each vertex
  std::vector<count_t> d14;   // diamond-at-cord raw counts
  count_t accumulator_touches = 0;  // adds in the 2-path-row pass
};

// Fused pass: builds each 2-path row on the fly and consumes it for both
// c4 and the cord counts; neither the 2-path matrix nor its Hadamard
// square is ever stored.
FourCycleResult compute_c4_d14(const SparseAdjacency& g, int threads = 1);

// Claw at a leaf: neighbors' bi-fork counts.
std::vector<count_t> compute_d7(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                int threads = 1);

// Claw at the root: p1 choose 3.
std::vector<count_t> compute_d8(const std::vector<count_t>& p1,
                                int threads = 1);

struct DipperCounts {
  std::vector<count_t> d9;   // at the handle tip
  std::vector<count_t> d10;  // at a base node
  std::vector<count_t> d11;  // at the center
};

DipperCounts compute_d9_d10_d11(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                const std::vector<count_t>& c3,
                                const SparseCountMatrix& C3,
                                int threads = 1);

// Diamond at an off-cord node; the off-cord row products are consumed on
// the fly against the adjacency mask.
std::vector<count_t> compute_d13(const SparseAdjacency& g,
                                 const SparseCountMatrix& C3,
                                 int threads = 1);

// Tetrahedra per vertex via common-neighborhood products over edges.
std::vector<count_t> compute_d15(const SparseAdjacency& g, int threads = 1);

struct KernelTiming {
  std::string name;
  double seconds = 0.0;
};

struct TransformStats {
  std::vector<KernelTiming> kernel_times;
  count_t p2_row_touches = 0;   // accumulator adds in the fused pass
  count_t p2_touch_bound = 0;   // 2 * d_max * m
  std::size_t peak_aux_words = 0;
  std::size_t largest_aux_alloc_words = 0;
  int threads_used = 1;
};

struct KernelOptions {
  int threads = 0;  // 0: hardware concurrency
};

// Fills every selected raw column, running exactly the auxiliary passes the
// dictionary demands, in the fixed evaluation order.
RawFrequencyField raw_frequencies(const SparseAdjacency& g,
                                  const Dictionary& dict,
                                  const KernelOptions& opt = {},
                                  TransformStats* stats = nullptr);

}  // namespace graphlet
