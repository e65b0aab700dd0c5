#pragma once

#include <cassert>
#include <cstdint>
#include <span>

#include "graphlet/instrumentation.hpp"
#include "graphlet/types.hpp"

namespace graphlet {

// Dense scratch + touched stack for masked row merges. Reset cost is
// proportional to the number of touched entries, never to n. One instance
// per worker thread; add() calls are counted so passes can report against
// the 2*d_max*m bound.
class SparseRowAccumulator {
 public:
  explicit SparseRowAccumulator(vertex_t n)
      : values_(static_cast<std::size_t>(n), 0),
        touched_(static_cast<std::size_t>(n), 0) {}

  void add(vertex_t j, count_t v) {
    ++touches_;
    if (values_[j] == 0) touched_[n_touched_++] = j;
    values_[j] += v;
  }

  count_t value(vertex_t j) const { return values_[j]; }

  std::span<const vertex_t> touched() const {
    return {touched_.data(), n_touched_};
  }

  void reset() {
    for (std::size_t t = 0; t < n_touched_; ++t) values_[touched_[t]] = 0;
    n_touched_ = 0;
  }

  count_t touches() const { return touches_; }

 private:
  TrackedVector<count_t> values_;
  TrackedVector<vertex_t> touched_;
  std::size_t n_touched_ = 0;
  count_t touches_ = 0;
};

// Epoch-stamped membership marks; begin_epoch() invalidates all marks in
// O(1). Backs the source masks of the masked kernels.
class VertexMarker {
 public:
  explicit VertexMarker(vertex_t n)
      : stamp_(static_cast<std::size_t>(n), 0) {}

  void begin_epoch() {
    if (++epoch_ == 0) {  // wrapped: clear and restart
      for (auto& s : stamp_) s = 0;
      epoch_ = 1;
    }
  }

  void mark(vertex_t v) { stamp_[v] = epoch_; }
  bool is_marked(vertex_t v) const { return stamp_[v] == epoch_; }

 private:
  TrackedVector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
};

}  // namespace graphlet
