#pragma once

#include "graphlet/conversion.hpp"
#include "graphlet/kernels.hpp"

namespace graphlet {

struct TransformOptions {
  Dictionary dict = Dictionary::all();
  int threads = 0;       // 0: hardware concurrency
  bool lenient = false;  // rectify negative conversion intermediates
};

struct TransformResult {
  RawFrequencyField raw;
  NetFrequencyField net;
  TransformStats stats;
};

// The end-to-end transform: raw frequencies by the sparse kernels, then the
// exact raw-to-net conversion with the dictionary's sub-matrix.
TransformResult transform(const SparseAdjacency& g,
                          const TransformOptions& opt = {});

}  // namespace graphlet
