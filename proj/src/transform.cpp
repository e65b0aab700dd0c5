#include "graphlet/transform.hpp"

#include <chrono>

#include "graphlet/parallel.hpp"

namespace graphlet {

TransformResult transform(const SparseAdjacency& g,
                          const TransformOptions& opt) {
  KernelOptions kopt;
  kopt.threads = opt.threads;
  TransformStats stats;
  RawFrequencyField raw = raw_frequencies(g, opt.dict, kopt, &stats);

  auto t0 = std::chrono::steady_clock::now();
  ConversionMatrix u = sub_matrix(opt.dict);
  NetFrequencyField net =
      net_from_raw(raw, u, opt.lenient, resolve_threads(opt.threads));
  stats.kernel_times.push_back(
      {"conversion",
       std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
           .count()});

  return {std::move(raw), std::move(net), std::move(stats)};
}

}  // namespace graphlet
