#include "graphlet/kernels.hpp"

#include <algorithm>
#include <atomic>
#include <cassert>
#include <chrono>

#include "graphlet/accumulator.hpp"
#include "graphlet/instrumentation.hpp"
#include "graphlet/parallel.hpp"

namespace graphlet {

namespace {

using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
  return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

std::size_t count_words(std::size_t n) { return words_of<count_t>(n); }

}  // namespace

std::vector<count_t> compute_p2(const SparseAdjacency& g,
                                const std::vector<count_t>& p1, int threads) {
  const vertex_t n = g.num_vertices();
  std::vector<count_t> p2(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(count_words(p2.size()));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      count_t acc = 0;
      for (vertex_t j : g.row(i)) acc += p1[j];
      p2[i] = sat_sub(acc, p1[i]);  // c2 = p1
    }
  });
  return p2;
}

std::pair<std::vector<count_t>, SparseCountMatrix> compute_c3_C3(
    const SparseAdjacency& g, int threads) {
  const vertex_t n = g.num_vertices();
  const auto& offsets = g.row_offsets();
  TrackedVector<count_t> tracked_values(g.col_indices().size(), 0);
  auto& values = tracked_values.get();

  // Each entry (i,j) with i<j computed once by sorted-list intersection and
  // mirrored into (j,i); the mirror slot has a single writer.
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      auto ri = g.row(i);
      for (std::size_t a = 0; a < ri.size(); ++a) {
        vertex_t j = ri[a];
        if (j < i) continue;
        auto rj = g.row(j);
        count_t common = 0;
        std::size_t x = 0, y = 0;
        while (x < ri.size() && y < rj.size()) {
          if (ri[x] == rj[y]) {
            ++common;
            ++x;
            ++y;
          } else if (ri[x] < rj[y]) {
            ++x;
          } else {
            ++y;
          }
        }
        values[offsets[i] + static_cast<std::int64_t>(a)] = common;
        auto pos = std::lower_bound(rj.begin(), rj.end(), i) - rj.begin();
        values[offsets[j] + pos] = common;
      }
    }
  });

  std::vector<count_t> c3(static_cast<std::size_t>(n), 0);
  ScratchLease c3_lease(count_words(c3.size()));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      count_t sum = 0;
      for (std::int64_t k = offsets[i]; k < offsets[i + 1]; ++k)
        sum += values[k];
      assert(sum % 2 == 0);
      c3[i] = sum / 2;
    }
  });
  return {std::move(c3), SparseCountMatrix(g, tracked_values.take())};
}

std::vector<count_t> compute_p3(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                const std::vector<count_t>& p2,
                                const std::vector<count_t>& c3, int threads) {
  const vertex_t n = g.num_vertices();
  std::vector<count_t> p3(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(count_words(p3.size()));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      count_t walk = 0;
      for (vertex_t j : g.row(i)) walk += p2[j];
      count_t backtrack = p1[i] * sat_sub(p1[i], 1) + 2 * c3[i];
      p3[i] = sat_sub(walk, backtrack);
    }
  });
  return p3;
}

FourCycleResult compute_c4_d14(const SparseAdjacency& g, int threads) {
  const vertex_t n = g.num_vertices();
  FourCycleResult out;
  out.c4.assign(static_cast<std::size_t>(n), 0);
  out.d14.assign(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(2 * count_words(static_cast<std::size_t>(n)));
  std::atomic<count_t> total_touches{0};

  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    SparseRowAccumulator acc(n);
    VertexMarker neighbor_of_i(n);
    for (vertex_t i = begin; i < end; ++i) {
      // Row i of the 2-path matrix: merge neighbor rows, skip the diagonal.
      for (vertex_t j : g.row(i))
        for (vertex_t k : g.row(j))
          if (k != i) acc.add(k, 1);

      neighbor_of_i.begin_epoch();
      for (vertex_t j : g.row(i)) neighbor_of_i.mark(j);

      count_t c4i = 0, d14i = 0;
      for (vertex_t k : acc.touched()) {
        count_t v = acc.value(k);
        count_t pairs = v * (v - 1) / 2;  // distinct 4-cycles via diametral k
        c4i += pairs;
        if (neighbor_of_i.is_marked(k)) d14i += pairs;
      }
      out.c4[i] = c4i;
      out.d14[i] = d14i;
      acc.reset();
    }
    total_touches.fetch_add(acc.touches(), std::memory_order_relaxed);
  });

  out.accumulator_touches = total_touches.load();
  assert(out.accumulator_touches <=
         2 * static_cast<count_t>(g.max_degree()) * g.num_edges());
  return out;
}

std::vector<count_t> compute_d7(const SparseAdjacency& g,
                                const std::vector<count_t>& p1, int threads) {
  const vertex_t n = g.num_vertices();
  std::vector<count_t> d7(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(count_words(d7.size()));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      count_t acc = 0;
      for (vertex_t j : g.row(i))
        acc = checked_add(acc, choose2(sat_sub(p1[j], 1), 7, i), 7, i);
      d7[i] = acc;
    }
  });
  return d7;
}

std::vector<count_t> compute_d8(const std::vector<count_t>& p1, int threads) {
  std::vector<count_t> d8(p1.size(), 0);
  ScratchLease out_lease(count_words(d8.size()));
  parallel_for(static_cast<std::int64_t>(p1.size()), threads,
               [&](std::int64_t begin, std::int64_t end, int) {
                 for (std::int64_t i = begin; i < end; ++i)
                   d8[i] = choose3(p1[i], 8, i);
               });
  return d8;
}

DipperCounts compute_d9_d10_d11(const SparseAdjacency& g,
                                const std::vector<count_t>& p1,
                                const std::vector<count_t>& c3,
                                const SparseCountMatrix& C3, int threads) {
  const vertex_t n = g.num_vertices();
  DipperCounts out;
  out.d9.assign(static_cast<std::size_t>(n), 0);
  out.d10.assign(static_cast<std::size_t>(n), 0);
  out.d11.assign(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(3 * count_words(static_cast<std::size_t>(n)));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t i = begin; i < end; ++i) {
      count_t neighbor_triangles = 0;
      count_t base = 0;
      auto row = g.row(i);
      auto vals = C3.row_values(i);
      for (std::size_t a = 0; a < row.size(); ++a) {
        vertex_t j = row[a];
        neighbor_triangles =
            checked_add(neighbor_triangles, c3[j], 9, i);
        base = checked_add(
            base, checked_mul(vals[a], sat_sub(p1[j], 2), 10, i), 10, i);
      }
      out.d9[i] = sat_sub(neighbor_triangles, 2 * c3[i]);
      out.d10[i] = base;
      out.d11[i] = checked_mul(sat_sub(p1[i], 2), c3[i], 11, i);
    }
  });
  return out;
}

std::vector<count_t> compute_d13(const SparseAdjacency& g,
                                 const SparseCountMatrix& C3, int threads) {
  const vertex_t n = g.num_vertices();
  std::vector<count_t> d13(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(count_words(d13.size()));
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    VertexMarker neighbor_of_i(n);
    for (vertex_t i = begin; i < end; ++i) {
      neighbor_of_i.begin_epoch();
      for (vertex_t j : g.row(i)) neighbor_of_i.mark(j);
      // Row of A(C3 - A) masked by row(i): for j ~ i, sum (C3(j,k) - 1)
      // over k in row(j) ∩ row(i).
      count_t total = 0;
      for (vertex_t j : g.row(i)) {
        auto rj = g.row(j);
        auto vj = C3.row_values(j);
        for (std::size_t b = 0; b < rj.size(); ++b)
          if (neighbor_of_i.is_marked(rj[b]))
            total += sat_sub(vj[b], 1);
      }
      assert(total % 2 == 0);
      d13[i] = total / 2;
    }
  });
  return d13;
}

std::vector<count_t> compute_d15(const SparseAdjacency& g, int threads) {
  const vertex_t n = g.num_vertices();
  threads = resolve_threads(threads);
  const int workers =
      n < 2 * static_cast<vertex_t>(threads) ? 1 : threads;

  std::vector<TrackedVector<count_t>> partial;
  partial.reserve(static_cast<std::size_t>(workers));
  for (int w = 0; w < workers; ++w)
    partial.emplace_back(static_cast<std::size_t>(n), 0);

  parallel_for(n, workers, [&](vertex_t begin, vertex_t end, int worker) {
    VertexMarker neighbor_of_i(n);
    VertexMarker in_q(n);
    std::vector<vertex_t> q;
    q.reserve(static_cast<std::size_t>(g.max_degree()));
    auto& sums = partial[static_cast<std::size_t>(worker)];
    for (vertex_t i = begin; i < end; ++i) {
      neighbor_of_i.begin_epoch();
      for (vertex_t j : g.row(i)) neighbor_of_i.mark(j);
      for (vertex_t j : g.row(i)) {
        if (j <= i) continue;
        q.clear();
        for (vertex_t k : g.row(j))
          if (neighbor_of_i.is_marked(k)) q.push_back(k);
        if (q.size() < 2) continue;
        in_q.begin_epoch();
        for (vertex_t k : q) in_q.mark(k);
        // ordered adjacent pairs within q
        count_t t = 0;
        for (vertex_t k : q) {
          if (static_cast<std::size_t>(g.degree(k)) <= q.size()) {
            for (vertex_t l : g.row(k))
              if (in_q.is_marked(l)) ++t;
          } else {
            for (vertex_t l : q)
              if (l != k && g.has_edge(k, l)) ++t;
          }
        }
        sums[i] += t;
        sums[static_cast<std::size_t>(j)] += t;
      }
    }
  });

  std::vector<count_t> d15(static_cast<std::size_t>(n), 0);
  ScratchLease out_lease(count_words(d15.size()));
  for (auto& p : partial)
    for (vertex_t v = 0; v < n; ++v) d15[v] += p[v];
  for (vertex_t v = 0; v < n; ++v) {
    assert(d15[v] % 6 == 0);
    d15[v] /= 6;
  }
  return d15;
}

namespace {

// Fills one output column, bounds-checked against 64-bit overflow.
template <typename F>
void fill_column(RawFrequencyField& out, int id, vertex_t n, int threads,
                 F&& value_of) {
  if (!out.dictionary().contains(id)) return;
  std::size_t col = out.dictionary().position_of(id);
  parallel_for(n, threads, [&](vertex_t begin, vertex_t end, int) {
    for (vertex_t v = begin; v < end; ++v) out.at(v, col) = value_of(v);
  });
}

}  // namespace

RawFrequencyField raw_frequencies(const SparseAdjacency& g,
                                  const Dictionary& dict,
                                  const KernelOptions& opt,
                                  TransformStats* stats) {
  const vertex_t n = g.num_vertices();
  const int threads = resolve_threads(opt.threads);
  auto plan = resolve_dependencies(dict);
  MemoryTracker::instance().reset();
  RawFrequencyField out(n, dict);
  TransformStats local_stats;
  local_stats.threads_used = threads;
  local_stats.p2_touch_bound =
      2 * static_cast<count_t>(g.max_degree()) * g.num_edges();

  std::vector<count_t> p1, p2, p3, c3, c4, d14v;
  SparseCountMatrix C3;
  ScratchLease p1_lease, p2_lease, p3_lease, c3_lease, c4_lease, d14_lease;

  auto timed = [&](const char* name, auto&& body) {
    auto t0 = clock_t_::now();
    body();
    local_stats.kernel_times.push_back({name, seconds_since(t0)});
  };

  for (AuxStep step : plan) {
    switch (step) {
      case AuxStep::kDegrees:
        timed(aux_step_name(step), [&] {
          p1 = degree_vector(g);
          p1_lease = ScratchLease(count_words(p1.size()));
        });
        break;
      case AuxStep::kTriangles:
        timed(aux_step_name(step), [&] {
          auto [vec, mat] = compute_c3_C3(g, threads);
          c3 = std::move(vec);
          c3_lease = ScratchLease(count_words(c3.size()));
          C3 = std::move(mat);
        });
        break;
      case AuxStep::kTwoPaths:
        timed(aux_step_name(step), [&] {
          p2 = compute_p2(g, p1, threads);
          p2_lease = ScratchLease(count_words(p2.size()));
        });
        break;
      case AuxStep::kThreePaths:
        timed(aux_step_name(step), [&] {
          p3 = compute_p3(g, p1, p2, c3, threads);
          p3_lease = ScratchLease(count_words(p3.size()));
        });
        break;
      case AuxStep::kFourCycles:
        timed(aux_step_name(step), [&] {
          auto r = compute_c4_d14(g, threads);
          c4 = std::move(r.c4);
          d14v = std::move(r.d14);
          c4_lease = ScratchLease(count_words(c4.size()));
          d14_lease = ScratchLease(count_words(d14v.size()));
          local_stats.p2_row_touches = r.accumulator_touches;
        });
        break;
      case AuxStep::kDiamonds:
        timed(aux_step_name(step), [&] {
          auto d13 = compute_d13(g, C3, threads);
          fill_column(out, 13, n, threads,
                      [&d13](vertex_t v) { return d13[v]; });
        });
        break;
      case AuxStep::kTetrahedra:
        timed(aux_step_name(step), [&] {
          auto d15 = compute_d15(g, threads);
          fill_column(out, 15, n, threads,
                      [&d15](vertex_t v) { return d15[v]; });
        });
        break;
    }
  }

  timed("column fill", [&] {
    fill_column(out, 0, n, threads, [](vertex_t) { return count_t{1}; });
    fill_column(out, 1, n, threads, [&](vertex_t v) { return p1[v]; });
    fill_column(out, 2, n, threads, [&](vertex_t v) { return p2[v]; });
    fill_column(out, 3, n, threads,
                [&](vertex_t v) { return choose2(p1[v], 3, v); });
    fill_column(out, 4, n, threads, [&](vertex_t v) { return c3[v]; });
    fill_column(out, 5, n, threads, [&](vertex_t v) { return p3[v]; });
    fill_column(out, 6, n, threads, [&](vertex_t v) {
      return sat_sub(checked_mul(p2[v], sat_sub(p1[v], 1), 6, v), 2 * c3[v]);
    });
    if (dict.contains(7)) {
      auto d7 = compute_d7(g, p1, threads);
      fill_column(out, 7, n, threads, [&d7](vertex_t v) { return d7[v]; });
    }
    fill_column(out, 8, n, threads,
                [&](vertex_t v) { return choose3(p1[v], 8, v); });
    if (dict.contains(9) || dict.contains(10) || dict.contains(11)) {
      auto dip = compute_d9_d10_d11(g, p1, c3, C3, threads);
      fill_column(out, 9, n, threads,
                  [&dip](vertex_t v) { return dip.d9[v]; });
      fill_column(out, 10, n, threads,
                  [&dip](vertex_t v) { return dip.d10[v]; });
      fill_column(out, 11, n, threads,
                  [&dip](vertex_t v) { return dip.d11[v]; });
    }
    fill_column(out, 12, n, threads, [&](vertex_t v) { return c4[v]; });
    fill_column(out, 14, n, threads, [&](vertex_t v) { return d14v[v]; });
  });

  local_stats.peak_aux_words = MemoryTracker::instance().peak_words();
  local_stats.largest_aux_alloc_words =
      MemoryTracker::instance().largest_single_alloc_words();
  if (stats) *stats = local_stats;
  return out;
}

}  // namespace graphlet
