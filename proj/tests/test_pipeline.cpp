#include <doctest.h>

#include "graphlet/oracle.hpp"
#include "graphlet/transform.hpp"
#include "testutil.hpp"

using namespace graphlet;

TEST_CASE("transform: both illustration tables in one call") {
  auto g = testutil::demo_graph();
  auto result = transform(g);
  const auto& raw_table = testutil::demo_raw_table();
  const auto& net_table = testutil::demo_net_table();
  for (vertex_t v = 0; v < 6; ++v)
    for (int id = 0; id < 16; ++id) {
      CHECK(result.raw.of(v, id) == raw_table[v][id]);
      CHECK(result.net.of(v, id) == net_table[v][id]);
    }
  CHECK(result.stats.threads_used >= 1);
  CHECK(!result.stats.kernel_times.empty());
}

TEST_CASE("transform: results are identical across thread counts") {
  auto g = testutil::er_graph(90, 0.12, 6060);
  TransformOptions one;
  one.threads = 1;
  auto base = transform(g, one);
  for (int threads : {2, 8}) {
    TransformOptions t;
    t.threads = threads;
    auto other = transform(g, t);
    CHECK(base.raw == other.raw);
    CHECK(base.net == other.net);
  }
}

TEST_CASE("transform: oracle equivalence on a mixed family") {
  std::mt19937_64 seeds(987654);
  std::vector<SparseAdjacency> graphs;
  graphs.push_back(testutil::er_graph(20, 0.2, seeds()));
  graphs.push_back(testutil::er_graph(12, 0.4, seeds()));
  graphs.push_back(testutil::random_regular(16, 3, seeds()));
  graphs.push_back(testutil::random_tree(18, seeds()));
  graphs.push_back(testutil::complete_graph(5));
  graphs.push_back(testutil::cycle_graph(7));
  graphs.push_back(testutil::star_graph(6));
  for (const auto& g : graphs) {
    auto result = transform(g);
    auto report = cross_check(g, result.raw, result.net);
    INFO("n=", g.num_vertices(), " m=", g.num_edges());
    CHECK(report.all_passed());
  }
}

TEST_CASE("transform: incomplete family goes negative without lenient") {
  // 3-paths with the diamond selected but the intermediate dipper/4-cycle
  // absorbers missing: on K4 the subtraction overshoots.
  auto k4 = testutil::complete_graph(4);
  TransformOptions opt;
  opt.dict = Dictionary::from_ids({0, 1, 5, 13});
  CHECK_THROWS_AS(transform(k4, opt), InconsistencyError);
  opt.lenient = true;
  auto result = transform(k4, opt);
  for (vertex_t v = 0; v < 4; ++v) CHECK(result.net.of(v, 5) == 0);
}

TEST_CASE("transform: sub-dictionary with closed conversion matches columns") {
  auto g = testutil::demo_graph();
  TransformOptions opt;
  opt.dict = parse_dictionary("0-4").dict;
  auto result = transform(g, opt);
  const auto& net_table = testutil::demo_net_table();
  for (vertex_t v = 0; v < 6; ++v)
    for (int id = 0; id <= 4; ++id)
      CHECK(result.net.of(v, id) == net_table[v][id]);
}

TEST_CASE("transform: only the steps the dictionary demands are run") {
  auto g = testutil::demo_graph();
  TransformOptions opt;
  opt.dict = Dictionary::from_ids({0, 1});
  auto result = transform(g, opt);
  std::vector<std::string> names;
  for (const auto& kt : result.stats.kernel_times) names.push_back(kt.name);
  CHECK(names ==
        std::vector<std::string>{"degrees", "column fill", "conversion"});

  opt.dict = Dictionary::from_ids({0, 1, 12});
  result = transform(g, opt);
  names.clear();
  for (const auto& kt : result.stats.kernel_times) names.push_back(kt.name);
  CHECK(names == std::vector<std::string>{"degrees", "four-cycle rows",
                                          "column fill", "conversion"});
}

TEST_CASE("transform: stats carry the instrumentation contract") {
  auto g = testutil::random_regular(400, 4, 11);
  TransformOptions opt;
  opt.threads = 2;
  auto result = transform(g, opt);
  CHECK(result.stats.p2_row_touches > 0);
  CHECK(result.stats.p2_row_touches <= result.stats.p2_touch_bound);
  CHECK(result.stats.peak_aux_words > 0);
  const auto n = static_cast<std::size_t>(g.num_vertices());
  const auto m = static_cast<std::size_t>(g.num_edges());
  const auto T = static_cast<std::size_t>(result.stats.threads_used);
  CHECK(result.stats.peak_aux_words <= 3 * m + (8 + 4 * T) * n + 64);
}
