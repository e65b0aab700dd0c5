#include <doctest.h>

#include "graphlet/conversion.hpp"
#include "graphlet/kernels.hpp"
#include "graphlet/oracle.hpp"
#include "testutil.hpp"

using namespace graphlet;

namespace {

// Independent classification by simple invariants (edge count, degree of the
// distinguished vertex, maximum degree) — deliberately a different route
// than the canonical-code table.
int classify_by_invariants(int k, int edges, int deg_v, int max_deg) {
  if (k == 1) return 0;
  if (k == 2) return 1;
  if (k == 3) {
    if (edges == 2) return deg_v == 1 ? 2 : 3;
    return 4;
  }
  switch (edges) {
    case 3:
      if (max_deg == 3) return deg_v == 1 ? 7 : 8;
      return deg_v == 1 ? 5 : 6;
    case 4:
      if (max_deg == 2) return 12;
      if (deg_v == 1) return 9;
      return deg_v == 3 ? 11 : 10;
    case 5:
      return deg_v == 2 ? 13 : 14;
    default:
      return 15;
  }
}

// All-subsets reference for tiny graphs: loops over every vertex subset of
// size <= 4, keeps the connected induced ones, classifies by invariants.
NetFrequencyField subsets_net(const SparseAdjacency& g) {
  const vertex_t n = g.num_vertices();
  NetFrequencyField net(n, Dictionary::all());
  std::vector<vertex_t> sub;

  auto process = [&](const std::vector<vertex_t>& s) {
    int k = static_cast<int>(s.size());
    int edges = 0;
    std::array<int, 4> deg{};
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (g.has_edge(s[a], s[b])) {
          ++edges;
          ++deg[a];
          ++deg[b];
        }
    // connectivity by union of incident edges
    std::array<int, 4> comp{0, 1, 2, 3};
    auto root = [&](int x) {
      while (comp[x] != x) x = comp[x];
      return x;
    };
    for (int a = 0; a < k; ++a)
      for (int b = a + 1; b < k; ++b)
        if (g.has_edge(s[a], s[b])) comp[root(a)] = root(b);
    for (int a = 1; a < k; ++a)
      if (root(a) != root(0)) return;
    int max_deg = 0;
    for (int a = 0; a < k; ++a) max_deg = std::max(max_deg, deg[a]);
    for (int a = 0; a < k; ++a)
      ++net.of(s[a], classify_by_invariants(k, edges, deg[a], max_deg));
  };

  for (vertex_t a = 0; a < n; ++a) {
    process({a});
    for (vertex_t b = a + 1; b < n; ++b) {
      process({a, b});
      for (vertex_t c = b + 1; c < n; ++c) {
        process({a, b, c});
        for (vertex_t d = c + 1; d < n; ++d) process({a, b, c, d});
      }
    }
  }
  return net;
}

}  // namespace

TEST_CASE("oracle net: illustration graph bottom table") {
  auto g = testutil::demo_graph();
  auto net = oracle_net(g);
  const auto& expected = testutil::demo_net_table();
  for (vertex_t v = 0; v < 6; ++v)
    for (int id = 0; id < 16; ++id)
      CHECK(net.of(v, id) == expected[v][id]);
}

TEST_CASE("oracle net: cliques and singletons") {
  auto k4 = testutil::complete_graph(4);
  auto net = oracle_net(k4);
  for (vertex_t v = 0; v < 4; ++v)
    for (int id = 0; id < 16; ++id) {
      count_t expected = 0;
      if (id == 0) expected = 1;
      if (id == 1) expected = 3;
      if (id == 4) expected = 3;
      if (id == 15) expected = 1;
      CHECK(net.of(v, id) == expected);
    }

  auto single = testutil::from_pairs({}, 1);
  auto snet = oracle_net(single);
  CHECK(snet.of(0, 0) == 1);
  for (int id = 1; id < 16; ++id) CHECK(snet.of(0, id) == 0);
}

TEST_CASE("oracle net agrees with the all-subsets reference") {
  std::mt19937_64 seeds(112358);
  for (int trial = 0; trial < 12; ++trial) {
    auto g = testutil::er_graph(11, 0.35, seeds());
    CHECK(oracle_net(g) == subsets_net(g));
  }
  CHECK(oracle_net(testutil::complete_graph(6)) ==
        subsets_net(testutil::complete_graph(6)));
  CHECK(oracle_net(testutil::star_graph(5)) ==
        subsets_net(testutil::star_graph(5)));
}

TEST_CASE("oracle raw: illustration graph top table") {
  auto g = testutil::demo_graph();
  auto raw = oracle_raw(g);
  const auto& expected = testutil::demo_raw_table();
  for (vertex_t v = 0; v < 6; ++v)
    for (int id = 0; id < 16; ++id)
      CHECK(raw.of(v, id) == expected[v][id]);
}

TEST_CASE("oracle raw: hand-counted examples") {
  auto path = testutil::path_graph(4);
  auto raw = oracle_raw(path);
  CHECK(raw.of(0, 5) == 1);
  CHECK(raw.of(1, 5) == 0);
  CHECK(raw.of(2, 5) == 0);
  CHECK(raw.of(3, 5) == 1);

  auto k4 = testutil::complete_graph(4);
  auto kraw = oracle_raw(k4);
  for (vertex_t v = 0; v < 4; ++v) CHECK(kraw.of(v, 2) == 6);
}

TEST_CASE("oracle raw dominates oracle net") {
  std::mt19937_64 seeds(1123);
  for (int trial = 0; trial < 6; ++trial) {
    auto g = testutil::er_graph(18, 0.3, seeds());
    auto raw = oracle_raw(g);
    auto net = oracle_net(g);
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
      for (int id = 0; id < 16; ++id) CHECK(raw.of(v, id) >= net.of(v, id));
  }
}

TEST_CASE("oracles are permutation equivariant") {
  auto g = testutil::er_graph(14, 0.3, 47);
  auto pi = testutil::random_permutation(g.num_vertices(), 48);
  auto h = testutil::permute_graph(g, pi);
  auto raw_g = oracle_raw(g), raw_h = oracle_raw(h);
  auto net_g = oracle_net(g), net_h = oracle_net(h);
  for (vertex_t v = 0; v < g.num_vertices(); ++v)
    for (int id = 0; id < 16; ++id) {
      CHECK(raw_g.of(v, id) == raw_h.of(pi[v], id));
      CHECK(net_g.of(v, id) == net_h.of(pi[v], id));
    }
}

TEST_CASE("oracle cap") {
  auto g = testutil::er_graph(30, 0.1, 7);
  OracleOptions opt;
  opt.cap = 20;
  CHECK_THROWS_AS(oracle_net(g, opt), StructuralError);
  CHECK_THROWS_AS(oracle_raw(g, opt), StructuralError);
}

TEST_CASE("cross check: all legs pass on valid inputs") {
  auto g = testutil::demo_graph();
  auto raw = raw_frequencies(g, Dictionary::all());
  auto net = net_from_raw(raw, full_u16());
  auto report = cross_check(g, raw, net);
  CHECK(report.all_passed());
  CHECK(report.summary().find("all legs pass") != std::string::npos);

  auto er = testutil::er_graph(25, 0.2, 20200811);
  auto eraw = raw_frequencies(er, Dictionary::all());
  auto enet = net_from_raw(eraw, full_u16());
  CHECK(cross_check(er, eraw, enet).all_passed());
}

TEST_CASE("cross check: corrupted inputs are localized") {
  auto g = testutil::demo_graph();
  auto raw = raw_frequencies(g, Dictionary::all());
  auto net = net_from_raw(raw, full_u16());

  SUBCASE("corrupted fast raw fails leg 1 with coordinates") {
    auto bad = raw;
    bad.of(2, 4) += 1;
    auto report = cross_check(g, bad, net);
    CHECK(!report.raw_ok);
    CHECK(report.net_ok);
    CHECK(report.conversion_ok);
    REQUIRE(report.first_mismatch.has_value());
    CHECK(report.first_mismatch->vertex == 2);
    CHECK(report.first_mismatch->graphlet_id == 4);
  }

  SUBCASE("corrupted conversion table fails the algebra leg") {
    // same pattern, one wrong coefficient
    std::vector<std::vector<count_t>> dense(16, std::vector<count_t>(16, 0));
    for (std::size_t r = 0; r < 16; ++r)
      for (std::size_t c = 0; c < 16; ++c)
        dense[r][c] = full_u16().coeff(r, c);
    dense[2][4] = 3;
    ConversionMatrix corrupted(full_u16().ids(), dense);
    auto onet = oracle_net(g);
    auto oraw = oracle_raw(g);
    CHECK(apply_conversion(onet, corrupted) != oraw);
    CHECK(apply_conversion(onet, full_u16()) == oraw);
  }
}

TEST_CASE("whole-graph tallies") {
  auto g = testutil::demo_graph();
  CHECK(count_triangles(g) == 5);
  CHECK(count_tetrahedra(g) == 1);
  CHECK(count_four_cycles(testutil::cycle_graph(4)) == 1);
  CHECK(count_four_cycles(testutil::complete_graph(4)) == 3);
  CHECK(count_tetrahedra(testutil::complete_graph(5)) == 5);
  CHECK(count_triangles(testutil::random_tree(30, 11)) == 0);
}
