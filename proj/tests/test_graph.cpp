#include <doctest.h>

#include <sstream>

#include "graphlet/graph.hpp"
#include "testutil.hpp"

using namespace graphlet;

TEST_CASE("edge list: plain pairs in file order") {
  std::istringstream in("1 2\n2 3");
  auto ec = parse_edge_list(in);
  REQUIRE(ec.edges.size() == 2);
  CHECK(ec.edges[0] == std::pair<vertex_t, vertex_t>{1, 2});
  CHECK(ec.edges[1] == std::pair<vertex_t, vertex_t>{2, 3});
  CHECK(!ec.declared_n.has_value());
}

TEST_CASE("edge list: comments, blanks, and self-loops pass through") {
  std::istringstream in("# c\n\n5 5");
  auto ec = parse_edge_list(in);
  REQUIRE(ec.edges.size() == 1);
  CHECK(ec.edges[0] == std::pair<vertex_t, vertex_t>{5, 5});
}

TEST_CASE("edge list: % comments and whitespace tolerated") {
  std::istringstream in("% header\n  0\t3 \n");
  auto ec = parse_edge_list(in);
  REQUIRE(ec.edges.size() == 1);
  CHECK(ec.edges[0] == std::pair<vertex_t, vertex_t>{0, 3});
}

TEST_CASE("edge list: malformed tokens carry the line number") {
  std::istringstream bad_token("0 1\nx 2\n");
  CHECK_THROWS_WITH_AS(parse_edge_list(bad_token),
                       doctest::Contains("line 2"), ParseError);
  std::istringstream negative("0 -1\n");
  CHECK_THROWS_AS(parse_edge_list(negative), ParseError);
  std::istringstream three_tokens("0 1 7\n");
  CHECK_THROWS_AS(parse_edge_list(three_tokens), ParseError);
}

TEST_CASE("edge list: the 9-line illustration graph") {
  std::ostringstream text;
  for (auto [u, v] : testutil::demo_edges()) text << u << " " << v << "\n";
  std::istringstream in(text.str());
  auto ec = parse_edge_list(in);
  CHECK(ec.edges.size() == 9);
}

TEST_CASE("matrix market: basic coordinate pattern") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "3 3 2\n"
      "1 2\n"
      "2 3\n");
  auto ec = parse_matrix_market(in);
  REQUIRE(ec.edges.size() == 2);
  CHECK(ec.edges[0] == std::pair<vertex_t, vertex_t>{0, 1});
  CHECK(ec.edges[1] == std::pair<vertex_t, vertex_t>{1, 2});
  CHECK(ec.declared_n == 3);
  CHECK(!ec.declared_symmetric());
}

TEST_CASE("matrix market: entry out of declared range") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate pattern general\n"
      "3 3 1\n"
      "4 1\n");
  CHECK_THROWS_WITH_AS(parse_matrix_market(in),
                       doctest::Contains("out of declared range"), ParseError);
}

TEST_CASE("matrix market: format errors") {
  std::istringstream arr(
      "%%MatrixMarket matrix array real general\n2 2\n1\n2\n3\n4\n");
  CHECK_THROWS_AS(parse_matrix_market(arr), ParseError);
  std::istringstream rect(
      "%%MatrixMarket matrix coordinate pattern general\n3 4 1\n1 2\n");
  CHECK_THROWS_WITH_AS(parse_matrix_market(rect),
                       doctest::Contains("dimension mismatch"), ParseError);
  std::istringstream truncated(
      "%%MatrixMarket matrix coordinate pattern general\n3 3 2\n1 2\n");
  CHECK_THROWS_AS(parse_matrix_market(truncated), ParseError);
  std::istringstream herm(
      "%%MatrixMarket matrix coordinate real hermitian\n2 2 1\n1 2 1.0\n");
  CHECK_THROWS_AS(parse_matrix_market(herm), ParseError);
}

TEST_CASE("matrix market: symmetric pattern of the illustration graph") {
  std::ostringstream text;
  text << "%%MatrixMarket matrix coordinate pattern symmetric\n"
       << "% illustration graph\n"
       << "6 6 9\n";
  for (auto [u, v] : testutil::demo_edges())
    text << std::max(u, v) + 1 << " " << std::min(u, v) + 1 << "\n";
  std::istringstream in(text.str());
  auto ec = parse_matrix_market(in);
  CHECK(ec.edges.size() == 9);
  CHECK(ec.declared_n == 6);
  CHECK(ec.declared_symmetric());

  auto [g, report] = build_adjacency(ec, {.symmetrize = false});
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 9);
}

TEST_CASE("matrix market: real field values are accepted as pattern") {
  std::istringstream in(
      "%%MatrixMarket matrix coordinate real symmetric\n"
      "2 2 1\n"
      "2 1 3.5\n");
  auto ec = parse_matrix_market(in);
  REQUIRE(ec.edges.size() == 1);
  CHECK(ec.edges[0] == std::pair<vertex_t, vertex_t>{1, 0});
}

TEST_CASE("build: illustration graph degrees") {
  auto g = testutil::demo_graph();
  CHECK(g.num_vertices() == 6);
  CHECK(g.num_edges() == 9);
  auto deg = degree_vector(g);
  CHECK(deg == std::vector<count_t>{2, 4, 3, 4, 4, 1});
  CHECK(g.max_degree() == 4);
  g.validate();
}

TEST_CASE("build: empty collection with declared n") {
  EdgeCollection ec;
  ec.declared_n = 3;
  auto [g, report] = build_adjacency(ec);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 0);
  for (vertex_t v = 0; v < 3; ++v) CHECK(g.row(v).empty());
  CHECK(degree_vector(g) == std::vector<count_t>{0, 0, 0});
}

TEST_CASE("build: sanitization drops loops and merges duplicates") {
  EdgeCollection ec;
  ec.edges = {{0, 1}, {1, 0}, {0, 1}, {2, 2}};
  auto [g, report] = build_adjacency(ec);
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 1);
  CHECK(report.self_loops_dropped == 1);
  CHECK(report.duplicates_merged == 2);
}

TEST_CASE("build: policy violations are hard errors") {
  EdgeCollection one_sided;
  one_sided.edges = {{0, 1}};
  CHECK_THROWS_AS(build_adjacency(one_sided, {.symmetrize = false}),
                  StructuralError);

  EdgeCollection loop;
  loop.edges = {{0, 1}, {1, 0}, {2, 2}};
  CHECK_THROWS_AS(
      build_adjacency(loop, {.symmetrize = true, .drop_self_loops = false}),
      StructuralError);

  EdgeCollection dup;
  dup.edges = {{0, 1}, {0, 1}};
  SanitizeOptions no_dedupe;
  no_dedupe.dedupe = false;
  CHECK_THROWS_AS(build_adjacency(dup, no_dedupe), StructuralError);
}

TEST_CASE("build: both-orientation input works without symmetrize") {
  EdgeCollection ec;
  ec.edges = {{0, 1}, {1, 0}, {1, 2}, {2, 1}};
  auto [g, report] = build_adjacency(ec, {.symmetrize = false});
  CHECK(g.num_edges() == 2);
  CHECK(degree_vector(g) == std::vector<count_t>{1, 2, 1});
}

TEST_CASE("degree examples") {
  auto path = testutil::path_graph(4);
  CHECK(degree_vector(path) == std::vector<count_t>{1, 2, 2, 1});
  EdgeCollection ec;
  ec.declared_n = 5;
  auto [edgeless, r] = build_adjacency(ec);
  CHECK(degree_vector(edgeless) == std::vector<count_t>(5, 0));
}

TEST_CASE("round trip: emit and re-parse reproduces the structure") {
  std::mt19937_64 seeds(20260811);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testutil::er_graph(30, 0.2, seeds());
    std::istringstream in(testutil::to_edge_list(g));
    auto ec = parse_edge_list(in);
    ec.declared_n = g.num_vertices();
    auto [h, report] = build_adjacency(ec);
    CHECK(g.row_offsets() == h.row_offsets());
    CHECK(g.col_indices() == h.col_indices());
  }
}

TEST_CASE("symmetry: transposed input builds the same structure") {
  std::mt19937_64 seeds(77);
  for (int trial = 0; trial < 10; ++trial) {
    auto g = testutil::er_graph(25, 0.3, seeds());
    EdgeCollection swapped;
    swapped.declared_n = g.num_vertices();
    for (vertex_t v = 0; v < g.num_vertices(); ++v)
      for (vertex_t u : g.row(v))
        if (u > v) swapped.edges.emplace_back(u, v);
    auto [h, report] = build_adjacency(swapped);
    CHECK(g.row_offsets() == h.row_offsets());
    CHECK(g.col_indices() == h.col_indices());
  }
}

TEST_CASE("degree sum is exactly twice the edge count") {
  std::mt19937_64 seeds(4242);
  for (int trial = 0; trial < 20; ++trial) {
    auto g = testutil::er_graph(40, 0.15, seeds());
    auto deg = degree_vector(g);
    count_t total = 0;
    for (count_t d : deg) total += d;
    CHECK(total == 2 * g.num_edges());
  }
}
