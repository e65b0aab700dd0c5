#pragma once

#include <optional>
#include <string>

#include "graphlet/fields.hpp"
#include "graphlet/graph.hpp"
#include "graphlet/types.hpp"

namespace graphlet {

// Brute-force reference for graphs small enough to enumerate. Independent
// of the fast kernels: net counts come from connected induced-subgraph
// enumeration with canonical classification, raw counts from direct
// embedding enumeration.
struct OracleOptions {
  vertex_t cap = 200;  // maximum vertex count
};

// Full 16-column net field: every connected induced subgraph on <= 4
// vertices is classified, per member vertex, by the canonical code of the
// pattern with that vertex distinguished.
NetFrequencyField oracle_net(const SparseAdjacency& g, OracleOptions opt = {});

// Full 16-column raw field by direct subgraph-embedding enumeration.
RawFrequencyField oracle_raw(const SparseAdjacency& g, OracleOptions opt = {});

struct CrossCheckReport {
  struct Mismatch {
    std::string leg;
    vertex_t vertex;
    int graphlet_id;
    count_t expected;
    count_t actual;
  };
  bool raw_ok = false;         // fast raw == oracle raw
  bool net_ok = false;         // fast net == oracle net
  bool conversion_ok = false;  // U * oracle net == oracle raw
  std::optional<Mismatch> first_mismatch;

  bool all_passed() const { return raw_ok && net_ok && conversion_ok; }
  std::string summary() const;
};

// Three mutually independent consistency legs over the full dictionary.
CrossCheckReport cross_check(const SparseAdjacency& g,
                             const RawFrequencyField& fast_raw,
                             const NetFrequencyField& fast_net,
                             OracleOptions opt = {});

// Whole-graph subgraph tallies by direct enumeration (triangles and K4 as
// vertex subsets, 4-cycles as cyclic subgraphs, chords allowed).
count_t count_triangles(const SparseAdjacency& g);
count_t count_four_cycles(const SparseAdjacency& g);
count_t count_tetrahedra(const SparseAdjacency& g);

}  // namespace graphlet
