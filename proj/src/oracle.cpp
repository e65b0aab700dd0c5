#include "graphlet/oracle.hpp"

#include <algorithm>
#include <array>
#include <sstream>
#include <unordered_map>

#include "graphlet/conversion.hpp"

namespace graphlet {

namespace {

// Local patterns use indices 0..k-1 with the distinguished vertex at 0.
// Edge bitmask over the pair slots (0,1),(0,2),(0,3),(1,2),(1,3),(2,3).
constexpr int kPairSlot[4][4] = {
    {-1, 0, 1, 2},
    {0, -1, 3, 4},
    {1, 3, -1, 5},
    {2, 4, 5, -1},
};

int pattern_key(int k, int mask) { return (k << 6) | mask; }

// Permutations of local indices that keep the distinguished vertex at 0.
const std::vector<std::array<int, 4>>& fixing_permutations(int k) {
  static const std::vector<std::array<int, 4>> k1{{0, 1, 2, 3}};
  static const std::vector<std::array<int, 4>> k3{{0, 1, 2, 3}, {0, 2, 1, 3}};
  static const std::vector<std::array<int, 4>> k4{
      {0, 1, 2, 3}, {0, 1, 3, 2}, {0, 2, 1, 3},
      {0, 2, 3, 1}, {0, 3, 1, 2}, {0, 3, 2, 1}};
  switch (k) {
    case 3: return k3;
    case 4: return k4;
    default: return k1;  // k <= 2: identity only
  }
}

int canonical_code(int k, int mask) {
  int best = mask;
  for (const auto& perm : fixing_permutations(k)) {
    int relabeled = 0;
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j)
        if (mask & (1 << kPairSlot[i][j]))
          relabeled |= 1 << kPairSlot[perm[i]][perm[j]];
    best = std::min(best, relabeled);
  }
  return best;
}

struct ReferencePattern {
  int id;
  int k;
  std::vector<std::pair<int, int>> edges;  // distinguished vertex = 0
};

const std::unordered_map<int, int>& pattern_table() {
  static const std::unordered_map<int, int> table = [] {
    const std::vector<ReferencePattern> refs = {
        {0, 1, {}},
        {1, 2, {{0, 1}}},
        {2, 3, {{0, 1}, {1, 2}}},           // 2-path, end
        {3, 3, {{1, 0}, {0, 2}}},           // bi-fork, root
        {4, 3, {{0, 1}, {0, 2}, {1, 2}}},   // triangle
        {5, 4, {{0, 1}, {1, 2}, {2, 3}}},   // 3-path, end
        {6, 4, {{1, 0}, {0, 2}, {2, 3}}},   // 3-path, interior
        {7, 4, {{1, 0}, {1, 2}, {1, 3}}},   // claw, leaf
        {8, 4, {{0, 1}, {0, 2}, {0, 3}}},   // claw, root
        {9, 4, {{0, 1}, {1, 2}, {1, 3}, {2, 3}}},   // dipper, handle tip
        {10, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}}},  // dipper, base node
        {11, 4, {{0, 1}, {0, 2}, {0, 3}, {2, 3}}},  // dipper, center
        {12, 4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}}},  // 4-cycle
        {13, 4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}}},  // diamond, off-cord
        {14, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}},  // diamond, on-cord
        {15, 4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}},  // K4
    };
    std::unordered_map<int, int> t;
    for (const auto& r : refs) {
      int mask = 0;
      for (auto [a, b] : r.edges) mask |= 1 << kPairSlot[a][b];
      int key = pattern_key(r.k, canonical_code(r.k, mask));
      if (!t.emplace(key, r.id).second)
        throw Error("duplicate canonical pattern code");
    }
    if (t.size() != kNumGraphlets)
      throw Error("incomplete canonical pattern table");
    return t;
  }();
  return table;
}

void check_cap(const SparseAdjacency& g, const OracleOptions& opt) {
  if (g.num_vertices() > opt.cap)
    throw StructuralError("oracle cap exceeded: " +
                          std::to_string(g.num_vertices()) + " vertices > " +
                          std::to_string(opt.cap));
}

}  // namespace

NetFrequencyField oracle_net(const SparseAdjacency& g, OracleOptions opt) {
  check_cap(g, opt);
  const vertex_t n = g.num_vertices();
  NetFrequencyField net(n, Dictionary::all());

  std::array<vertex_t, 4> sub;
  auto classify_and_count = [&](int k) {
    // induced adjacency mask over the subset
    for (int slot = 0; slot < k; ++slot) {
      int mask = 0;
      // place the distinguished vertex at local 0, keep the others in order
      std::array<vertex_t, 4> local;
      local[0] = sub[slot];
      int idx = 1;
      for (int t = 0; t < k; ++t)
        if (t != slot) local[idx++] = sub[t];
      for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
          if (g.has_edge(local[i], local[j])) mask |= 1 << kPairSlot[i][j];
      auto it = pattern_table().find(pattern_key(k, canonical_code(k, mask)));
      if (it == pattern_table().end())
        throw Error("unclassifiable induced pattern (internal defect)");
      ++net.of(local[0], it->second);
    }
  };

  // Connected-subset enumeration: each connected subset of size <= 4 whose
  // minimum vertex is v appears exactly once in the recursion rooted at v.
  for (vertex_t v = 0; v < n; ++v) {
    sub[0] = v;
    classify_and_count(1);
    std::vector<vertex_t> ext0;
    for (vertex_t u : g.row(v))
      if (u > v) ext0.push_back(u);

    // recursive lambda over (depth, extension set)
    auto extend = [&](auto&& self, int depth, std::vector<vertex_t> ext) -> void {
      while (!ext.empty()) {
        vertex_t w = ext.back();
        ext.pop_back();
        sub[depth] = w;
        classify_and_count(depth + 1);
        if (depth + 1 < 4) {
          std::vector<vertex_t> next = ext;
          for (vertex_t u : g.row(w)) {
            if (u <= v) continue;
            bool fresh = true;
            for (int t = 0; t <= depth && fresh; ++t) {
              if (sub[t] == u || (sub[t] != w && g.has_edge(sub[t], u)))
                fresh = false;
            }
            if (fresh) next.push_back(u);
          }
          self(self, depth + 1, std::move(next));
        }
      }
    };
    extend(extend, 1, std::move(ext0));
  }
  return net;
}

RawFrequencyField oracle_raw(const SparseAdjacency& g, OracleOptions opt) {
  check_cap(g, opt);
  const vertex_t n = g.num_vertices();
  RawFrequencyField raw(n, Dictionary::all());

  for (vertex_t v = 0; v < n; ++v) {
    raw.of(v, 0) = 1;
    raw.of(v, 1) = static_cast<count_t>(g.degree(v));
  }

  // 2-paths as center + unordered neighbor pairs.
  for (vertex_t j = 0; j < n; ++j) {
    auto r = g.row(j);
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b) {
        ++raw.of(r[a], 2);
        ++raw.of(r[b], 2);
        ++raw.of(j, 3);
      }
  }

  // triangles once per sorted triple, via the max-endpoint rule
  std::vector<std::array<vertex_t, 3>> triangles;
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b : g.row(a)) {
      if (b <= a) continue;
      for (vertex_t c : g.row(b)) {
        if (c <= b) continue;
        if (g.has_edge(a, c)) triangles.push_back({a, b, c});
      }
    }
  for (const auto& t : triangles)
    for (vertex_t x : t) ++raw.of(x, 4);

  // 3-paths as ordered walks with distinct vertices: each undirected path
  // is seen once per direction, giving +1 to each end (position 1) and each
  // interior (position 2).
  for (vertex_t w = 0; w < n; ++w)
    for (vertex_t x : g.row(w))
      for (vertex_t y : g.row(x)) {
        if (y == w) continue;
        for (vertex_t z : g.row(y)) {
          if (z == x || z == w) continue;
          ++raw.of(w, 5);
          ++raw.of(x, 6);
        }
      }

  // claws as center + unordered neighbor triples
  for (vertex_t c = 0; c < n; ++c) {
    auto r = g.row(c);
    for (std::size_t a = 0; a < r.size(); ++a)
      for (std::size_t b = a + 1; b < r.size(); ++b)
        for (std::size_t d = b + 1; d < r.size(); ++d) {
          ++raw.of(c, 8);
          ++raw.of(r[a], 7);
          ++raw.of(r[b], 7);
          ++raw.of(r[d], 7);
        }
  }

  // dippers: triangle + pendant edge at one of its vertices
  for (const auto& t : triangles)
    for (int s = 0; s < 3; ++s) {
      vertex_t center = t[s];
      vertex_t base1 = t[(s + 1) % 3], base2 = t[(s + 2) % 3];
      for (vertex_t tip : g.row(center)) {
        if (tip == base1 || tip == base2) continue;
        ++raw.of(tip, 9);
        ++raw.of(base1, 10);
        ++raw.of(base2, 10);
        ++raw.of(center, 11);
      }
    }

  // 4-cycles via diametrical pairs: every cycle has two, so halve at the end
  {
    std::vector<count_t> twice(static_cast<std::size_t>(n), 0);
    std::vector<vertex_t> common;
    for (vertex_t i = 0; i < n; ++i)
      for (vertex_t k = i + 1; k < n; ++k) {
        common.clear();
        auto ri = g.row(i), rk = g.row(k);
        std::size_t x = 0, y = 0;
        while (x < ri.size() && y < rk.size()) {
          if (ri[x] == rk[y]) {
            common.push_back(ri[x]);
            ++x;
            ++y;
          } else if (ri[x] < rk[y]) {
            ++x;
          } else {
            ++y;
          }
        }
        for (std::size_t a = 0; a < common.size(); ++a)
          for (std::size_t b = a + 1; b < common.size(); ++b) {
            twice[i] += 1;
            twice[k] += 1;
            twice[common[a]] += 1;
            twice[common[b]] += 1;
          }
      }
    for (vertex_t v = 0; v < n; ++v) raw.of(v, 12) = twice[v] / 2;
  }

  // diamonds: cord edge + two common neighbors of its ends
  for (vertex_t a = 0; a < n; ++a)
    for (vertex_t b : g.row(a)) {
      if (b <= a) continue;
      std::vector<vertex_t> common;
      for (vertex_t c : g.row(a))
        if (c != b && g.has_edge(b, c)) common.push_back(c);
      for (std::size_t x = 0; x < common.size(); ++x)
        for (std::size_t y = x + 1; y < common.size(); ++y) {
          ++raw.of(a, 14);
          ++raw.of(b, 14);
          ++raw.of(common[x], 13);
          ++raw.of(common[y], 13);
        }
    }

  // K4: each clique is reached from all 6 of its edges, so divide by 6
  {
    std::vector<count_t> six(static_cast<std::size_t>(n), 0);
    for (vertex_t a = 0; a < n; ++a)
      for (vertex_t b : g.row(a)) {
        if (b <= a) continue;
        std::vector<vertex_t> common;
        for (vertex_t c : g.row(a))
          if (c != b && g.has_edge(b, c)) common.push_back(c);
        for (std::size_t x = 0; x < common.size(); ++x)
          for (std::size_t y = x + 1; y < common.size(); ++y)
            if (g.has_edge(common[x], common[y])) {
              six[a] += 1;
              six[b] += 1;
              six[common[x]] += 1;
              six[common[y]] += 1;
            }
      }
    for (vertex_t v = 0; v < n; ++v) raw.of(v, 15) = six[v] / 6;
  }

  return raw;
}

std::string CrossCheckReport::summary() const {
  std::ostringstream out;
  out << "leg 1 (fast raw == oracle raw):  " << (raw_ok ? "pass" : "FAIL")
      << "\n";
  out << "leg 2 (fast net == oracle net):  " << (net_ok ? "pass" : "FAIL")
      << "\n";
  out << "leg 3 (U * oracle net == oracle raw): "
      << (conversion_ok ? "pass" : "FAIL") << "\n";
  if (first_mismatch) {
    out << "first mismatch [" << first_mismatch->leg << "] vertex "
        << first_mismatch->vertex << ", graphlet "
        << first_mismatch->graphlet_id << ": expected "
        << first_mismatch->expected << ", got " << first_mismatch->actual
        << "\n";
  }
  out << (all_passed() ? "all legs pass" : "cross-check FAILED");
  return out.str();
}

CrossCheckReport cross_check(const SparseAdjacency& g,
                             const RawFrequencyField& fast_raw,
                             const NetFrequencyField& fast_net,
                             OracleOptions opt) {
  if (fast_raw.dictionary() != Dictionary::all() ||
      fast_net.dictionary() != Dictionary::all())
    throw Error("cross_check requires full-dictionary fields");
  RawFrequencyField oraw = oracle_raw(g, opt);
  NetFrequencyField onet = oracle_net(g, opt);
  RawFrequencyField from_net = apply_conversion(onet, full_u16());

  CrossCheckReport report;
  auto compare = [&](const char* leg, const FrequencyField& expected,
                     const FrequencyField& actual, bool& ok) {
    ok = true;
    for (vertex_t v = 0; v < g.num_vertices() && ok; ++v)
      for (int id = 0; id < kNumGraphlets && ok; ++id)
        if (expected.of(v, id) != actual.of(v, id)) {
          ok = false;
          if (!report.first_mismatch)
            report.first_mismatch = {leg, v, id, expected.of(v, id),
                                     actual.of(v, id)};
        }
  };
  compare("fast raw vs oracle raw", oraw, fast_raw, report.raw_ok);
  compare("fast net vs oracle net", onet, fast_net, report.net_ok);
  compare("U*oracle net vs oracle raw", oraw, from_net, report.conversion_ok);
  return report;
}

count_t count_triangles(const SparseAdjacency& g) {
  count_t total = 0;
  for (vertex_t a = 0; a < g.num_vertices(); ++a)
    for (vertex_t b : g.row(a)) {
      if (b <= a) continue;
      for (vertex_t c : g.row(b))
        if (c > b && g.has_edge(a, c)) ++total;
    }
  return total;
}

count_t count_four_cycles(const SparseAdjacency& g) {
  const vertex_t n = g.num_vertices();
  count_t twice = 0;
  for (vertex_t i = 0; i < n; ++i)
    for (vertex_t k = i + 1; k < n; ++k) {
      auto ri = g.row(i), rk = g.row(k);
      count_t common = 0;
      std::size_t x = 0, y = 0;
      while (x < ri.size() && y < rk.size()) {
        if (ri[x] == rk[y]) {
          ++common;
          ++x;
          ++y;
        } else if (ri[x] < rk[y]) {
          ++x;
        } else {
          ++y;
        }
      }
      twice += common * sat_sub(common, 1) / 2;
    }
  return twice / 2;
}

count_t count_tetrahedra(const SparseAdjacency& g) {
  count_t six = 0;
  for (vertex_t a = 0; a < g.num_vertices(); ++a)
    for (vertex_t b : g.row(a)) {
      if (b <= a) continue;
      std::vector<vertex_t> common;
      for (vertex_t c : g.row(a))
        if (c != b && g.has_edge(b, c)) common.push_back(c);
      for (std::size_t x = 0; x < common.size(); ++x)
        for (std::size_t y = x + 1; y < common.size(); ++y)
          if (g.has_edge(common[x], common[y])) ++six;
    }
  return six / 6;
}

}  // namespace graphlet
