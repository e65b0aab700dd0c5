#include "graphlet/conversion.hpp"

#include <cassert>

#include "graphlet/parallel.hpp"

namespace graphlet {

namespace {

// Net-to-raw coefficients, rows = raw graphlet, cols = net graphlet.
// Determined by subgraph isomorphisms between graphlets and the
// automorphisms at each incidence orbit.
constexpr count_t kU16[kNumGraphlets][kNumGraphlets] = {
    // d0 d1 d2 d3 d4 d5 d6 d7 d8 d9 d10 d11 d12 d13 d14 d15
    {1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   // raw 0
    {0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   // raw 1
    {0, 0, 1, 0, 2, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   // raw 2
    {0, 0, 0, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   // raw 3
    {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0},   // raw 4
    {0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 1, 0, 2, 4, 2, 6},   // raw 5
    {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 1, 2, 2, 2, 4, 6},   // raw 6
    {0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 1, 0, 0, 2, 1, 3},   // raw 7
    {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0, 0, 1, 1},   // raw 8
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 2, 0, 3},   // raw 9
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 2, 6},   // raw 10
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 2, 3},   // raw 11
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 3},   // raw 12
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 3},   // raw 13
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 3},   // raw 14
    {0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1},   // raw 15
};

}  // namespace

ConversionMatrix::ConversionMatrix(std::vector<int> ids,
                                   std::vector<std::vector<count_t>> dense)
    : ids_(std::move(ids)), dense_(std::move(dense)) {
  const std::size_t k = ids_.size();
  tails_.resize(k);
  for (std::size_t r = 0; r < k; ++r) {
    if (dense_[r][r] != 1)
      throw Error("conversion matrix is not unit-diagonal at row " +
                  std::to_string(r));
    for (std::size_t c = 0; c < r; ++c)
      if (dense_[r][c] != 0)
        throw Error("conversion matrix is not upper triangular at (" +
                    std::to_string(r) + "," + std::to_string(c) + ")");
    for (std::size_t c = r + 1; c < k; ++c)
      if (dense_[r][c] != 0) tails_[r].emplace_back(c, dense_[r][c]);
  }
}

const ConversionMatrix& full_u16() {
  static const ConversionMatrix u = [] {
    std::vector<int> ids(kNumGraphlets);
    std::vector<std::vector<count_t>> dense(
        kNumGraphlets, std::vector<count_t>(kNumGraphlets, 0));
    for (int i = 0; i < kNumGraphlets; ++i) {
      ids[static_cast<std::size_t>(i)] = i;
      for (int j = 0; j < kNumGraphlets; ++j)
        dense[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            kU16[i][j];
    }
    return ConversionMatrix(std::move(ids), std::move(dense));
  }();
  return u;
}

ConversionMatrix sub_matrix(const Dictionary& d) {
  const auto& ids = d.ids();
  const std::size_t k = ids.size();
  std::vector<std::vector<count_t>> dense(k, std::vector<count_t>(k, 0));
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      dense[r][c] = kU16[ids[r]][ids[c]];
  return ConversionMatrix(ids, std::move(dense));
}

NetFrequencyField net_from_raw(const RawFrequencyField& raw,
                               const ConversionMatrix& U, bool lenient,
                               int threads) {
  const std::size_t k = U.dim();
  if (raw.dictionary().ids() != U.ids())
    throw Error("conversion matrix does not match the field's dictionary");

  NetFrequencyField net(raw.num_vertices(), raw.dictionary());
  parallel_for(raw.num_vertices(), threads,
               [&](vertex_t begin, vertex_t end, int) {
                 for (vertex_t v = begin; v < end; ++v) {
                   auto in = raw.vertex_row(v);
                   auto out = net.vertex_row(v);
                   for (std::size_t r = k; r-- > 0;) {
                     count_t absorbed = 0;
                     for (auto [c, coeff] : U.row_tail(r))
                       absorbed = checked_add(
                           absorbed,
                           checked_mul(coeff, out[c], U.ids()[r], v),
                           U.ids()[r], v);
                     if (absorbed > in[r]) {
                       if (!lenient)
                         throw InconsistencyError(
                             "negative net frequency for graphlet " +
                                 std::to_string(U.ids()[r]) + " at vertex " +
                                 std::to_string(v) +
                                 " (incomplete family or kernel defect)",
                             U.ids()[r], v);
                       out[r] = 0;
                     } else {
                       out[r] = in[r] - absorbed;
                     }
                   }
                 }
               });
  return net;
}

RawFrequencyField apply_conversion(const NetFrequencyField& net,
                                   const ConversionMatrix& U) {
  const std::size_t k = U.dim();
  if (net.dictionary().ids() != U.ids())
    throw Error("conversion matrix does not match the field's dictionary");
  RawFrequencyField raw(net.num_vertices(), net.dictionary());
  for (vertex_t v = 0; v < net.num_vertices(); ++v) {
    auto in = net.vertex_row(v);
    auto out = raw.vertex_row(v);
    for (std::size_t r = 0; r < k; ++r) {
      count_t acc = in[r];
      for (auto [c, coeff] : U.row_tail(r))
        acc = checked_add(acc, checked_mul(coeff, in[c], U.ids()[r], v),
                          U.ids()[r], v);
      out[r] = acc;
    }
  }
  return raw;
}

bool inverse_pattern_check(const ConversionMatrix& U) {
  const std::size_t k = U.dim();
  // Exact inverse of a unit upper-triangular integer matrix, column by
  // column by back substitution.
  std::vector<std::vector<std::int64_t>> inv(
      k, std::vector<std::int64_t>(k, 0));
  for (std::size_t col = 0; col < k; ++col) {
    for (std::size_t r = k; r-- > 0;) {
      std::int64_t rhs = (r == col) ? 1 : 0;
      for (auto [c, coeff] : U.row_tail(r))
        rhs -= static_cast<std::int64_t>(coeff) * inv[c][col];
      inv[r][col] = rhs;  // unit diagonal
    }
  }
  // The sparsity pattern of the inverse is the structural one: no entry may
  // appear outside U's pattern (no fill-in) ...
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < k; ++c)
      if (inv[r][c] != 0 && U.coeff(r, c) == 0) return false;
  // ... and U's pattern must be transitively closed, so every structural
  // position of the inverse is a position of U. Individual entries may
  // still cancel to zero for some sub-dictionaries (e.g. {0,1,5,9,13},
  // where the coefficient of the diamond column in the 3-path row is
  // exactly absorbed through the dipper row).
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t j = r + 1; j < k; ++j) {
      if (U.coeff(r, j) == 0) continue;
      for (std::size_t c = j + 1; c < k; ++c)
        if (U.coeff(j, c) != 0 && U.coeff(r, c) == 0) return false;
    }
  return true;
}

}  // namespace graphlet
