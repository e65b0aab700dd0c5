#pragma once

#include <vector>

#include "graphlet/dictionary.hpp"
#include "graphlet/fields.hpp"
#include "graphlet/types.hpp"

namespace graphlet {

// Unit upper-triangular nonnegative integer matrix mapping net to raw
// frequencies: U f = f_raw. Indexed by positions within the dictionary's
// sorted id set.
class ConversionMatrix {
 public:
  ConversionMatrix() = default;
  ConversionMatrix(std::vector<int> ids,
                   std::vector<std::vector<count_t>> dense);

  std::size_t dim() const { return ids_.size(); }
  const std::vector<int>& ids() const { return ids_; }

  count_t coeff(std::size_t row, std::size_t col) const {
    return dense_[row][col];
  }

  // Strictly-above-diagonal nonzeros of one row, as (col, coeff) pairs.
  std::span<const std::pair<std::size_t, count_t>> row_tail(
      std::size_t row) const {
    return tails_[row];
  }

 private:
  std::vector<int> ids_;
  std::vector<std::vector<count_t>> dense_;
  std::vector<std::vector<std::pair<std::size_t, count_t>>> tails_;
};

// The full 16x16 conversion table; self-checked (unit diagonal, upper
// triangular) on first use.
const ConversionMatrix& full_u16();

// Row/column selection of the full table at the dictionary's id set.
ConversionMatrix sub_matrix(const Dictionary& d);

// Solves U f = f_raw per vertex by exact integer back substitution.
// A negative intermediate raises InconsistencyError naming the vertex and
// graphlet, unless lenient, which rectifies it to zero.
NetFrequencyField net_from_raw(const RawFrequencyField& raw,
                               const ConversionMatrix& U, bool lenient = false,
                               int threads = 1);

// Applies U to a net field (exact); the inverse direction of net_from_raw.
RawFrequencyField apply_conversion(const NetFrequencyField& net,
                                   const ConversionMatrix& U);

// Computes U^-1 exactly and verifies its sparsity pattern equals U's:
// no fill-in outside U's pattern, and U's pattern is transitively closed
// so the structural inverse occupies exactly the same positions. Numeric
// cancellation of individual entries does not count as pattern loss.
bool inverse_pattern_check(const ConversionMatrix& U);

}  // namespace graphlet
