#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace graphlet {

using vertex_t = std::int64_t;
using count_t = std::uint64_t;

// Error taxonomy; the CLI maps each class to a distinct exit code.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (edge list, Matrix Market, dictionary spec).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Input violates a structural precondition (asymmetry, self-loop policy,
// duplicate edges with dedupe off, oracle size cap).
class StructuralError : public Error {
 public:
  using Error::Error;
};

// A 64-bit count overflowed; carries the offending graphlet and vertex
// when known.
class OverflowError : public Error {
 public:
  explicit OverflowError(const std::string& msg, int graphlet_id = -1,
                         vertex_t vertex = -1)
      : Error(msg), graphlet_id(graphlet_id), vertex(vertex) {}
  int graphlet_id;
  vertex_t vertex;
};

// Raw-to-net conversion produced a negative count: either the dictionary is
// an incomplete family or a kernel is wrong.
class InconsistencyError : public Error {
 public:
  explicit InconsistencyError(const std::string& msg, int graphlet_id = -1,
                              vertex_t vertex = -1)
      : Error(msg), graphlet_id(graphlet_id), vertex(vertex) {}
  int graphlet_id;
  vertex_t vertex;
};

class IoError : public Error {
 public:
  using Error::Error;
};

// Rectified difference max{a-b, 0}: the convention for every "-k" term.
inline count_t sat_sub(count_t a, count_t b) { return a > b ? a - b : 0; }

inline count_t checked_add(count_t a, count_t b, int graphlet_id = -1,
                           vertex_t vertex = -1) {
  count_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw OverflowError("count overflow in addition (graphlet " +
                            std::to_string(graphlet_id) + ", vertex " +
                            std::to_string(vertex) + ")",
                        graphlet_id, vertex);
  return r;
}

inline count_t checked_mul(count_t a, count_t b, int graphlet_id = -1,
                           vertex_t vertex = -1) {
  count_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw OverflowError("count overflow in multiplication (graphlet " +
                            std::to_string(graphlet_id) + ", vertex " +
                            std::to_string(vertex) + ")",
                        graphlet_id, vertex);
  return r;
}

// d choose 2, exact.
inline count_t choose2(count_t d, int graphlet_id = -1, vertex_t vertex = -1) {
  if (d < 2) return 0;
  return checked_mul(d, d - 1, graphlet_id, vertex) / 2;
}

// d choose 3, exact: d(d-1)/2 is an integer and d(d-1)(d-2)/2 is divisible
// by 3.
inline count_t choose3(count_t d, int graphlet_id = -1, vertex_t vertex = -1) {
  if (d < 3) return 0;
  return checked_mul(d * (d - 1) / 2, d - 2, graphlet_id, vertex) / 3;
}

}  // namespace graphlet
