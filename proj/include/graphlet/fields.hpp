#pragma once

#include <vector>

#include "graphlet/dictionary.hpp"
#include "graphlet/types.hpp"

namespace graphlet {

// Row-major n x |s| table of per-vertex counts, one column per selected
// graphlet in sorted id order.
class FrequencyField {
 public:
  FrequencyField() = default;
  FrequencyField(vertex_t n, Dictionary dict)
      : n_(n),
        dict_(std::move(dict)),
        data_(static_cast<std::size_t>(n) * dict_.size(), 0) {}

  vertex_t num_vertices() const { return n_; }
  const Dictionary& dictionary() const { return dict_; }
  std::size_t num_columns() const { return dict_.size(); }

  count_t& at(vertex_t v, std::size_t col) {
    return data_[static_cast<std::size_t>(v) * dict_.size() + col];
  }
  count_t at(vertex_t v, std::size_t col) const {
    return data_[static_cast<std::size_t>(v) * dict_.size() + col];
  }

  // Access by graphlet id; the id must be selected.
  count_t& of(vertex_t v, int graphlet_id) {
    return at(v, dict_.position_of(graphlet_id));
  }
  count_t of(vertex_t v, int graphlet_id) const {
    return at(v, dict_.position_of(graphlet_id));
  }

  std::span<count_t> vertex_row(vertex_t v) {
    return {data_.data() + static_cast<std::size_t>(v) * dict_.size(),
            dict_.size()};
  }
  std::span<const count_t> vertex_row(vertex_t v) const {
    return {data_.data() + static_cast<std::size_t>(v) * dict_.size(),
            dict_.size()};
  }

  const std::vector<count_t>& data() const { return data_; }

  bool operator==(const FrequencyField&) const = default;

 private:
  vertex_t n_ = 0;
  Dictionary dict_;
  std::vector<count_t> data_;
};

class RawFrequencyField : public FrequencyField {
 public:
  using FrequencyField::FrequencyField;
};

class NetFrequencyField : public FrequencyField {
 public:
  using FrequencyField::FrequencyField;
};

}  // namespace graphlet
