#pragma once

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "graphlet/types.hpp"

namespace graphlet {

inline constexpr int kNumGraphlets = 16;

// One entry per graphlet: family ordering is non-decreasing vertex count,
// then non-decreasing edge count, then increasing degree at the incidence
// node (except the 4-cycle).
struct GraphletDescriptor {
  int id;
  const char* name;
  int vertex_count;
  int edge_count;
  const char* incidence_orbit;
};

std::span<const GraphletDescriptor, kNumGraphlets> graphlet_descriptors();

// A sub-dictionary s with {0,1} included, kept sorted.
class Dictionary {
 public:
  // Validates ids and adds 0 and 1 when absent.
  static Dictionary from_ids(std::span<const int> ids);
  static Dictionary from_ids(std::initializer_list<int> ids) {
    return from_ids(std::span<const int>(ids.begin(), ids.size()));
  }
  static Dictionary all();

  const std::vector<int>& ids() const { return ids_; }
  std::size_t size() const { return ids_.size(); }
  bool contains(int id) const;
  // Index of id within ids(); id must be selected.
  std::size_t position_of(int id) const;

  bool operator==(const Dictionary&) const = default;

 private:
  std::vector<int> ids_;
};

struct ParsedDictionary {
  Dictionary dict;
  std::vector<int> implicitly_added;  // of {0,1}, when absent from the spec
};

// Accepts "all", comma lists, and ranges: "0-4", "0,1,4,15", "2,5-7".
ParsedDictionary parse_dictionary(std::string_view spec);

// Auxiliary computations in their fixed evaluation order.
enum class AuxStep {
  kDegrees,      // p1
  kTriangles,    // c3 and the per-edge triangle matrix
  kTwoPaths,     // p2
  kThreePaths,   // p3
  kFourCycles,   // fused 2-path-row pass: c4 and the diamond cord counts
  kDiamonds,     // off-cord diamond row pass
  kTetrahedra,   // common-neighborhood pass
};

const char* aux_step_name(AuxStep s);

// Minimal ordered plan of auxiliary passes for the dictionary. Monotone:
// enlarging the dictionary never removes a step.
std::vector<AuxStep> resolve_dependencies(const Dictionary& d);

struct FamilyAdvisory {
  int graphlet_id;
  std::vector<int> missing_supergraphs;
  std::string message;
};

// Warns when a selected graphlet's net frequency will not equal its induced
// count because supergraph family members are excluded.
std::vector<FamilyAdvisory> warn_incomplete_family(const Dictionary& d);

}  // namespace graphlet
