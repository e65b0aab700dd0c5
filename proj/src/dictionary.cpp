#include "graphlet/dictionary.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "graphlet/conversion.hpp"

namespace graphlet {

namespace {

constexpr std::array<GraphletDescriptor, kNumGraphlets> kDescriptors{{
    {0, "singleton", 1, 0, "the vertex"},
    {1, "1-path, at an end", 2, 1, "either end"},
    {2, "2-path, at an end", 3, 2, "either end"},
    {3, "bi-fork, at the root", 3, 2, "the center"},
    {4, "3-clique, at any node", 3, 3, "any vertex"},
    {5, "3-path, at an end", 4, 3, "either end"},
    {6, "3-path, at an interior node", 4, 3, "either interior vertex"},
    {7, "claw, at a leaf", 4, 3, "any leaf"},
    {8, "claw, at the root", 4, 3, "the center"},
    {9, "dipper, at the handle tip", 4, 4, "the pendant vertex"},
    {10, "dipper, at a base node", 4, 4, "either triangle vertex off the handle"},
    {11, "dipper, at the center", 4, 4, "the degree-3 vertex"},
    {12, "4-cycle, at any node", 4, 4, "any vertex"},
    {13, "diamond, at an off-cord node", 4, 5, "either degree-2 vertex"},
    {14, "diamond, at an on-cord node", 4, 5, "either degree-3 vertex"},
    {15, "4-clique, at any node", 4, 6, "any vertex"},
}};

}  // namespace

std::span<const GraphletDescriptor, kNumGraphlets> graphlet_descriptors() {
  return kDescriptors;
}

Dictionary Dictionary::from_ids(std::span<const int> ids) {
  Dictionary d;
  d.ids_.assign(ids.begin(), ids.end());
  for (int id : d.ids_)
    if (id < 0 || id >= kNumGraphlets)
      throw ParseError("graphlet id " + std::to_string(id) +
                       " outside 0..15");
  d.ids_.push_back(0);
  d.ids_.push_back(1);
  std::sort(d.ids_.begin(), d.ids_.end());
  d.ids_.erase(std::unique(d.ids_.begin(), d.ids_.end()), d.ids_.end());
  return d;
}

Dictionary Dictionary::all() {
  std::array<int, kNumGraphlets> ids;
  for (int i = 0; i < kNumGraphlets; ++i) ids[i] = i;
  return from_ids(ids);
}

bool Dictionary::contains(int id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

std::size_t Dictionary::position_of(int id) const {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    throw Error("graphlet " + std::to_string(id) + " not in dictionary");
  return static_cast<std::size_t>(it - ids_.begin());
}

namespace {

int parse_id(std::string_view tok) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError("malformed graphlet id '" + std::string(tok) + "'");
  if (v < 0 || v >= kNumGraphlets)
    throw ParseError("graphlet id " + std::to_string(v) + " outside 0..15");
  return v;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return s;
}

}  // namespace

ParsedDictionary parse_dictionary(std::string_view spec) {
  spec = trim(spec);
  if (spec.empty()) throw ParseError("empty dictionary spec");

  std::vector<int> ids;
  if (spec == "all") {
    for (int i = 0; i < kNumGraphlets; ++i) ids.push_back(i);
  } else {
    std::size_t pos = 0;
    while (pos <= spec.size()) {
      std::size_t comma = spec.find(',', pos);
      std::string_view tok =
          trim(spec.substr(pos, comma == std::string_view::npos
                                    ? std::string_view::npos
                                    : comma - pos));
      if (tok.empty()) throw ParseError("empty token in dictionary spec");
      std::size_t dash = tok.find('-');
      if (dash == std::string_view::npos) {
        ids.push_back(parse_id(tok));
      } else {
        int lo = parse_id(trim(tok.substr(0, dash)));
        int hi = parse_id(trim(tok.substr(dash + 1)));
        if (lo > hi)
          throw ParseError("descending range '" + std::string(tok) +
                           "' in dictionary spec");
        for (int i = lo; i <= hi; ++i) ids.push_back(i);
      }
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
      if (pos == spec.size()) throw ParseError("trailing comma in dictionary spec");
    }
  }

  ParsedDictionary out;
  out.dict = Dictionary::from_ids(ids);
  for (int mandatory : {0, 1})
    if (std::find(ids.begin(), ids.end(), mandatory) == ids.end())
      out.implicitly_added.push_back(mandatory);
  return out;
}

const char* aux_step_name(AuxStep s) {
  switch (s) {
    case AuxStep::kDegrees: return "degrees";
    case AuxStep::kTriangles: return "triangles";
    case AuxStep::kTwoPaths: return "two-paths";
    case AuxStep::kThreePaths: return "three-paths";
    case AuxStep::kFourCycles: return "four-cycle rows";
    case AuxStep::kDiamonds: return "diamond rows";
    case AuxStep::kTetrahedra: return "tetrahedra";
  }
  return "?";
}

std::vector<AuxStep> resolve_dependencies(const Dictionary& d) {
  auto any = [&d](std::initializer_list<int> ids) {
    for (int id : ids)
      if (d.contains(id)) return true;
    return false;
  };
  std::vector<AuxStep> plan;
  plan.push_back(AuxStep::kDegrees);
  if (any({4, 5, 6, 9, 10, 11, 13})) plan.push_back(AuxStep::kTriangles);
  if (any({2, 5, 6})) plan.push_back(AuxStep::kTwoPaths);
  if (any({5})) plan.push_back(AuxStep::kThreePaths);
  if (any({12, 14})) plan.push_back(AuxStep::kFourCycles);
  if (any({13})) plan.push_back(AuxStep::kDiamonds);
  if (any({15})) plan.push_back(AuxStep::kTetrahedra);
  return plan;
}

std::vector<FamilyAdvisory> warn_incomplete_family(const Dictionary& d) {
  const ConversionMatrix& u = full_u16();
  std::vector<FamilyAdvisory> out;
  for (int id : d.ids()) {
    FamilyAdvisory adv;
    adv.graphlet_id = id;
    for (std::size_t col = static_cast<std::size_t>(id) + 1;
         col < kNumGraphlets; ++col) {
      if (u.coeff(static_cast<std::size_t>(id), col) != 0 &&
          !d.contains(static_cast<int>(col)))
        adv.missing_supergraphs.push_back(static_cast<int>(col));
    }
    if (adv.missing_supergraphs.empty()) continue;
    std::ostringstream msg;
    msg << "net counts for graphlet " << id << " ("
        << kDescriptors[static_cast<std::size_t>(id)].name
        << ") will include non-induced occurrences: missing supergraph(s)";
    for (int s : adv.missing_supergraphs) msg << " " << s;
    adv.message = msg.str();
    out.push_back(std::move(adv));
  }
  return out;
}

}  // namespace graphlet
