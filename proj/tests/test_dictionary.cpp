#include <doctest.h>

#include <algorithm>
#include <random>

#include "graphlet/dictionary.hpp"

using namespace graphlet;

TEST_CASE("descriptors follow the family ordering") {
  auto desc = graphlet_descriptors();
  for (int i = 0; i < kNumGraphlets; ++i) CHECK(desc[i].id == i);
  for (int i = 1; i < kNumGraphlets; ++i) {
    CHECK(desc[i].vertex_count >= desc[i - 1].vertex_count);
    if (desc[i].vertex_count == desc[i - 1].vertex_count)
      CHECK(desc[i].edge_count >= desc[i - 1].edge_count);
  }
  CHECK(desc[0].vertex_count == 1);
  CHECK(desc[4].edge_count == 3);   // triangle
  CHECK(desc[15].edge_count == 6);  // 4-clique
}

TEST_CASE("parse: all") {
  auto p = parse_dictionary("all");
  CHECK(p.dict.size() == 16);
  CHECK(p.implicitly_added.empty());
}

TEST_CASE("parse: ranges") {
  auto p = parse_dictionary("0-4");
  CHECK(p.dict.ids() == std::vector<int>{0, 1, 2, 3, 4});
  CHECK(p.implicitly_added.empty());
}

TEST_CASE("parse: mandatory graphlets are added with a notice") {
  auto p = parse_dictionary("4,15");
  CHECK(p.dict.ids() == std::vector<int>{0, 1, 4, 15});
  CHECK(p.implicitly_added == std::vector<int>{0, 1});
}

TEST_CASE("parse: mixed list and range") {
  auto p = parse_dictionary("2,5-7 , 12");
  CHECK(p.dict.ids() == std::vector<int>{0, 1, 2, 5, 6, 7, 12});
}

TEST_CASE("parse: errors") {
  CHECK_THROWS_AS(parse_dictionary(""), ParseError);
  CHECK_THROWS_AS(parse_dictionary("16"), ParseError);
  CHECK_THROWS_AS(parse_dictionary("-3"), ParseError);
  CHECK_THROWS_AS(parse_dictionary("3-1"), ParseError);
  CHECK_THROWS_AS(parse_dictionary("1,,2"), ParseError);
  CHECK_THROWS_AS(parse_dictionary("abc"), ParseError);
}

TEST_CASE("plan: degrees only") {
  auto plan = resolve_dependencies(Dictionary::from_ids({0, 1}));
  CHECK(plan == std::vector<AuxStep>{AuxStep::kDegrees});
}

TEST_CASE("plan: lone 4-cycle selection needs only the row pass") {
  auto plan = resolve_dependencies(Dictionary::from_ids({0, 1, 12}));
  CHECK(plan ==
        std::vector<AuxStep>{AuxStep::kDegrees, AuxStep::kFourCycles});
}

TEST_CASE("plan: full dictionary runs the whole chain") {
  auto plan = resolve_dependencies(Dictionary::all());
  CHECK(plan == std::vector<AuxStep>{
                    AuxStep::kDegrees, AuxStep::kTriangles, AuxStep::kTwoPaths,
                    AuxStep::kThreePaths, AuxStep::kFourCycles,
                    AuxStep::kDiamonds, AuxStep::kTetrahedra});
}

TEST_CASE("plan: triangle-dependent selections") {
  auto plan = resolve_dependencies(Dictionary::from_ids({0, 1, 4}));
  CHECK(plan == std::vector<AuxStep>{AuxStep::kDegrees, AuxStep::kTriangles});
  plan = resolve_dependencies(Dictionary::from_ids({0, 1, 5}));
  CHECK(plan == std::vector<AuxStep>{AuxStep::kDegrees, AuxStep::kTriangles,
                                     AuxStep::kTwoPaths,
                                     AuxStep::kThreePaths});
}

TEST_CASE("plan monotonicity: a larger dictionary never loses a step") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<int> small_ids, big_ids;
    for (int id = 2; id < kNumGraphlets; ++id) {
      bool in_small = rng() % 2 == 0;
      bool in_big = in_small || rng() % 2 == 0;
      if (in_small) small_ids.push_back(id);
      if (in_big) big_ids.push_back(id);
    }
    auto small_plan = resolve_dependencies(Dictionary::from_ids(small_ids));
    auto big_plan = resolve_dependencies(Dictionary::from_ids(big_ids));
    for (AuxStep s : small_plan)
      CHECK(std::find(big_plan.begin(), big_plan.end(), s) != big_plan.end());
  }
}

TEST_CASE("family advisories") {
  SUBCASE("missing triangle above the 2-path") {
    auto advisories = warn_incomplete_family(Dictionary::from_ids({0, 1, 2}));
    REQUIRE(advisories.size() == 1);
    CHECK(advisories[0].graphlet_id == 2);
    CHECK(advisories[0].missing_supergraphs == std::vector<int>{4});
  }
  SUBCASE("complete dictionary is silent") {
    CHECK(warn_incomplete_family(Dictionary::all()).empty());
  }
  SUBCASE("claw-at-leaf lists its missing supergraphs") {
    auto advisories = warn_incomplete_family(Dictionary::from_ids({0, 1, 7}));
    REQUIRE(advisories.size() == 1);
    CHECK(advisories[0].graphlet_id == 7);
    CHECK(advisories[0].missing_supergraphs ==
          std::vector<int>{9, 10, 13, 14, 15});
  }
}

TEST_CASE("dictionary invariants") {
  auto d = Dictionary::from_ids({7, 3});
  CHECK(d.ids() == std::vector<int>{0, 1, 3, 7});
  CHECK(d.contains(3));
  CHECK(!d.contains(4));
  CHECK(d.position_of(7) == 3);
  CHECK_THROWS_AS(Dictionary::from_ids({17}), ParseError);
}
