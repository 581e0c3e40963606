#include <doctest.h>

#include <algorithm>
#include <set>

#include "prym/components.hpp"
#include "prym/tables.hpp"
#include "support.hpp"

using namespace prym;

namespace {

Prototype P(std::int64_t w, std::int64_t h, std::int64_t t, std::int64_t e, std::int64_t D) {
  return make_prototype(w, h, t, e, D);
}

std::set<std::set<Prototype>> as_sets(const ComponentPartition& part) {
  std::set<std::set<Prototype>> out;
  for (const auto& c : part.components()) out.insert(std::set<Prototype>(c.begin(), c.end()));
  return out;
}

std::set<std::set<std::int64_t>> e_sets(const ComponentPartition& part) {
  std::set<std::set<std::int64_t>> out;
  for (const auto& c : part.e_components()) out.insert(std::set<std::int64_t>(c.begin(), c.end()));
  return out;
}

}  // namespace

TEST_CASE("P^A components for special discriminants") {
  auto p100 = component_partition(100, Level::PA);
  CHECK(p100.count() == 3);
  CHECK(as_sets(p100).count({P(16, 1, 0, -6, 100), P(12, 2, 1, -2, 100), P(24, 1, 0, 2, 100)}) == 1);
  CHECK(as_sets(p100).count({P(8, 2, 1, -6, 100), P(24, 1, 0, -2, 100)}) == 1);

  auto p36 = component_partition(36, Level::PA);
  CHECK(as_sets(p36) ==
        std::set<std::set<Prototype>>{{P(5, 1, 0, -4, 36), P(9, 1, 0, 0, 36)}, {P(8, 1, 0, -2, 36)}});

  for (const auto& nc : tables::named_components()) {
    auto part = component_partition(nc.D, Level::PA);
    CHECK(as_sets(part).count(std::set<Prototype>(nc.members.begin(), nc.members.end())) == 1);
  }
}

TEST_CASE("S-level components quoted in the tables") {
  CHECK(e_sets(component_partition(73, Level::S1)) == std::set<std::set<std::int64_t>>{{-5, 1}, {-7, 3}, {-3, -1}});
  CHECK(e_sets(component_partition(88, Level::S1)) ==
        std::set<std::set<std::int64_t>>{{0, -4}, {-8, 4}, {2, -6, -2}});
  CHECK(e_sets(component_partition(313, Level::S2)) == std::set<std::set<std::int64_t>>{{3, -11}, {-13, -3, 5, -5}});
  CHECK(e_sets(component_partition(113, Level::S2)) == std::set<std::set<std::int64_t>>{{-7, -1}, {1, -9}});
  CHECK(component_partition(17, Level::S2).count() == 0);
  CHECK(e_sets(component_partition(41, Level::S2)) == std::set<std::set<std::int64_t>>{{-5, -3}});

  auto s41 = component_partition(41, Level::S1);
  CHECK(as_sets(s41) == std::set<std::set<Prototype>>{{P(4, 1, 0, -5, 41), P(10, 1, 0, 1, 41)},
                                                      {P(8, 1, 0, -3, 41), P(10, 1, 0, -1, 41)}});
}

TEST_CASE("theorem reports") {
  auto r29 = verify_pd_theorem(29);
  CHECK(r29.match);
  CHECK(r29.actual == 1);

  auto r113 = verify_pd_theorem(113);
  CHECK(r113.match);
  CHECK(r113.actual == 3);

  auto r88 = verify_sd_theorem(88, 1);
  CHECK(r88.match);
  CHECK(r88.actual == 3);
  CHECK(verify_sd_theorem(313, 2).match);
  auto r17 = verify_sd_theorem(17, 2);
  CHECK(r17.match);
  CHECK(r17.actual == 0);

  CHECK_FALSE(verify_sd_theorem(52, 2).applicable);
}

TEST_CASE("labels are the smallest member and ignore exploration order") {
  for (std::int64_t D : {73, 100, 132, 217, 481, 889, 1000}) {
    for (Level level : {Level::PA, Level::S1, Level::S2}) {
      if (level == Level::S2 && mod_floor(D, 8) != 1) continue;
      auto base = component_partition(D, level);
      for (std::uint64_t seed : {1u, 7u, 12345u}) {
        PartitionOptions opt;
        opt.shuffle_seed = seed;
        auto other = component_partition(D, level, opt);
        REQUIRE(other.label == base.label);
      }
      for (std::size_t i = 0; i < base.universe.size(); ++i)
        REQUIRE(base.label[i] <= static_cast<int>(i));
    }
  }
}

TEST_CASE("generators keep labels constant") {
  PartitionOptions opt;
  opt.record_generators = true;
  for (std::int64_t D : {41, 52, 100, 105}) {
    auto part = component_partition(D, Level::PA, opt);
    CHECK_FALSE(part.generators.empty());
    for (const auto& m : part.generators) CHECK(part.label_of(*m.source) == part.label_of(*m.target));
  }
}

TEST_CASE("union-find agrees with breadth-first closure up to D = 300") {
  for (std::int64_t D = 4; D <= 300; ++D) {
    if (!is_discriminant(D)) continue;
    for (Level level : {Level::PA, Level::S1, Level::S2}) {
      if (level == Level::S2 && mod_floor(D, 8) != 1) continue;
      REQUIRE(as_sets(component_partition(D, level)) == testing::bfs_components(D, level));
    }
  }
}

TEST_CASE("components are monochromatic up to D = 1000") {
  for (std::int64_t D = 5; D <= 1000; ++D) {
    if (!is_discriminant(D)) continue;
    auto part = component_partition(D, Level::PA);
    for (const auto& c : part.components()) {
      std::set<std::string> colours;
      for (const auto& p : c) {
        if (D % 2 == 0) colours.insert(std::to_string(mod_floor(p.e, 4)));
        if (mod_floor(D, 8) == 1) colours.insert(invariant_class(p).label());
      }
      REQUIRE(colours.size() <= 1);
    }
    if (mod_floor(D, 8) != 1) continue;
    std::set<int> l1, l2;
    for (const auto& p : enumerate(D, Filter::Reduced1)) l1.insert(part.label_of(p));
    for (const auto& p : enumerate(D, Filter::Reduced2)) l2.insert(part.label_of(p));
    for (int l : l2) REQUIRE(l1.count(l) == 0);
  }
}
