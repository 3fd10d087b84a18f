#include <doctest.h>

#include <algorithm>
#include <set>

#include "eqnorm/eqnorm.hpp"
#include "oracle.hpp"

using namespace eqnorm;

namespace {

std::size_t oracle_class_count(const oracle::Group& o, const std::vector<oracle::Elems>& subs) {
  std::set<oracle::Elems> reps;
  for (const auto& s : subs) {
    oracle::Elems best = s;
    for (std::size_t g = 0; g < o.order(); ++g) {
      oracle::Elems c;
      for (auto x : s) c.push_back(o.mul(o.mul(g, x), o.inv(g)));
      std::sort(c.begin(), c.end());
      best = std::min(best, c);
    }
    reps.insert(best);
  }
  return reps.size();
}

}  // namespace

TEST_SUITE("lattice") {
  TEST_CASE("subgroup lattices match brute force") {
    for (const auto& name : group_preset_names()) {
      GroupPtr g = preset_group(name);
      LatticePtr lat = subgroups(g);
      oracle::Group o(*g);
      auto subs = oracle::all_subgroups(o);
      CAPTURE(name);
      REQUIRE(lat->size() == subs.size());
      std::set<oracle::Elems> ours;
      for (std::size_t i = 0; i < lat->size(); ++i)
        ours.insert(o.from_library(*g, lat->members(SubgroupId{static_cast<std::uint32_t>(i)})));
      CHECK(ours == std::set<oracle::Elems>(subs.begin(), subs.end()));
      CHECK(lat->classes().size() == oracle_class_count(o, subs));
    }
  }

  TEST_CASE("known lattice sizes") {
    auto count = [](const char* n) {
      LatticePtr l = subgroups(preset_group(n));
      return std::pair{l->size(), l->classes().size()};
    };
    CHECK(count("S3") == std::pair<std::size_t, std::size_t>{6, 4});
    CHECK(count("trivial") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK(count("C4") == std::pair<std::size_t, std::size_t>{3, 3});
    CHECK(count("D4") == std::pair<std::size_t, std::size_t>{10, 8});
    CHECK(count("S4") == std::pair<std::size_t, std::size_t>{30, 11});
  }

  TEST_CASE("order, trivial and whole") {
    LatticePtr lat = subgroups(preset_group("A4"));
    CHECK(lat->order(lat->trivial()) == 1);
    CHECK(lat->order(lat->whole()) == 12);
    for (std::size_t i = 1; i < lat->size(); ++i)
      CHECK(lat->order(SubgroupId{static_cast<std::uint32_t>(i - 1)}) <=
            lat->order(SubgroupId{static_cast<std::uint32_t>(i)}));
  }

  TEST_CASE("meets, joins and inclusion") {
    LatticePtr lat = subgroups(preset_group("S4"));
    for (std::size_t i = 0; i < lat->size(); ++i)
      for (std::size_t j = 0; j < lat->size(); ++j) {
        SubgroupId a{static_cast<std::uint32_t>(i)}, b{static_cast<std::uint32_t>(j)};
        SubgroupId m = lat->intersect(a, b), u = lat->join(a, b);
        CHECK(lat->is_subgroup_of(m, a));
        CHECK(lat->is_subgroup_of(m, b));
        CHECK(lat->is_subgroup_of(a, u));
        CHECK(lat->is_subgroup_of(b, u));
        auto ma = lat->members(a), mb = lat->members(b);
        std::vector<Element> inter;
        std::set_intersection(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(inter));
        CHECK(lat->order(m) == inter.size());
      }
  }

  TEST_CASE("conjugation, normalizers and Weyl groups") {
    LatticePtr lat = subgroups(preset_group("S3"));
    SubgroupId c2 = lat->parse_name("C2");
    SubgroupId c3 = lat->parse_name("C3");
    CHECK(lat->is_normal(c3));
    CHECK_FALSE(lat->is_normal(c2));
    CHECK(lat->normalizer(c2) == c2);
    CHECK(lat->weyl_order(c2) == 1);
    CHECK(lat->weyl_order(c3) == 2);
    CHECK(lat->weyl_order(lat->trivial()) == 6);
    for (SubgroupId s : lat->classes()[lat->class_index(c2)]) {
      auto w = lat->conjugation_witness(c2, s);
      REQUIRE(w);
      CHECK(lat->conjugate(c2, *w) == s);
    }
    CHECK(is_subconjugate(lat->subgroup(c2), lat->subgroup(lat->whole())));
    CHECK_FALSE(is_subconjugate(lat->subgroup(c2), lat->subgroup(c3)));
  }

  TEST_CASE("double cosets agree with brute force") {
    for (const char* name : {"S3", "D4", "A4", "Q8"}) {
      GroupPtr g = preset_group(name);
      LatticePtr lat = subgroups(g);
      for (std::size_t i = 0; i < lat->size(); ++i)
        for (std::size_t j = 0; j < lat->size(); ++j) {
          Subgroup k = lat->subgroup(SubgroupId{static_cast<std::uint32_t>(i)});
          Subgroup h = lat->subgroup(SubgroupId{static_cast<std::uint32_t>(j)});
          std::set<std::vector<Element>> cosets;
          for (Element x = 0; x < g->order(); ++x) {
            std::vector<Element> c;
            for (Element a : k.members())
              for (Element b : h.members()) c.push_back(g->mul(g->mul(a, x), b));
            std::sort(c.begin(), c.end());
            c.erase(std::unique(c.begin(), c.end()), c.end());
            cosets.insert(c);
          }
          auto d = double_cosets(k, h);
          CHECK(d.representatives.size() == cosets.size());
          std::size_t total = 0;
          for (auto s : d.sizes) total += s;
          CHECK(total == g->order());
        }
    }
  }

  TEST_CASE("names round trip") {
    LatticePtr lat = subgroups(preset_group("D4"));
    for (std::size_t i = 0; i < lat->size(); ++i) {
      SubgroupId id{static_cast<std::uint32_t>(i)};
      CHECK(lat->parse_name(lat->name(id)) == id);
      CHECK(lat->parse_name("#" + std::to_string(i)) == id);
    }
    CHECK(lat->parse_name("G") == lat->whole());
    CHECK(lat->parse_name("1") == lat->trivial());
    CHECK_THROWS_AS(lat->parse_name("C7"), InputError);
    CHECK_THROWS_AS(lat->parse_name("#99"), InputError);
  }

  TEST_CASE("lattice cap") {
    CHECK_THROWS_AS(subgroups(preset_group("S4"), LatticeLimits{12}), CapExceeded);
  }

  TEST_CASE("member lists are re-verified") {
    GroupPtr g = preset_group("C4");
    LatticePtr lat = subgroups(g);
    std::vector<std::vector<Element>> lists;
    for (std::size_t i = 0; i < lat->size(); ++i) {
      auto m = lat->members(SubgroupId{static_cast<std::uint32_t>(i)});
      lists.emplace_back(m.begin(), m.end());
    }
    CHECK(SubgroupLattice::from_member_lists(g, lists)->size() == 3);
    auto broken = lists;
    broken[1] = {0, 1};
    CHECK_THROWS(SubgroupLattice::from_member_lists(g, broken));
    broken = lists;
    broken.pop_back();
    CHECK_THROWS(SubgroupLattice::from_member_lists(g, broken));
  }
}
