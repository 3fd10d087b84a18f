#include <doctest.h>

#include <algorithm>
#include <random>

#include "eqnorm/eqnorm.hpp"
#include "oracle.hpp"

using namespace eqnorm;

namespace {

struct Fixture {
  GroupPtr group;
  LatticePtr lat;
  oracle::Group o;
  explicit Fixture(const char* name) : group(preset_group(name)), lat(subgroups(group)), o(*group) {}
  Subgroup sub(std::size_t i) const { return lat->subgroup(SubgroupId{static_cast<std::uint32_t>(i)}); }
  Subgroup whole() const { return lat->subgroup(lat->whole()); }
};

GSet random_gset(const Subgroup& level, std::mt19937_64& rng, std::size_t max_terms = 2) {
  std::vector<OrbitTerm> terms;
  const auto& below = level.lattice().subgroups_of(level.id());
  std::size_t n = 1 + rng() % max_terms;
  for (std::size_t i = 0; i < n; ++i) terms.push_back({below[rng() % below.size()], 1 + rng() % 2});
  return GSet(level, terms);
}

}  // namespace

TEST_SUITE("gset") {
  TEST_CASE("literals parse and print canonically") {
    Fixture f("C4");
    GSet t = parse_gset("C4/e, 2*C4/C4", f.lat);
    CHECK(t.cardinality() == 6);
    CHECK(t.orbit_count() == 3);
    CHECK(t.to_string() == "C4/e,2*C4/C4");
    CHECK(parse_gset("2C4/C4,C4/e", f.lat) == t);
    CHECK(parse_gset("0", f.lat, f.lat->whole()).is_empty());
    GSet h = parse_gset("H/H", f.lat, f.lat->parse_name("C2"));
    CHECK(h.level().id() == f.lat->parse_name("C2"));
    CHECK_THROWS_AS(parse_gset("C4/e, C2/e", f.lat), InputError);
    CHECK_THROWS_AS(parse_gset("C4/", f.lat), InputError);
    CHECK_THROWS_AS(parse_gset("C2/C4", f.lat), InputError);
  }

  TEST_CASE("stabilizers are normalized to class representatives") {
    Fixture f("S3");
    GSet a = GSet::orbit(f.whole(), f.lat->parse_name("#2"));
    GSet b = GSet::orbit(f.whole(), f.lat->parse_name("C2"));
    CHECK(a == b);
    CHECK(a.cardinality() == 3);
  }

  TEST_CASE("marks match fixed points") {
    Fixture f("C2");
    MarkVector m = marks(parse_gset("C2/e", f.lat));
    CHECK(m.entries == std::vector<std::size_t>{2, 0});
    for (const char* name : {"S3", "D4", "A4"}) {
      Fixture g(name);
      std::mt19937_64 rng(7);
      for (std::size_t h = 0; h < g.lat->size(); ++h)
        for (int k = 0; k < 5; ++k) {
          GSet t = random_gset(g.sub(h), rng);
          MarkVector mv = marks(t);
          oracle::Action a = oracle::from_gset(g.o, t);
          for (std::size_t i = 0; i < mv.subgroups.size(); ++i)
            CHECK(mv.entries[i] == oracle::fixed_points(g.o, a, g.o.from_library(*g.group, g.lat->members(mv.subgroups[i]))));
        }
    }
  }

  TEST_CASE("table of marks of S3") {
    Fixture f("S3");
    TableOfMarks t = table_of_marks(f.lat);
    std::vector<std::vector<std::size_t>> expected{{6, 0, 0, 0}, {3, 1, 0, 0}, {2, 0, 2, 0}, {1, 1, 1, 1}};
    CHECK(t.rows == expected);
  }

  TEST_CASE("operations agree with the element-level model") {
    for (const char* name : {"C4", "S3", "D4", "Q8", "A4"}) {
      Fixture f(name);
      std::mt19937_64 rng(11);
      for (int trial = 0; trial < 40; ++trial) {
        Subgroup h = f.sub(rng() % f.lat->size());
        const auto& below = f.lat->subgroups_of(h.id());
        Subgroup k = f.lat->subgroup(below[rng() % below.size()]);
        GSet s = random_gset(h, rng), t = random_gset(h, rng), u = random_gset(k, rng);
        oracle::Action as = oracle::from_gset(f.o, s), at = oracle::from_gset(f.o, t);
        oracle::Action au = oracle::from_gset(f.o, u);
        CAPTURE(name);
        CAPTURE(s.to_string());
        CAPTURE(t.to_string());
        CHECK(oracle::isomorphic(f.o, oracle::from_gset(f.o, product(s, t)), oracle::product(f.o, as, at)));
        CHECK(oracle::isomorphic(f.o, oracle::from_gset(f.o, coproduct(s, t)), oracle::disjoint_union(as, at)));
        oracle::Elems km = f.o.from_library(*f.group, k.members());
        CHECK(oracle::isomorphic(f.o, oracle::from_gset(f.o, restrict(s, k)), oracle::restrict_to(f.o, as, km)));
        oracle::Elems hm = f.o.from_library(*f.group, h.members());
        CHECK(oracle::isomorphic(f.o, oracle::from_gset(f.o, induce(u, h)), oracle::induce(f.o, au, hm)));
        CHECK(is_isomorphic(s, t) == oracle::isomorphic(f.o, as, at));
        CHECK(product(s, t).cardinality() == s.cardinality() * t.cardinality());
      }
    }
  }

  TEST_CASE("conjugation transports stabilizers") {
    Fixture f("S3");
    SubgroupId c2 = f.lat->parse_name("C2");
    GSet t = GSet::orbit(f.sub(c2.value), f.lat->trivial());
    for (Element g = 0; g < f.group->order(); ++g) {
      GSet c = conjugate(t, g);
      CHECK(c.level().id() == f.lat->conjugate(c2, g));
      CHECK(c.cardinality() == 2);
    }
  }

  TEST_CASE("sub-G-sets") {
    Fixture f("C4");
    GSet t = parse_gset("2*C4/e, C4/C2", f.lat);
    CHECK(sub_gsets(t).size() == 6);
    CHECK(sub_gsets(GSet::empty(f.whole())).size() == 1);
  }

  TEST_CASE("equivariant maps match brute force") {
    Fixture f("S3");
    auto sets = enumerate_gsets(f.whole(), 4);
    for (const GSet& s : sets)
      for (const GSet& t : sets) {
        if (s.cardinality() > 3) continue;
        Realization rs = realize(s), rt = realize(t);
        std::size_t count = 0;
        std::vector<Point> a(rs.size(), 0);
        std::size_t total = 1;
        for (std::size_t i = 0; i < rs.size(); ++i) total *= rt.size();
        for (std::size_t code = 0; code < total; ++code) {
          std::size_t c = code;
          for (auto& x : a) {
            x = static_cast<Point>(c % rt.size());
            c /= rt.size();
          }
          bool eq = true;
          for (std::size_t g = 0; g < rs.level_elements.size() && eq; ++g)
            for (Point x = 0; x < rs.size() && eq; ++x)
              if (a[rs.action[g][x]] != rt.action[g][a[x]]) eq = false;
          count += eq;
        }
        auto maps = gmaps(s, t);
        CAPTURE(s.to_string());
        CAPTURE(t.to_string());
        CHECK(maps.size() == count);
        for (const auto& m : maps) CHECK(m.is_equivariant());
      }
  }

  TEST_CASE("decomposing an action recovers the G-set") {
    Fixture f("D4");
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
      GSet t = random_gset(f.whole(), rng, 3);
      Realization r = realize(t);
      // Relabel points by a fixed shuffle and decompose.
      std::vector<Point> perm(r.size());
      for (Point i = 0; i < perm.size(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<std::vector<Point>> act(r.action.size(), std::vector<Point>(r.size()));
      for (std::size_t g = 0; g < r.action.size(); ++g)
        for (Point x = 0; x < r.size(); ++x) act[g][perm[x]] = perm[r.action[g][x]];
      Decomposition d = decompose_action(f.whole(), act);
      CHECK(d.gset == t);
      Realization canon = realize(d.gset);
      for (std::size_t g = 0; g < act.size(); ++g)
        for (Point p = 0; p < canon.size(); ++p) CHECK(act[g][d.iso[p]] == d.iso[canon.action[g][p]]);
    }
  }

  TEST_CASE("enumeration of G-sets") {
    Fixture f("C2");
    auto all = enumerate_gsets(f.whole(), 2);
    // 0, pt, 2pt, C2/e
    CHECK(all.size() == 4);
    auto only_trivial = enumerate_gsets(f.whole(), 3, std::vector<SubgroupId>{f.lat->whole()});
    CHECK(only_trivial.size() == 4);
  }
}
