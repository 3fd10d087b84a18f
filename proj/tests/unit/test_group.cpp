#include <doctest.h>

#include "eqnorm/eqnorm.hpp"
#include "oracle.hpp"

using namespace eqnorm;

TEST_SUITE("group") {
  TEST_CASE("permutation composition is right to left") {
    Permutation p = Permutation::from_cycles(3, {{0, 1}});
    Permutation q = Permutation::from_cycles(3, {{1, 2}});
    Permutation pq = p * q;
    CHECK(pq(1) == p(q(1)));
    CHECK(pq(2) == 0);
    CHECK((pq * pq.inverse()).is_identity());
    CHECK(pq.to_cycle_string() == "(0 1 2)");
    CHECK(Permutation::identity(4).to_cycle_string() == "()");
  }

  TEST_CASE("invalid permutations are rejected") {
    CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0, 1}), InputError);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{0, 3}}), InputError);
  }

  TEST_CASE("preset orders match a naive closure") {
    for (const auto& name : group_preset_names()) {
      GroupPtr g = preset_group(name);
      oracle::Group o(*g);
      CAPTURE(name);
      CHECK(g->order() == o.order());
    }
    CHECK(preset_group("S3")->order() == 6);
    CHECK(preset_group("Q8")->order() == 8);
    CHECK(preset_group("trivial")->order() == 1);
  }

  TEST_CASE("multiplication, inverses and element orders") {
    GroupPtr g = preset_group("D4");
    oracle::Group o(*g);
    for (Element a = 0; a < g->order(); ++a) {
      CHECK(g->mul(a, g->inv(a)) == g->identity());
      std::size_t k = 1;
      Element x = a;
      while (x != g->identity()) {
        x = g->mul(x, a);
        ++k;
      }
      CHECK(g->element_order(a) == k);
      for (Element b = 0; b < g->order(); ++b)
        CHECK(o.from_library(*g, g->mul(a, b)) == o.mul(o.from_library(*g, a), o.from_library(*g, b)));
    }
  }

  TEST_CASE("words evaluate back to the element") {
    GroupPtr g = preset_group("S4");
    for (Element e = 0; e < g->order(); ++e) {
      Permutation p = Permutation::identity(g->degree());
      for (auto w : g->word(e)) p = p * g->generators()[w];
      CHECK(p == g->element(e));
    }
  }

  TEST_CASE("element list order is deterministic") {
    GroupPtr a = preset_group("A4");
    GroupPtr b = preset_group("A4");
    for (Element e = 0; e < a->order(); ++e) CHECK(a->element(e) == b->element(e));
    CHECK(a->element(0).is_identity());
  }

  TEST_CASE("cayley tables give the regular representation") {
    std::vector<std::vector<std::size_t>> z3{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
    GroupPtr g = FiniteGroup::from_cayley_table(z3, "Z3");
    CHECK(g->order() == 3);
    CHECK(g->degree() == 3);
    std::vector<std::vector<std::size_t>> bad{{0, 1}, {1, 1}};
    CHECK_THROWS_AS(FiniteGroup::from_cayley_table(bad, "bad"), InputError);
  }

  TEST_CASE("group limits") {
    CHECK_THROWS_AS(preset_group("S4", GroupLimits{10}), CapExceeded);
    CHECK_THROWS_AS(preset_group("nope"), InputError);
    CHECK(canonical_group_preset("Cp2") == "C9");
  }
}
