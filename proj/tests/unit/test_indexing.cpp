#include <doctest.h>

#include "eqnorm/eqnorm.hpp"

using namespace eqnorm;

namespace {

LatticePtr lattice(const char* name) { return subgroups(preset_group(name)); }

NormPair pair(const LatticePtr& lat, const char* h, const char* k) {
  return {lat->parse_name(h), lat->parse_name(k)};
}

}  // namespace

TEST_SUITE("indexing") {
  TEST_CASE("trivial and complete systems are valid") {
    for (const auto& name : group_preset_names()) {
      if (name == "S4") continue;
      LatticePtr lat = lattice(name.c_str());
      CAPTURE(name);
      CHECK(validate(IndexingSystem::trivial(lat)).passed());
      CHECK(validate(IndexingSystem::complete(lat)).passed());
      CHECK(leq(IndexingSystem::trivial(lat), IndexingSystem::complete(lat)));
    }
  }

  TEST_CASE("sizes") {
    LatticePtr lat = lattice("C4");
    CHECK(IndexingSystem::trivial(lat).size() == 3);
    CHECK(IndexingSystem::complete(lat).size() == 6);
  }

  TEST_CASE("each axiom can fail with a counterexample") {
    LatticePtr lat = lattice("C4");
    IndexingSystem ix = IndexingSystem::trivial(lat);
    ix.set(lat->whole(), lat->trivial());
    ValidationReport r = validate(ix);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.result(Axiom::RestrictionFunctoriality).passed);
    CHECK_FALSE(r.result(Axiom::RestrictionFunctoriality).counterexample.empty());
    CHECK(r.result(Axiom::Conjugation).passed);

    IndexingSystem missing(lat);
    missing.set(lat->whole(), lat->whole(), false);
    CHECK_FALSE(validate(missing).result(Axiom::TrivialSets).passed);

    // C4/C2 alone is already a valid system.
    IndexingSystem p = IndexingSystem::trivial(lat);
    p.set(lat->whole(), lat->parse_name("C2"));
    CHECK(validate(p).passed());
  }

  TEST_CASE("self-induction failure") {
    LatticePtr lat = lattice("C4");
    IndexingSystem ix = IndexingSystem::trivial(lat);
    ix.set(lat->parse_name("C2"), lat->trivial());
    ix.set(lat->whole(), lat->parse_name("C2"));
    // C2/e admissible at C2 and C4/C2 admissible: C4 x_C2 C2/e = C4/e must be.
    ValidationReport r = validate(ix);
    CHECK_FALSE(r.result(Axiom::SelfInduction).passed);
  }

  TEST_CASE("generation closes under the axioms") {
    LatticePtr lat = lattice("C4");
    IndexingSystem sub2 = generate(lat, {pair(lat, "C2", "e")});
    CHECK(validate(sub2).passed());
    CHECK(sub2.admits(lat->parse_name("C2"), lat->trivial()));
    CHECK(sub2.admissible_stabilizers(lat->whole()).size() == 1);
    IndexingSystem g = generate(lat, {pair(lat, "C4", "e")});
    CHECK(validate(g).passed());
    CHECK(g.admits(lat->parse_name("C2"), lat->trivial()));
    CHECK_FALSE(g.admits(lat->whole(), lat->parse_name("C2")));
    IndexingSystem both = generate(lat, {pair(lat, "C4", "C2"), pair(lat, "C2", "e")});
    CHECK(both == IndexingSystem::complete(lat));
    CHECK(generate(lat, {}) == IndexingSystem::trivial(lat));
  }

  TEST_CASE("closure order does not matter") {
    LatticePtr lat = lattice("S3");
    std::vector<NormPair> d{pair(lat, "S3", "C2")};
    IndexingSystem a = generate(lat, d);
    std::vector<Closure> rev(kDefaultClosureOrder.rbegin(), kDefaultClosureOrder.rend());
    CHECK(generate(lat, d, rev) == a);
    CHECK(validate(a).passed());
  }

  TEST_CASE("lattice operations") {
    LatticePtr lat = lattice("C9");
    auto all = enumerate_all(lat);
    CHECK(all.size() == 5);
    for (const auto& a : all)
      for (const auto& b : all) {
        IndexingSystem m = meet(a, b), j = join(a, b);
        CHECK(validate(m).passed());
        CHECK(validate(j).passed());
        CHECK(leq(m, a));
        CHECK(leq(a, j));
        CHECK(leq(b, j));
        CHECK((leq(a, b) && leq(b, a)) == (a == b));
      }
  }

  TEST_CASE("enumeration is sorted by size") {
    auto all = enumerate_all(lattice("S3"));
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1].size() <= all[i].size());
    CHECK(all.front() == IndexingSystem::trivial(all.front().lattice_ptr()));
    CHECK(all.back() == IndexingSystem::complete(all.front().lattice_ptr()));
  }

  TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_all(lattice("S4"), EnumerationLimits{4}), CapExceeded);
  }

  TEST_CASE("graph subgroups meet the symmetric group trivially") {
    LatticePtr lat = lattice("S3");
    Subgroup g = lat->subgroup(lat->whole());
    GraphSubgroup gr = graph_subgroup(g, parse_gset("S3/C2", lat));
    CHECK(gr.degree == 3);
    CHECK(gr.members.size() == 6);
    CHECK(gr.meets_symmetric_trivially());
    IndexingSystem triv = IndexingSystem::trivial(lat);
    CHECK_THROWS_AS(graph_subgroup(g, parse_gset("S3/C2", lat), &triv), InadmissibleError);
    auto fam = family_of(IndexingSystem::complete(lat), 2);
    CHECK_FALSE(fam.empty());
    for (const auto& x : fam) CHECK(x.meets_symmetric_trivially());
  }
}
