#include <doctest.h>

#include <random>

#include "eqnorm/eqnorm.hpp"
#include "oracle.hpp"

using namespace eqnorm;

namespace {

LatticePtr lattice(const char* name) { return subgroups(preset_group(name)); }

Subgroup sub(const LatticePtr& lat, std::size_t i) {
  return lat->subgroup(SubgroupId{static_cast<std::uint32_t>(i)});
}

Subgroup whole(const LatticePtr& lat) { return lat->subgroup(lat->whole()); }

RealizationPtr real(const GSet& t) { return std::make_shared<const Realization>(realize(t)); }

template <class T>
const T& pick(const std::vector<T>& v, std::mt19937_64& rng) {
  return v[rng() % v.size()];
}

oracle::Elems elems(const oracle::Group& o, const Subgroup& h) {
  return o.from_library(h.lattice().group(), h.members());
}

const char* kGroups[] = {"C2", "C4", "C6", "S3", "D4", "Q8", "A4"};

}  // namespace

TEST_SUITE("products") {
  TEST_CASE("G-set operations match the element-level actions") {
    for (const char* g : kGroups) {
      LatticePtr lat = lattice(g);
      oracle::Group o(lat->group());
      std::mt19937_64 rng(3);
      for (int s = 0; s < 40; ++s) {
        Subgroup h = sub(lat, rng() % lat->size());
        auto sets = enumerate_gsets(h, 4);
        const GSet& a = pick(sets, rng);
        const GSet& b = pick(sets, rng);
        oracle::Action oa = oracle::from_gset(o, a), ob = oracle::from_gset(o, b);
        CHECK(oracle::isomorphic(o, oracle::from_gset(o, product(a, b)), oracle::product(o, oa, ob)));
        CHECK(oracle::isomorphic(o, oracle::from_gset(o, coproduct(a, b)), oracle::disjoint_union(oa, ob)));
        Subgroup k = lat->subgroup(pick(lat->subgroups_of(h.id()), rng));
        CHECK(oracle::isomorphic(o, oracle::from_gset(o, restrict(a, k)), oracle::restrict_to(o, oa, elems(o, k))));
        GSet c = pick(enumerate_gsets(k, 3), rng);
        CHECK(oracle::isomorphic(o, oracle::from_gset(o, induce(c, h)),
                                 oracle::induce(o, oracle::from_gset(o, c), elems(o, h))));
      }
    }
  }

  TEST_CASE("product and coproduct laws") {
    for (const char* g : kGroups) {
      LatticePtr lat = lattice(g);
      auto sets = enumerate_gsets(whole(lat), 3);
      std::mt19937_64 rng(4);
      for (int s = 0; s < 30; ++s) {
        GSet a = pick(sets, rng), b = pick(sets, rng), c = pick(sets, rng);
        CHECK(product(a, b) == product(b, a));
        CHECK(product(product(a, b), c) == product(a, product(b, c)));
        CHECK(product(a, coproduct(b, c)) == coproduct(product(a, b), product(a, c)));
        CHECK(coproduct(a, b) == coproduct(b, a));
        CHECK(product(a, parse_gset("H/H", lat, lat->whole())) == a);
        CHECK(product(a, parse_gset("0", lat, lat->whole())).is_empty());
        for (SubgroupId k : lat->subgroups_of(lat->whole())) {
          Subgroup kk = lat->subgroup(k);
          CHECK(restrict(product(a, b), kk) == product(restrict(a, kk), restrict(b, kk)));
          // Frobenius reciprocity: G x_K (res_K A x C) = A x (G x_K C).
          for (const GSet& cset : enumerate_gsets(kk, 2))
            CHECK(induce(product(restrict(a, kk), cset), whole(lat)) == product(a, induce(cset, whole(lat))));
        }
      }
    }
  }
}

TEST_SUITE("burnside") {
  TEST_CASE("marks are a ring homomorphism and separate isomorphism classes") {
    for (const char* g : kGroups) {
      LatticePtr lat = lattice(g);
      oracle::Group o(lat->group());
      auto sets = enumerate_gsets(whole(lat), 4);
      for (std::size_t i = 0; i < sets.size(); ++i) {
        MarkVector mi = marks(sets[i]);
        oracle::Action ai = oracle::from_gset(o, sets[i]);
        for (std::size_t j = 0; j < mi.subgroups.size(); ++j)
          CHECK(mi.entries[j] == oracle::fixed_points(o, ai, o.from_library(lat->group(), lat->members(mi.subgroups[j]))));
        for (std::size_t k = i; k < sets.size(); k += 3) {
          MarkVector mk = marks(sets[k]);
          MarkVector mp = marks(product(sets[i], sets[k]));
          MarkVector ms = marks(coproduct(sets[i], sets[k]));
          for (std::size_t j = 0; j < mi.subgroups.size(); ++j) {
            CHECK(mp.entries[j] == mi.entries[j] * mk.entries[j]);
            CHECK(ms.entries[j] == mi.entries[j] + mk.entries[j]);
          }
          CHECK((mi.entries == mk.entries) == (i == k));
          CHECK(is_isomorphic(sets[i], sets[k]) == (i == k));
        }
      }
    }
  }

  TEST_CASE("table of marks rows are the marks of the orbits") {
    for (const char* g : kGroups) {
      LatticePtr lat = lattice(g);
      TableOfMarks tom = table_of_marks(lat);
      auto reps = lat->class_reps_within(lat->whole());
      REQUIRE(tom.rows.size() == reps.size());
      for (std::size_t r = 0; r < reps.size(); ++r)
        CHECK(tom.rows[r] == marks(GSet::orbit(whole(lat), reps[r])).entries);
    }
  }
}

TEST_SUITE("enumeration") {
  TEST_CASE("generate is the least system containing the declared orbits") {
    for (const char* g : {"C4", "C6", "S3", "D4", "Q8"}) {
      LatticePtr lat = lattice(g);
      auto all = enumerate_all(lat);
      std::vector<NormPair> free;
      for (std::size_t h = 0; h < lat->size(); ++h)
        for (SubgroupId k : lat->class_reps_within(sub(lat, h).id()))
          if (k != sub(lat, h).id()) free.emplace_back(sub(lat, h).id(), k);
      std::mt19937_64 rng(8);
      for (int s = 0; s < 25; ++s) {
        std::vector<NormPair> declared;
        for (int d = 0, n = 1 + static_cast<int>(rng() % 3); d < n; ++d) declared.push_back(pick(free, rng));
        IndexingSystem gen = generate(lat, declared);
        CHECK(validate(gen).passed());
        for (auto [h, k] : declared) CHECK(gen.admits(h, k));
        bool found = false;
        for (const auto& ix : all) {
          bool contains = true;
          for (auto [h, k] : declared) contains = contains && ix.admits(h, k);
          if (contains) CHECK(leq(gen, ix));
          found = found || ix == gen;
        }
        CHECK(found);
      }
    }
  }

  TEST_CASE("generate is extensive, monotone and idempotent") {
    for (const char* g : {"C4", "S3", "D4", "Q8", "A4"}) {
      LatticePtr lat = lattice(g);
      std::vector<NormPair> free;
      for (std::size_t h = 0; h < lat->size(); ++h)
        for (SubgroupId k : lat->class_reps_within(sub(lat, h).id()))
          if (k != sub(lat, h).id()) free.emplace_back(sub(lat, h).id(), k);
      std::mt19937_64 rng(21);
      for (int s = 0; s < 30; ++s) {
        std::vector<NormPair> small, large;
        for (const auto& p : free) {
          std::uint64_t r = rng() % 4;
          if (r == 0) small.push_back(p);
          if (r <= 1) large.push_back(p);
        }
        IndexingSystem a = generate(lat, small), b = generate(lat, large);
        for (auto [h, k] : small) CHECK(a.admits(h, k));
        CHECK(leq(a, b));
        CHECK(generate_from(a, {}) == a);
        CHECK(generate_from(a, small) == a);
        std::vector<Closure> rev(kDefaultClosureOrder.rbegin(), kDefaultClosureOrder.rend());
        CHECK(generate(lat, large, rev) == b);
      }
    }
  }

  TEST_CASE("meet and join are lattice operations") {
    for (const char* g : {"C4", "S3", "D4"}) {
      LatticePtr lat = lattice(g);
      auto all = enumerate_all(lat);
      for (std::size_t i = 0; i < all.size(); i += 2)
        for (std::size_t j = 1; j < all.size(); j += 3) {
          const auto &a = all[i], &b = all[j];
          IndexingSystem m = meet(a, b), jn = join(a, b);
          CHECK(validate(m).passed());
          CHECK(validate(jn).passed());
          CHECK(leq(m, a));
          CHECK(leq(m, b));
          CHECK(leq(a, jn));
          CHECK(leq(b, jn));
          for (const auto& c : all) {
            if (leq(c, a) && leq(c, b)) CHECK(leq(c, m));
            if (leq(a, c) && leq(b, c)) CHECK(leq(jn, c));
          }
        }
    }
  }

  TEST_CASE("enumeration is sorted, duplicate-free and bounded by the extremes") {
    for (const char* g : {"C4", "S3", "D4", "Q8", "A4"}) {
      LatticePtr lat = lattice(g);
      auto all = enumerate_all(lat);
      CHECK(all.front() == IndexingSystem::trivial(lat));
      CHECK(all.back() == IndexingSystem::complete(lat));
      for (std::size_t i = 1; i < all.size(); ++i) {
        CHECK(all[i - 1].size() <= all[i].size());
        CHECK_FALSE(all[i - 1] == all[i]);
      }
    }
  }
}

TEST_SUITE("universes") {
  TEST_CASE("constituent containment is a preorder with certified answers") {
    for (const char* g : {"C3", "C4", "S3", "D4"}) {
      LatticePtr lat = lattice(g);
      std::vector<Rep> reps = mixed_universe(lat, g).generators();
      for (const GSet& t : enumerate_gsets(whole(lat), 3))
        if (!t.is_empty()) reps.push_back(perm_rep(t));
      for (const Rep& v : reps) CHECK(contains_constituents(v, v));
      for (const Rep& u : reps)
        for (const Rep& v : reps) {
          ConstituentRelation rel = constituents_contained(u, v);
          CHECK(rel.contained == contains_constituents(u, v));
          CHECK(verify_certificate(rel, u, v));
          for (const Rep& w : reps)
            if (contains_constituents(u, v) && contains_constituents(v, w)) CHECK(contains_constituents(u, w));
        }
    }
  }

  TEST_CASE("direct sums behave as unions of constituents") {
    for (const char* g : {"C4", "S3"}) {
      LatticePtr lat = lattice(g);
      std::vector<Rep> reps = mixed_universe(lat, g).generators();
      for (const GSet& t : enumerate_gsets(whole(lat), 2))
        if (!t.is_empty()) reps.push_back(perm_rep(t));
      for (const Rep& a : reps)
        for (const Rep& b : reps) {
          Rep s = direct_sum(a, b);
          CHECK(contains_constituents(a, s));
          CHECK(contains_constituents(b, s));
          for (const Rep& x : reps)
            CHECK(contains_constituents(s, x) == (contains_constituents(a, x) && contains_constituents(b, x)));
        }
    }
  }

  TEST_CASE("larger universes admit more") {
    for (const char* g : kGroups) {
      LatticePtr lat = lattice(g);
      IndexingSystem t = indexing_system_of_universe(trivial_universe(lat));
      IndexingSystem m = indexing_system_of_universe(mixed_universe(lat, g));
      IndexingSystem c = indexing_system_of_universe(complete_universe(lat));
      CHECK(leq(t, m));
      CHECK(leq(m, c));
    }
  }
}

TEST_SUITE("spans") {
  TEST_CASE("covering functors compose") {
    for (const char* g : {"C4", "S3", "D4"}) {
      LatticePtr lat = lattice(g);
      auto sets = enumerate_gsets(whole(lat), 3);
      std::mt19937_64 rng(6);
      for (int s = 0; s < 30; ++s) {
        GSet a = pick(sets, rng), b = pick(sets, rng), c = pick(sets, rng);
        auto ab = gmaps(a, b), bc = gmaps(b, c);
        if (ab.empty() || bc.empty()) continue;
        GMap f = pick(ab, rng), h = pick(bc, rng);
        CoveringFunctor cf = covering_of(f), ch = covering_of(h);
        CHECK(cf.is_functor());
        CHECK(cf.is_covering());
        CoveringFunctor comp = covering_of(compose(h, f));
        auto direct = compose_on_morphisms(ch, cf);
        REQUIRE(direct.size() == comp.source.morphism_count());
        for (std::size_t m = 0; m < direct.size(); ++m) CHECK(comp.on_morphism(m) == direct[m]);
      }
    }
  }

  TEST_CASE("span laws hold under gating") {
    for (const char* g : {"C4", "S3", "D4"}) {
      LatticePtr lat = lattice(g);
      IndexingSystem ix = indexing_system_of_universe(mixed_universe(lat, g));
      SpanLawReport r = sample_span_laws(lat, 40, 17, 4, &ix);
      CHECK(r.passed());
      CHECK(r.assoc_checks == 40);
    }
  }

  TEST_CASE("composition of admissible spans stays admissible") {
    LatticePtr lat = lattice("S3");
    IndexingSystem ix = indexing_system_of_universe(mixed_universe(lat, "S3"));
    RealizationPtr s = real(parse_gset("S3/C3", lat)), t = real(parse_gset("S3/S3, S3/C3", lat));
    std::mt19937_64 rng(12);
    for (int i = 0; i < 20; ++i) {
      auto a = random_span(s, t, rng, 4, &ix), b = random_span(t, s, rng, 4, &ix);
      REQUIRE(a);
      REQUIRE(b);
      Span c = compose(*a, *b, &ix);
      CHECK(ix.admits(c.apex()->gset));
    }
  }
}
