#include <doctest.h>

#include "eqnorm/eqnorm.hpp"
#include "oracle.hpp"

using namespace eqnorm;

namespace {

Matrix scalar(long v) {
  Matrix m(1, 1);
  m(0, 0) = v;
  return m;
}

}  // namespace

TEST_SUITE("rep") {
  TEST_CASE("rationals parse exactly") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational(" -4 ") == Rational(-4));
    CHECK(to_string(parse_rational("10/4")) == "5/2");
    CHECK_THROWS_AS(parse_rational("0.5"), InputError);
    CHECK_THROWS_AS(parse_rational("1/0"), InputError);
    CHECK_THROWS_AS(parse_rational("1/-2"), InputError);
    CHECK_THROWS_AS(parse_rational("x"), InputError);
  }

  TEST_CASE("exact linear algebra") {
    Matrix m(2, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(1, 2) = 1;
    CHECK(rank(m) == 2);
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 1);
    CHECK(m.apply(ns[0]) == std::vector<Rational>{0, 0});
    Matrix k = kronecker(Matrix::identity(2), m);
    CHECK(k.rows() == 4);
    CHECK(k.cols() == 6);
    CHECK(block_sum(m, m).rows() == 4);
  }

  TEST_CASE("permutation characters count fixed points") {
    LatticePtr lat = subgroups(preset_group("S3"));
    GSet t = parse_gset("S3/C2", lat);
    Rep r = perm_rep(t);
    CHECK(r.dimension() == 3);
    auto chi = character(r);
    Realization real = realize(t);
    for (std::size_t i = 0; i < chi.size(); ++i) {
      std::size_t fixed = 0;
      for (Point x = 0; x < real.size(); ++x) fixed += real.action[i][x] == x;
      CHECK(chi[i] == Rational(static_cast<long>(fixed)));
    }
  }

  TEST_CASE("hom dimension is the orbit count of the product") {
    LatticePtr lat = subgroups(preset_group("D4"));
    oracle::Group o(lat->group());
    Subgroup g = lat->subgroup(lat->whole());
    auto sets = enumerate_gsets(g, 4);
    for (const auto& x : sets)
      for (const auto& y : sets) {
        if (x.is_empty() || y.is_empty()) continue;
        auto ox = oracle::from_gset(o, x), oy = oracle::from_gset(o, y);
        CHECK(hom_dim(perm_rep(x), perm_rep(y)) == oracle::orbit_count(oracle::product(o, ox, oy)));
      }
  }

  TEST_CASE("representations must be homomorphisms") {
    LatticePtr lat = subgroups(preset_group("C2"));
    CHECK_THROWS_AS(Rep::from_group_generators(lat, {scalar(2)}), InputError);
    CHECK_THROWS_AS(Rep::from_group_generators(lat, {scalar(1), scalar(1)}), InputError);
    Rep sign = Rep::from_group_generators(lat, {scalar(-1)});
    CHECK(sign.dimension() == 1);
  }

  TEST_CASE("constituent containment with certificates") {
    LatticePtr lat = subgroups(preset_group("C2"));
    Subgroup g = lat->subgroup(lat->whole());
    Rep sign = Rep::from_group_generators(lat, {scalar(-1)});
    Rep triv = Rep::trivial(g);
    Rep reg = perm_rep(parse_gset("C2/e", lat));
    CHECK_FALSE(contains_constituents(sign, triv));
    CHECK(contains_constituents(triv, reg));
    CHECK(contains_constituents(sign, reg));
    CHECK(contains_constituents(reg, direct_sum(sign, triv)));

    ConstituentRelation no = constituents_contained(sign, triv);
    CHECK_FALSE(no.contained);
    CHECK(verify_certificate(no, sign, triv));
    ConstituentRelation forged = no;
    forged.outside_vector.assign(forged.outside_vector.size(), Rational(0));
    CHECK_FALSE(verify_certificate(forged, sign, triv));

    ConstituentRelation yes = constituents_contained(reg, direct_sum(sign, triv));
    CHECK(yes.contained);
    CHECK(verify_certificate(yes, reg, direct_sum(sign, triv)));
    ConstituentRelation dropped = yes;
    dropped.spanning_maps.pop_back();
    CHECK_FALSE(verify_certificate(dropped, reg, direct_sum(sign, triv)));
  }

  TEST_CASE("tensor, sums and restriction") {
    LatticePtr lat = subgroups(preset_group("S3"));
    Rep a = perm_rep(parse_gset("S3/C2", lat));
    Rep b = perm_rep(parse_gset("S3/C3", lat));
    Rep t = tensor(a, b), s = direct_sum(a, b);
    CHECK(t.dimension() == 6);
    auto ca = character(a), cb = character(b), ct = character(t), cs = character(s);
    for (std::size_t i = 0; i < ca.size(); ++i) {
      CHECK(ct[i] == ca[i] * cb[i]);
      CHECK(cs[i] == ca[i] + cb[i]);
    }
    Subgroup c3 = lat->subgroup(lat->parse_name("C3"));
    CHECK(restrict_rep(a, c3).dimension() == 3);
    CHECK(character(restrict_rep(a, c3)).size() == 3);
  }

  TEST_CASE("mixed universe of C4 admits C4/C2 only") {
    LatticePtr lat = subgroups(preset_group("C4"));
    Universe u = preset_universe("C4-mixed", lat);
    Subgroup g = lat->subgroup(lat->whole());
    Subgroup c2 = lat->subgroup(lat->parse_name("C2"));
    CHECK(admissible_for_universe(u, g, parse_gset("C4/C2", lat)));
    CHECK_FALSE(admissible_for_universe(u, g, parse_gset("C4/e", lat)));
    CHECK_FALSE(admissible_for_universe(u, c2, parse_gset("C2/e", lat)));
    IndexingSystem ix = indexing_system_of_universe(u);
    CHECK(ix.size() == 4);
    CHECK(validate(ix).passed());
  }

  TEST_CASE("universe extremes") {
    for (const char* name : {"C2", "S3", "Q8"}) {
      LatticePtr lat = subgroups(preset_group(name));
      CHECK(indexing_system_of_universe(trivial_universe(lat)) == IndexingSystem::trivial(lat));
      CHECK(indexing_system_of_universe(complete_universe(lat)) == IndexingSystem::complete(lat));
    }
  }

  TEST_CASE("admissibility certificates verify") {
    LatticePtr lat = subgroups(preset_group("C2"));
    Universe u = preset_universe("trivial-C2", lat);
    Subgroup g = lat->subgroup(lat->whole());
    GSet t = parse_gset("C2/e", lat);
    ConstituentRelation rel = admissibility_certificate(u, g, t);
    CHECK_FALSE(rel.contained);
    Rep w = restrict_rep(u.finite_witness(), g);
    CHECK(verify_certificate(rel, tensor(perm_rep(t), w), w));
  }

  TEST_CASE("admissible sets absorb the universe") {
    LatticePtr lat = subgroups(preset_group("S3"));
    Universe u = preset_universe("complete-S3", lat);
    Subgroup g = lat->subgroup(lat->whole());
    CHECK(unisum_check(u, g, parse_gset("S3/e", lat)));
    Universe t = preset_universe("trivial-S3", lat);
    CHECK_THROWS_AS(unisum_check(t, g, parse_gset("S3/e", lat)), PreconditionError);
  }

  TEST_CASE("universe presets") {
    CHECK(parse_universe_preset("C4-mixed").kind == "mixed");
    CHECK(parse_universe_preset("complete-Cp2").group == "C9");
    CHECK_THROWS_AS(parse_universe_preset("weird"), InputError);
    LatticePtr lat = subgroups(preset_group("C2"));
    CHECK_THROWS_AS(preset_universe("trivial-C4", lat), InputError);
  }
}
