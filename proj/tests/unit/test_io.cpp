#include <doctest.h>

#include <random>

#include "eqnorm/eqnorm.hpp"

using namespace eqnorm;

TEST_SUITE("io") {
  TEST_CASE("groups round trip") {
    for (const char* name : {"trivial", "S3", "Q8"}) {
      GroupPtr g = preset_group(name);
      GroupPtr back = group_from_json(group_to_json(*g));
      CHECK(back->order() == g->order());
      CHECK(back->name() == g->name());
      CHECK(group_to_json(*back) == group_to_json(*g));
    }
  }

  TEST_CASE("malformed groups are input errors") {
    CHECK_THROWS_AS(parse_json("{not json"), InputError);
    CHECK_THROWS_AS(group_from_json(parse_json(R"({"name":"x","degree":2,"generators":[[0,0]]})")), InputError);
    CHECK_THROWS_AS(group_from_json(parse_json(R"({"name":"x","degree":2})")), InputError);
    CHECK_THROWS_AS(group_from_json(parse_json(R"({"name":"x","degree":3,"generators":[[1,0]]})")), InputError);
  }

  TEST_CASE("G-sets round trip and accept literals") {
    LatticePtr lat = subgroups(preset_group("D4"));
    GSet t = parse_gset("2*D4/e, D4/D4", lat);
    CHECK(gset_from_json(gset_to_json(t), lat) == t);
    CHECK(gset_from_json(Json("2*D4/e, D4/D4"), lat) == t);
  }

  TEST_CASE("indexing systems round trip") {
    LatticePtr lat = subgroups(preset_group("S3"));
    for (const auto& ix : enumerate_all(lat)) CHECK(indexing_from_json(indexing_to_json(ix), lat) == ix);
    CHECK_THROWS_AS(indexing_from_json(parse_json(R"({"group":"S3","admissible":{"C3":["C2"]}})"), lat),
                    InputError);
  }

  TEST_CASE("universes round trip and reject floats") {
    LatticePtr lat = subgroups(preset_group("C3"));
    Universe u = preset_universe("C3-mixed", lat);
    Universe back = universe_from_json(universe_to_json(u), lat);
    CHECK(indexing_system_of_universe(back) == indexing_system_of_universe(u));
    Json j = parse_json(R"({"group":"C2","generators":[{"kind":"matrix","dimension":1,"matrices":[[[-1.0]]]}]})");
    LatticePtr c2 = subgroups(preset_group("C2"));
    CHECK_THROWS_AS(universe_from_json(j, c2), InputError);
    Json ok = parse_json(R"({"group":"C2","generators":[{"kind":"matrix","dimension":1,"matrices":[[["-1"]]]}]})");
    CHECK(universe_from_json(ok, c2).generators().size() >= 1);
    Json perm = parse_json(R"({"group":"C2","generators":[{"kind":"perm","gset":"C2/e"}]})");
    CHECK(indexing_system_of_universe(universe_from_json(perm, c2)) == IndexingSystem::complete(c2));
  }

  TEST_CASE("spans round trip") {
    LatticePtr lat = subgroups(preset_group("C4"));
    auto s = std::make_shared<const Realization>(realize(parse_gset("C4/C2", lat)));
    std::mt19937_64 rng(4);
    auto sp = random_span(s, s, rng);
    REQUIRE(sp);
    Span back = span_from_json(span_to_json(*sp), lat);
    CHECK(spans_isomorphic(back, *sp));
    CHECK(back.left.assignment == sp->left.assignment);
    Json j = span_to_json(*sp);
    j["left"][0] = 99;
    CHECK_THROWS_AS(span_from_json(j, lat), InputError);
  }

  TEST_CASE("traces round trip") {
    LatticePtr lat = subgroups(preset_group("C4"));
    Normalization n = normalize(parse_expr("res[C2](Npow[C4/C2](X))", lat));
    RewriteTrace t = trace_from_json(trace_to_json(n.trace));
    CHECK(t.input == n.trace.input);
    CHECK(t.output == n.trace.output);
    CHECK(t.steps.size() == n.trace.steps.size());
    CHECK(replay(t, lat) == n.normal);
    CHECK_THROWS_AS(trace_from_json(parse_json(R"({"input":"X"})")), InputError);
  }

  TEST_CASE("dumps are stable") {
    LatticePtr lat = subgroups(preset_group("C2"));
    CHECK(dump(gset_to_json(parse_gset("C2/e", lat))) == dump(gset_to_json(parse_gset("C2/e", lat))));
    CHECK(dump(Json{{"b", 1}, {"a", 2}}) == "{\n  \"b\": 1,\n  \"a\": 2\n}\n");
  }
}
