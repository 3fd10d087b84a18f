#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "eqnorm/cli.hpp"
#include "eqnorm/eqnorm.hpp"

using namespace eqnorm;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path tmp_dir() {
  fs::path p = fs::path(EQNORM_TEST_TMP) / "cli";
  fs::create_directories(p);
  return p;
}

std::string write(const std::string& name, const std::string& text) {
  fs::path p = tmp_dir() / name;
  std::ofstream(p) << text;
  return p.string();
}

std::string first_line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("group commands") {
    Run r = run({"group", "subgroups", "--preset", "S3"});
    CHECK(r.code == 0);
    CHECK(first_line(r.out) == "group S3, order 6: 6 subgroups in 4 conjugacy classes");
    Run m = run({"group", "marks", "--preset", "C2", "--gset", "C2/e"});
    CHECK(m.code == 0);
    CHECK(m.out.find("marks: (2, 0)") != std::string::npos);
    Run t = run({"group", "subgroups", "--preset", "trivial", "--json"});
    CHECK(parse_json(t.out).at("subgroups").size() == 1);
    CHECK(run({"group", "list"}).code == 0);
    CHECK(run({"group", "doublecosets", "--preset", "S3", "--left", "C2", "--right", "C2"}).code == 0);
    CHECK(run({"group", "doublecosets", "--preset", "S3"}).code == 2);
  }

  TEST_CASE("error exit codes") {
    CHECK(run({"group", "subgroups", "--preset", "nope"}).code == 2);
    CHECK(run({"group", "subgroups", "--file", "/no/such/file.json"}).code == 2);
    CHECK(run({"group", "subgroups", "--file", write("bad.json", "{")}).code == 2);
    CHECK(run({"group", "subgroups", "--preset", "S4", "--cap-group-order", "12"}).code == 3);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({}).code == 2);
    Run help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("group") != std::string::npos);
    CHECK(run({"--version"}).out == "eqnorm 0.1.0\n");
  }

  TEST_CASE("universe commands") {
    Run mixed = run({"universe", "indexing", "--preset", "C4-mixed", "--json"});
    CHECK(mixed.code == 0);
    LatticePtr lat = subgroups(preset_group("C4"));
    IndexingSystem ix = indexing_from_json(parse_json(mixed.out), lat);
    CHECK(validate(ix).passed());
    CHECK(ix.admits(lat->whole(), lat->parse_name("C2")));
    CHECK_FALSE(ix.admits(lat->whole(), lat->trivial()));
    Run complete = run({"universe", "indexing", "--preset", "complete-C2", "--json"});
    LatticePtr c2 = subgroups(preset_group("C2"));
    CHECK(indexing_from_json(parse_json(complete.out), c2) == IndexingSystem::complete(c2));
    Run adm = run({"universe", "admissible", "--preset", "trivial-C2", "--at", "C2", "--gset", "C2/e"});
    CHECK(adm.code == 1);
    CHECK(adm.out.find("admissible: false") != std::string::npos);
    CHECK(adm.out.find("missing constituent") != std::string::npos);
    std::string f = write("float.json",
                          R"({"group":"C2","generators":[{"kind":"matrix","dimension":1,"matrices":[[[0.5]]]}]})");
    CHECK(run({"universe", "indexing", "--file", f}).code == 2);
  }

  TEST_CASE("indexing commands") {
    Run e = run({"indexing", "enumerate", "--preset", "Cp2"});
    CHECK(e.code == 0);
    CHECK(first_line(e.out) == "5 indexing systems for C9");
    std::string mixed = write("mixed.json", run({"universe", "indexing", "--preset", "C4-mixed", "--json"}).out);
    CHECK(run({"indexing", "validate", "--preset", "C4", mixed}).code == 0);
    std::string bad = write("badix.json", R"({"group":"C4","admissible":{"e":["e"],"C2":["C2"],"C4":["e","C4"]}})");
    CHECK(run({"indexing", "validate", "--preset", "C4", bad}).code == 1);
    Run g = run({"indexing", "generate", "--preset", "C4", "--declare", "C4/C2", "--declare", "C2/e", "--json"});
    CHECK(g.code == 0);
    LatticePtr lat = subgroups(preset_group("C4"));
    CHECK(indexing_from_json(parse_json(g.out), lat) == IndexingSystem::complete(lat));
    Run c = run({"indexing", "compare", "--preset", "C4", "--left", mixed, "--right", mixed});
    CHECK(c.out.find("equal: yes") != std::string::npos);
  }

  TEST_CASE("norm commands") {
    std::string mixed = write("mixed-n.json", run({"universe", "indexing", "--preset", "C4-mixed", "--json"}).out);
    Run eq = run({"norm", "equiv", "--preset", "C4", "--ix", mixed, "res[C2](Npow[C4/C2](X))",
                  "smash(res[C2](X),res[C2](X))"});
    CHECK(eq.code == 0);
    CHECK(eq.out == "true\n");
    Run ne = run({"norm", "equiv", "--preset", "C4", "X", "smash(X,X)"});
    CHECK(ne.code == 1);
    CHECK(ne.out == "false\n");
    Run n = run({"norm", "normalize", "Npow[H/H](X)"});
    CHECK(n.code == 0);
    CHECK(first_line(n.out) == "X");
    CHECK(run({"norm", "normalize", "--preset", "C4", "--ix", mixed, "norm[C4](res[e](X))"}).code == 2);
    CHECK(run({"norm", "normalize", "--preset", "C4", "--ix", mixed, "--ungated", "X"}).code == 2);
    CHECK(run({"norm", "normalize", "--preset", "C4", "res[C2](X"}).code == 2);
    Run tr = run({"norm", "trace", "--preset", "C4", "--json", "res[C2](Npow[C4/C2](X))"});
    CHECK(tr.code == 0);
    std::string trace = write("trace.json", tr.out);
    CHECK(run({"norm", "replay", "--preset", "C4", trace}).code == 0);
    Json j = parse_json(tr.out);
    j["output"] = "X";
    CHECK(run({"norm", "replay", "--preset", "C4", write("bad-trace.json", dump(j))}).code == 2);
    CHECK(run({"norm", "step", "--preset", "C4", "--rule", "npow-expand", "Npow[C4/C2](X)"}).out ==
          "norm[C4](res[C2](X))\n");
    CHECK(run({"norm", "step", "--preset", "C4", "--rule", "double-coset", "Npow[C4/C2](X)"}).code == 1);
  }

  TEST_CASE("span commands") {
    Run a = run({"span", "check-assoc", "--preset", "C2", "--samples", "20"});
    CHECK(a.code == 0);
    CHECK(a.out.find("passed: yes") != std::string::npos);
    Run p = run({"span", "pullback-square", "--preset", "C2"});
    CHECK(p.code == 0);
    Run one = run({"span", "pullback-square", "--preset", "S3", "--at", "C2", "--gset", "S3/C3"});
    CHECK(one.code == 0);
    LatticePtr lat = subgroups(preset_group("C2"));
    auto s = std::make_shared<const Realization>(realize(parse_gset("C2/e", lat)));
    Span id = identity_span(s);
    std::string f = write("span.json", dump(span_to_json(id)));
    Run c = run({"span", "compose", "--preset", "C2", "--left", f, "--right", f, "--json"});
    CHECK(c.code == 0);
    Span back = span_from_json(parse_json(c.out), lat);
    CHECK(spans_isomorphic(back, id));
  }

  TEST_CASE("reports replay byte for byte") {
    std::string mixed = write("mixed-r.json", run({"universe", "indexing", "--preset", "C4-mixed", "--json"}).out);
    std::string rep = (tmp_dir() / "report.json").string();
    Run r = run({"indexing", "validate", "--preset", "C4", mixed, "--report", rep});
    CHECK(r.code == 0);
    Json j = read_json_file(rep);
    CHECK(j.at("stdout").get<std::string>() == r.out);
    CHECK(j.at("tool") == "eqnorm");
    Run again = run({"report", "replay", rep});
    CHECK(again.code == 0);
    CHECK(again.out.find("reproduced: yes") != std::string::npos);
    std::ofstream(mixed) << R"({"group":"C4","admissible":{"e":["e"],"C2":["C2"],"C4":["C4"]}})";
    Run changed = run({"report", "replay", rep});
    CHECK(changed.code == 1);
    CHECK(changed.out.find("inputs identical: no") != std::string::npos);
  }
}
