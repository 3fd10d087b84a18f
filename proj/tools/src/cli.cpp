#include "eqnorm/cli.hpp"

#include <chrono>
#include <functional>
#include <sstream>

#include <CLI11.hpp>

#include "context.hpp"

namespace eqnorm::cli {

namespace {

using Handler = std::function<int(Context&, std::ostream&)>;

struct Outcome {
  int code = kOk;
  std::string out;
  std::string err;
  Json inputs = Json::array();
  double ms = 0;
};

struct Leaf {
  CLI::App* app;
  Handler run;
};

void add_common(CLI::App* s, Options& o) {
  s->add_option("--preset", o.preset, "Preset group or universe name");
  s->add_option("--file", o.file, "Group or universe JSON file");
  s->add_flag("--json", o.json, "Emit canonical JSON");
  s->add_option("--ix,--indexing", o.ix_file, "Indexing-system JSON file used for gating");
  s->add_flag("--ungated", o.ungated, "Allow every norm (the default)");
  s->add_option("--cache-dir", o.cache_dir, "Lattice cache directory");
  s->add_option("--workspace", o.workspace, "Workspace root (default: $EQNORM_WORKSPACE)");
  s->add_option("--cap-group-order", o.cap_group_order, "Largest group order accepted")
      ->check(CLI::PositiveNumber);
  s->add_option("--seed", o.seed, "Seed for randomized checks");
  s->add_option("--report", o.report, "Write a replayable report to this file");
}

Outcome execute(const std::vector<std::string>& args);

int replay_report(const std::string& path, const Options& o, std::ostream& out) {
  Workspace ws(o.workspace.empty() ? std::nullopt : std::optional<std::filesystem::path>(o.workspace));
  Json rep = parse_json(read_text_file(ws.resolve(path)), path);
  std::vector<std::string> command;
  std::string expected_out;
  int expected_code = 0;
  Json expected_inputs;
  try {
    command = rep.at("command").get<std::vector<std::string>>();
    expected_out = rep.at("stdout").get<std::string>();
    expected_code = rep.at("exit_code").get<int>();
    expected_inputs = rep.at("inputs");
  } catch (const nlohmann::json::exception& e) {
    throw InputError("malformed report " + path + ": " + e.what());
  }
  if (!command.empty() && command[0] == "report") throw InputError("a report cannot replay a report");
  Outcome now = execute(command);
  bool inputs_same = now.inputs == expected_inputs;
  bool out_same = now.out == expected_out;
  bool code_same = now.code == expected_code;
  out << "command: " << join(command, " ") << "\n";
  out << "inputs identical: " << yes_no(inputs_same) << "\n";
  out << "stdout identical: " << yes_no(out_same) << "\n";
  out << "exit code identical: " << yes_no(code_same) << " (" << now.code << ")\n";
  bool ok = inputs_same && out_same && code_same;
  out << "reproduced: " << yes_no(ok) << "\n";
  return ok ? kOk : kNegative;
}

Outcome execute(const std::vector<std::string>& args) {
  Outcome res;
  Options o;
  CLI::App app{"Combinatorics of equivariant multiplicative norms", kToolName};
  app.set_version_flag("--version", std::string(kToolName) + " " + kToolVersion);
  app.require_subcommand(1);

  std::vector<Leaf> leaves;
  auto leaf = [&](CLI::App* parent, const char* name, const char* desc, Handler h) {
    CLI::App* s = parent->add_subcommand(name, desc);
    add_common(s, o);
    leaves.push_back({s, std::move(h)});
    return s;
  };
  auto group_cmd = [&](const char* name, const char* desc) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->require_subcommand(1);
    return s;
  };

  CLI::App* group = group_cmd("group", "Subgroup lattices, marks and double cosets");
  leaf(group, "list", "List preset groups", cmd_group_list);
  leaf(group, "subgroups", "Subgroup lattice with conjugacy classes", cmd_group_subgroups);
  CLI::App* marks = leaf(group, "marks", "Marks of a G-set, or the table of marks", cmd_group_marks);
  marks->add_option("--gset", o.gset, "G-set literal such as 2*C4/e");
  marks->add_option("--at", o.at, "Level of the G-set");
  CLI::App* dc = leaf(group, "doublecosets", "Double cosets K\\A/H", cmd_group_doublecosets);
  dc->add_option("--left", o.left, "K");
  dc->add_option("--right", o.right, "H");
  dc->add_option("--ambient", o.ambient, "A (default G)");

  CLI::App* universe = group_cmd("universe", "Admissibility from a universe");
  CLI::App* adm = leaf(universe, "admissible", "Is T admissible at H, with a certificate", cmd_universe_admissible);
  adm->add_option("--gset", o.gset, "H-set literal");
  adm->add_option("--at", o.at, "Level H");
  leaf(universe, "indexing", "Indexing system of the universe", cmd_universe_indexing);

  CLI::App* indexing = group_cmd("indexing", "Indexing systems");
  leaf(indexing, "validate", "Check the seven axioms", cmd_indexing_validate)
      ->add_option("system", o.positional, "Indexing-system file (or --ix)");
  leaf(indexing, "generate", "Least system admitting the declared orbits", cmd_indexing_generate)
      ->add_option("--declare", o.declare, "Admissible orbit literal H/K (repeatable)");
  leaf(indexing, "enumerate", "All indexing systems of the group", cmd_indexing_enumerate);
  CLI::App* cmp = leaf(indexing, "compare", "Order, meet and join of two systems", cmd_indexing_compare);
  cmp->add_option("--left", o.left, "First indexing-system file");
  cmp->add_option("--right", o.right, "Second indexing-system file");

  CLI::App* norm = group_cmd("norm", "Norm and restriction expressions");
  leaf(norm, "normalize", "Normal form and exponents", cmd_norm_normalize)
      ->add_option("expr", o.positional, "Expression");
  leaf(norm, "equiv", "Do two expressions have isomorphic exponents", cmd_norm_equiv)
      ->add_option("exprs", o.positional, "Two expressions")
      ->expected(2);
  leaf(norm, "trace", "Rewrite steps of normalization", cmd_norm_trace)->add_option("expr", o.positional, "Expression");
  CLI::App* step = leaf(norm, "step", "Apply one rule at the root", cmd_norm_step);
  step->add_option("--rule", o.rule, "Rule name such as double-coset");
  step->add_option("expr", o.positional, "Expression");
  leaf(norm, "replay", "Re-verify a JSON trace", cmd_norm_replay)->add_option("trace", o.positional, "Trace file");

  CLI::App* span = group_cmd("span", "Span bicategory of admissible sets");
  CLI::App* comp = leaf(span, "compose", "Pullback composition of two spans", cmd_span_compose);
  comp->add_option("--left", o.left, "First span file");
  comp->add_option("--right", o.right, "Second span file");
  CLI::App* assoc = leaf(span, "check-assoc", "Unit and associativity laws on random spans", cmd_span_check_assoc);
  assoc->add_option("--samples", o.samples, "Number of random triples");
  assoc->add_option("--max-card", o.max_card, "Largest object cardinality");
  std::size_t pullback_card = 6;
  CLI::App* pb = leaf(span, "pullback-square", "Translation-category pullback square", [&](Context& c, std::ostream& s) {
    o.max_card = pullback_card;
    return cmd_span_pullback_square(c, s);
  });
  pb->add_option("--at", o.at, "Subgroup H (default G)");
  pb->add_option("--gset", o.gset, "G-set T; all T up to --max-card when omitted");
  pb->add_option("--max-card", pullback_card, "Largest |T| when enumerating");

  CLI::App* report = group_cmd("report", "Replayable reports");
  std::string report_file;
  CLI::App* rr = report->add_subcommand("replay", "Rerun a report and compare outputs byte for byte");
  rr->add_option("report", report_file, "Report file")->required();
  rr->add_option("--workspace", o.workspace, "Workspace root");

  std::ostringstream out, err;
  auto start = std::chrono::steady_clock::now();
  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    res.code = code == 0 ? kOk : kInputError;
    res.out = out.str();
    res.err = err.str();
    return res;
  }

  const Handler* run = nullptr;
  for (const auto& l : leaves)
    if (l.app->parsed()) run = &l.run;
  Context ctx(o);
  try {
    if (rr->parsed()) {
      res.code = replay_report(report_file, o, out);
    } else {
      res.code = (*run)(ctx, out);
    }
  } catch (const CapExceeded& e) {
    err << kToolName << ": cap exceeded: " << e.what() << "\n";
    res.code = kCapExceeded;
  } catch (const InputError& e) {
    err << kToolName << ": error: " << e.what() << "\n";
    res.code = kInputError;
  } catch (const std::exception& e) {
    err << kToolName << ": internal error: " << e.what() << "\n";
    res.code = kInternalError;
  }
  res.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  res.out = out.str();
  res.err = err.str();
  res.inputs = ctx.inputs();

  if (!o.report.empty() && !rr->parsed()) {
    std::vector<std::string> command;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (args[i] == "--report") {
        ++i;
        continue;
      }
      if (args[i].rfind("--report=", 0) == 0) continue;
      command.push_back(args[i]);
    }
    Json rep{{"tool", kToolName},    {"version", kToolVersion}, {"command", command},
             {"inputs", res.inputs}, {"stdout", res.out},       {"exit_code", res.code},
             {"timing_ms", res.ms}};
    try {
      write_text_file(ctx.workspace().resolve(o.report), dump(rep));
    } catch (const std::exception& e) {
      res.err += std::string(kToolName) + ": cannot write report: " + e.what() + "\n";
      if (res.code == kOk) res.code = kInputError;
    }
  }
  return res;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    Outcome r = execute(args);
    out << r.out;
    err << r.err;
    return r.code;
  } catch (const std::exception& e) {
    err << kToolName << ": internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace eqnorm::cli
