#include "context.hpp"

namespace eqnorm::cli {

namespace {

const std::string& expression_arg(const Context& c, std::size_t i, const char* what) {
  if (c.opts().positional.size() <= i) throw InputError(std::string("missing ") + what + " expression");
  return c.opts().positional[i];
}

NormExpr parse_checked(const GroupContext& g, const IndexingSystem* ix, const std::string& text) {
  NormExpr e = parse_expr(text, g.lattice);
  typecheck(e, ix);
  return e;
}

std::string path_text(const std::vector<std::size_t>& path) {
  if (path.empty()) return "root";
  std::vector<std::string> parts;
  for (auto i : path) parts.push_back(std::to_string(i));
  return join(parts, ".");
}

void print_trace(const RewriteTrace& t, std::ostream& out) {
  out << "input: " << t.input << "\n";
  for (std::size_t i = 0; i < t.steps.size(); ++i) {
    const RewriteStep& s = t.steps[i];
    out << i + 1 << ". " << rule_name(s.rule) << " at " << path_text(s.path) << "  ["
        << rule_identity(s.rule) << "]\n";
    out << "   " << s.after << "\n";
  }
  out << "output: " << t.output << "\n";
}

}  // namespace

int cmd_norm_normalize(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  NormExpr e = parse_checked(g, ix, expression_arg(c, 0, "an"));
  Normalization n = normalize(e);
  if (c.opts().json) {
    out << dump(Json{{"input", e.to_string()},
                     {"normal", n.normal.to_string()},
                     {"level", n.form.level.name()},
                     {"exponents", form_to_json(n.form)["exponents"]},
                     {"steps", n.trace.steps.size()},
                     {"reached_canonical", n.reached_canonical}});
  } else {
    out << n.normal.to_string() << "\n";
    out << "exponents: " << n.form.to_string() << "\n";
    if (!n.reached_canonical) out << "note: rewriting stopped short of the canonical form\n";
  }
  return kOk;
}

int cmd_norm_equiv(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  NormExpr a = parse_checked(g, ix, expression_arg(c, 0, "a first"));
  NormExpr b = parse_checked(g, ix, expression_arg(c, 1, "a second"));
  bool eq = equivalent(a, b);
  if (c.opts().json) {
    out << dump(Json{{"left", a.to_string()},
                     {"right", b.to_string()},
                     {"left_exponents", form_to_json(exponents_of(a))},
                     {"right_exponents", form_to_json(exponents_of(b))},
                     {"equivalent", eq}});
  } else {
    out << (eq ? "true" : "false") << "\n";
  }
  return eq ? kOk : kNegative;
}

int cmd_norm_trace(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  NormExpr e = parse_checked(g, ix, expression_arg(c, 0, "an"));
  Normalization n = normalize(e);
  if (c.opts().json) {
    Json j = trace_to_json(n.trace);
    j["group"] = g.group->name();
    j["reached_canonical"] = n.reached_canonical;
    out << dump(j);
  } else {
    print_trace(n.trace, out);
  }
  return kOk;
}

int cmd_norm_step(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  if (c.opts().rule.empty()) throw InputError("step needs --rule");
  Rule r = parse_rule(c.opts().rule);
  NormExpr e = parse_checked(g, ix, expression_arg(c, 0, "an"));
  std::optional<NormExpr> next = try_rewrite(e, r);
  if (next) typecheck(*next, ix);
  if (c.opts().json) {
    Json j{{"rule", std::string(rule_name(r))}, {"identity", std::string(rule_identity(r))},
           {"before", e.to_string()}, {"applies", next.has_value()}};
    if (next) j["after"] = next->to_string();
    out << dump(j);
  } else if (next) {
    out << next->to_string() << "\n";
  } else {
    out << rule_name(r) << " does not apply at the root of " << e.to_string() << "\n";
  }
  return next ? kOk : kNegative;
}

int cmd_norm_replay(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  if (c.opts().positional.empty()) throw InputError("replay needs a trace file");
  RewriteTrace t = trace_from_json(c.read_json(c.opts().positional.front(), "trace"));
  NormExpr result = replay(t, g.lattice);
  if (c.opts().json) {
    out << dump(Json{{"input", t.input}, {"steps", t.steps.size()}, {"output", result.to_string()},
                     {"verified", true}});
  } else {
    out << "replayed " << t.steps.size() << " steps: " << result.to_string() << "\n";
    out << "verified: yes\n";
  }
  return kOk;
}

}  // namespace eqnorm::cli
