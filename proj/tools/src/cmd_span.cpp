#include "context.hpp"

namespace eqnorm::cli {

namespace {

std::string points_text(const std::vector<Point>& v) {
  std::vector<std::string> parts;
  for (auto p : v) parts.push_back(std::to_string(p));
  return "[" + join(parts, " ") + "]";
}

Span load_span(Context& c, const GroupContext& g, const IndexingSystem* ix, const std::string& path,
               const char* role) {
  if (path.empty()) throw InputError(std::string("compose needs --") + role + " span file");
  return span_from_json(c.read_json(path, role), g.lattice, ix);
}

}  // namespace

int cmd_span_compose(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  Span a = load_span(c, g, ix, c.opts().left, "left");
  Span b = load_span(c, g, ix, c.opts().right, "right");
  if (!(a.target()->gset == b.source()->gset))
    throw InputError("spans are not composable: " + a.target()->gset.to_string() + " vs " +
                     b.source()->gset.to_string());
  Span s = compose(a, b, ix);
  if (c.opts().json) {
    out << dump(span_to_json(s));
    return kOk;
  }
  out << "source: " << s.source()->gset.to_string() << "\n";
  out << "apex:   " << s.apex()->gset.to_string() << " (" << s.apex()->size() << " points)\n";
  out << "target: " << s.target()->gset.to_string() << "\n";
  out << "left:   " << points_text(s.left.assignment) << "\n";
  out << "right:  " << points_text(s.right.assignment) << "\n";
  return kOk;
}

int cmd_span_check_assoc(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const IndexingSystem* ix = c.gate(g);
  SpanLawReport r = sample_span_laws(g.lattice, c.opts().samples, c.opts().seed, c.opts().max_card, ix);
  if (c.opts().json) {
    out << dump(Json{{"group", g.group->name()},
                     {"seed", c.opts().seed},
                     {"objects", r.objects},
                     {"unit_checks", r.unit_checks},
                     {"unit_failures", r.unit_failures},
                     {"assoc_checks", r.assoc_checks},
                     {"assoc_failures", r.assoc_failures},
                     {"skipped", r.skipped},
                     {"passed", r.passed()}});
  } else {
    out << "group " << g.group->name() << ", seed " << c.opts().seed << ", " << r.objects
        << " objects with at most " << c.opts().max_card << " points\n";
    out << "unit laws: " << r.unit_checks - r.unit_failures << "/" << r.unit_checks << " hold\n";
    out << "associativity: " << r.assoc_checks - r.assoc_failures << "/" << r.assoc_checks << " hold\n";
    if (r.skipped) out << "skipped: " << r.skipped << " samples without composable spans\n";
    out << "passed: " << yes_no(r.passed()) << "\n";
  }
  return r.passed() ? kOk : kNegative;
}

int cmd_span_pullback_square(Context& c, std::ostream& out) {
  GroupContext g = c.group();
  const SubgroupLattice& lat = *g.lattice;
  Subgroup whole = lat.subgroup(lat.whole());
  std::vector<std::pair<Subgroup, GSet>> cases;
  if (!c.opts().gset.empty()) {
    Subgroup h = c.subgroup(g, c.opts().at, lat.whole());
    cases.emplace_back(h, parse_gset(c.opts().gset, g.lattice, lat.whole()));
    if (!(cases.back().second.level() == whole)) throw InputError("pullback-square needs a G-set at G");
  } else {
    std::vector<GSet> sets = enumerate_gsets(whole, c.opts().max_card);
    for (std::size_t i = 0; i < lat.size(); ++i)
      for (const GSet& t : sets) cases.emplace_back(lat.subgroup(SubgroupId{static_cast<std::uint32_t>(i)}), t);
  }
  std::size_t failures = 0;
  Json failed = Json::array();
  std::vector<std::vector<std::string>> rows{{"H", "T", "pullback"}};
  for (const auto& [h, t] : cases) {
    bool ok = pullback_square_check(h, t);
    if (!ok) {
      ++failures;
      failed.push_back({{"H", h.name()}, {"T", t.to_string()}});
    }
    if (cases.size() == 1 || !ok) rows.push_back({h.name(), t.to_string(), ok ? "ok" : "FAIL"});
  }
  if (c.opts().json) {
    out << dump(Json{{"group", g.group->name()}, {"cases", cases.size()}, {"failures", failed},
                     {"passed", failures == 0}});
  } else {
    if (rows.size() > 1) out << format_table(rows);
    out << "pullback squares: " << cases.size() - failures << "/" << cases.size() << " hold\n";
  }
  return failures == 0 ? kOk : kNegative;
}

}  // namespace eqnorm::cli
