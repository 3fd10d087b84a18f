#include "context.hpp"

namespace eqnorm::cli {

namespace {

std::string vector_text(const std::vector<Rational>& v) {
  std::vector<std::string> parts;
  for (const auto& q : v) parts.push_back(to_string(q));
  return "(" + join(parts, ", ") + ")";
}

std::string orbit_list(const IndexingSystem& ix, SubgroupId h) {
  const SubgroupLattice& lat = ix.lattice();
  std::vector<std::string> parts;
  for (SubgroupId k : ix.admissible_stabilizers(h)) parts.push_back(lat.name(h) + "/" + lat.name(k));
  return parts.empty() ? "-" : join(parts, ", ");
}

}  // namespace

std::string indexing_table(const IndexingSystem& ix) {
  const SubgroupLattice& lat = ix.lattice();
  std::vector<std::vector<std::string>> rows{{"H", "admissible H/K"}};
  for (std::size_t i = 0; i < lat.size(); ++i) {
    SubgroupId h{static_cast<std::uint32_t>(i)};
    rows.push_back({lat.name(h), orbit_list(ix, h)});
  }
  return format_table(rows);
}

std::string nontrivial_orbits(const IndexingSystem& ix) {
  const SubgroupLattice& lat = ix.lattice();
  std::vector<std::string> parts;
  for (std::size_t i = 0; i < lat.size(); ++i) {
    SubgroupId h{static_cast<std::uint32_t>(i)};
    for (SubgroupId k : ix.admissible_stabilizers(h))
      if (k != h) parts.push_back(lat.name(h) + "/" + lat.name(k));
  }
  return parts.empty() ? "trivial" : join(parts, ", ");
}

int cmd_universe_admissible(Context& c, std::ostream& out) {
  auto [g, u] = c.universe();
  const SubgroupLattice& lat = *g.lattice;
  if (c.opts().gset.empty()) throw InputError("admissible needs --gset");
  std::optional<SubgroupId> hint;
  if (!c.opts().at.empty()) hint = lat.parse_name(c.opts().at);
  GSet t = parse_gset(c.opts().gset, g.lattice, hint);
  Subgroup h = t.level();
  ConstituentRelation rel = admissibility_certificate(u, h, t);
  Rep w = restrict_rep(u.finite_witness(), h);
  Rep v = tensor(perm_rep(t), w);
  bool verified = verify_certificate(rel, v, w);
  std::size_t support = 0;
  for (const auto& q : rel.annihilator) support += sgn(q) != 0;

  if (c.opts().json) {
    Json cert;
    if (rel.contained) {
      Json maps = Json::array();
      for (const Matrix& m : rel.spanning_maps) {
        Json rows = Json::array();
        for (std::size_t i = 0; i < m.rows(); ++i) {
          Json row = Json::array();
          for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
          rows.push_back(row);
        }
        maps.push_back(rows);
      }
      cert = {{"kind", "spanning-maps"}, {"maps", maps}};
    } else {
      Json z = Json::array(), vec = Json::array();
      for (const auto& q : rel.annihilator) z.push_back(to_string(q));
      for (const auto& q : rel.outside_vector) vec.push_back(to_string(q));
      cert = {{"kind", "missing-constituent"}, {"central_element", z}, {"vector", vec}};
    }
    out << dump(Json{{"universe", u.name()},
                     {"at", h.name()},
                     {"gset", gset_to_json(t)},
                     {"dimensions", {{"U", w.dimension()}, {"T_tensor_U", v.dimension()}}},
                     {"admissible", rel.contained},
                     {"certificate", cert},
                     {"verified", verified}});
  } else {
    out << "universe " << u.name() << ", H = " << h.name() << ", T = " << t.to_string() << "\n";
    out << "dim U|H = " << w.dimension() << ", dim R{T} (x) U|H = " << v.dimension() << "\n";
    out << "admissible: " << (rel.contained ? "true" : "false") << "\n";
    if (rel.contained) {
      out << "certificate: " << rel.spanning_maps.size()
          << " equivariant maps U|H -> R{T} (x) U|H whose images span the target\n";
    } else {
      out << "certificate: missing constituent; a central element of Q[H] with " << support
          << "-element support kills U|H but moves v = " << vector_text(rel.outside_vector) << "\n";
    }
    out << "verified: " << yes_no(verified) << "\n";
  }
  if (!verified) throw std::logic_error("certificate failed independent verification");
  return rel.contained ? kOk : kNegative;
}

int cmd_universe_indexing(Context& c, std::ostream& out) {
  auto [g, u] = c.universe();
  IndexingSystem ix = indexing_system_of_universe(u);
  ValidationReport rep = validate(ix);
  if (!rep.passed()) throw std::logic_error("universe produced an invalid indexing system");
  if (c.opts().json) {
    out << dump(indexing_to_json(ix));
    return kOk;
  }
  out << "indexing system of " << u.name() << " (group " << g.group->name() << "): " << ix.size()
      << " admissible orbits, all axioms hold\n";
  out << indexing_table(ix);
  return kOk;
}

}  // namespace eqnorm::cli
