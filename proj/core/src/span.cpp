#include "eqnorm/span.hpp"

#include <algorithm>
#include <map>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {

bool same_set(const RealizationPtr& a, const RealizationPtr& b) {
  return a == b || a->gset == b->gset;
}

void require_admissible(const IndexingSystem* ix, const GSet& t, const char* what) {
  if (ix && !ix->admits(t))
    throw InadmissibleError(std::string(what) + " " + t.to_string() + " is not admissible");
}

}  // namespace

Span make_span(GMap left, GMap right, const IndexingSystem* ix) {
  if (!left.source || !left.target || !right.source || !right.target)
    throw PreconditionError("span legs are incomplete");
  if (!same_set(left.source, right.source)) throw PreconditionError("span legs do not share an apex");
  right.source = left.source;
  if (!left.is_equivariant() || !right.is_equivariant())
    throw PreconditionError("span legs must be equivariant maps at a common level");
  require_admissible(ix, left.source->gset, "apex");
  require_admissible(ix, left.target->gset, "source");
  require_admissible(ix, right.target->gset, "target");
  return Span{std::move(left), std::move(right)};
}

Span identity_span(const RealizationPtr& t) { return Span{identity_map(t), identity_map(t)}; }

Span identity_span(const GSet& t) {
  return identity_span(std::make_shared<const Realization>(realize(t)));
}

Span compose(const Span& first, const Span& second, const IndexingSystem* ix,
             const GMap* identification, SpanLimits limits) {
  const Realization& a = *first.apex();
  const Realization& b = *second.apex();
  if (a.level_elements != b.level_elements) throw TypeError("spans live at different levels");
  const RealizationPtr& mid1 = first.target();
  const RealizationPtr& mid2 = second.source();
  std::vector<Point> ident(mid1->size());
  if (identification) {
    if (!same_set(identification->source, mid1) || !same_set(identification->target, mid2))
      throw PreconditionError("identification does not connect the shared boundary");
    if (!identification->is_equivariant() || !identification->is_mono() || !identification->is_epi())
      throw PreconditionError("identification must be an equivariant bijection");
    ident = identification->assignment;
  } else {
    if (!(mid1->gset == mid2->gset))
      throw PreconditionError("boundary mismatch: " + mid1->gset.to_string() + " vs " +
                              mid2->gset.to_string());
    for (std::size_t x = 0; x < ident.size(); ++x) ident[x] = static_cast<Point>(x);
  }

  std::vector<std::vector<Point>> over(mid2->size());
  for (Point y = 0; y < b.size(); ++y) over[second.left.assignment[y]].push_back(y);
  std::size_t count = 0;
  for (Point x = 0; x < a.size(); ++x) count += over[ident[first.right.assignment[x]]].size();
  if (count > limits.max_apex_points)
    throw CapExceeded("pullback apex has " + std::to_string(count) + " points (cap " +
                      std::to_string(limits.max_apex_points) + ")");

  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(count);
  for (Point x = 0; x < a.size(); ++x)
    for (Point y : over[ident[first.right.assignment[x]]]) pairs.emplace_back(x, y);
  std::vector<std::vector<Point>> action(a.level_elements.size(), std::vector<Point>(count));
  for (std::size_t i = 0; i < a.level_elements.size(); ++i)
    for (std::size_t p = 0; p < count; ++p) {
      std::pair<Point, Point> img{a.action[i][pairs[p].first], b.action[i][pairs[p].second]};
      auto it = std::lower_bound(pairs.begin(), pairs.end(), img);
      action[i][p] = static_cast<Point>(it - pairs.begin());
    }
  const Subgroup& level = a.gset.level();
  Decomposition d = decompose_action(level, action);
  require_admissible(ix, d.gset, "pullback apex");
  auto apex = std::make_shared<const Realization>(realize(d.gset));
  GMap left{apex, first.source(), std::vector<Point>(apex->size())};
  GMap right{apex, second.target(), std::vector<Point>(apex->size())};
  for (std::size_t p = 0; p < apex->size(); ++p) {
    const auto& [x, y] = pairs[d.iso[p]];
    left.assignment[p] = first.left.assignment[x];
    right.assignment[p] = second.right.assignment[y];
  }
  return Span{std::move(left), std::move(right)};
}

std::optional<GMap> span_isomorphism(const Span& s1, const Span& s2) {
  if (!same_set(s1.source(), s2.source()) || !same_set(s1.target(), s2.target()))
    throw PreconditionError("spans have different boundaries");
  const Realization& a = *s1.apex();
  const Realization& b = *s2.apex();
  if (!(a.gset == b.gset)) return std::nullopt;
  const SubgroupLattice& lat = a.gset.lattice();
  const std::size_t copies = a.orbit_starts.size();
  std::vector<bool> used(b.orbit_starts.size(), false);
  GMap phi{s1.apex(), s2.apex(), std::vector<Point>(a.size())};

  auto orbit_size = [](const Realization& r, std::size_t copy) {
    std::size_t end = copy + 1 < r.orbit_starts.size() ? r.orbit_starts[copy + 1] : r.size();
    return end - r.orbit_starts[copy];
  };
  auto search = [&](auto&& self, std::size_t j) -> bool {
    if (j == copies) return true;
    Point x = static_cast<Point>(a.orbit_starts[j]);
    SubgroupId k = a.points[x].stabilizer;
    for (Point y = 0; y < b.size(); ++y) {
      std::size_t cy = b.points[y].orbit;
      if (used[cy] || orbit_size(b, cy) != orbit_size(a, j)) continue;
      if (s2.left.assignment[y] != s1.left.assignment[x] ||
          s2.right.assignment[y] != s1.right.assignment[x])
        continue;
      bool fixed = true;
      for (Element g : lat.generators(k))
        if (b.act(g, y) != y) {
          fixed = false;
          break;
        }
      if (!fixed) continue;
      used[cy] = true;
      for (std::size_t p = a.orbit_starts[j]; p < a.orbit_starts[j] + orbit_size(a, j); ++p)
        phi.assignment[p] = b.act(a.points[p].representative, y);
      if (self(self, j + 1)) return true;
      used[cy] = false;
    }
    return false;
  };
  if (!search(search, 0)) return std::nullopt;
  return phi;
}

bool spans_isomorphic(const Span& a, const Span& b) { return span_isomorphism(a, b).has_value(); }

bool associativity_holds(const Span& s1, const Span& s2, const Span& s3, const IndexingSystem* ix) {
  Span left = compose(compose(s1, s2, ix), s3, ix);
  Span right = compose(s1, compose(s2, s3, ix), ix);
  return spans_isomorphic(left, right);
}

bool unit_laws_hold(const Span& s, const IndexingSystem* ix) {
  return spans_isomorphic(compose(identity_span(s.source()), s, ix), s) &&
         spans_isomorphic(compose(s, identity_span(s.target()), ix), s);
}

std::optional<Span> random_span(const RealizationPtr& s, const RealizationPtr& t,
                                std::mt19937_64& rng, std::size_t max_apex,
                                const IndexingSystem* ix) {
  const Subgroup& level = s->gset.level();
  if (!(t->gset.level() == level)) throw TypeError("random_span: ends at different levels");
  std::optional<std::vector<SubgroupId>> allowed;
  if (ix) allowed = ix->admissible_stabilizers(level.id());
  struct Candidate {
    std::vector<GMap> to_s, to_t;
  };
  std::vector<Candidate> viable;
  for (const GSet& apex : enumerate_gsets(level, max_apex, allowed)) {
    Candidate c{gmaps(apex, s->gset), gmaps(apex, t->gset)};
    if (!c.to_s.empty() && !c.to_t.empty()) viable.push_back(std::move(c));
  }
  if (viable.empty()) return std::nullopt;
  const Candidate& c = viable[rng() % viable.size()];
  const GMap& f = c.to_s[rng() % c.to_s.size()];
  const GMap& g = c.to_t[rng() % c.to_t.size()];
  return make_span(GMap{f.source, s, f.assignment}, GMap{f.source, t, g.assignment}, ix);
}

SpanLawReport sample_span_laws(const LatticePtr& lattice, std::size_t samples, std::uint64_t seed,
                               std::size_t max_cardinality, const IndexingSystem* ix,
                               std::size_t max_apex) {
  Subgroup g = lattice->subgroup(lattice->whole());
  std::optional<std::vector<SubgroupId>> allowed;
  if (ix) allowed = ix->admissible_stabilizers(g.id());
  std::vector<RealizationPtr> objects;
  for (const GSet& t : enumerate_gsets(g, max_cardinality, allowed))
    if (!t.is_empty()) objects.push_back(std::make_shared<const Realization>(realize(t)));
  SpanLawReport rep;
  rep.objects = objects.size();
  if (objects.empty()) {
    rep.skipped = samples;
    return rep;
  }
  std::mt19937_64 rng(seed);
  constexpr int kAttempts = 32;
  for (std::size_t i = 0; i < samples; ++i) {
    std::optional<Span> s1, s2, s3;
    for (int a = 0; a < kAttempts && !(s1 && s2 && s3); ++a) {
      const RealizationPtr* pick[4];
      for (auto& p : pick) p = &objects[rng() % objects.size()];
      s1 = random_span(*pick[0], *pick[1], rng, max_apex, ix);
      s2 = random_span(*pick[1], *pick[2], rng, max_apex, ix);
      s3 = random_span(*pick[2], *pick[3], rng, max_apex, ix);
    }
    if (!(s1 && s2 && s3)) {
      ++rep.skipped;
      continue;
    }
    ++rep.unit_checks;
    if (!unit_laws_hold(*s1, ix)) ++rep.unit_failures;
    ++rep.assoc_checks;
    if (!associativity_holds(*s1, *s2, *s3, ix)) ++rep.assoc_failures;
  }
  return rep;
}

// ---------------------------------------------------------------- groupoids

TranslationGroupoid::TranslationGroupoid(RealizationPtr t)
    : set_(std::move(t)), order_(set_->level_elements.size()) {}

std::size_t TranslationGroupoid::morphism(Point x, Element g) const {
  return static_cast<std::size_t>(x) * order_ + set_->position_of(g);
}

Point TranslationGroupoid::target(std::size_t m) const {
  return set_->action[m % order_][source(m)];
}

std::size_t TranslationGroupoid::identity(Point x) const {
  return morphism(x, set_->gset.lattice().group().identity());
}

std::size_t TranslationGroupoid::inverse(std::size_t m) const {
  return morphism(target(m), set_->gset.lattice().group().inv(element(m)));
}

std::optional<std::size_t> TranslationGroupoid::compose(std::size_t second, std::size_t first) const {
  if (target(first) != source(second)) return std::nullopt;
  return morphism(source(first), set_->gset.lattice().group().mul(element(second), element(first)));
}

std::vector<std::size_t> TranslationGroupoid::hom(Point x, Point y) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < order_; ++i)
    if (set_->action[i][x] == y) out.push_back(static_cast<std::size_t>(x) * order_ + i);
  return out;
}

TranslationGroupoid translation_groupoid(const GSet& t) {
  return TranslationGroupoid(std::make_shared<const Realization>(realize(t)));
}

std::size_t CoveringFunctor::on_morphism(std::size_t m) const {
  return target.morphism(on_object(source.source(m)), source.element(m));
}

bool CoveringFunctor::is_functor() const {
  for (Point x = 0; x < source.object_count(); ++x)
    if (on_morphism(source.identity(x)) != target.identity(on_object(x))) return false;
  for (std::size_t m1 = 0; m1 < source.morphism_count(); ++m1) {
    if (target.source(on_morphism(m1)) != on_object(source.source(m1)) ||
        target.target(on_morphism(m1)) != on_object(source.target(m1)))
      return false;
    for (Element g : source.set()->level_elements) {
      std::size_t m2 = source.morphism(source.target(m1), g);
      auto c = source.compose(m2, m1);
      auto d = target.compose(on_morphism(m2), on_morphism(m1));
      if (!c || !d || on_morphism(*c) != *d) return false;
    }
  }
  return true;
}

bool CoveringFunctor::is_covering() const {
  for (Point x = 0; x < source.object_count(); ++x) {
    std::vector<std::size_t> lifts(target.morphism_count(), 0);
    for (Element g : source.set()->level_elements) ++lifts[on_morphism(source.morphism(x, g))];
    for (Element g : target.set()->level_elements)
      if (lifts[target.morphism(on_object(x), g)] != 1) return false;
  }
  return true;
}

CoveringFunctor covering_of(const GMap& f) {
  if (!f.is_equivariant()) throw PreconditionError("covering_of: map is not equivariant");
  return CoveringFunctor{f, TranslationGroupoid(f.source), TranslationGroupoid(f.target)};
}

bool same_functor(const CoveringFunctor& a, const CoveringFunctor& b) {
  if (a.source.morphism_count() != b.source.morphism_count() ||
      a.target.morphism_count() != b.target.morphism_count())
    return false;
  if (a.map.assignment != b.map.assignment) return false;
  for (std::size_t m = 0; m < a.source.morphism_count(); ++m)
    if (a.on_morphism(m) != b.on_morphism(m)) return false;
  return true;
}

std::vector<std::size_t> compose_on_morphisms(const CoveringFunctor& second,
                                              const CoveringFunctor& first) {
  std::vector<std::size_t> out(first.source.morphism_count());
  for (std::size_t m = 0; m < out.size(); ++m) out[m] = second.on_morphism(first.on_morphism(m));
  return out;
}

bool pullback_square_check(const Subgroup& h, const GSet& t) {
  const SubgroupLattice& lat = h.lattice();
  Subgroup whole = lat.subgroup(lat.whole());
  if (!(t.level() == whole)) throw PreconditionError("pullback_square_check: T must be a G-set");
  TranslationGroupoid bu(std::make_shared<const Realization>(realize(GSet::orbit(whole, h.id()))));
  TranslationGroupoid bt(std::make_shared<const Realization>(realize(t)));
  const Realization& u = *bu.set();
  const Realization& tt = *bt.set();
  const std::size_t nu = u.size(), nt = tt.size(), order = whole.order();

  // Element-level product and its orbit decomposition.
  std::vector<std::vector<Point>> action(order, std::vector<Point>(nu * nt));
  for (std::size_t i = 0; i < order; ++i)
    for (std::size_t p = 0; p < nu * nt; ++p)
      action[i][p] = static_cast<Point>(u.action[i][p / nt] * nt + tt.action[i][p % nt]);
  Decomposition d = decompose_action(whole, action);
  if (!(d.gset == product(GSet::orbit(whole, h.id()), t))) return false;
  TranslationGroupoid bx(std::make_shared<const Realization>(realize(d.gset)));

  // Category pullback over B_pt G: pairs of morphisms with the same group element.
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> pullback;
  for (std::size_t mu = 0; mu < bu.morphism_count(); ++mu)
    for (std::size_t mt = 0; mt < bt.morphism_count(); ++mt)
      if (bu.element(mu) == bt.element(mt)) pullback.emplace(std::pair{mu, mt}, pullback.size());
  auto functor = [&](std::size_t m) {
    Point pair = d.iso[bx.source(m)];
    return std::pair{bu.morphism(pair / nt, bx.element(m)), bt.morphism(pair % nt, bx.element(m))};
  };

  // Objects.
  std::vector<bool> hit_objects(nu * nt, false);
  for (Point p = 0; p < bx.object_count(); ++p) {
    if (hit_objects[d.iso[p]]) return false;
    hit_objects[d.iso[p]] = true;
  }
  if (bx.object_count() != nu * nt) return false;

  // Morphisms: bijective, compatible with sources and targets, functorial.
  if (bx.morphism_count() != pullback.size()) return false;
  std::vector<bool> hit(pullback.size(), false);
  for (std::size_t m = 0; m < bx.morphism_count(); ++m) {
    auto image = functor(m);
    auto it = pullback.find(image);
    if (it == pullback.end() || hit[it->second]) return false;
    hit[it->second] = true;
    Point tgt = d.iso[bx.target(m)];
    if (bu.target(image.first) != tgt / nt || bt.target(image.second) != tgt % nt) return false;
  }
  for (Point p = 0; p < bx.object_count(); ++p) {
    auto image = functor(bx.identity(p));
    if (image.first != bu.identity(d.iso[p] / nt) || image.second != bt.identity(d.iso[p] % nt))
      return false;
  }
  for (std::size_t m1 = 0; m1 < bx.morphism_count(); ++m1)
    for (Element g : u.level_elements) {
      std::size_t m2 = bx.morphism(bx.target(m1), g);
      auto c = bx.compose(m2, m1);
      if (!c) return false;
      auto f1 = functor(m1), f2 = functor(m2), fc = functor(*c);
      auto cu = bu.compose(f2.first, f1.first);
      auto ct = bt.compose(f2.second, f1.second);
      if (!cu || !ct || fc != std::pair{*cu, *ct}) return false;
    }
  return true;
}

}  // namespace eqnorm
