#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "eqnorm/gset.hpp"
#include "eqnorm/indexing.hpp"

namespace eqnorm {

struct SpanLimits {
  std::size_t max_apex_points = 10000;
};

/// S <- A -> T on fixed realizations; both legs share the apex realization.
struct Span {
  GMap left;   // A -> S
  GMap right;  // A -> T

  const RealizationPtr& apex() const { return left.source; }
  const RealizationPtr& source() const { return left.target; }
  const RealizationPtr& target() const { return right.target; }
};

/// Checks a shared apex, equivariance and a common level; with ix, also that
/// A, S and T are admissible (InadmissibleError).
Span make_span(GMap left, GMap right, const IndexingSystem* ix = nullptr);
Span identity_span(const RealizationPtr& t);
Span identity_span(const GSet& t);

/// Pullback composition of S <- A -> T and T' <- B -> U. The identification
/// T -> T' defaults to the identity when T and T' are the same G-set (their
/// realizations are canonical); otherwise an equivariant bijection must be
/// supplied. The apex is the fiber product with the diagonal action,
/// decomposed into canonical orbits.
Span compose(const Span& first, const Span& second, const IndexingSystem* ix = nullptr,
             const GMap* identification = nullptr, SpanLimits limits = {});

/// An isomorphism of apexes commuting with both legs, if one exists. The
/// boundaries must be the same G-sets (PreconditionError otherwise).
std::optional<GMap> span_isomorphism(const Span& a, const Span& b);
bool spans_isomorphic(const Span& a, const Span& b);

/// (s1 s2) s3 is isomorphic to s1 (s2 s3).
bool associativity_holds(const Span& s1, const Span& s2, const Span& s3,
                         const IndexingSystem* ix = nullptr);
/// id o s and s o id are isomorphic to s.
bool unit_laws_hold(const Span& s, const IndexingSystem* ix = nullptr);

/// A random span S <- A -> T with |A| <= max_apex, A admissible under ix.
/// Returns nullopt when no apex of that size admits maps to both ends.
std::optional<Span> random_span(const RealizationPtr& s, const RealizationPtr& t,
                                std::mt19937_64& rng, std::size_t max_apex = 4,
                                const IndexingSystem* ix = nullptr);

struct SpanLawReport {
  std::size_t objects = 0;
  std::size_t unit_checks = 0;
  std::size_t unit_failures = 0;
  std::size_t assoc_checks = 0;
  std::size_t assoc_failures = 0;
  std::size_t skipped = 0;  // samples with no admissible apex after retries
  bool passed() const { return unit_failures == 0 && assoc_failures == 0 && skipped == 0; }
};

/// Samples composable triples of random spans between nonempty admissible
/// G-sets with at most max_cardinality points and checks the unit laws on
/// the first span and associativity on the triple.
SpanLawReport sample_span_laws(const LatticePtr& lattice, std::size_t samples, std::uint64_t seed,
                               std::size_t max_cardinality = 4, const IndexingSystem* ix = nullptr,
                               std::size_t max_apex = 4);

/// B_T H: objects are the points of T, a morphism (x, g) goes from x to g x.
/// Morphism (x, g) has index x * |H| + position of g in the level.
class TranslationGroupoid {
 public:
  explicit TranslationGroupoid(RealizationPtr t);

  const RealizationPtr& set() const { return set_; }
  std::size_t object_count() const { return set_->size(); }
  std::size_t morphism_count() const { return set_->size() * set_->level_elements.size(); }

  std::size_t morphism(Point x, Element g) const;
  Point source(std::size_t m) const { return static_cast<Point>(m / order_); }
  Point target(std::size_t m) const;
  Element element(std::size_t m) const { return set_->level_elements[m % order_]; }

  std::size_t identity(Point x) const;
  std::size_t inverse(std::size_t m) const;
  /// second o first; nullopt when target(first) != source(second).
  std::optional<std::size_t> compose(std::size_t second, std::size_t first) const;
  /// Morphisms from x to y.
  std::vector<std::size_t> hom(Point x, Point y) const;

 private:
  RealizationPtr set_;
  std::size_t order_;
};

TranslationGroupoid translation_groupoid(const GSet& t);

/// The functor B_T H -> B_S H induced by f: T -> S.
struct CoveringFunctor {
  GMap map;
  TranslationGroupoid source;
  TranslationGroupoid target;

  Point on_object(Point x) const { return map.assignment[x]; }
  std::size_t on_morphism(std::size_t m) const;
  /// Preserves identities and all composable pairs.
  bool is_functor() const;
  /// Unique lifting of morphisms out of every object.
  bool is_covering() const;
};

CoveringFunctor covering_of(const GMap& f);
/// Agreement of two functors with the same source and target on objects and morphisms.
bool same_functor(const CoveringFunctor& a, const CoveringFunctor& b);
/// The composite functor (second o first) computed on objects and morphisms.
std::vector<std::size_t> compose_on_morphisms(const CoveringFunctor& second,
                                              const CoveringFunctor& first);

/// Builds B_{G/H x T} G from the element-level product, compares it with the
/// category pullback of B_T G -> B_{pt} G <- B_{G/H} G through the functor
/// sending a point to its pair of projections, and checks that this functor
/// is bijective on objects and morphisms and preserves composition.
bool pullback_square_check(const Subgroup& h, const GSet& t);

}  // namespace eqnorm
