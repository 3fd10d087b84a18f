#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "eqnorm/gset.hpp"
#include "eqnorm/indexing.hpp"

namespace eqnorm {

enum class NodeKind { Var, Res, Norm, Smash, Npow };

/// Absolute operations act on G-spectra; relative ones on modules over a
/// commutative ring R and are written with an "_R" suffix (norm_R[...]).
enum class Annotation { Absolute, Relative };

class NormExpr;

struct NormNode {
  NodeKind kind = NodeKind::Var;
  Annotation annotation = Annotation::Absolute;
  std::string symbol;           // Var
  Subgroup target;              // Res, Norm
  GSet exponent;                // Npow
  std::vector<NormExpr> children;
  Subgroup level;               // computed at construction
};

/// Immutable, well-typed expression tree. Construction checks the level
/// constraints and throws TypeError on a mismatch; admissibility gating is
/// a separate check (typecheck).
class NormExpr {
 public:
  NormExpr() = default;

  /// Variable at the top level G of the lattice.
  static NormExpr var(const LatticePtr& lattice, std::string symbol);
  /// Restriction to k; the operand's level must contain k.
  static NormExpr res(Subgroup k, NormExpr e, Annotation a = Annotation::Absolute);
  /// Norm to h; the operand's level must be contained in h.
  static NormExpr norm(Subgroup h, NormExpr e, Annotation a = Annotation::Absolute);
  /// Nonempty smash of operands at a common level.
  static NormExpr smash(std::vector<NormExpr> es, Annotation a = Annotation::Absolute);
  /// Internal norm N^T for a nonempty T at the operand's level.
  static NormExpr npow(GSet t, NormExpr e, Annotation a = Annotation::Absolute);

  bool valid() const { return node_ != nullptr; }
  const NormNode& node() const { return *node_; }
  NodeKind kind() const { return node_->kind; }
  Annotation annotation() const { return node_->annotation; }
  const Subgroup& level() const { return node_->level; }
  const std::vector<NormExpr>& children() const { return node_->children; }
  const SubgroupLattice& lattice() const { return node_->level.lattice(); }
  const LatticePtr& lattice_ptr() const { return node_->level.lattice_ptr(); }

  /// Number of operator nodes on the longest root-to-leaf path.
  std::size_t depth() const;
  std::size_t size() const;

  std::string to_string() const;

  friend bool operator==(const NormExpr& a, const NormExpr& b);

 private:
  explicit NormExpr(std::shared_ptr<const NormNode> n) : node_(std::move(n)) {}
  std::shared_ptr<const NormNode> node_;
};

/// Parses the expression grammar
///   e ::= IDENT | res[id](e) | norm[id](e) | smash(e, ...) | Npow[gset](e)
/// with optional "_R" on each operator. Inside Npow the token H stands for
/// the operand's level. Syntax errors are InputError with the byte offset;
/// level errors are TypeError.
NormExpr parse_expr(std::string_view text, const LatticePtr& lattice);

/// Checks annotation consistency and, when ix is given, that every norm
/// Norm(H, e@K) has H/K admissible and every Npow(T, e@H) has T admissible
/// (InadmissibleError naming the offending pair). Returns the level.
Subgroup typecheck(const NormExpr& e, const IndexingSystem* ix = nullptr);

/// Labeled exponent: one G-set per variable at a common level.
struct CanonicalForm {
  Subgroup level;
  std::map<std::string, GSet> exponents;

  std::string to_string() const;
  friend bool operator==(const CanonicalForm& a, const CanonicalForm& b);
};

/// Exponent semantics, computed structurally with the G-set operations.
CanonicalForm exponents_of(const NormExpr& e);
/// The normal-form expression of a canonical form: a sorted smash of
/// norms of restricted variables, one factor per orbit.
NormExpr expr_of_form(const CanonicalForm& form, const LatticePtr& lattice,
                      Annotation a = Annotation::Absolute);

enum class Rule {
  NpowExpand,
  ResIdentity,
  NormIdentity,
  ResRes,
  ResSmash,
  DoubleCoset,
  NormSmash,
  NormNorm,
  NormConjugate,
  SmashFlatten,
  SmashSort,
  NpowProduct,
  ResNpow,
};

inline constexpr Rule kAllRules[] = {
    Rule::NpowExpand, Rule::ResIdentity,   Rule::NormIdentity, Rule::ResRes,    Rule::ResSmash,
    Rule::DoubleCoset, Rule::NormSmash,    Rule::NormNorm,     Rule::NormConjugate,
    Rule::SmashFlatten, Rule::SmashSort,   Rule::NpowProduct,  Rule::ResNpow};

std::string_view rule_name(Rule r);
/// The identity a rule instantiates, as a formula.
std::string_view rule_identity(Rule r);
Rule parse_rule(std::string_view name);
/// Rules used by normalize; NpowProduct and ResNpow are step-only.
bool is_normalizing(Rule r);

/// Applies one rule at the root; nullopt when it does not apply.
std::optional<NormExpr> try_rewrite(const NormExpr& e, Rule r);
/// Applies one rule at the root; PreconditionError when it does not apply.
NormExpr step_rewrite(const NormExpr& e, Rule r);
/// Transport along conjugation by g: an expression at L becomes one at gLg^{-1}.
NormExpr conjugate_expr(const NormExpr& e, Element g);

struct RewriteStep {
  Rule rule;
  std::vector<std::size_t> path;  // child indices from the root
  std::string before;
  std::string after;
};

struct RewriteTrace {
  std::string input;
  std::vector<RewriteStep> steps;
  std::string output;
};

struct Normalization {
  CanonicalForm form;
  NormExpr normal;
  RewriteTrace trace;
  /// normal == expr_of_form(form); a false value is a completeness gap and
  /// is reported rather than hidden.
  bool reached_canonical = false;
};

Normalization normalize(const NormExpr& e);
/// Re-applies every step of the trace to the parsed input and checks that
/// each intermediate and the output match. Throws InputError on mismatch.
NormExpr replay(const RewriteTrace& trace, const LatticePtr& lattice);

/// Expressions must share a level (TypeError otherwise).
bool equivalent(const NormExpr& a, const NormExpr& b);

/// Formal map N^T R -> N^S R induced by an equivariant f: S -> T.
struct NormMap {
  GMap map;
  CanonicalForm source;  // {R -> T}
  CanonicalForm target;  // {R -> S}
};

/// Throws InadmissibleError when ix is given and S or T is not admissible.
NormMap norm_map_of(const GMap& f, const IndexingSystem* ix = nullptr,
                    const std::string& ring = "R");
/// The map of g o f from norm_map_of(f) and norm_map_of(g) (contravariant:
/// first N^U R -> N^T R, then N^T R -> N^S R).
NormMap compose(const NormMap& of_f, const NormMap& of_g);

struct RandomExprOptions {
  std::size_t max_depth = 4;
  std::size_t max_npow_cardinality = 4;
  std::size_t max_smash_arity = 3;
  std::vector<std::string> symbols = {"X"};
  Annotation annotation = Annotation::Absolute;
};

/// A random well-typed expression at `level`, admissible under ix when given.
/// Choices use only raw engine output, so sequences are portable.
NormExpr random_expr(const Subgroup& level, std::mt19937_64& rng,
                     const RandomExprOptions& options = {}, const IndexingSystem* ix = nullptr);

}  // namespace eqnorm
