#include "eqnorm/norm.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <tuple>

#include "eqnorm/errors.hpp"

namespace eqnorm {

namespace {

bool is_keyword(std::string_view s) {
  return s == "res" || s == "norm" || s == "smash" || s == "Npow" || s == "npow";
}

bool valid_symbol(std::string_view s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s.front())) || s.front() == '_'))
    return false;
  for (char c : s)
    if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_')) return false;
  return !is_keyword(s);
}

void require_same_lattice(const Subgroup& a, const Subgroup& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) throw TypeError("operands belong to different groups");
}

std::string suffix(Annotation a) { return a == Annotation::Relative ? "_R" : ""; }

}  // namespace

NormExpr NormExpr::var(const LatticePtr& lattice, std::string symbol) {
  if (!valid_symbol(symbol)) throw InputError("invalid variable name '" + symbol + "'");
  auto n = std::make_shared<NormNode>();
  n->kind = NodeKind::Var;
  n->symbol = std::move(symbol);
  n->level = lattice->subgroup(lattice->whole());
  return NormExpr(std::move(n));
}

NormExpr NormExpr::res(Subgroup k, NormExpr e, Annotation a) {
  require_same_lattice(k, e.level());
  if (!k.is_subgroup_of(e.level()))
    throw TypeError("res[" + k.name() + "] applied at level " + e.level().name() +
                    ", which does not contain it");
  auto n = std::make_shared<NormNode>();
  n->kind = NodeKind::Res;
  n->annotation = a;
  n->target = k;
  n->level = std::move(k);
  n->children.push_back(std::move(e));
  return NormExpr(std::move(n));
}

NormExpr NormExpr::norm(Subgroup h, NormExpr e, Annotation a) {
  require_same_lattice(h, e.level());
  if (!e.level().is_subgroup_of(h))
    throw TypeError("norm[" + h.name() + "] applied at level " + e.level().name() +
                    ", which it does not contain");
  auto n = std::make_shared<NormNode>();
  n->kind = NodeKind::Norm;
  n->annotation = a;
  n->target = h;
  n->level = std::move(h);
  n->children.push_back(std::move(e));
  return NormExpr(std::move(n));
}

NormExpr NormExpr::smash(std::vector<NormExpr> es, Annotation a) {
  if (es.empty()) throw TypeError("smash needs at least one operand");
  for (const auto& e : es)
    if (!(e.level() == es.front().level()))
      throw TypeError("smash operands at different levels " + es.front().level().name() + " and " +
                      e.level().name());
  auto n = std::make_shared<NormNode>();
  n->kind = NodeKind::Smash;
  n->annotation = a;
  n->level = es.front().level();
  n->children = std::move(es);
  return NormExpr(std::move(n));
}

NormExpr NormExpr::npow(GSet t, NormExpr e, Annotation a) {
  if (!(t.level() == e.level()))
    throw TypeError("Npow exponent at level " + t.level().name() + " applied at level " +
                    e.level().name());
  if (t.is_empty()) throw TypeError("Npow needs a nonempty exponent");
  auto n = std::make_shared<NormNode>();
  n->kind = NodeKind::Npow;
  n->annotation = a;
  n->level = e.level();
  n->exponent = std::move(t);
  n->children.push_back(std::move(e));
  return NormExpr(std::move(n));
}

std::size_t NormExpr::depth() const {
  std::size_t d = 0;
  for (const auto& c : children()) d = std::max(d, c.depth());
  return kind() == NodeKind::Var ? 0 : d + 1;
}

std::size_t NormExpr::size() const {
  std::size_t s = 1;
  for (const auto& c : children()) s += c.size();
  return s;
}

std::string NormExpr::to_string() const {
  const NormNode& n = *node_;
  const SubgroupLattice& lat = lattice();
  switch (n.kind) {
    case NodeKind::Var:
      return n.symbol;
    case NodeKind::Res:
      return "res" + suffix(n.annotation) + "[" + lat.name(n.target.id()) + "](" +
             n.children[0].to_string() + ")";
    case NodeKind::Norm:
      return "norm" + suffix(n.annotation) + "[" + lat.name(n.target.id()) + "](" +
             n.children[0].to_string() + ")";
    case NodeKind::Smash: {
      std::string out = "smash" + suffix(n.annotation) + "(";
      for (std::size_t i = 0; i < n.children.size(); ++i) {
        if (i > 0) out += ", ";
        out += n.children[i].to_string();
      }
      return out + ")";
    }
    case NodeKind::Npow:
      return "Npow" + suffix(n.annotation) + "[" + n.exponent.to_string() + "](" +
             n.children[0].to_string() + ")";
  }
  return {};
}

bool operator==(const NormExpr& a, const NormExpr& b) {
  if (a.node_ == b.node_) return true;
  if (!a.node_ || !b.node_) return false;
  const NormNode& x = *a.node_;
  const NormNode& y = *b.node_;
  if (x.kind != y.kind || x.annotation != y.annotation || !(x.level == y.level)) return false;
  switch (x.kind) {
    case NodeKind::Var:
      return x.symbol == y.symbol;
    case NodeKind::Res:
    case NodeKind::Norm:
      if (!(x.target == y.target)) return false;
      break;
    case NodeKind::Npow:
      if (!(x.exponent == y.exponent)) return false;
      break;
    case NodeKind::Smash:
      break;
  }
  return x.children == y.children;
}

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
 public:
  Parser(std::string_view text, const LatticePtr& lattice) : text_(text), lattice_(lattice) {}

  NormExpr parse() {
    NormExpr e = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw InputError("syntax error at offset " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  void expect(char c) {
    skip();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  std::string_view identifier() {
    skip();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    if (start == pos_) fail("expected an expression");
    return text_.substr(start, pos_ - start);
  }

  std::string_view bracketed() {
    expect('[');
    std::size_t start = pos_;
    std::size_t end = text_.find(']', pos_);
    if (end == std::string_view::npos) fail("unterminated '['");
    pos_ = end + 1;
    return text_.substr(start, end - start);
  }

  template <class F>
  auto located(std::size_t at, F&& f) {
    try {
      return f();
    } catch (const InadmissibleError&) {
      throw;
    } catch (const TypeError& e) {
      throw TypeError(std::string(e.what()) + " (at offset " + std::to_string(at) + ")");
    } catch (const InputError& e) {
      throw InputError(std::string(e.what()) + " (at offset " + std::to_string(at) + ")");
    }
  }

  NormExpr expr() {
    skip();
    std::size_t at = pos_;
    std::string_view word = identifier();
    Annotation ann = Annotation::Absolute;
    std::string_view head = word;
    if (head.size() > 2 && head.substr(head.size() - 2) == "_R" &&
        is_keyword(head.substr(0, head.size() - 2))) {
      head.remove_suffix(2);
      ann = Annotation::Relative;
    }
    const SubgroupLattice& lat = *lattice_;
    if (head == "res" || head == "norm") {
      std::string_view id = bracketed();
      Subgroup s = located(at, [&] {
        std::string_view t = id;
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
        while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
        return lat.subgroup(lat.parse_name(t));
      });
      expect('(');
      NormExpr inner = expr();
      expect(')');
      return located(at, [&] {
        return head == "res" ? NormExpr::res(s, inner, ann) : NormExpr::norm(s, inner, ann);
      });
    }
    if (head == "Npow" || head == "npow") {
      std::string_view literal = bracketed();
      expect('(');
      NormExpr inner = expr();
      expect(')');
      return located(at, [&] {
        GSet t = parse_gset(literal, lattice_, inner.level().id());
        return NormExpr::npow(std::move(t), inner, ann);
      });
    }
    if (head == "smash") {
      expect('(');
      std::vector<NormExpr> parts{expr()};
      while (peek(',')) {
        ++pos_;
        parts.push_back(expr());
      }
      expect(')');
      return located(at, [&] { return NormExpr::smash(std::move(parts), ann); });
    }
    if (ann == Annotation::Relative || peek('(') || peek('['))
      fail("unknown operator '" + std::string(word) + "'");
    return located(at, [&] { return NormExpr::var(lattice_, std::string(word)); });
  }

  std::string_view text_;
  const LatticePtr& lattice_;
  std::size_t pos_ = 0;
};

}  // namespace

NormExpr parse_expr(std::string_view text, const LatticePtr& lattice) {
  return Parser(text, lattice).parse();
}

Subgroup typecheck(const NormExpr& e, const IndexingSystem* ix) {
  if (ix && ix->lattice_ptr() != e.lattice_ptr())
    throw InputError("indexing system belongs to a different group");
  std::optional<Annotation> seen;
  std::function<void(const NormExpr&)> walk = [&](const NormExpr& x) {
    const NormNode& n = x.node();
    if (n.kind != NodeKind::Var) {
      if (seen && *seen != n.annotation)
        throw TypeError("expression mixes absolute and R-relative operations");
      seen = n.annotation;
    }
    for (const auto& c : n.children) walk(c);
    if (!ix) return;
    const SubgroupLattice& lat = x.lattice();
    if (n.kind == NodeKind::Norm) {
      SubgroupId h = n.target.id(), k = n.children[0].level().id();
      if (!ix->admits(h, k))
        throw InadmissibleError("norm " + lat.name(h) + "/" + lat.name(lat.rep_within(h, k)) +
                                " is not admissible at " + lat.name(h));
    } else if (n.kind == NodeKind::Npow) {
      if (!ix->admits(n.exponent))
        throw InadmissibleError("internal norm exponent " + n.exponent.to_string() +
                                " is not admissible at " + lat.name(x.level().id()));
    }
  };
  walk(e);
  return e.level();
}

// ---------------------------------------------------------------- exponents

bool operator==(const CanonicalForm& a, const CanonicalForm& b) {
  if (!(a.level == b.level) || a.exponents.size() != b.exponents.size()) return false;
  for (auto ia = a.exponents.begin(), ib = b.exponents.begin(); ia != a.exponents.end(); ++ia, ++ib)
    if (ia->first != ib->first || !is_isomorphic(ia->second, ib->second)) return false;
  return true;
}

std::string CanonicalForm::to_string() const {
  std::string out = "[" + level.name() + "]";
  if (exponents.empty()) return out + " unit";
  bool first = true;
  for (const auto& [sym, t] : exponents) {
    out += first ? " " : "; ";
    out += sym + " -> " + t.to_string();
    first = false;
  }
  return out;
}

CanonicalForm exponents_of(const NormExpr& e) {
  const NormNode& n = e.node();
  CanonicalForm out{e.level(), {}};
  auto keep = [&](const std::string& sym, GSet t) {
    if (!t.is_empty()) out.exponents.insert_or_assign(sym, std::move(t));
  };
  switch (n.kind) {
    case NodeKind::Var:
      keep(n.symbol, GSet::point(e.level()));
      break;
    case NodeKind::Res:
      for (auto& [sym, t] : exponents_of(n.children[0]).exponents) keep(sym, restrict(t, n.target));
      break;
    case NodeKind::Norm:
      for (auto& [sym, t] : exponents_of(n.children[0]).exponents) keep(sym, induce(t, n.target));
      break;
    case NodeKind::Smash:
      for (const auto& c : n.children)
        for (auto& [sym, t] : exponents_of(c).exponents) {
          auto it = out.exponents.find(sym);
          keep(sym, it == out.exponents.end() ? t : coproduct(it->second, t));
        }
      break;
    case NodeKind::Npow:
      for (auto& [sym, t] : exponents_of(n.children[0]).exponents) keep(sym, product(n.exponent, t));
      break;
  }
  return out;
}

namespace {

NormExpr atom(const LatticePtr& lattice, const Subgroup& level, SubgroupId k, const std::string& sym,
              Annotation a) {
  const SubgroupLattice& lat = *lattice;
  NormExpr x = NormExpr::var(lattice, sym);
  if (k == lat.whole()) return x;
  NormExpr r = NormExpr::res(lat.subgroup(k), x, a);
  if (k == level.id()) return r;
  return NormExpr::norm(level, r, a);
}

// Factor key for sorting a smash: atoms first by (symbol, stabilizer), then
// anything else by its text.
struct FactorKey {
  int rank = 0;
  std::string symbol;
  std::uint32_t stabilizer = 0;
  std::string text;
  friend bool operator<(const FactorKey& a, const FactorKey& b) {
    return std::tie(a.rank, a.symbol, a.stabilizer, a.text) <
           std::tie(b.rank, b.symbol, b.stabilizer, b.text);
  }
};

FactorKey factor_key(const NormExpr& e) {
  const NormNode& n = e.node();
  const SubgroupLattice& lat = e.lattice();
  if (n.kind == NodeKind::Var) return {0, n.symbol, lat.whole().value, {}};
  if (n.kind == NodeKind::Res && n.children[0].kind() == NodeKind::Var)
    return {0, n.children[0].node().symbol, n.target.id().value, {}};
  if (n.kind == NodeKind::Norm && n.children[0].kind() == NodeKind::Res &&
      n.children[0].children()[0].kind() == NodeKind::Var) {
    const NormExpr& r = n.children[0];
    return {0, r.children()[0].node().symbol, r.node().target.id().value, {}};
  }
  return {1, {}, 0, e.to_string()};
}

NormExpr smash_or_single(std::vector<NormExpr> parts, Annotation a) {
  if (parts.size() == 1) return std::move(parts.front());
  return NormExpr::smash(std::move(parts), a);
}

NormExpr with_children(const NormExpr& e, std::vector<NormExpr> children) {
  const NormNode& n = e.node();
  switch (n.kind) {
    case NodeKind::Var:
      return e;
    case NodeKind::Res:
      return NormExpr::res(n.target, std::move(children[0]), n.annotation);
    case NodeKind::Norm:
      return NormExpr::norm(n.target, std::move(children[0]), n.annotation);
    case NodeKind::Smash:
      return NormExpr::smash(std::move(children), n.annotation);
    case NodeKind::Npow:
      return NormExpr::npow(n.exponent, std::move(children[0]), n.annotation);
  }
  return e;
}

const NormExpr& subexpr(const NormExpr& root, const std::vector<std::size_t>& path) {
  const NormExpr* cur = &root;
  for (std::size_t i : path) {
    if (i >= cur->children().size()) throw InputError("trace path leaves the expression");
    cur = &cur->children()[i];
  }
  return *cur;
}

NormExpr replace_at(const NormExpr& root, const std::vector<std::size_t>& path, std::size_t depth,
                    const NormExpr& replacement) {
  if (depth == path.size()) return replacement;
  std::vector<NormExpr> children = root.children();
  std::size_t i = path[depth];
  if (i >= children.size()) throw InputError("trace path leaves the expression");
  children[i] = replace_at(children[i], path, depth + 1, replacement);
  return with_children(root, std::move(children));
}

}  // namespace

NormExpr expr_of_form(const CanonicalForm& form, const LatticePtr& lattice, Annotation a) {
  std::vector<NormExpr> factors;
  for (const auto& [sym, t] : form.exponents)
    for (const OrbitTerm& term : t.orbits())
      for (std::size_t m = 0; m < term.multiplicity; ++m)
        factors.push_back(atom(lattice, form.level, term.stabilizer, sym, a));
  if (factors.empty()) throw PreconditionError("canonical form has no factors");
  return smash_or_single(std::move(factors), a);
}

// ---------------------------------------------------------------- rules

std::string_view rule_name(Rule r) {
  switch (r) {
    case Rule::NpowExpand: return "npow-expand";
    case Rule::ResIdentity: return "res-identity";
    case Rule::NormIdentity: return "norm-identity";
    case Rule::ResRes: return "res-res";
    case Rule::ResSmash: return "res-smash";
    case Rule::DoubleCoset: return "double-coset";
    case Rule::NormSmash: return "norm-smash";
    case Rule::NormNorm: return "norm-norm";
    case Rule::NormConjugate: return "norm-conjugate";
    case Rule::SmashFlatten: return "smash-flatten";
    case Rule::SmashSort: return "smash-sort";
    case Rule::NpowProduct: return "npow-product";
    case Rule::ResNpow: return "res-npow";
  }
  return "?";
}

std::string_view rule_identity(Rule r) {
  switch (r) {
    case Rule::NpowExpand: return "N^T e = smash over orbits H/K of T of N_K^H res_K e";
    case Rule::ResIdentity: return "res_H e = e for e at level H";
    case Rule::NormIdentity: return "N_H^H e = e";
    case Rule::ResRes: return "res_K res_L e = res_K e";
    case Rule::ResSmash: return "res_K (a smash b) = res_K a smash res_K b";
    case Rule::DoubleCoset:
      return "res_K N_J^H e = smash over KgJ in H of N_{K cap gJg^-1}^K res c_g e";
    case Rule::NormSmash: return "N_K^H (a smash b) = N_K^H a smash N_K^H b";
    case Rule::NormNorm: return "N_L^H N_K^L e = N_K^H e";
    case Rule::NormConjugate: return "N_K^H e = N_{hKh^-1}^H c_h e for h in H";
    case Rule::SmashFlatten: return "smash is associative and unital";
    case Rule::SmashSort: return "smash is commutative";
    case Rule::NpowProduct: return "N^S N^T e = N^{S x T} e";
    case Rule::ResNpow: return "res_K N^T e = N^{res_K T} res_K e";
  }
  return "?";
}

Rule parse_rule(std::string_view name) {
  for (Rule r : kAllRules)
    if (rule_name(r) == name) return r;
  throw InputError("unknown rewrite rule '" + std::string(name) + "'");
}

bool is_normalizing(Rule r) { return r != Rule::NpowProduct && r != Rule::ResNpow; }

NormExpr conjugate_expr(const NormExpr& e, Element g) {
  const NormNode& n = e.node();
  const SubgroupLattice& lat = e.lattice();
  auto conj = [&](const Subgroup& s) { return lat.subgroup(lat.conjugate(s.id(), g)); };
  switch (n.kind) {
    case NodeKind::Var:
      return e;
    case NodeKind::Res:
      return NormExpr::res(conj(n.target), conjugate_expr(n.children[0], g), n.annotation);
    case NodeKind::Norm:
      return NormExpr::norm(conj(n.target), conjugate_expr(n.children[0], g), n.annotation);
    case NodeKind::Smash: {
      std::vector<NormExpr> parts;
      for (const auto& c : n.children) parts.push_back(conjugate_expr(c, g));
      return NormExpr::smash(std::move(parts), n.annotation);
    }
    case NodeKind::Npow:
      return NormExpr::npow(conjugate(n.exponent, g), conjugate_expr(n.children[0], g), n.annotation);
  }
  return e;
}

std::optional<NormExpr> try_rewrite(const NormExpr& e, Rule r) {
  const NormNode& n = e.node();
  const SubgroupLattice& lat = e.lattice();
  auto only_child = [&](NodeKind outer, NodeKind inner) {
    return n.kind == outer && n.children[0].kind() == inner;
  };
  switch (r) {
    case Rule::NpowExpand: {
      if (n.kind != NodeKind::Npow) return std::nullopt;
      std::vector<NormExpr> parts;
      for (const OrbitTerm& term : n.exponent.orbits())
        for (std::size_t m = 0; m < term.multiplicity; ++m)
          parts.push_back(NormExpr::norm(
              e.level(), NormExpr::res(lat.subgroup(term.stabilizer), n.children[0], n.annotation),
              n.annotation));
      return smash_or_single(std::move(parts), n.annotation);
    }
    case Rule::ResIdentity:
      if (n.kind != NodeKind::Res || !(n.children[0].level() == e.level())) return std::nullopt;
      return n.children[0];
    case Rule::NormIdentity:
      if (n.kind != NodeKind::Norm || !(n.children[0].level() == e.level())) return std::nullopt;
      return n.children[0];
    case Rule::ResRes:
      if (!only_child(NodeKind::Res, NodeKind::Res)) return std::nullopt;
      return NormExpr::res(n.target, n.children[0].children()[0], n.annotation);
    case Rule::ResSmash: {
      if (!only_child(NodeKind::Res, NodeKind::Smash)) return std::nullopt;
      const NormExpr& s = n.children[0];
      std::vector<NormExpr> parts;
      for (const auto& c : s.children()) parts.push_back(NormExpr::res(n.target, c, n.annotation));
      return NormExpr::smash(std::move(parts), s.annotation());
    }
    case Rule::DoubleCoset: {
      if (!only_child(NodeKind::Res, NodeKind::Norm)) return std::nullopt;
      const NormExpr& nm = n.children[0];
      const NormExpr& inner = nm.children()[0];
      const Subgroup& k = n.target;
      const Subgroup& h = nm.level();
      const Subgroup& j = inner.level();
      DoubleCosetDecomposition dc = double_cosets(k, j, h);
      std::vector<NormExpr> parts;
      for (Element g : dc.representatives) {
        Subgroup meet = lat.subgroup(lat.intersect(k.id(), lat.conjugate(j.id(), g)));
        parts.push_back(NormExpr::norm(
            k, NormExpr::res(meet, conjugate_expr(inner, g), n.annotation), nm.annotation()));
      }
      return smash_or_single(std::move(parts), nm.annotation());
    }
    case Rule::NormSmash: {
      if (!only_child(NodeKind::Norm, NodeKind::Smash)) return std::nullopt;
      const NormExpr& s = n.children[0];
      std::vector<NormExpr> parts;
      for (const auto& c : s.children()) parts.push_back(NormExpr::norm(n.target, c, n.annotation));
      return NormExpr::smash(std::move(parts), s.annotation());
    }
    case Rule::NormNorm:
      if (!only_child(NodeKind::Norm, NodeKind::Norm)) return std::nullopt;
      return NormExpr::norm(n.target, n.children[0].children()[0], n.annotation);
    case Rule::NormConjugate: {
      if (n.kind != NodeKind::Norm) return std::nullopt;
      SubgroupId h = n.target.id(), k = n.children[0].level().id();
      if (lat.rep_within(h, k) == k) return std::nullopt;
      Element w = lat.rep_witness_within(h, k);
      return NormExpr::norm(n.target, conjugate_expr(n.children[0], w), n.annotation);
    }
    case Rule::SmashFlatten: {
      if (n.kind != NodeKind::Smash) return std::nullopt;
      if (n.children.size() == 1) return n.children[0];
      bool nested = std::any_of(n.children.begin(), n.children.end(),
                                [](const NormExpr& c) { return c.kind() == NodeKind::Smash; });
      if (!nested) return std::nullopt;
      std::vector<NormExpr> parts;
      for (const auto& c : n.children) {
        if (c.kind() == NodeKind::Smash)
          parts.insert(parts.end(), c.children().begin(), c.children().end());
        else
          parts.push_back(c);
      }
      return NormExpr::smash(std::move(parts), n.annotation);
    }
    case Rule::SmashSort: {
      if (n.kind != NodeKind::Smash) return std::nullopt;
      std::vector<std::pair<FactorKey, NormExpr>> keyed;
      for (const auto& c : n.children) keyed.emplace_back(factor_key(c), c);
      auto by_key = [](const auto& a, const auto& b) { return a.first < b.first; };
      if (std::is_sorted(keyed.begin(), keyed.end(), by_key)) return std::nullopt;
      std::stable_sort(keyed.begin(), keyed.end(), by_key);
      std::vector<NormExpr> parts;
      for (auto& [key, c] : keyed) parts.push_back(std::move(c));
      return NormExpr::smash(std::move(parts), n.annotation);
    }
    case Rule::NpowProduct: {
      if (!only_child(NodeKind::Npow, NodeKind::Npow)) return std::nullopt;
      const NormExpr& inner = n.children[0];
      return NormExpr::npow(product(n.exponent, inner.node().exponent), inner.children()[0],
                            n.annotation);
    }
    case Rule::ResNpow: {
      if (!only_child(NodeKind::Res, NodeKind::Npow)) return std::nullopt;
      const NormExpr& np = n.children[0];
      return NormExpr::npow(restrict(np.node().exponent, n.target),
                            NormExpr::res(n.target, np.children()[0], n.annotation),
                            np.annotation());
    }
  }
  return std::nullopt;
}

NormExpr step_rewrite(const NormExpr& e, Rule r) {
  auto out = try_rewrite(e, r);
  if (!out)
    throw PreconditionError("rule " + std::string(rule_name(r)) + " does not apply to " +
                            e.to_string());
  return *out;
}

// ---------------------------------------------------------------- normalize

namespace {

constexpr Rule kNormalizeOrder[] = {
    Rule::ResIdentity, Rule::NormIdentity, Rule::SmashFlatten, Rule::NpowExpand,
    Rule::ResRes,      Rule::ResSmash,     Rule::DoubleCoset,  Rule::NormSmash,
    Rule::NormNorm,    Rule::NormConjugate, Rule::SmashSort};

class Normalizer {
 public:
  explicit Normalizer(NormExpr root) : root_(std::move(root)) {}

  void run(std::vector<std::size_t>& path) {
    for (;;) {
      std::size_t arity = subexpr(root_, path).children().size();
      for (std::size_t i = 0; i < arity; ++i) {
        path.push_back(i);
        run(path);
        path.pop_back();
      }
      const NormExpr& here = subexpr(root_, path);
      std::optional<std::pair<Rule, NormExpr>> hit;
      for (Rule r : kNormalizeOrder)
        if (auto out = try_rewrite(here, r)) {
          hit.emplace(r, std::move(*out));
          break;
        }
      if (!hit) return;
      std::string before = root_.to_string();
      root_ = replace_at(root_, path, 0, hit->second);
      steps_.push_back({hit->first, path, std::move(before), root_.to_string()});
    }
  }

  NormExpr root_;
  std::vector<RewriteStep> steps_;
};

}  // namespace

Normalization normalize(const NormExpr& e) {
  typecheck(e);
  Normalization out;
  out.form = exponents_of(e);
  Normalizer nz(e);
  std::vector<std::size_t> path;
  nz.run(path);
  out.normal = nz.root_;
  out.trace.input = e.to_string();
  out.trace.steps = std::move(nz.steps_);
  out.trace.output = out.normal.to_string();
  Annotation a = Annotation::Absolute;
  for (const NormExpr* x = &e; x; x = x->children().empty() ? nullptr : &x->children()[0])
    if (x->kind() != NodeKind::Var) {
      a = x->annotation();
      break;
    }
  out.reached_canonical = !out.form.exponents.empty() &&
                          out.normal == expr_of_form(out.form, e.lattice_ptr(), a) &&
                          exponents_of(out.normal) == out.form;
  return out;
}

NormExpr replay(const RewriteTrace& trace, const LatticePtr& lattice) {
  NormExpr cur = parse_expr(trace.input, lattice);
  if (cur.to_string() != trace.input) throw InputError("trace input is not in printed form");
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const RewriteStep& s = trace.steps[i];
    std::string where = "trace step " + std::to_string(i + 1) + " (" + std::string(rule_name(s.rule)) + ")";
    if (cur.to_string() != s.before) throw InputError(where + ": expression before the step differs");
    auto out = try_rewrite(subexpr(cur, s.path), s.rule);
    if (!out) throw InputError(where + ": rule does not apply");
    cur = replace_at(cur, s.path, 0, *out);
    if (cur.to_string() != s.after) throw InputError(where + ": result differs");
  }
  if (cur.to_string() != trace.output) throw InputError("trace output differs from the replay");
  return cur;
}

bool equivalent(const NormExpr& a, const NormExpr& b) {
  if (a.lattice_ptr() != b.lattice_ptr()) throw TypeError("expressions belong to different groups");
  if (!(a.level() == b.level()))
    throw TypeError("level mismatch: " + a.level().name() + " vs " + b.level().name());
  return exponents_of(a) == exponents_of(b);
}

// ---------------------------------------------------------------- norm maps

NormMap norm_map_of(const GMap& f, const IndexingSystem* ix, const std::string& ring) {
  if (!f.source || !f.target) throw PreconditionError("norm_map_of: incomplete map");
  if (!f.is_equivariant()) throw PreconditionError("norm_map_of: map is not equivariant");
  const GSet& s = f.source->gset;
  const GSet& t = f.target->gset;
  if (!valid_symbol(ring)) throw InputError("invalid ring symbol '" + ring + "'");
  if (ix) {
    if (!ix->admits(s)) throw InadmissibleError("source " + s.to_string() + " is not admissible");
    if (!ix->admits(t)) throw InadmissibleError("target " + t.to_string() + " is not admissible");
  }
  NormMap out{f, {t.level(), {}}, {s.level(), {}}};
  if (!t.is_empty()) out.source.exponents.emplace(ring, t);
  if (!s.is_empty()) out.target.exponents.emplace(ring, s);
  return out;
}

NormMap compose(const NormMap& of_f, const NormMap& of_g) {
  if (!(of_g.target == of_f.source))
    throw PreconditionError("norm maps are not composable: " + of_g.target.to_string() + " vs " +
                            of_f.source.to_string());
  return NormMap{compose(of_g.map, of_f.map), of_g.source, of_f.target};
}

// ---------------------------------------------------------------- random

namespace {

class RandomBuilder {
 public:
  RandomBuilder(std::mt19937_64& rng, const RandomExprOptions& o, const IndexingSystem* ix,
                const LatticePtr& lattice)
      : rng_(rng), o_(o), ix_(ix), lattice_(lattice), lat_(*lattice) {}

  std::size_t pick(std::size_t n) { return static_cast<std::size_t>(rng_() % n); }

  NormExpr build(SubgroupId h, std::size_t depth) {
    Subgroup hs = lat_.subgroup(h);
    bool top = h == lat_.whole();
    enum Choice { Var, Res, Norm, Smash, Npow };
    std::vector<Choice> choices;
    if (top) choices.push_back(Var);
    if (depth > 0) {
      choices.push_back(Res);
      if (depth > 1 || top) {
        if (!norm_sources(h, depth).empty()) choices.push_back(Norm);
        if (o_.max_smash_arity >= 2) choices.push_back(Smash);
        if (!exponents(h).empty()) choices.push_back(Npow);
      }
    }
    switch (choices[pick(choices.size())]) {
      case Var:
        return NormExpr::var(lattice_, o_.symbols[pick(o_.symbols.size())]);
      case Res: {
        std::vector<SubgroupId> above;
        for (std::size_t i = 0; i < lat_.size(); ++i) {
          SubgroupId l{static_cast<std::uint32_t>(i)};
          if (lat_.is_subgroup_of(h, l) && (depth > 1 || l == lat_.whole())) above.push_back(l);
        }
        return NormExpr::res(hs, build(above[pick(above.size())], depth - 1), o_.annotation);
      }
      case Norm: {
        auto below = norm_sources(h, depth);
        return NormExpr::norm(hs, build(below[pick(below.size())], depth - 1), o_.annotation);
      }
      case Smash: {
        std::size_t arity = 2 + pick(o_.max_smash_arity - 1);
        std::vector<NormExpr> parts;
        for (std::size_t i = 0; i < arity; ++i) parts.push_back(build(h, depth - 1));
        return NormExpr::smash(std::move(parts), o_.annotation);
      }
      case Npow: {
        const auto& ts = exponents(h);
        GSet t = ts[pick(ts.size())];
        return NormExpr::npow(std::move(t), build(h, depth - 1), o_.annotation);
      }
    }
    return NormExpr::var(lattice_, o_.symbols.front());
  }

 private:
  std::vector<SubgroupId> norm_sources(SubgroupId h, std::size_t depth) const {
    std::vector<SubgroupId> out;
    for (SubgroupId k : lat_.subgroups_of(h)) {
      if (ix_ && !ix_->admits(h, k)) continue;
      if (depth <= 1 && k != lat_.whole()) continue;
      out.push_back(k);
    }
    return out;
  }

  const std::vector<GSet>& exponents(SubgroupId h) {
    auto it = cache_.find(h.value);
    if (it != cache_.end()) return it->second;
    std::optional<std::vector<SubgroupId>> allowed;
    if (ix_) allowed = ix_->admissible_stabilizers(h);
    std::vector<GSet> ts;
    for (auto& t : enumerate_gsets(lat_.subgroup(h), o_.max_npow_cardinality, allowed))
      if (!t.is_empty()) ts.push_back(std::move(t));
    return cache_.emplace(h.value, std::move(ts)).first->second;
  }

  std::mt19937_64& rng_;
  const RandomExprOptions& o_;
  const IndexingSystem* ix_;
  const LatticePtr& lattice_;
  const SubgroupLattice& lat_;
  std::map<std::uint32_t, std::vector<GSet>> cache_;
};

}  // namespace

NormExpr random_expr(const Subgroup& level, std::mt19937_64& rng, const RandomExprOptions& options,
                     const IndexingSystem* ix) {
  if (options.symbols.empty()) throw InputError("random_expr needs at least one symbol");
  if (options.max_depth == 0 && level.id() != level.lattice().whole())
    throw PreconditionError("a depth-0 expression lives at the top level only");
  RandomBuilder b(rng, options, ix, level.lattice_ptr());
  return b.build(level.id(), options.max_depth);
}

}  // namespace eqnorm
