#include "forcinglab/language.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>
#include <sstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

// ---------------------------------------------------------------------------
// Signature

Signature Signature::create(std::vector<std::pair<std::string, int>> relations,
                            std::vector<std::string> names) {
  Signature s;
  std::set<std::string> seen;
  for (const auto& [symbol, arity] : relations) {
    if (!seen.insert(symbol).second)
      throw InputError("signature: duplicate relation symbol '" + symbol + "'");
    if (arity < 1)
      throw InputError("signature: relation '" + symbol +
                       "' must have positive arity");
  }
  seen.clear();
  for (const auto& n : names)
    if (!seen.insert(n).second)
      throw InputError("signature: duplicate name '" + n + "'");
  s.relations_ = std::move(relations);
  s.names_ = std::move(names);
  return s;
}

bool Signature::has_relation(const std::string& symbol) const {
  for (const auto& [r, a] : relations_)
    if (r == symbol) return true;
  return false;
}

int Signature::relation_arity(const std::string& symbol) const {
  for (const auto& [r, a] : relations_)
    if (r == symbol) return a;
  throw InputError("signature: unknown relation '" + symbol + "'");
}

int Signature::relation_index(const std::string& symbol) const {
  for (size_t i = 0; i < relations_.size(); ++i)
    if (relations_[i].first == symbol) return static_cast<int>(i);
  throw InputError("signature: unknown relation '" + symbol + "'");
}

bool Signature::has_name(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

int Signature::name_index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end())
    throw InputError("signature: unknown name '" + name + "'");
  return static_cast<int>(it - names_.begin());
}

// ---------------------------------------------------------------------------
// Formula nodes

struct Formula::Node {
  Kind kind;
  std::string symbol;                      // relation or bound variable
  std::vector<Term> args;                  // atoms
  std::shared_ptr<const Node> a, b;        // children
  std::vector<std::string> free_vars;      // sorted
};

namespace {

using NodePtr = std::shared_ptr<const Formula::Node>;

std::vector<std::string> merge_vars(const std::vector<std::string>& x,
                                    const std::vector<std::string>& y) {
  std::vector<std::string> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return out;
}

}  // namespace

struct FormulaAccess {
  static Formula wrap(NodePtr n) { return Formula(std::move(n)); }
  static const NodePtr& node(const Formula& f) { return f.node_; }
};

namespace {

Formula make(Formula::Node n) {
  return FormulaAccess::wrap(std::make_shared<const Formula::Node>(std::move(n)));
}

const Formula::Node& node_of(const Formula& f) { return *FormulaAccess::node(f); }

}  // namespace

Formula Formula::atom(std::string relation, std::vector<Term> args) {
  Node n{Kind::atom, std::move(relation), std::move(args), nullptr, nullptr, {}};
  for (const auto& t : n.args)
    if (!t.is_name) n.free_vars.push_back(t.text);
  std::sort(n.free_vars.begin(), n.free_vars.end());
  n.free_vars.erase(std::unique(n.free_vars.begin(), n.free_vars.end()),
                    n.free_vars.end());
  return make(std::move(n));
}

Formula Formula::negation(Formula f) {
  Node n{Kind::negation, "", {}, FormulaAccess::node(f), nullptr,
         node_of(f).free_vars};
  return make(std::move(n));
}

namespace {
Formula binary(Formula::Kind kind, Formula l, Formula r) {
  Formula::Node n{kind,
                  "",
                  {},
                  FormulaAccess::node(l),
                  FormulaAccess::node(r),
                  merge_vars(node_of(l).free_vars, node_of(r).free_vars)};
  return make(std::move(n));
}
}  // namespace

Formula Formula::conjunction(Formula l, Formula r) {
  return binary(Kind::conjunction, std::move(l), std::move(r));
}
Formula Formula::disjunction(Formula l, Formula r) {
  return binary(Kind::disjunction, std::move(l), std::move(r));
}
Formula Formula::implication(Formula l, Formula r) {
  return binary(Kind::implication, std::move(l), std::move(r));
}
Formula Formula::equivalence(Formula l, Formula r) {
  return binary(Kind::equivalence, std::move(l), std::move(r));
}

namespace {
Formula quantifier(Formula::Kind kind, std::string var, Formula body) {
  Formula::Node n{kind, std::move(var), {}, FormulaAccess::node(body), nullptr, {}};
  for (const auto& v : node_of(body).free_vars)
    if (v != n.symbol) n.free_vars.push_back(v);
  return make(std::move(n));
}
}  // namespace

Formula Formula::exists(std::string var, Formula body) {
  return quantifier(Kind::exists, std::move(var), std::move(body));
}
Formula Formula::forall(std::string var, Formula body) {
  return quantifier(Kind::forall, std::move(var), std::move(body));
}

Formula::Kind Formula::kind() const { return node_->kind; }
bool Formula::is_quantifier() const {
  return kind() == Kind::exists || kind() == Kind::forall;
}
bool Formula::is_binary() const {
  auto k = kind();
  return k == Kind::conjunction || k == Kind::disjunction ||
         k == Kind::implication || k == Kind::equivalence;
}

const std::string& Formula::relation() const { return node_->symbol; }
const std::vector<Term>& Formula::args() const { return node_->args; }
Formula Formula::child() const { return FormulaAccess::wrap(node_->a); }
Formula Formula::left() const { return FormulaAccess::wrap(node_->a); }
Formula Formula::right() const { return FormulaAccess::wrap(node_->b); }
const std::string& Formula::var() const { return node_->symbol; }
Formula Formula::body() const { return FormulaAccess::wrap(node_->a); }

const std::vector<std::string>& Formula::free_variables() const {
  return node_->free_vars;
}

const void* Formula::node_id() const { return node_.get(); }

namespace {

void print_rec(const Formula::Node& n, std::string& out) {
  switch (n.kind) {
    case Formula::Kind::atom: {
      out += n.symbol;
      out += '(';
      for (size_t i = 0; i < n.args.size(); ++i) {
        if (i > 0) out += ", ";
        out += n.args[i].text;
      }
      out += ')';
      return;
    }
    case Formula::Kind::negation:
      out += "not ";
      print_rec(*n.a, out);
      return;
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
    case Formula::Kind::equivalence: {
      const char* op = n.kind == Formula::Kind::conjunction   ? " and "
                       : n.kind == Formula::Kind::disjunction ? " or "
                       : n.kind == Formula::Kind::implication ? " -> "
                                                              : " <-> ";
      out += '(';
      print_rec(*n.a, out);
      out += op;
      print_rec(*n.b, out);
      out += ')';
      return;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      out += n.kind == Formula::Kind::exists ? "exists " : "forall ";
      out += n.symbol;
      out += ". ";
      print_rec(*n.a, out);
      return;
  }
}

}  // namespace

std::string Formula::print() const {
  std::string out;
  print_rec(*node_, out);
  return out;
}

namespace {

bool equal_rec(const Formula::Node& x, const Formula::Node& y) {
  if (&x == &y) return true;
  if (x.kind != y.kind || x.symbol != y.symbol || x.args != y.args) return false;
  if ((x.a == nullptr) != (y.a == nullptr)) return false;
  if ((x.b == nullptr) != (y.b == nullptr)) return false;
  if (x.a && !equal_rec(*x.a, *y.a)) return false;
  if (x.b && !equal_rec(*x.b, *y.b)) return false;
  return true;
}

}  // namespace

bool Formula::operator==(const Formula& other) const {
  return equal_rec(*node_, *other.node_);
}

// ---------------------------------------------------------------------------
// Parser

namespace {

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

const std::set<std::string> kKeywords = {"not", "and", "or", "exists", "forall"};

class Parser {
public:
  Parser(std::string_view text, const Signature& sig) : text_(text), sig_(sig) {}

  Formula run() {
    Formula f = formula();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

private:
  [[noreturn]] void fail(const std::string& message) const {
    throw InputError("formula: " + message + " at position " +
                     std::to_string(pos_));
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(std::string_view token) {
    skip_ws();
    if (text_.substr(pos_, token.size()) != token) return false;
    // Keywords must not run into a following identifier character.
    if (is_ident_start(token.front()) && pos_ + token.size() < text_.size() &&
        is_ident_char(text_[pos_ + token.size()]))
      return false;
    pos_ += token.size();
    return true;
  }

  std::string ident() {
    skip_ws();
    if (pos_ >= text_.size() || !is_ident_start(text_[pos_]))
      fail("expected an identifier");
    size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    std::string id(text_.substr(start, pos_ - start));
    if (kKeywords.count(id)) {
      pos_ = start;
      fail("'" + id + "' is a reserved word");
    }
    return id;
  }

  Formula formula() {
    skip_ws();
    if (eat("not")) return Formula::negation(formula());
    if (eat("exists")) return quantified(true);
    if (eat("forall")) return quantified(false);
    if (eat("(")) {
      Formula l = formula();
      skip_ws();
      Formula::Kind kind;
      if (eat("and"))
        kind = Formula::Kind::conjunction;
      else if (eat("or"))
        kind = Formula::Kind::disjunction;
      else if (eat("<->"))
        kind = Formula::Kind::equivalence;
      else if (eat("->"))
        kind = Formula::Kind::implication;
      else
        fail("expected 'and', 'or', '->' or '<->'");
      Formula r = formula();
      skip_ws();
      if (!eat(")")) fail("expected ')'");
      switch (kind) {
        case Formula::Kind::conjunction: return Formula::conjunction(l, r);
        case Formula::Kind::disjunction: return Formula::disjunction(l, r);
        case Formula::Kind::implication: return Formula::implication(l, r);
        default: return Formula::equivalence(l, r);
      }
    }
    return atom();
  }

  Formula quantified(bool existential) {
    std::string v = ident();
    if (sig_.has_name(v))
      fail("variable '" + v + "' shadows a name of the signature");
    skip_ws();
    if (!eat(".")) fail("expected '.' after the bound variable");
    bound_.push_back(v);
    Formula body = formula();
    bound_.pop_back();
    return existential ? Formula::exists(v, std::move(body))
                       : Formula::forall(v, std::move(body));
  }

  Formula atom() {
    size_t at = pos_;
    std::string rel = ident();
    if (!sig_.has_relation(rel)) {
      pos_ = at;
      fail("unknown relation '" + rel + "'");
    }
    skip_ws();
    if (!eat("(")) fail("expected '(' after relation '" + rel + "'");
    std::vector<Term> args;
    while (true) {
      size_t arg_at = pos_;
      std::string id = ident();
      if (sig_.has_name(id)) {
        args.push_back({true, id});
      } else if (std::find(bound_.begin(), bound_.end(), id) != bound_.end()) {
        args.push_back({false, id});
      } else {
        pos_ = arg_at;
        fail("'" + id + "' is neither a name nor a bound variable");
      }
      skip_ws();
      if (eat(",")) continue;
      if (eat(")")) break;
      fail("expected ',' or ')'");
    }
    int arity = sig_.relation_arity(rel);
    if (static_cast<int>(args.size()) != arity) {
      pos_ = at;
      fail("relation '" + rel + "' expects " + std::to_string(arity) +
           " argument(s), got " + std::to_string(args.size()));
    }
    return Formula::atom(std::move(rel), std::move(args));
  }

  std::string_view text_;
  const Signature& sig_;
  size_t pos_ = 0;
  std::vector<std::string> bound_;
};

}  // namespace

Formula parse_formula(std::string_view text, const Signature& sig) {
  return Parser(text, sig).run();
}

// ---------------------------------------------------------------------------
// Substitution and closure

namespace {

NodePtr substitute(const NodePtr& n, const std::string& var,
                   const std::string& name) {
  const auto& fv = n->free_vars;
  if (!std::binary_search(fv.begin(), fv.end(), var)) return n;
  switch (n->kind) {
    case Formula::Kind::atom: {
      std::vector<Term> args = n->args;
      for (auto& t : args)
        if (!t.is_name && t.text == var) t = {true, name};
      return FormulaAccess::node(Formula::atom(n->symbol, std::move(args)));
    }
    case Formula::Kind::negation:
      return FormulaAccess::node(
          Formula::negation(FormulaAccess::wrap(substitute(n->a, var, name))));
    case Formula::Kind::conjunction:
    case Formula::Kind::disjunction:
    case Formula::Kind::implication:
    case Formula::Kind::equivalence: {
      Formula l = FormulaAccess::wrap(substitute(n->a, var, name));
      Formula r = FormulaAccess::wrap(substitute(n->b, var, name));
      switch (n->kind) {
        case Formula::Kind::conjunction:
          return FormulaAccess::node(Formula::conjunction(l, r));
        case Formula::Kind::disjunction:
          return FormulaAccess::node(Formula::disjunction(l, r));
        case Formula::Kind::implication:
          return FormulaAccess::node(Formula::implication(l, r));
        default:
          return FormulaAccess::node(Formula::equivalence(l, r));
      }
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      // var is free here, so it differs from the bound variable.
      Formula b = FormulaAccess::wrap(substitute(n->a, var, name));
      return FormulaAccess::node(n->kind == Formula::Kind::exists
                                     ? Formula::exists(n->symbol, b)
                                     : Formula::forall(n->symbol, b));
    }
  }
  return n;
}

}  // namespace

Formula instantiate(const Signature& sig, const Formula& f,
                    const std::string& var, const std::string& name) {
  if (!sig.has_name(name))
    throw InputError("instantiate: unknown name '" + name + "'");
  return FormulaAccess::wrap(substitute(FormulaAccess::node(f), var, name));
}

std::vector<Formula> subformula_closure(std::span<const Formula> formulas) {
  std::map<std::string, Formula> out;
  std::vector<Formula> queue(formulas.begin(), formulas.end());
  while (!queue.empty()) {
    Formula f = queue.back();
    queue.pop_back();
    if (!out.emplace(f.print(), f).second) continue;
    switch (f.kind()) {
      case Formula::Kind::atom:
        break;
      case Formula::Kind::negation:
        queue.push_back(f.child());
        break;
      case Formula::Kind::exists:
      case Formula::Kind::forall:
        queue.push_back(f.body());
        break;
      default:
        queue.push_back(f.left());
        queue.push_back(f.right());
        break;
    }
  }
  std::vector<Formula> result;
  result.reserve(out.size());
  for (auto& [text, f] : out) result.push_back(std::move(f));
  return result;
}

std::vector<Formula> ground_instances(const Signature& sig, const Formula& f) {
  std::vector<Formula> current{f};
  for (const auto& var : f.free_variables()) {
    std::vector<Formula> next;
    for (const auto& g : current)
      for (const auto& name : sig.names())
        next.push_back(instantiate(sig, g, var, name));
    current = std::move(next);
  }
  return current;
}

}  // namespace forcinglab
