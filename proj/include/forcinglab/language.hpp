#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace forcinglab {

/// Relation symbols with positive arities plus a finite ordered list of
/// names (the constants quantifiers range over).
class Signature {
public:
  static Signature create(std::vector<std::pair<std::string, int>> relations,
                          std::vector<std::string> names);

  const std::vector<std::pair<std::string, int>>& relations() const {
    return relations_;
  }
  const std::vector<std::string>& names() const { return names_; }

  bool has_relation(const std::string& symbol) const;
  int relation_arity(const std::string& symbol) const;
  int relation_index(const std::string& symbol) const;
  bool has_name(const std::string& name) const;
  int name_index(const std::string& name) const;

  bool operator==(const Signature&) const = default;

private:
  Signature() = default;
  std::vector<std::pair<std::string, int>> relations_;
  std::vector<std::string> names_;
};

/// An argument of an atom: either a name from the signature or a variable
/// bound by an enclosing quantifier.
struct Term {
  bool is_name = true;
  std::string text;
  bool operator==(const Term&) const = default;
};

/// Immutable formula tree with shared subterms; copies are cheap.
///
/// Grammar (ASCII, whitespace-insensitive):
///   formula := atom | "not" formula | "(" formula op formula ")"
///            | ("exists" | "forall") ident "." formula
///   op      := "and" | "or" | "->" | "<->"
///   atom    := ident "(" ident ("," ident)* ")"
class Formula {
public:
  enum class Kind {
    atom,
    negation,
    conjunction,
    disjunction,
    implication,
    equivalence,
    exists,
    forall
  };

  static Formula atom(std::string relation, std::vector<Term> args);
  static Formula negation(Formula f);
  static Formula conjunction(Formula l, Formula r);
  static Formula disjunction(Formula l, Formula r);
  static Formula implication(Formula l, Formula r);
  static Formula equivalence(Formula l, Formula r);
  static Formula exists(std::string var, Formula body);
  static Formula forall(std::string var, Formula body);

  Kind kind() const;
  bool is_quantifier() const;
  bool is_binary() const;

  // Accessors; each is valid only for the matching kind.
  const std::string& relation() const;
  const std::vector<Term>& args() const;
  Formula child() const;  // negation
  Formula left() const;   // binary connectives
  Formula right() const;
  const std::string& var() const;  // quantifiers
  Formula body() const;

  std::string print() const;
  /// Free variables in sorted order.
  const std::vector<std::string>& free_variables() const;
  bool is_sentence() const { return free_variables().empty(); }

  bool operator==(const Formula& other) const;
  /// Stable identity of the shared node, usable as a memo key.
  const void* node_id() const;

  struct Node;

private:
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
  friend struct FormulaAccess;
};

/// Parses the grammar above, resolving identifiers against the signature.
/// Bare identifiers in argument positions must be names or bound variables.
Formula parse_formula(std::string_view text, const Signature& sig);

/// Capture-free substitution of a name for the free occurrences of a
/// variable. Names are constants, so capture cannot occur.
Formula instantiate(const Signature& sig, const Formula& f,
                    const std::string& var, const std::string& name);

/// Smallest superset closed under immediate subformulas; quantified bodies
/// are kept with their variable free. Canonically ordered by printed form.
std::vector<Formula> subformula_closure(std::span<const Formula> formulas);

/// All sentences obtained by substituting names for the free variables,
/// one per assignment (a singleton for sentences).
std::vector<Formula> ground_instances(const Signature& sig, const Formula& f);

}  // namespace forcinglab
