#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "forcinglab/filters.hpp"
#include "forcinglab/language.hpp"
#include "forcinglab/ralgebra.hpp"

namespace forcinglab {

struct GroundAtom {
  int relation = 0;
  std::vector<int> names;
  auto operator<=>(const GroundAtom&) const = default;
  std::string print(const Signature& sig) const;
};

/// Every ground atom of the signature, relations in declaration order and
/// name tuples in row-major order.
std::vector<GroundAtom> all_ground_atoms(const Signature& sig);

/// Assigns a regular set to every ground atom of the signature. The table
/// must be total; values must already be regular unless regularize_inputs
/// is set, in which case X -> X'' is applied on ingestion.
class AtomicValuation {
public:
  static AtomicValuation create(Signature sig, RegularAlgebra algebra,
                                const std::map<GroundAtom, Mask>& atoms,
                                bool regularize_inputs = false);

  const Signature& signature() const { return sig_; }
  const RegularAlgebra& algebra() const { return algebra_; }
  const Poset& poset() const { return algebra_.poset(); }

  Mask atom_value(const GroundAtom& atom) const;
  Mask atom_value(int relation, std::span<const int> names) const;

  /// Every ground atom of the signature, in table order.
  std::vector<GroundAtom> ground_atoms() const;

private:
  AtomicValuation(Signature sig, RegularAlgebra algebra,
                  std::vector<std::vector<Mask>> tables)
      : sig_(std::move(sig)),
        algebra_(std::move(algebra)),
        tables_(std::move(tables)) {}
  Signature sig_;
  RegularAlgebra algebra_;
  // One flat table per relation, indexed by the mixed-radix name tuple.
  std::vector<std::vector<Mask>> tables_;
};

/// Boolean value of a sentence: atoms from the table, connectives by the
/// algebra operations, quantifiers as sup/inf over all names.
Mask evaluate(const AtomicValuation& v, const Formula& sentence);

/// The dense sets forcing needs for the given formulas: X union X' for
/// X = [[psi]] of every ground instance of the subformula closure, and
/// for X = the set-theoretic union of [[body(n)]] over all names n, one
/// per grounded quantified subformula. Deduplicated, canonically ordered.
DenseFamily required_dense_family(const AtomicValuation& v,
                                  std::span<const Formula> formulas);

/// Every ground instance of every member of the subformula closure,
/// deduplicated in canonical printed order.
std::vector<Formula> generated_sentences(const Signature& sig,
                                         std::span<const Formula> formulas);

/// Whether [[sentence]] meets G. G must be a filter generic for
/// required_dense_family(v, {sentence}).
bool g_models(const AtomicValuation& v, Mask filter, const Formula& sentence);

/// The relational structure a generic filter induces on the names.
class GenericModel {
public:
  GenericModel(Signature sig, Mask filter, std::set<GroundAtom> truths);

  Mask filter() const { return filter_; }
  const std::set<GroundAtom>& truths() const { return truths_; }

  /// Classical satisfaction over the name universe.
  bool satisfies(const Formula& sentence) const;

private:
  Signature sig_;
  Mask filter_;
  std::set<GroundAtom> truths_;
};

GenericModel model_of(const AtomicValuation& v, Mask filter);

/// p forces the sentence: definable check, no generic filters consulted.
bool forces(const AtomicValuation& v, int p, const Formula& sentence);

/// p forces the sentence: true in every generic model whose filter
/// contains p, by exhaustive enumeration.
bool forces_semantic(const AtomicValuation& v, int p, const Formula& sentence,
                     int cap = kDefaultScanCap);

/// Same, but generic relative to an explicit dense family, which must
/// contain all the required sets for the sentence.
bool forces_semantic_with(const AtomicValuation& v, int p,
                          const Formula& sentence, const DenseFamily& family,
                          int cap = kDefaultScanCap);

struct LemmaReport {
  bool pass = true;
  std::string counterexample;  // empty on pass
};

/// forces_semantic agrees with forces for every point and every generated
/// sentence.
LemmaReport verify_forcing_lemma(const AtomicValuation& v,
                                 std::span<const Formula> formulas,
                                 int cap = kDefaultScanCap);

/// A sentence holds in M[G] exactly when some point of G forces it, for
/// every generic filter and generated sentence.
LemmaReport verify_truth_lemma(const AtomicValuation& v,
                               std::span<const Formula> formulas,
                               int cap = kDefaultScanCap);

/// G models an existential iff it models some instance, and a universal
/// iff it models every instance.
LemmaReport verify_quantifier_lemma(const AtomicValuation& v,
                                    std::span<const Formula> formulas,
                                    int cap = kDefaultScanCap);

}  // namespace forcinglab
