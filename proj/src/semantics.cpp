#include "forcinglab/semantics.hpp"

#include <algorithm>
#include <unordered_map>

#include "forcinglab/errors.hpp"

namespace forcinglab {

namespace {

constexpr long long kMaxGroundAtoms = 1 << 20;

long long table_size(int arity, int name_count) {
  long long size = 1;
  for (int i = 0; i < arity; ++i) {
    size *= name_count;
    if (size > kMaxGroundAtoms)
      throw ResourceError("valuation: signature generates more than " +
                          std::to_string(kMaxGroundAtoms) + " ground atoms");
  }
  return size;
}

long long tuple_index(std::span<const int> names, int name_count) {
  long long idx = 0;
  for (size_t i = 0; i < names.size(); ++i) idx = idx * name_count + names[i];
  return idx;
}

}  // namespace

std::string GroundAtom::print(const Signature& sig) const {
  std::string out = sig.relations()[static_cast<size_t>(relation)].first + "(";
  for (size_t i = 0; i < names.size(); ++i) {
    if (i > 0) out += ", ";
    out += sig.names()[static_cast<size_t>(names[i])];
  }
  return out + ")";
}

AtomicValuation AtomicValuation::create(Signature sig, RegularAlgebra algebra,
                                        const std::map<GroundAtom, Mask>& atoms,
                                        bool regularize_inputs) {
  const int name_count = static_cast<int>(sig.names().size());
  std::vector<std::vector<Mask>> tables(sig.relations().size());
  for (size_t r = 0; r < sig.relations().size(); ++r) {
    auto size = table_size(sig.relations()[r].second, name_count);
    tables[r].assign(static_cast<size_t>(size), Mask{0});
  }

  std::vector<std::vector<bool>> present(tables.size());
  for (size_t r = 0; r < tables.size(); ++r)
    present[r].assign(tables[r].size(), false);

  for (const auto& [atom, value] : atoms) {
    if (atom.relation < 0 ||
        atom.relation >= static_cast<int>(sig.relations().size()))
      throw InputError("valuation: atom refers to an unknown relation");
    const auto& [symbol, arity] = sig.relations()[static_cast<size_t>(atom.relation)];
    if (static_cast<int>(atom.names.size()) != arity)
      throw InputError("valuation: atom '" + atom.print(sig) +
                       "' does not match the arity of '" + symbol + "'");
    for (int n : atom.names)
      if (n < 0 || n >= name_count)
        throw InputError("valuation: atom refers to an unknown name");
    Mask m = value;
    // X'' is regular for arbitrary X, so plain regularization suffices.
    if (regularize_inputs) m = algebra.poset().regularize(m);
    if (!algebra.contains(m))
      throw InputError("valuation: value " + algebra.poset().format(m) +
                       " for atom '" + atom.print(sig) +
                       "' is not a regular set (pass --regularize to coerce)");
    auto idx = static_cast<size_t>(tuple_index(atom.names, name_count));
    tables[static_cast<size_t>(atom.relation)][idx] = m;
    present[static_cast<size_t>(atom.relation)][idx] = true;
  }

  for (size_t r = 0; r < present.size(); ++r)
    for (size_t i = 0; i < present[r].size(); ++i)
      if (!present[r][i]) {
        // Reconstruct the missing tuple for the diagnostic.
        GroundAtom atom;
        atom.relation = static_cast<int>(r);
        int arity = sig.relations()[r].second;
        atom.names.assign(static_cast<size_t>(arity), 0);
        auto rest = static_cast<long long>(i);
        for (int k = arity - 1; k >= 0; --k) {
          atom.names[static_cast<size_t>(k)] = static_cast<int>(rest % name_count);
          rest /= name_count;
        }
        throw InputError("valuation: missing value for ground atom '" +
                         atom.print(sig) + "'");
      }

  return AtomicValuation(std::move(sig), std::move(algebra), std::move(tables));
}

Mask AtomicValuation::atom_value(const GroundAtom& atom) const {
  return atom_value(atom.relation, atom.names);
}

Mask AtomicValuation::atom_value(int relation, std::span<const int> names) const {
  if (relation < 0 || relation >= static_cast<int>(tables_.size()))
    throw InputError("valuation: unknown relation index");
  if (static_cast<int>(names.size()) !=
      sig_.relations()[static_cast<size_t>(relation)].second)
    throw InputError("valuation: atom arity does not match relation '" +
                     sig_.relations()[static_cast<size_t>(relation)].first + "'");
  const int name_count = static_cast<int>(sig_.names().size());
  for (int n : names)
    if (n < 0 || n >= name_count)
      throw InputError("valuation: unknown name index");
  const auto& table = tables_[static_cast<size_t>(relation)];
  return table[static_cast<size_t>(tuple_index(names, name_count))];
}

std::vector<GroundAtom> all_ground_atoms(const Signature& sig) {
  std::vector<GroundAtom> out;
  const int name_count = static_cast<int>(sig.names().size());
  if (name_count == 0) return out;  // arities are positive, so no ground atoms
  for (size_t r = 0; r < sig.relations().size(); ++r) {
    int arity = sig.relations()[r].second;
    GroundAtom atom{static_cast<int>(r),
                    std::vector<int>(static_cast<size_t>(arity), 0)};
    while (true) {
      out.push_back(atom);
      int k = arity - 1;
      while (k >= 0 && ++atom.names[static_cast<size_t>(k)] == name_count) {
        atom.names[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
    }
  }
  return out;
}

std::vector<GroundAtom> AtomicValuation::ground_atoms() const {
  return all_ground_atoms(sig_);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace {

// Recursive evaluator with an environment for bound variables. Closed
// subformulas are memoized by node identity, which makes exhaustive sweeps
// over large shared formula pools cheap.
class Evaluator {
public:
  explicit Evaluator(const AtomicValuation& v) : v_(v), alg_(v.algebra()) {}

  Mask eval_sentence(const Formula& f) {
    if (!f.is_sentence())
      throw InputError("evaluate: formula has free variable(s): " +
                       f.print());
    return eval(f);
  }

  Mask eval(const Formula& f) {
    bool closed = f.free_variables().empty();
    if (closed) {
      auto it = memo_.find(f.node_id());
      if (it != memo_.end()) return it->second;
    }
    Mask result = compute(f);
    if (closed) memo_.emplace(f.node_id(), result);
    return result;
  }

  void push(const std::string& var, int name) { env_.emplace_back(&var, name); }
  void pop() { env_.pop_back(); }

private:
  Mask compute(const Formula& f) {
    switch (f.kind()) {
      case Formula::Kind::atom: {
        args_.clear();
        for (const auto& t : f.args()) args_.push_back(resolve(t));
        return v_.atom_value(v_.signature().relation_index(f.relation()), args_);
      }
      case Formula::Kind::negation:
        return alg_.complement(eval(f.child()));
      case Formula::Kind::conjunction:
        return alg_.meet(eval(f.left()), eval(f.right()));
      case Formula::Kind::disjunction:
        return alg_.join(eval(f.left()), eval(f.right()));
      case Formula::Kind::implication:
        return alg_.implies(eval(f.left()), eval(f.right()));
      case Formula::Kind::equivalence: {
        Mask a = eval(f.left());
        Mask b = eval(f.right());
        return alg_.meet(alg_.implies(a, b), alg_.implies(b, a));
      }
      case Formula::Kind::exists: {
        // sup over all names = the regularized union of the instances.
        Mask u = 0;
        Formula body = f.body();
        for (int n = 0; n < static_cast<int>(v_.signature().names().size()); ++n) {
          push(f.var(), n);
          u |= eval(body);
          pop();
        }
        return alg_.poset().regularize(u);
      }
      case Formula::Kind::forall: {
        Mask u = alg_.one();
        Formula body = f.body();
        for (int n = 0; n < static_cast<int>(v_.signature().names().size()); ++n) {
          push(f.var(), n);
          u &= eval(body);
          pop();
        }
        return u;
      }
    }
    throw InputError("evaluate: malformed formula");
  }

  int resolve(const Term& t) {
    if (t.is_name) return v_.signature().name_index(t.text);
    for (auto it = env_.rbegin(); it != env_.rend(); ++it)
      if (*it->first == t.text) return it->second;
    throw InputError("evaluate: unbound variable '" + t.text + "'");
  }

  const AtomicValuation& v_;
  const RegularAlgebra& alg_;
  std::vector<std::pair<const std::string*, int>> env_;
  std::vector<int> args_;
  std::unordered_map<const void*, Mask> memo_;
};

// Enumerates all assignments of names to the given variables, pushing them
// onto the evaluator and invoking fn once per assignment.
template <typename Fn>
void for_each_assignment(Evaluator& ev, const std::vector<std::string>& vars,
                         int name_count, size_t at, Fn&& fn) {
  if (at == vars.size()) {
    fn();
    return;
  }
  for (int n = 0; n < name_count; ++n) {
    ev.push(vars[at], n);
    for_each_assignment(ev, vars, name_count, at + 1, fn);
    ev.pop();
  }
}

std::vector<Mask> required_sets(const AtomicValuation& v, Evaluator& ev,
                                std::span<const Formula> formulas) {
  const int name_count = static_cast<int>(v.signature().names().size());
  const Poset& poset = v.poset();
  std::set<Mask> sets;
  for (const Formula& psi : subformula_closure(formulas)) {
    const auto vars = psi.free_variables();
    for_each_assignment(ev, vars, name_count, 0, [&] {
      Mask m = ev.eval(psi);
      sets.insert(m | poset.pseudo_complement(m));
      if (psi.is_quantifier()) {
        // The union-form set: a plain union, not the sup.
        Mask u = 0;
        Formula body = psi.body();
        for (int n = 0; n < name_count; ++n) {
          ev.push(psi.var(), n);
          u |= ev.eval(body);
          ev.pop();
        }
        sets.insert(u | poset.pseudo_complement(u));
      }
    });
  }
  return {sets.begin(), sets.end()};
}

void check_filter(const Poset& poset, Mask g, const char* op) {
  if (!is_filter(poset, g))
    throw InputError(std::string(op) + ": " + poset.format(g) +
                     " is not a filter");
}

void check_generic(const Poset& poset, Mask g, const DenseFamily& family,
                   const char* op) {
  int missed = missed_dense_set(g, family);
  if (missed >= 0)
    throw InputError(std::string(op) + ": filter " + poset.format(g) +
                     " is not generic, it misses the dense set " +
                     poset.format(family.sets()[static_cast<size_t>(missed)]));
}

}  // namespace

Mask evaluate(const AtomicValuation& v, const Formula& sentence) {
  Evaluator ev(v);
  return ev.eval_sentence(sentence);
}

DenseFamily required_dense_family(const AtomicValuation& v,
                                  std::span<const Formula> formulas) {
  Evaluator ev(v);
  return DenseFamily::of(v.poset(), required_sets(v, ev, formulas));
}

std::vector<Formula> generated_sentences(const Signature& sig,
                                         std::span<const Formula> formulas) {
  std::map<std::string, Formula> out;
  for (const Formula& psi : subformula_closure(formulas))
    for (Formula& g : ground_instances(sig, psi)) out.emplace(g.print(), g);
  std::vector<Formula> result;
  result.reserve(out.size());
  for (auto& [text, f] : out) result.push_back(std::move(f));
  return result;
}

bool g_models(const AtomicValuation& v, Mask filter, const Formula& sentence) {
  const Poset& poset = v.poset();
  check_filter(poset, filter, "g_models");
  Formula fs[] = {sentence};
  check_generic(poset, filter, required_dense_family(v, fs), "g_models");
  return (evaluate(v, sentence) & filter) != 0;
}

GenericModel::GenericModel(Signature sig, Mask filter, std::set<GroundAtom> truths)
    : sig_(std::move(sig)), filter_(filter), truths_(std::move(truths)) {}

namespace {

bool satisfies_rec(const Signature& sig, const std::set<GroundAtom>& truths,
                   const Formula& f,
                   std::vector<std::pair<const std::string*, int>>& env) {
  switch (f.kind()) {
    case Formula::Kind::atom: {
      GroundAtom atom{sig.relation_index(f.relation()), {}};
      for (const auto& t : f.args()) {
        if (t.is_name) {
          atom.names.push_back(sig.name_index(t.text));
        } else {
          int value = -1;
          for (auto it = env.rbegin(); it != env.rend(); ++it)
            if (*it->first == t.text) {
              value = it->second;
              break;
            }
          if (value < 0)
            throw InputError("model: unbound variable '" + t.text + "'");
          atom.names.push_back(value);
        }
      }
      return truths.count(atom) > 0;
    }
    case Formula::Kind::negation:
      return !satisfies_rec(sig, truths, f.child(), env);
    case Formula::Kind::conjunction:
      return satisfies_rec(sig, truths, f.left(), env) &&
             satisfies_rec(sig, truths, f.right(), env);
    case Formula::Kind::disjunction:
      return satisfies_rec(sig, truths, f.left(), env) ||
             satisfies_rec(sig, truths, f.right(), env);
    case Formula::Kind::implication:
      return !satisfies_rec(sig, truths, f.left(), env) ||
             satisfies_rec(sig, truths, f.right(), env);
    case Formula::Kind::equivalence:
      return satisfies_rec(sig, truths, f.left(), env) ==
             satisfies_rec(sig, truths, f.right(), env);
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      bool universal = f.kind() == Formula::Kind::forall;
      Formula body = f.body();
      for (int n = 0; n < static_cast<int>(sig.names().size()); ++n) {
        env.emplace_back(&f.var(), n);
        bool holds = satisfies_rec(sig, truths, body, env);
        env.pop_back();
        if (holds != universal) return !universal;
      }
      return universal;
    }
  }
  return false;
}

}  // namespace

bool GenericModel::satisfies(const Formula& sentence) const {
  if (!sentence.is_sentence())
    throw InputError("model: formula has free variable(s): " + sentence.print());
  std::vector<std::pair<const std::string*, int>> env;
  return satisfies_rec(sig_, truths_, sentence, env);
}

GenericModel model_of(const AtomicValuation& v, Mask filter) {
  const Poset& poset = v.poset();
  check_filter(poset, filter, "model_of");
  std::set<Mask> sets;
  std::set<GroundAtom> truths;
  auto atoms = v.ground_atoms();
  for (const auto& atom : atoms) {
    Mask m = v.atom_value(atom);
    sets.insert(m | poset.pseudo_complement(m));
  }
  check_generic(poset, filter,
                DenseFamily::of(poset, {sets.begin(), sets.end()}), "model_of");
  for (const auto& atom : atoms)
    if ((v.atom_value(atom) & filter) != 0) truths.insert(atom);
  return GenericModel(v.signature(), filter, std::move(truths));
}

bool forces(const AtomicValuation& v, int p, const Formula& sentence) {
  if (p < 0 || p >= v.poset().size())
    throw InputError("forces: point index out of range");
  return (evaluate(v, sentence) >> p) & 1;
}

bool forces_semantic(const AtomicValuation& v, int p, const Formula& sentence,
                     int cap) {
  Formula fs[] = {sentence};
  return forces_semantic_with(v, p, sentence, required_dense_family(v, fs), cap);
}

bool forces_semantic_with(const AtomicValuation& v, int p,
                          const Formula& sentence, const DenseFamily& family,
                          int cap) {
  const Poset& poset = v.poset();
  if (poset != family.poset())
    throw InputError("forces: dense family has a different carrier");
  if (p < 0 || p >= poset.size())
    throw InputError("forces: point index out of range");
  Formula fs[] = {sentence};
  auto required = required_dense_family(v, fs);
  for (Mask set : required.sets())
    if (!family.contains(set))
      throw InputError("forces: dense family lacks the required set " +
                       poset.format(set));
  Mask value = evaluate(v, sentence);
  for (Mask g : enumerate_generic(poset, family, cap))
    if (((g >> p) & 1) && (value & g) == 0) return false;
  return true;
}

LemmaReport verify_forcing_lemma(const AtomicValuation& v,
                                 std::span<const Formula> formulas, int cap) {
  const Poset& poset = v.poset();
  Evaluator ev(v);
  const auto filters = enumerate_filters(poset, cap);
  for (const Formula& phi : generated_sentences(v.signature(), formulas)) {
    Mask value = ev.eval(phi);
    Formula fs[] = {phi};
    auto family = DenseFamily::of(poset, required_sets(v, ev, fs));
    // Partition the filters once per sentence.
    std::vector<Mask> generic;
    for (Mask g : filters)
      if (missed_dense_set(g, family) < 0) generic.push_back(g);
    for (int p = 0; p < poset.size(); ++p) {
      bool semantic = true;
      for (Mask g : generic)
        if (((g >> p) & 1) && (value & g) == 0) {
          semantic = false;
          break;
        }
      bool definable = (value >> p) & 1;
      if (semantic != definable)
        return {false, "point '" + poset.element(p) + "', sentence '" +
                           phi.print() + "'"};
    }
  }
  return {};
}

LemmaReport verify_truth_lemma(const AtomicValuation& v,
                               std::span<const Formula> formulas, int cap) {
  const Poset& poset = v.poset();
  Evaluator ev(v);
  auto family = DenseFamily::of(poset, required_sets(v, ev, formulas));
  const auto generic = enumerate_generic(poset, family, cap);
  for (const Formula& phi : generated_sentences(v.signature(), formulas)) {
    // The set of forcing points, assembled through the public single-point
    // route so both code paths are exercised.
    Mask forcing = 0;
    for (int p = 0; p < poset.size(); ++p)
      if (forces(v, p, phi)) forcing |= Mask{1} << p;
    for (Mask g : generic) {
      bool models = (ev.eval(phi) & g) != 0;
      bool forced = (forcing & g) != 0;
      if (models != forced)
        return {false, "filter " + poset.format(g) + ", sentence '" +
                           phi.print() + "'"};
    }
  }
  return {};
}

LemmaReport verify_quantifier_lemma(const AtomicValuation& v,
                                    std::span<const Formula> formulas, int cap) {
  const Poset& poset = v.poset();
  const int name_count = static_cast<int>(v.signature().names().size());
  Evaluator ev(v);
  auto family = DenseFamily::of(poset, required_sets(v, ev, formulas));
  const auto generic = enumerate_generic(poset, family, cap);
  for (const Formula& phi : generated_sentences(v.signature(), formulas)) {
    if (!phi.is_quantifier()) continue;
    bool universal = phi.kind() == Formula::Kind::forall;
    Formula body = phi.body();
    for (Mask g : generic) {
      bool whole = (ev.eval(phi) & g) != 0;
      bool witnessed = universal;
      for (int n = 0; n < name_count; ++n) {
        ev.push(phi.var(), n);
        bool instance = (ev.eval(body) & g) != 0;
        ev.pop();
        if (instance != universal) {
          witnessed = !universal;
          break;
        }
      }
      if (whole != witnessed)
        return {false, "filter " + poset.format(g) + ", sentence '" +
                           phi.print() + "'"};
    }
  }
  return {};
}

}  // namespace forcinglab
