#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forcinglab/ralgebra.hpp"

namespace forcinglab {

/// A Boolean-valued name: created at a stage, its table maps names of
/// strictly earlier stages into the algebra. Entries with value zero are
/// normalized away, so equal tables at equal stages coincide.
struct BName {
  std::string id;
  int stage = 1;
  std::vector<std::pair<int, Mask>> table;  // sorted by name index, values nonzero

  Mask lookup(int name_index) const;
};

/// Raw form used for construction and file ingestion.
struct RawName {
  std::string id;
  int stage = 1;
  std::vector<std::pair<std::string, Mask>> table;
};

/// A closed finite family of Boolean-valued names over one algebra. The
/// listing order is the deterministic order for all joins and meets.
class NameSystem {
public:
  static NameSystem create(RegularAlgebra algebra, std::span<const RawName> names,
                           bool regularize_inputs = false);

  /// The full hierarchy: stage 1 holds the empty name, stage k+1 adds every
  /// function from the earlier names into the algebra. Ids are canonical
  /// "n<stage>.<index>" strings. Per-stage and total counts are capped.
  static NameSystem hierarchy(RegularAlgebra algebra, int max_stage,
                              long long cap);

  const RegularAlgebra& algebra() const { return algebra_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<BName>& names() const { return names_; }
  const BName& name(int i) const { return names_[static_cast<size_t>(i)]; }
  int index_of(const std::string& id) const;
  int max_stage() const;

  /// tau's table value at sigma when sigma is created before tau, zero
  /// otherwise.
  Mask eps_value(int sigma, int tau) const;

private:
  NameSystem(RegularAlgebra algebra, std::vector<BName> names)
      : algebra_(std::move(algebra)), names_(std::move(names)) {}
  RegularAlgebra algebra_;
  std::vector<BName> names_;
};

/// The staged Boolean-valued similarity. Stage 0 is one on the diagonal and
/// zero elsewhere; each next stage requires every eps-member of one name to
/// be matched, up to the previous stage, inside the other, both ways. The
/// list stops at the first fixpoint, which is [[~]].
class BoolSimStages {
public:
  int stage_count() const { return static_cast<int>(stages_.size()); }
  Mask at(int stage, int i, int j) const {
    return stages_[static_cast<size_t>(stage)]
                  [static_cast<size_t>(i) * n_ + static_cast<size_t>(j)];
  }
  Mask limit(int i, int j) const { return at(stage_count() - 1, i, j); }

private:
  friend BoolSimStages bool_sim_stages(const NameSystem&);
  size_t n_ = 0;
  std::vector<std::vector<Mask>> stages_;
};

BoolSimStages bool_sim_stages(const NameSystem& s);

struct TripleReport {
  bool pass = true;
  int tau = -1, tau2 = -1, sigma = -1;
};

/// [[tau ~ tau']] <= [[sigma eps tau -> (exists sigma' eps tau')
/// (sigma ~ sigma')]] for all triples, with ~ read at the fixpoint.
TripleReport limit_inequality_check(const NameSystem& s);

/// [[sigma in tau]]: sup over sigma' of [[sigma ~ sigma']] /\ eps-value.
Mask bool_membership(const NameSystem& s, int sigma, int tau);
Mask bool_membership(const NameSystem& s, const BoolSimStages& sims, int sigma,
                     int tau);

/// sigma' <= sigma: every eps-value of sigma' is below the one of sigma.
bool subname_leq(const NameSystem& s, int sub, int super);

/// A copy of the system extended, at a fresh top stage, with the name whose
/// table is one exactly on the subnames of sigma. Returns the new system and
/// the index of the added name.
std::pair<NameSystem, int> power_name(const NameSystem& s, int sigma);

enum class SubsetReading {
  membership,  // [[sigma' subset sigma]] via Boolean-valued membership
  subname,     // the eps-level subname order, as a crisp 0/1 value
};

struct PowerAxiomReport {
  Mask value = 0;
  bool pass = false;
  std::string tau_id;
  SubsetReading reading = SubsetReading::membership;
  // The quantifier runs over the names of the extended finite system only.
  std::string scope = "restricted-universe";
};

/// Builds the power name of sigma and evaluates, in the extended system,
/// the inf over all names sigma' of [[sigma' in tau <-> sigma' subset
/// sigma]]. Passes iff the value is one.
PowerAxiomReport verify_power_axiom(const NameSystem& s, int sigma,
                                    SubsetReading reading = SubsetReading::membership);

}  // namespace forcinglab
