#pragma once

#include <span>
#include <string>
#include <vector>

#include "forcinglab/poset.hpp"

namespace forcinglab {

struct ByrneReport {
  bool pass = true;
  std::string law;            // violated law, empty on pass
  std::vector<Mask> witness;  // offending elements in canonical order
  std::string describe(const Poset& p) const;
};

struct EmbeddingReport {
  bool pass = true;
  std::string detail;  // counterexample description, empty on pass
};

/// The complete Boolean algebra of regular down-closed subsets of a finite
/// poset. The universe is materialized by an exhaustive subset scan, so
/// non-separative posets are fully supported; separativity is only required
/// by embed().
class RegularAlgebra {
public:
  /// Scans all 2^|P| subsets; |P| must not exceed the cap.
  static RegularAlgebra build(Poset poset, int cap = kDefaultScanCap);

  const Poset& poset() const { return poset_; }
  /// All regular sets in canonical (ascending mask) order.
  const std::vector<Mask>& universe() const { return universe_; }
  Mask zero() const { return 0; }
  Mask one() const { return poset_.full(); }

  bool contains(Mask x) const;
  /// Position in the universe; throws InputError for foreign elements.
  int index_of(Mask x) const;

  Mask meet(Mask a, Mask b) const;
  Mask join(Mask a, Mask b) const;
  Mask complement(Mask a) const;
  /// Least upper bound of a family: the regularized union. Empty family
  /// gives zero.
  Mask sup(std::span<const Mask> family) const;
  /// Greatest lower bound: plain intersection. Empty family gives one.
  Mask inf(std::span<const Mask> family) const;
  bool leq(Mask a, Mask b) const { return (a & ~b) == 0; }

  /// a -> b, i.e. complement(a) joined with b.
  Mask implies(Mask a, Mask b) const { return join(complement(a), b); }

  /// The embedding p -> p-down. Requires a separative carrier.
  Mask embed(int p) const;

  /// Semilattice laws, 0 != 0', and Byrne's biconditional
  /// (X /\ Y' = 0 iff X /\ Y = X) over the whole universe.
  ByrneReport byrne_check() const;

  /// Order-embedding (p <= q iff p-down subset of q-down) and dense image
  /// (every nonzero regular set contains some p-down).
  EmbeddingReport embedding_check() const;

private:
  RegularAlgebra(Poset poset, std::vector<Mask> universe)
      : poset_(std::move(poset)), universe_(std::move(universe)) {}
  Mask checked(Mask x) const;

  Poset poset_;
  std::vector<Mask> universe_;
};

}  // namespace forcinglab
