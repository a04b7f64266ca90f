#pragma once

#include <string>
#include <vector>

#include "forcinglab/poset.hpp"

namespace forcinglab {

/// A finite list of dense subsets of a fixed carrier. Density of every
/// member is validated at construction.
class DenseFamily {
public:
  static DenseFamily of(const Poset& poset, std::vector<Mask> sets);
  static DenseFamily empty(const Poset& poset) { return of(poset, {}); }

  const Poset& poset() const { return poset_; }
  const std::vector<Mask>& sets() const { return sets_; }
  bool contains(Mask s) const;

private:
  DenseFamily(Poset poset, std::vector<Mask> sets)
      : poset_(std::move(poset)), sets_(std::move(sets)) {}
  Poset poset_;
  std::vector<Mask> sets_;
};

/// Non-empty, up-closed, and every pair of members has a lower bound in G.
bool is_filter(const Poset& poset, Mask g);

/// G meets every set of the family.
bool is_generic(const Poset& poset, Mask filter, const DenseFamily& family);

/// First dense set of the family missed by the filter, or -1.
int missed_dense_set(Mask filter, const DenseFamily& family);

/// The Rasiowa-Sikorski construction: starting from p, descend through the
/// listed dense sets, always taking the first candidate in carrier order;
/// the up-closure of the resulting chain is a D-generic filter through p.
Mask rasiowa_sikorski(const Poset& poset, int p, const DenseFamily& family);

std::vector<Mask> enumerate_filters(const Poset& poset, int cap = kDefaultScanCap);
std::vector<Mask> enumerate_generic(const Poset& poset, const DenseFamily& family,
                                    int cap = kDefaultScanCap);

/// Every dense subset of the carrier, in canonical order.
DenseFamily all_dense_sets(const Poset& poset, int cap = kDefaultScanCap);

struct SpanReport {
  bool pass = true;
  Mask set = 0;     // down-closed X of the counterexample
  Mask filter = 0;  // filter meeting both X and X'
};

/// No filter meets both X and X' for any down-closed X.
SpanReport no_filter_spans_complements(const Poset& poset, int cap = kDefaultScanCap);

}  // namespace forcinglab
