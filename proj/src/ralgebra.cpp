#include "forcinglab/ralgebra.hpp"

#include <algorithm>

#include "forcinglab/errors.hpp"

namespace forcinglab {

std::string ByrneReport::describe(const Poset& p) const {
  if (pass) return "pass";
  std::string out = law + ":";
  for (Mask m : witness) out += " " + p.format(m);
  return out;
}

RegularAlgebra RegularAlgebra::build(Poset poset, int cap) {
  if (poset.size() > cap)
    throw ResourceError("algebra: poset has " + std::to_string(poset.size()) +
                        " elements, exceeding the exhaustion cap of " +
                        std::to_string(cap));
  std::vector<Mask> universe;
  const Mask full = poset.full();
  for (Mask x = 0;; ++x) {
    if (poset.is_down_closed(x) && poset.regularize(x) == x)
      universe.push_back(x);
    if (x == full) break;
  }
  return RegularAlgebra(std::move(poset), std::move(universe));
}

bool RegularAlgebra::contains(Mask x) const {
  return std::binary_search(universe_.begin(), universe_.end(), x);
}

int RegularAlgebra::index_of(Mask x) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), x);
  if (it == universe_.end() || *it != x)
    throw InputError("algebra: " + poset_.format(x & poset_.full()) +
                     " is not an element of this algebra");
  return static_cast<int>(it - universe_.begin());
}

Mask RegularAlgebra::checked(Mask x) const {
  index_of(x);
  return x;
}

Mask RegularAlgebra::meet(Mask a, Mask b) const { return checked(a) & checked(b); }

Mask RegularAlgebra::join(Mask a, Mask b) const {
  return poset_.regularize(checked(a) | checked(b));
}

Mask RegularAlgebra::complement(Mask a) const {
  return poset_.pseudo_complement(checked(a));
}

Mask RegularAlgebra::sup(std::span<const Mask> family) const {
  Mask u = 0;
  for (Mask m : family) u |= checked(m);
  return poset_.regularize(u);
}

Mask RegularAlgebra::inf(std::span<const Mask> family) const {
  Mask u = one();
  for (Mask m : family) u &= checked(m);
  return u;
}

Mask RegularAlgebra::embed(int p) const {
  if (auto w = poset_.separativity_witness())
    throw InputError("algebra: carrier is not separative (witness '" +
                     poset_.element(*w) + "'), so p -> p-down does not embed");
  return poset_.below(p);
}

namespace {
// Through a function so the compiler does not fold the law checks away.
Mask meet_raw(Mask a, Mask b) { return a & b; }
}  // namespace

ByrneReport RegularAlgebra::byrne_check() const {
  // Meet is a semilattice operation and the universe is closed under it.
  for (Mask a : universe_) {
    if (meet_raw(a, a) != a) return {false, "meet not idempotent", {a}};
    for (Mask b : universe_) {
      if (!contains(meet_raw(a, b)))
        return {false, "universe not closed under meet", {a, b}};
      if (meet_raw(a, b) != meet_raw(b, a))
        return {false, "meet not commutative", {a, b}};
      for (Mask c : universe_)
        if (meet_raw(meet_raw(a, b), c) != meet_raw(a, meet_raw(b, c)))
          return {false, "meet not associative", {a, b, c}};
    }
  }
  if (complement(zero()) == zero())
    return {false, "zero equals its complement", {zero()}};
  // X /\ Y' = 0  iff  X /\ Y = X.
  for (Mask x : universe_)
    for (Mask y : universe_) {
      bool lhs = meet_raw(x, complement(y)) == 0;
      bool rhs = meet_raw(x, y) == x;
      if (lhs != rhs) return {false, "Byrne biconditional fails", {x, y}};
    }
  return {};
}

EmbeddingReport RegularAlgebra::embedding_check() const {
  if (auto w = poset_.separativity_witness())
    throw InputError("algebra: carrier is not separative (witness '" +
                     poset_.element(*w) + "')");
  const int n = poset_.size();
  for (int p = 0; p < n; ++p)
    for (int q = 0; q < n; ++q) {
      bool order = poset_.leq(p, q);
      bool image = leq(poset_.below(p), poset_.below(q));
      if (order != image)
        return {false, "not an order-embedding at ('" + poset_.element(p) +
                           "', '" + poset_.element(q) + "')"};
    }
  for (Mask u : universe_) {
    if (u == 0) continue;
    bool hit = false;
    for (int p = 0; p < n && !hit; ++p)
      if (leq(poset_.below(p), u)) hit = true;
    if (!hit)
      return {false, "image not dense below " + poset_.format(u)};
  }
  return {};
}

}  // namespace forcinglab
