#include "forcinglab/filters.hpp"

#include "forcinglab/errors.hpp"

namespace forcinglab {

namespace {

void check_scan_cap(const Poset& poset, int cap, const char* op) {
  if (poset.size() > cap)
    throw ResourceError(std::string(op) + ": poset has " +
                        std::to_string(poset.size()) +
                        " elements, exceeding the exhaustion cap of " +
                        std::to_string(cap));
}

}  // namespace

DenseFamily DenseFamily::of(const Poset& poset, std::vector<Mask> sets) {
  for (Mask s : sets)
    if (!poset.is_dense(s))
      throw InputError("dense family: " + poset.format(s) + " is not dense");
  return DenseFamily(poset, std::move(sets));
}

bool DenseFamily::contains(Mask s) const {
  for (Mask d : sets_)
    if (d == s) return true;
  return false;
}

bool is_filter(const Poset& poset, Mask g) {
  poset.check_mask(g);
  if (g == 0) return false;
  if (!poset.is_up_closed(g)) return false;
  bool ok = true;
  for_each_element(g, [&](int p) {
    for_each_element(g, [&](int q) {
      if ((poset.below(p) & poset.below(q) & g) == 0) ok = false;
    });
  });
  return ok;
}

bool is_generic(const Poset& poset, Mask filter, const DenseFamily& family) {
  if (poset != family.poset())
    throw InputError("genericity: filter and dense family have different carriers");
  poset.check_mask(filter);
  return missed_dense_set(filter, family) < 0;
}

int missed_dense_set(Mask filter, const DenseFamily& family) {
  const auto& sets = family.sets();
  for (size_t i = 0; i < sets.size(); ++i)
    if ((filter & sets[i]) == 0) return static_cast<int>(i);
  return -1;
}

Mask rasiowa_sikorski(const Poset& poset, int p, const DenseFamily& family) {
  if (poset != family.poset())
    throw InputError("generic construction: dense family has a different carrier");
  if (p < 0 || p >= poset.size())
    throw InputError("generic construction: point index out of range");
  Mask chain = Mask{1} << p;
  int q = p;
  for (Mask d : family.sets()) {
    // Density guarantees a candidate below q; take the first in carrier order.
    Mask candidates = d & poset.below(q);
    q = std::countr_zero(candidates);
    chain |= Mask{1} << q;
  }
  return poset.up_closure(chain);
}

std::vector<Mask> enumerate_filters(const Poset& poset, int cap) {
  check_scan_cap(poset, cap, "filter enumeration");
  std::vector<Mask> out;
  const Mask full = poset.full();
  for (Mask g = 1;; ++g) {
    if (is_filter(poset, g)) out.push_back(g);
    if (g == full) break;
  }
  return out;
}

std::vector<Mask> enumerate_generic(const Poset& poset, const DenseFamily& family,
                                    int cap) {
  std::vector<Mask> out;
  for (Mask g : enumerate_filters(poset, cap))
    if (is_generic(poset, g, family)) out.push_back(g);
  return out;
}

DenseFamily all_dense_sets(const Poset& poset, int cap) {
  check_scan_cap(poset, cap, "dense-set enumeration");
  std::vector<Mask> sets;
  const Mask full = poset.full();
  for (Mask d = 0;; ++d) {
    if (poset.is_dense(d)) sets.push_back(d);
    if (d == full) break;
  }
  return DenseFamily::of(poset, std::move(sets));
}

SpanReport no_filter_spans_complements(const Poset& poset, int cap) {
  check_scan_cap(poset, cap, "complement-pair check");
  const auto filters = enumerate_filters(poset, cap);
  const Mask full = poset.full();
  for (Mask x = 0;; ++x) {
    if (poset.is_down_closed(x)) {
      const Mask xp = poset.pseudo_complement(x);
      for (Mask g : filters)
        if ((g & x) != 0 && (g & xp) != 0) return {false, x, g};
    }
    if (x == full) break;
  }
  return {};
}

}  // namespace forcinglab
