#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace forcinglab {

// Subsets of a poset's carrier are bitmasks: bit i stands for the element at
// index i of the carrier list. The carrier order is fixed at construction and
// is the tie-breaking order everywhere.
using Mask = std::uint64_t;

inline constexpr int kMaxElements = 64;

// Default bound on |P| for operations that scan all 2^|P| subsets.
inline constexpr int kDefaultScanCap = 12;

/// A finite poset, stored as the full reflexive-transitive order relation.
/// Input may be any set of generator pairs; the closure is computed at
/// construction and cycles (antisymmetry violations) are rejected.
class Poset {
public:
  static Poset from_generators(
      std::vector<std::string> elements,
      const std::vector<std::pair<std::string, std::string>>& leq_pairs);

  int size() const { return static_cast<int>(elements_.size()); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int i) const { return elements_[static_cast<size_t>(i)]; }

  /// Index of a named element; throws InputError for unknown names.
  int index_of(const std::string& name) const;
  std::optional<int> find(const std::string& name) const;

  bool leq(int a, int b) const { return (below_[static_cast<size_t>(b)] >> a) & 1; }
  Mask full() const { return size() == 64 ? ~Mask{0} : (Mask{1} << size()) - 1; }
  /// p-downarrow and p-uparrow as masks (both include p).
  Mask below(int p) const { return below_[static_cast<size_t>(p)]; }
  Mask above(int p) const { return above_[static_cast<size_t>(p)]; }

  Mask up_closure(Mask x) const;
  Mask down_closure(Mask x) const;
  bool is_up_closed(Mask x) const { return up_closure(x) == x; }
  bool is_down_closed(Mask x) const { return down_closure(x) == x; }

  /// D is dense when every element has a lower bound in D, i.e. D-up = P.
  bool is_dense(Mask d) const { return up_closure(d) == full(); }

  /// X' = P minus X-up: the largest down-closed set incompatible with X.
  Mask pseudo_complement(Mask x) const { return full() & ~up_closure(x); }

  /// X'': the closure operator whose fixed points are the regular sets.
  Mask regularize(Mask x) const { return pseudo_complement(pseudo_complement(x)); }

  /// Regular = down-closed and a fixed point of regularize.
  bool is_regular(Mask x) const { return is_down_closed(x) && regularize(x) == x; }

  bool compatible(int p, int q) const;

  /// First element (carrier order) whose principal down-set is not regular;
  /// nullopt means the poset is separative.
  std::optional<int> separativity_witness() const;

  Mask mask_of(std::span<const std::string> names) const;
  std::vector<std::string> names_of(Mask x) const;
  /// Renders a mask as "{a, b}" with members in carrier order.
  std::string format(Mask x) const;

  /// Throws InputError when a mask has bits outside the carrier.
  void check_mask(Mask x) const;

  bool operator==(const Poset&) const = default;

private:
  Poset() = default;

  std::vector<std::string> elements_;
  std::vector<Mask> below_;  // below_[p] = mask of q with q <= p
  std::vector<Mask> above_;  // above_[p] = mask of q with p <= q
};

/// Iterates p over the set bits of a mask.
template <typename Fn>
void for_each_element(Mask m, Fn&& fn) {
  while (m != 0) {
    int i = std::countr_zero(m);
    fn(i);
    m &= m - 1;
  }
}

}  // namespace forcinglab
