#include "forcinglab/poset.hpp"

#include <bit>
#include <set>
#include <sstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

Poset Poset::from_generators(
    std::vector<std::string> elements,
    const std::vector<std::pair<std::string, std::string>>& leq_pairs) {
  if (elements.empty())
    throw InputError("poset: the carrier must be non-empty");
  if (elements.size() > kMaxElements)
    throw ResourceError("poset: at most " + std::to_string(kMaxElements) +
                        " elements are supported, got " +
                        std::to_string(elements.size()));

  Poset p;
  p.elements_ = std::move(elements);
  const int n = p.size();

  std::set<std::string> seen;
  for (const auto& e : p.elements_)
    if (!seen.insert(e).second)
      throw InputError("poset: duplicate element '" + e + "'");

  // below_[b] starts as {b} plus the declared generators, then is closed
  // transitively (Warshall on bit rows).
  p.below_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i) p.below_[static_cast<size_t>(i)] |= Mask{1} << i;
  for (const auto& [lo, hi] : leq_pairs) {
    auto li = p.find(lo);
    auto hi_i = p.find(hi);
    if (!li) throw InputError("poset: unknown element '" + lo + "' in leq pair");
    if (!hi_i) throw InputError("poset: unknown element '" + hi + "' in leq pair");
    p.below_[static_cast<size_t>(*hi_i)] |= Mask{1} << *li;
  }
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if ((p.below_[static_cast<size_t>(i)] >> k) & 1)
        p.below_[static_cast<size_t>(i)] |= p.below_[static_cast<size_t>(k)];

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (p.leq(i, j) && p.leq(j, i))
        throw InputError("poset: cycle between '" + p.element(i) + "' and '" +
                         p.element(j) + "' violates antisymmetry");

  p.above_.assign(static_cast<size_t>(n), 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (p.leq(i, j)) p.above_[static_cast<size_t>(i)] |= Mask{1} << j;

  return p;
}

int Poset::index_of(const std::string& name) const {
  auto i = find(name);
  if (!i) throw InputError("poset: unknown element '" + name + "'");
  return *i;
}

std::optional<int> Poset::find(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[static_cast<size_t>(i)] == name) return i;
  return std::nullopt;
}

Mask Poset::up_closure(Mask x) const {
  check_mask(x);
  Mask out = 0;
  for_each_element(x, [&](int i) { out |= above_[static_cast<size_t>(i)]; });
  return out;
}

Mask Poset::down_closure(Mask x) const {
  check_mask(x);
  Mask out = 0;
  for_each_element(x, [&](int i) { out |= below_[static_cast<size_t>(i)]; });
  return out;
}

bool Poset::compatible(int p, int q) const {
  return (below_[static_cast<size_t>(p)] & below_[static_cast<size_t>(q)]) != 0;
}

std::optional<int> Poset::separativity_witness() const {
  for (int p = 0; p < size(); ++p)
    if (regularize(below(p)) != below(p)) return p;
  return std::nullopt;
}

Mask Poset::mask_of(std::span<const std::string> names) const {
  Mask m = 0;
  for (const auto& name : names) m |= Mask{1} << index_of(name);
  return m;
}

std::vector<std::string> Poset::names_of(Mask x) const {
  check_mask(x);
  std::vector<std::string> out;
  for_each_element(x, [&](int i) { out.push_back(element(i)); });
  return out;
}

std::string Poset::format(Mask x) const {
  check_mask(x);
  std::ostringstream os;
  os << '{';
  bool first = true;
  for_each_element(x, [&](int i) {
    if (!first) os << ", ";
    first = false;
    os << element(i);
  });
  os << '}';
  return os.str();
}

void Poset::check_mask(Mask x) const {
  if ((x & ~full()) != 0)
    throw InputError("poset: set refers to elements outside the carrier");
}

}  // namespace forcinglab
