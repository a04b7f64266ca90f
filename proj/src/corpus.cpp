#include "forcinglab/corpus.hpp"

#include <map>

#include "forcinglab/errors.hpp"

namespace forcinglab::corpus {

// splitmix64; small, portable, and plenty for corpus sampling.
Rng::Rng(std::uint64_t seed) : state_(seed + 0x9e3779b97f4a7c15ULL) {}

std::uint64_t Rng::below(std::uint64_t n) {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return n == 0 ? 0 : z % n;
}

namespace {

std::vector<std::string> labels(const char* prefix, int n) {
  std::vector<std::string> out;
  out.reserve(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) out.push_back(prefix + std::to_string(i));
  return out;
}

}  // namespace

std::vector<Poset> enumerate_posets(int n) {
  if (n < 1) throw InputError("corpus: poset size must be at least 1");
  if (n > 5)
    throw ResourceError("corpus: exhaustive poset enumeration is capped at 5 elements");
  auto names = labels("e", n);

  // Scan all irreflexive digraphs on the off-diagonal pairs and keep the
  // strict orders (transitive and antisymmetric).
  std::vector<std::pair<int, int>> slots;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);

  std::vector<Poset> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  std::vector<std::vector<bool>> rel(static_cast<size_t>(n),
                                     std::vector<bool>(static_cast<size_t>(n)));
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    for (size_t s = 0; s < slots.size(); ++s)
      rel[static_cast<size_t>(slots[s].first)][static_cast<size_t>(slots[s].second)] =
          (bits >> s) & 1;
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = 0; j < n && ok; ++j) {
        if (i != j && rel[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
            rel[static_cast<size_t>(j)][static_cast<size_t>(i)])
          ok = false;  // antisymmetry
        for (int k = 0; ok && k < n; ++k)
          if (rel[static_cast<size_t>(i)][static_cast<size_t>(j)] &&
              rel[static_cast<size_t>(j)][static_cast<size_t>(k)] &&
              !rel[static_cast<size_t>(i)][static_cast<size_t>(k)])
            ok = false;  // transitivity
      }
    if (!ok) continue;
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j && rel[static_cast<size_t>(i)][static_cast<size_t>(j)])
          pairs.emplace_back(names[static_cast<size_t>(i)],
                             names[static_cast<size_t>(j)]);
    out.push_back(Poset::from_generators(names, pairs));
  }
  return out;
}

std::vector<EpsStructure> enumerate_eps(int n) {
  if (n < 1) throw InputError("corpus: eps-structure size must be at least 1");
  if (n > 4)
    throw ResourceError("corpus: exhaustive eps enumeration is capped at 4 nodes");
  auto names = labels("x", n);
  std::vector<EpsStructure> out;
  const std::uint64_t total = std::uint64_t{1} << (n * n);
  out.reserve(total);
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    std::vector<std::pair<std::string, std::string>> pairs;
    for (int x = 0; x < n; ++x)
      for (int y = 0; y < n; ++y)
        if ((bits >> (x * n + y)) & 1)
          pairs.emplace_back(names[static_cast<size_t>(x)],
                             names[static_cast<size_t>(y)]);
    out.push_back(EpsStructure::create(names, pairs));
  }
  return out;
}

Poset random_poset(Rng& rng, int max_elements) {
  if (max_elements < 1) throw InputError("corpus: poset size must be at least 1");
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_elements)));
  auto names = labels("e", n);

  // A random ranking keeps the edge relation acyclic; transitive closure
  // happens at construction.
  std::vector<int> rank(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) rank[static_cast<size_t>(i)] = i;
  for (int i = n - 1; i > 0; --i) {
    int j = static_cast<int>(rng.below(static_cast<std::uint64_t>(i + 1)));
    std::swap(rank[static_cast<size_t>(i)], rank[static_cast<size_t>(j)]);
  }

  std::vector<std::pair<std::string, std::string>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rank[static_cast<size_t>(i)] < rank[static_cast<size_t>(j)] &&
          rng.chance(1, 3))
        pairs.emplace_back(names[static_cast<size_t>(i)],
                           names[static_cast<size_t>(j)]);
  return Poset::from_generators(names, pairs);
}

EpsStructure random_eps(Rng& rng, int max_nodes) {
  if (max_nodes < 1) throw InputError("corpus: eps size must be at least 1");
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes)));
  auto names = labels("x", n);
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (rng.chance(1, 3))
        pairs.emplace_back(names[static_cast<size_t>(x)],
                           names[static_cast<size_t>(y)]);
  return EpsStructure::create(names, pairs);
}

EpsStructure random_layered_eps(Rng& rng, int max_nodes) {
  if (max_nodes < 1) throw InputError("corpus: eps size must be at least 1");
  int n = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(max_nodes)));
  auto names = labels("x", n);
  std::vector<int> layer(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i)
    layer[static_cast<size_t>(i)] = 1 + static_cast<int>(rng.below(3));
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      if (layer[static_cast<size_t>(x)] < layer[static_cast<size_t>(y)] &&
          rng.chance(1, 2))
        pairs.emplace_back(names[static_cast<size_t>(x)],
                           names[static_cast<size_t>(y)]);
  return EpsStructure::create(names, pairs);
}

AtomicValuation random_valuation(Rng& rng, Signature sig,
                                 const RegularAlgebra& algebra) {
  const auto& universe = algebra.universe();
  std::map<GroundAtom, Mask> atoms;
  for (const auto& atom : all_ground_atoms(sig))
    atoms[atom] = universe[rng.below(universe.size())];
  return AtomicValuation::create(std::move(sig), algebra, atoms);
}

}  // namespace forcinglab::corpus
