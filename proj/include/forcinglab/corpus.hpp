#pragma once

#include <cstdint>
#include <vector>

#include "forcinglab/extensional.hpp"
#include "forcinglab/poset.hpp"
#include "forcinglab/ralgebra.hpp"
#include "forcinglab/semantics.hpp"

namespace forcinglab::corpus {

/// Deterministic generator: the engine is fully specified, and bounded
/// draws avoid the implementation-defined standard distributions so that
/// seeded output is identical everywhere.
class Rng {
public:
  explicit Rng(std::uint64_t seed);
  std::uint64_t below(std::uint64_t n);
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }

private:
  std::uint64_t state_;
};

/// All labeled posets on exactly n elements (e0, e1, ...), in canonical
/// order. Counts for n = 1..4: 1, 3, 19, 219.
std::vector<Poset> enumerate_posets(int n);

/// All eps-structures on exactly n nodes (x0, x1, ...): 2^(n*n) of them.
std::vector<EpsStructure> enumerate_eps(int n);

Poset random_poset(Rng& rng, int max_elements);
EpsStructure random_eps(Rng& rng, int max_nodes);
/// Acyclic and stage-graded: edges always go from lower to higher layers,
/// so the structure embeds as a Boolean-valued name system.
EpsStructure random_layered_eps(Rng& rng, int max_nodes);

AtomicValuation random_valuation(Rng& rng, Signature sig,
                                 const RegularAlgebra& algebra);

}  // namespace forcinglab::corpus
