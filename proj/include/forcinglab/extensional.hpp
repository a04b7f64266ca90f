#pragma once

#include <string>
#include <utility>
#include <vector>

#include "forcinglab/poset.hpp"

namespace forcinglab {

/// An arbitrary finite binary relation eps over named nodes. Nothing is
/// assumed: cycles and non-extensional configurations are the point.
class EpsStructure {
public:
  static EpsStructure create(std::vector<std::string> nodes,
                             const std::vector<std::pair<std::string, std::string>>& eps);

  int size() const { return static_cast<int>(nodes_.size()); }
  const std::vector<std::string>& nodes() const { return nodes_; }
  const std::string& node(int i) const { return nodes_[static_cast<size_t>(i)]; }
  int index_of(const std::string& name) const;

  bool eps(int x, int y) const { return (members_[static_cast<size_t>(y)] >> x) & 1; }
  /// Mask of x with x eps y.
  Mask members_of(int y) const { return members_[static_cast<size_t>(y)]; }
  std::vector<std::pair<int, int>> pairs() const;
  int pair_count() const;

  bool operator==(const EpsStructure&) const = default;

private:
  EpsStructure() = default;
  std::vector<std::string> nodes_;
  std::vector<Mask> members_;
};

/// An equivalence relation as canonical block ids: block(node 0) = 0 and
/// each later node either reuses an earlier block or opens the next id.
using Partition = std::vector<int>;

Partition discrete_partition(int n);
bool same_block(const Partition& p, int x, int y);
int block_count(const Partition& p);
/// Whether every block of fine is contained in a block of coarse.
bool partition_coarsens(const Partition& coarse, const Partition& fine);
std::string format_partition(const EpsStructure& e, const Partition& p);

/// The successor operator: relates y1 and y2 when every eps-member of one
/// is matched, up to the given relation, by an eps-member of the other.
Partition successor_stage(const EpsStructure& e, const Partition& r);

/// Stages of the staged similarity: index 0 is the discrete partition, each
/// next stage is the successor of the previous, and the list stops at the
/// first fixpoint, which is the limit.
struct StagedEquivalence {
  std::vector<Partition> stages;
  const Partition& limit() const { return stages.back(); }
};

StagedEquivalence sim_stages(const EpsStructure& e);

/// The derived membership: x in y iff some x' ~ x has x' eps y, with ~ the
/// limit of sim_stages. Always contains eps.
EpsStructure membership_from(const EpsStructure& e);

/// The two-sided stage-k approximation: x in_k y iff x' eps y' for some
/// x' ~k x and y' ~k y. k is clamped to the fixpoint stage.
EpsStructure eps_alpha(const EpsStructure& e, int k);

struct NodePairReport {
  bool pass = true;
  int x = -1, y = -1;
  std::string detail;
};

/// Quasi-extensionality of the derived structure: nodes with the same
/// derived members sit in the same derived containers, and are ~-equivalent.
NodePairReport check_E(const EpsStructure& e);

/// No infinite descending chain; on a finite carrier, acyclicity.
bool is_well_founded(const EpsStructure& e);

/// eps is a simulation for ~: x eps y and y' ~ y yield some x' ~ x with
/// x' eps y'.
NodePairReport check_simulation(const EpsStructure& e);

/// Coarsest equivalence matching members both ways: iterate the successor
/// operator downward from the one-block partition to its fixpoint.
Partition greatest_bisimulation(const EpsStructure& e);

/// Collapse to blocks (named by least member) with the derived membership
/// as edges. The partition must respect the membership structure.
EpsStructure quotient(const EpsStructure& e, const Partition& p);

}  // namespace forcinglab
