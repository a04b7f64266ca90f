// Shared scaffolding for the unit and acceptance suites.
#pragma once

#include <vector>

#include "forcinglab/bnames.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/extensional.hpp"

namespace helpers {

using namespace forcinglab;

/// All canonical partitions of n elements (Bell(n) of them).
inline void partitions_rec(int n, int at, Partition& current, int used,
                           std::vector<Partition>& out) {
  if (at == n) {
    out.push_back(current);
    return;
  }
  for (int b = 0; b <= used; ++b) {
    current[static_cast<size_t>(at)] = b;
    partitions_rec(n, at + 1, current, std::max(used, b + 1), out);
  }
}

inline std::vector<Partition> all_partitions(int n) {
  std::vector<Partition> out;
  Partition current(static_cast<size_t>(n), 0);
  partitions_rec(n, 0, current, 0, out);
  return out;
}

/// Encodes an acyclic eps-structure as a name system: one distinct stage per
/// node in topological order, tables valued one on the eps-members. Returns
/// the system; name ids are the node names.
inline NameSystem system_from_dag(const EpsStructure& e, const RegularAlgebra& alg) {
  std::vector<int> stage(static_cast<size_t>(e.size()), 0);
  for (int next = 1; next <= e.size(); ++next) {
    int picked = -1;
    for (int i = 0; i < e.size() && picked < 0; ++i) {
      if (stage[static_cast<size_t>(i)] != 0) continue;
      bool ready = true;
      for_each_element(e.members_of(i), [&](int x) {
        if (stage[static_cast<size_t>(x)] == 0) ready = false;
      });
      if (ready) picked = i;
    }
    if (picked < 0) throw Error("system_from_dag needs an acyclic structure");
    stage[static_cast<size_t>(picked)] = next;
  }
  std::vector<RawName> raws;
  for (int i = 0; i < e.size(); ++i) {
    RawName raw{e.node(i), stage[static_cast<size_t>(i)], {}};
    for_each_element(e.members_of(i),
                     [&](int x) { raw.table.emplace_back(e.node(x), alg.one()); });
    raws.push_back(std::move(raw));
  }
  return NameSystem::create(alg, raws);
}

}  // namespace helpers
