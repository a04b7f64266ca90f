#include "forcinglab/extensional.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "forcinglab/errors.hpp"

namespace forcinglab {

EpsStructure EpsStructure::create(
    std::vector<std::string> nodes,
    const std::vector<std::pair<std::string, std::string>>& eps) {
  if (nodes.size() > kMaxElements)
    throw ResourceError("eps-structure: at most " +
                        std::to_string(kMaxElements) + " nodes are supported");
  EpsStructure e;
  e.nodes_ = std::move(nodes);
  std::set<std::string> seen;
  for (const auto& n : e.nodes_)
    if (!seen.insert(n).second)
      throw InputError("eps-structure: duplicate node '" + n + "'");
  e.members_.assign(e.nodes_.size(), 0);
  for (const auto& [x, y] : eps) {
    int xi = e.index_of(x);
    int yi = e.index_of(y);
    e.members_[static_cast<size_t>(yi)] |= Mask{1} << xi;
  }
  return e;
}

int EpsStructure::index_of(const std::string& name) const {
  for (int i = 0; i < size(); ++i)
    if (nodes_[static_cast<size_t>(i)] == name) return i;
  throw InputError("eps-structure: unknown node '" + name + "'");
}

std::vector<std::pair<int, int>> EpsStructure::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int y = 0; y < size(); ++y)
    for_each_element(members_of(y), [&](int x) { out.emplace_back(x, y); });
  std::sort(out.begin(), out.end());
  return out;
}

int EpsStructure::pair_count() const {
  int c = 0;
  for (int y = 0; y < size(); ++y) c += std::popcount(members_of(y));
  return c;
}

Partition discrete_partition(int n) {
  Partition p(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<size_t>(i)] = i;
  return p;
}

bool same_block(const Partition& p, int x, int y) {
  return p[static_cast<size_t>(x)] == p[static_cast<size_t>(y)];
}

int block_count(const Partition& p) {
  int m = -1;
  for (int b : p) m = std::max(m, b);
  return m + 1;
}

bool partition_coarsens(const Partition& coarse, const Partition& fine) {
  for (size_t x = 0; x < fine.size(); ++x)
    for (size_t y = x + 1; y < fine.size(); ++y)
      if (fine[x] == fine[y] && coarse[x] != coarse[y]) return false;
  return true;
}

std::string format_partition(const EpsStructure& e, const Partition& p) {
  std::ostringstream os;
  for (int b = 0; b < block_count(p); ++b) {
    if (b > 0) os << ' ';
    os << '{';
    bool first = true;
    for (int i = 0; i < e.size(); ++i)
      if (p[static_cast<size_t>(i)] == b) {
        if (!first) os << ", ";
        first = false;
        os << e.node(i);
      }
    os << '}';
  }
  return os.str();
}

namespace {

// Canonicalizes an equivalence given as a "related" predicate.
template <typename Related>
Partition partition_from(int n, Related&& related) {
  Partition p(static_cast<size_t>(n), -1);
  int next = 0;
  for (int x = 0; x < n; ++x) {
    if (p[static_cast<size_t>(x)] >= 0) continue;
    p[static_cast<size_t>(x)] = next;
    for (int y = x + 1; y < n; ++y)
      if (p[static_cast<size_t>(y)] < 0 && related(x, y))
        p[static_cast<size_t>(y)] = next;
    ++next;
  }
  return p;
}

// expand[x] = union of the blocks met by the members of x.
std::vector<Mask> expanded_members(const EpsStructure& e, const Partition& r) {
  std::vector<Mask> block_mask(static_cast<size_t>(block_count(r)), 0);
  for (int i = 0; i < e.size(); ++i)
    block_mask[static_cast<size_t>(r[static_cast<size_t>(i)])] |= Mask{1} << i;
  std::vector<Mask> out(static_cast<size_t>(e.size()), 0);
  for (int y = 0; y < e.size(); ++y)
    for_each_element(e.members_of(y), [&](int x) {
      out[static_cast<size_t>(y)] |=
          block_mask[static_cast<size_t>(r[static_cast<size_t>(x)])];
    });
  return out;
}

}  // namespace

Partition successor_stage(const EpsStructure& e, const Partition& r) {
  const auto expand = expanded_members(e, r);
  return partition_from(e.size(), [&](int x, int y) {
    return (e.members_of(x) & ~expand[static_cast<size_t>(y)]) == 0 &&
           (e.members_of(y) & ~expand[static_cast<size_t>(x)]) == 0;
  });
}

StagedEquivalence sim_stages(const EpsStructure& e) {
  StagedEquivalence s;
  s.stages.push_back(discrete_partition(e.size()));
  const size_t bound =
      static_cast<size_t>(e.size()) * (static_cast<size_t>(e.size()) - 1) / 2 + 1;
  while (true) {
    Partition next = successor_stage(e, s.stages.back());
    if (next == s.stages.back()) break;
    s.stages.push_back(std::move(next));
    if (s.stages.size() > bound)
      throw Error("sim stages failed to reach a fixpoint within the bound");
  }
  return s;
}

namespace {

EpsStructure with_members(const EpsStructure& e, const std::vector<Mask>& members) {
  std::vector<std::pair<std::string, std::string>> pairs;
  for (int y = 0; y < e.size(); ++y)
    for_each_element(members[static_cast<size_t>(y)], [&](int x) {
      pairs.emplace_back(e.node(x), e.node(y));
    });
  return EpsStructure::create(e.nodes(), pairs);
}

std::vector<Mask> derived_members(const EpsStructure& e, const Partition& limit) {
  // x in y iff some x' ~ x has x' eps y: expand members through the blocks.
  const auto expand = expanded_members(e, limit);
  return expand;
}

}  // namespace

EpsStructure membership_from(const EpsStructure& e) {
  return with_members(e, derived_members(e, sim_stages(e).limit()));
}

EpsStructure eps_alpha(const EpsStructure& e, int k) {
  const auto staged = sim_stages(e);
  const size_t idx = std::min(static_cast<size_t>(std::max(k, 0)),
                              staged.stages.size() - 1);
  const Partition& r = staged.stages[idx];
  const auto expand = expanded_members(e, r);
  std::vector<Mask> members(static_cast<size_t>(e.size()), 0);
  for (int y = 0; y < e.size(); ++y)
    for (int y2 = 0; y2 < e.size(); ++y2)
      if (same_block(r, y, y2))
        members[static_cast<size_t>(y)] |= expand[static_cast<size_t>(y2)];
  return with_members(e, members);
}

NodePairReport check_E(const EpsStructure& e) {
  const Partition limit = sim_stages(e).limit();
  const auto in = derived_members(e, limit);
  std::vector<Mask> containers(static_cast<size_t>(e.size()), 0);
  for (int y = 0; y < e.size(); ++y)
    for_each_element(in[static_cast<size_t>(y)],
                     [&](int x) { containers[static_cast<size_t>(x)] |= Mask{1} << y; });
  for (int x = 0; x < e.size(); ++x)
    for (int y = x + 1; y < e.size(); ++y) {
      if (in[static_cast<size_t>(x)] != in[static_cast<size_t>(y)]) continue;
      if (containers[static_cast<size_t>(x)] != containers[static_cast<size_t>(y)])
        return {false, x, y, "equal derived members but different containers"};
      if (!same_block(limit, x, y))
        return {false, x, y, "equal derived members but not similar"};
    }
  return {};
}

bool is_well_founded(const EpsStructure& e) {
  // Acyclicity of the membership digraph, by three-color DFS.
  enum { unseen, active, done };
  std::vector<int> state(static_cast<size_t>(e.size()), unseen);
  std::vector<std::pair<int, Mask>> stack;
  for (int root = 0; root < e.size(); ++root) {
    if (state[static_cast<size_t>(root)] != unseen) continue;
    state[static_cast<size_t>(root)] = active;
    stack.emplace_back(root, e.members_of(root));
    while (!stack.empty()) {
      auto& [node, pending] = stack.back();
      if (pending == 0) {
        state[static_cast<size_t>(node)] = done;
        stack.pop_back();
        continue;
      }
      int next = std::countr_zero(pending);
      pending &= pending - 1;
      if (state[static_cast<size_t>(next)] == active) return false;
      if (state[static_cast<size_t>(next)] == unseen) {
        state[static_cast<size_t>(next)] = active;
        stack.emplace_back(next, e.members_of(next));
      }
    }
  }
  return true;
}

NodePairReport check_simulation(const EpsStructure& e) {
  const Partition limit = sim_stages(e).limit();
  const auto expand = expanded_members(e, limit);
  for (int y = 0; y < e.size(); ++y)
    for (int y2 = 0; y2 < e.size(); ++y2) {
      if (!same_block(limit, y, y2)) continue;
      // Every member of y must be matched, up to ~, inside y2.
      if ((e.members_of(y) & ~expand[static_cast<size_t>(y2)]) != 0) {
        int x = std::countr_zero(e.members_of(y) & ~expand[static_cast<size_t>(y2)]);
        return {false, x, y2,
                "'" + e.node(x) + "' eps '" + e.node(y) + "' has no similar member in '" +
                    e.node(y2) + "'"};
      }
    }
  return {};
}

Partition greatest_bisimulation(const EpsStructure& e) {
  // Downward iteration of the same successor operator, from one block.
  Partition r(static_cast<size_t>(e.size()), 0);
  while (true) {
    Partition next = successor_stage(e, r);
    if (next == r) return r;
    r = std::move(next);
  }
}

EpsStructure quotient(const EpsStructure& e, const Partition& p) {
  if (static_cast<int>(p.size()) != e.size())
    throw InputError("quotient: partition size does not match the structure");
  Partition succ = successor_stage(e, p);
  for (int x = 0; x < e.size(); ++x)
    for (int y = x + 1; y < e.size(); ++y)
      if (same_block(p, x, y) && !same_block(succ, x, y))
        throw InputError("quotient: partition does not respect membership at '" +
                         e.node(x) + "' and '" + e.node(y) + "'");

  const int blocks = block_count(p);
  std::vector<std::string> names(static_cast<size_t>(blocks));
  for (int i = e.size() - 1; i >= 0; --i)
    names[static_cast<size_t>(p[static_cast<size_t>(i)])] = e.node(i);

  const auto in = derived_members(e, sim_stages(e).limit());
  std::set<std::pair<int, int>> edges;
  for (int y = 0; y < e.size(); ++y)
    for_each_element(in[static_cast<size_t>(y)], [&](int x) {
      edges.emplace(p[static_cast<size_t>(x)], p[static_cast<size_t>(y)]);
    });
  std::vector<std::pair<std::string, std::string>> pairs;
  for (auto [bx, by] : edges)
    pairs.emplace_back(names[static_cast<size_t>(bx)], names[static_cast<size_t>(by)]);
  return EpsStructure::create(names, pairs);
}

}  // namespace forcinglab
