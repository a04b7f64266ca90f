#include "forcinglab/bnames.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "forcinglab/errors.hpp"

namespace forcinglab {

Mask BName::lookup(int name_index) const {
  for (const auto& [key, value] : table)
    if (key == name_index) return value;
  return 0;
}

NameSystem NameSystem::create(RegularAlgebra algebra,
                              std::span<const RawName> names,
                              bool regularize_inputs) {
  std::vector<BName> built;
  std::map<std::string, int> index;
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i].stage < 1)
      throw InputError("name system: name '" + names[i].id +
                       "' has stage below 1");
    if (!index.emplace(names[i].id, static_cast<int>(i)).second)
      throw InputError("name system: duplicate name id '" + names[i].id + "'");
  }

  std::set<std::pair<int, std::vector<std::pair<int, Mask>>>> contents;
  for (const auto& raw : names) {
    BName b{raw.id, raw.stage, {}};
    for (const auto& [key_id, value] : raw.table) {
      auto it = index.find(key_id);
      if (it == index.end())
        throw InputError("name system: name '" + raw.id +
                         "' references unknown name '" + key_id + "'");
      if (names[static_cast<size_t>(it->second)].stage >= raw.stage)
        throw InputError("name system: name '" + raw.id + "' references '" +
                         key_id + "', which is not created earlier");
      Mask m = value;
      if (regularize_inputs) m = algebra.poset().regularize(m);
      if (!algebra.contains(m))
        throw InputError("name system: value " +
                         algebra.poset().format(m & algebra.poset().full()) +
                         " of name '" + raw.id + "' at '" + key_id +
                         "' is not a regular set");
      if (m != 0) b.table.emplace_back(it->second, m);
    }
    std::sort(b.table.begin(), b.table.end());
    for (size_t k = 1; k < b.table.size(); ++k)
      if (b.table[k].first == b.table[k - 1].first)
        throw InputError("name system: name '" + raw.id +
                         "' lists a table key twice");
    if (!contents.emplace(b.stage, b.table).second)
      throw InputError("name system: '" + raw.id +
                       "' duplicates another name of the same stage and table");
    built.push_back(std::move(b));
  }
  return NameSystem(std::move(algebra), std::move(built));
}

NameSystem NameSystem::hierarchy(RegularAlgebra algebra, int max_stage,
                                 long long cap) {
  if (max_stage < 1)
    throw InputError("hierarchy: the number of stages must be at least 1");
  if (cap < 1) throw InputError("hierarchy: the cap must be positive");

  std::vector<BName> built;
  built.push_back(BName{"n1.0", 1, {}});
  const auto b = static_cast<long long>(algebra.universe().size());
  for (int stage = 2; stage <= max_stage; ++stage) {
    const auto base = static_cast<long long>(built.size());
    // Would-be per-stage count |B|^|N|, with overflow guarded.
    double bits = static_cast<double>(base) * std::log2(static_cast<double>(b));
    long long count = -1;
    if (bits < 62) {
      count = 1;
      for (long long i = 0; i < base; ++i) count *= b;
    }
    if (count < 0 || count > cap || base + count > cap) {
      std::string shown = count < 0 ? std::to_string(b) + "^" + std::to_string(base)
                                    : std::to_string(count);
      throw ResourceError("hierarchy: stage " + std::to_string(stage) +
                          " would create " + shown +
                          " names, exceeding the cap of " + std::to_string(cap));
    }
    for (long long m = 0; m < count; ++m) {
      BName name{"n" + std::to_string(stage) + "." + std::to_string(m), stage, {}};
      long long rest = m;
      for (long long j = 0; j < base; ++j) {
        Mask value = algebra.universe()[static_cast<size_t>(rest % b)];
        rest /= b;
        if (value != 0) name.table.emplace_back(static_cast<int>(j), value);
      }
      built.push_back(std::move(name));
    }
  }
  return NameSystem(std::move(algebra), std::move(built));
}

int NameSystem::index_of(const std::string& id) const {
  for (int i = 0; i < size(); ++i)
    if (names_[static_cast<size_t>(i)].id == id) return i;
  throw InputError("name system: unknown name '" + id + "'");
}

int NameSystem::max_stage() const {
  int m = 1;
  for (const auto& n : names_) m = std::max(m, n.stage);
  return m;
}

Mask NameSystem::eps_value(int sigma, int tau) const {
  if (sigma < 0 || sigma >= size() || tau < 0 || tau >= size())
    throw InputError("name system: name index out of range");
  const BName& t = names_[static_cast<size_t>(tau)];
  if (names_[static_cast<size_t>(sigma)].stage >= t.stage) return 0;
  return t.lookup(sigma);
}

BoolSimStages bool_sim_stages(const NameSystem& s) {
  const auto n = static_cast<size_t>(s.size());
  const RegularAlgebra& alg = s.algebra();

  BoolSimStages out;
  out.n_ = n;
  std::vector<Mask> stage(n * n, 0);
  for (size_t i = 0; i < n; ++i) stage[i * n + i] = alg.one();
  out.stages_.push_back(stage);

  // One direction of the successor: every eps-member of t1 is matched, up
  // to the previous stage, by an eps-member of t2. Tables only hold
  // earlier-stage keys, so they are exactly the nonzero eps-values.
  auto direction = [&](const std::vector<Mask>& prev, size_t t1, size_t t2) {
    Mask acc = alg.one();
    for (const auto& [s1, v1] : s.name(static_cast<int>(t1)).table) {
      Mask sup = 0;
      for (const auto& [s2, v2] : s.name(static_cast<int>(t2)).table)
        sup |= prev[static_cast<size_t>(s1) * n + static_cast<size_t>(s2)] & v2;
      acc &= alg.implies(v1, alg.poset().regularize(sup));
    }
    return acc;
  };

  const size_t bound = n * n + 2;
  while (true) {
    const auto& prev = out.stages_.back();
    std::vector<Mask> next(n * n, 0);
    for (size_t i = 0; i < n; ++i) {
      next[i * n + i] = alg.one();
      for (size_t j = i + 1; j < n; ++j) {
        Mask value = direction(prev, i, j) & direction(prev, j, i);
        next[i * n + j] = value;
        next[j * n + i] = value;
      }
    }
    if (next == prev) break;
    out.stages_.push_back(std::move(next));
    if (out.stages_.size() > bound)
      throw Error("boolean similarity failed to reach a fixpoint within the bound");
  }
  return out;
}

TripleReport limit_inequality_check(const NameSystem& s) {
  const RegularAlgebra& alg = s.algebra();
  const auto sims = bool_sim_stages(s);
  const int n = s.size();
  for (int tau = 0; tau < n; ++tau)
    for (int tau2 = 0; tau2 < n; ++tau2)
      for (int sigma = 0; sigma < n; ++sigma) {
        Mask sup = 0;
        for (int sigma2 = 0; sigma2 < n; ++sigma2)
          sup |= s.eps_value(sigma2, tau2) & sims.limit(sigma, sigma2);
        Mask rhs = alg.join(alg.complement(s.eps_value(sigma, tau)),
                            alg.poset().regularize(sup));
        if (!alg.leq(sims.limit(tau, tau2), rhs))
          return {false, tau, tau2, sigma};
      }
  return {};
}

Mask bool_membership(const NameSystem& s, int sigma, int tau) {
  return bool_membership(s, bool_sim_stages(s), sigma, tau);
}

Mask bool_membership(const NameSystem& s, const BoolSimStages& sims, int sigma,
                     int tau) {
  Mask sup = 0;
  for (int sigma2 = 0; sigma2 < s.size(); ++sigma2)
    sup |= sims.limit(sigma, sigma2) & s.eps_value(sigma2, tau);
  return s.algebra().poset().regularize(sup);
}

bool subname_leq(const NameSystem& s, int sub, int super) {
  for (int pi = 0; pi < s.size(); ++pi)
    if (!s.algebra().leq(s.eps_value(pi, sub), s.eps_value(pi, super)))
      return false;
  return true;
}

std::pair<NameSystem, int> power_name(const NameSystem& s, int sigma) {
  if (sigma < 0 || sigma >= s.size())
    throw InputError("power name: name index out of range");
  std::vector<RawName> raws;
  raws.reserve(static_cast<size_t>(s.size()) + 1);
  for (const auto& b : s.names()) {
    RawName raw{b.id, b.stage, {}};
    for (const auto& [key, value] : b.table)
      raw.table.emplace_back(s.name(key).id, value);
    raws.push_back(std::move(raw));
  }
  RawName tau{"pow(" + s.name(sigma).id + ")", s.max_stage() + 1, {}};
  for (int i = 0; i < s.size(); ++i)
    if (subname_leq(s, i, sigma))
      tau.table.emplace_back(s.name(i).id, s.algebra().one());
  for (const auto& b : s.names())
    if (b.id == tau.id)
      throw InputError("power name: id '" + tau.id + "' already exists");
  raws.push_back(std::move(tau));
  NameSystem extended = NameSystem::create(s.algebra(), raws);
  return {std::move(extended), s.size()};
}

PowerAxiomReport verify_power_axiom(const NameSystem& s, int sigma,
                                    SubsetReading reading) {
  auto [ext, tau] = power_name(s, sigma);
  const RegularAlgebra& alg = ext.algebra();
  const auto sims = bool_sim_stages(ext);
  const int n = ext.size();

  std::vector<Mask> member(static_cast<size_t>(n) * static_cast<size_t>(n), 0);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      member[static_cast<size_t>(a) * static_cast<size_t>(n) +
             static_cast<size_t>(b)] = bool_membership(ext, sims, a, b);
  auto in_val = [&](int a, int b) {
    return member[static_cast<size_t>(a) * static_cast<size_t>(n) +
                  static_cast<size_t>(b)];
  };

  auto subset = [&](int a, int b) {
    if (reading == SubsetReading::subname)
      return subname_leq(ext, a, b) ? alg.one() : alg.zero();
    Mask acc = alg.one();
    for (int pi = 0; pi < n; ++pi)
      acc &= alg.implies(in_val(pi, a), in_val(pi, b));
    return acc;
  };

  Mask value = alg.one();
  for (int cand = 0; cand < n; ++cand) {
    Mask in_tau = in_val(cand, tau);
    Mask sub = subset(cand, sigma);
    value &= alg.meet(alg.implies(in_tau, sub), alg.implies(sub, in_tau));
  }

  PowerAxiomReport report;
  report.value = value;
  report.pass = value == alg.one();
  report.tau_id = ext.name(tau).id;
  report.reading = reading;
  return report;
}

}  // namespace forcinglab
