#pragma once

#include <optional>

#include "forcinglab/bnames.hpp"
#include "forcinglab/extensional.hpp"
#include "forcinglab/poset.hpp"
#include "forcinglab/semantics.hpp"

namespace forcinglab::fixtures {

/// Canonical posets used throughout the test suites and accepted by the
/// CLI in place of file paths.
Poset chain2();  // b <= t
Poset anti2();   // a, b incomparable
Poset tree3();   // p0 <= r, p1 <= r
Poset tree7();   // binary strings of length <= 2, s <= t iff t is a prefix
Poset point();   // one element

std::optional<Poset> poset_by_name(const std::string& name);

/// Valuation over tree3: R unary, names n0 and n1, with [[R(n0)]] = {p0}
/// and [[R(n1)]] = {p1}.
AtomicValuation vt();
std::optional<AtomicValuation> valuation_by_name(const std::string& name);

EpsStructure ea();  // a eps c, b eps c
EpsStructure eb();  // a eps c, b eps d
EpsStructure eq();  // two Quine atoms: x eps x, y eps y

std::optional<EpsStructure> eps_by_name(const std::string& name);

/// The stage-2 hierarchy over tree3's four-element algebra: the empty name
/// plus one name per algebra element.
NameSystem ns2();

}  // namespace forcinglab::fixtures
