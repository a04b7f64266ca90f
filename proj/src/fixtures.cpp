#include "forcinglab/fixtures.hpp"

namespace forcinglab::fixtures {

Poset chain2() { return Poset::from_generators({"b", "t"}, {{"b", "t"}}); }

Poset anti2() { return Poset::from_generators({"a", "b"}, {}); }

Poset tree3() {
  return Poset::from_generators({"r", "p0", "p1"}, {{"p0", "r"}, {"p1", "r"}});
}

Poset tree7() {
  // "e" stands for the empty string; s <= t iff t is a prefix of s.
  return Poset::from_generators({"e", "0", "1", "00", "01", "10", "11"},
                                {{"0", "e"},
                                 {"1", "e"},
                                 {"00", "0"},
                                 {"01", "0"},
                                 {"10", "1"},
                                 {"11", "1"}});
}

Poset point() { return Poset::from_generators({"pt"}, {}); }

std::optional<Poset> poset_by_name(const std::string& name) {
  if (name == "chain2") return chain2();
  if (name == "anti2") return anti2();
  if (name == "tree3") return tree3();
  if (name == "tree7") return tree7();
  if (name == "point") return point();
  return std::nullopt;
}

AtomicValuation vt() {
  Poset p = tree3();
  Signature sig = Signature::create({{"R", 1}}, {"n0", "n1"});
  std::map<GroundAtom, Mask> atoms;
  atoms[{0, {0}}] = p.mask_of(std::vector<std::string>{"p0"});
  atoms[{0, {1}}] = p.mask_of(std::vector<std::string>{"p1"});
  return AtomicValuation::create(std::move(sig), RegularAlgebra::build(p),
                                 atoms);
}

std::optional<AtomicValuation> valuation_by_name(const std::string& name) {
  if (name == "vt") return vt();
  return std::nullopt;
}

EpsStructure ea() {
  return EpsStructure::create({"a", "b", "c"}, {{"a", "c"}, {"b", "c"}});
}

EpsStructure eb() {
  return EpsStructure::create({"a", "b", "c", "d"}, {{"a", "c"}, {"b", "d"}});
}

EpsStructure eq() {
  return EpsStructure::create({"x", "y"}, {{"x", "x"}, {"y", "y"}});
}

std::optional<EpsStructure> eps_by_name(const std::string& name) {
  if (name == "ea") return ea();
  if (name == "eb") return eb();
  if (name == "eq") return eq();
  return std::nullopt;
}

NameSystem ns2() {
  return NameSystem::hierarchy(RegularAlgebra::build(tree3()), 2, 64);
}

}  // namespace forcinglab::fixtures
