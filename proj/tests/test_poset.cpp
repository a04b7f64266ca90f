#include <doctest.h>

#include "forcinglab/corpus.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/fixtures.hpp"
#include "forcinglab/poset.hpp"
#include "oracle.hpp"

using namespace forcinglab;

namespace {

Mask mask(const Poset& p, std::vector<std::string> names) {
  return p.mask_of(names);
}

Mask from_set(const Poset& p, const oracle::Set& s) {
  return p.mask_of(std::vector<std::string>(s.begin(), s.end()));
}

}  // namespace

TEST_CASE("up and down closures on the fixtures") {
  Poset t3 = fixtures::tree3();
  CHECK(t3.up_closure(mask(t3, {"p0"})) == mask(t3, {"p0", "r"}));
  CHECK(t3.up_closure(0) == 0);
  CHECK(t3.up_closure(t3.full()) == t3.full());

  CHECK(t3.down_closure(mask(t3, {"r"})) == t3.full());
  CHECK(t3.down_closure(0) == 0);

  Poset c2 = fixtures::chain2();
  CHECK(c2.down_closure(mask(c2, {"t"})) == mask(c2, {"b", "t"}));
}

TEST_CASE("density") {
  Poset t3 = fixtures::tree3();
  CHECK(t3.is_dense(mask(t3, {"p0", "p1"})));
  CHECK(t3.is_dense(t3.full()));
  Poset a2 = fixtures::anti2();
  CHECK_FALSE(a2.is_dense(mask(a2, {"a"})));
}

TEST_CASE("pseudo-complement") {
  Poset t3 = fixtures::tree3();
  CHECK(t3.pseudo_complement(mask(t3, {"p0"})) == mask(t3, {"p1"}));
  CHECK(t3.pseudo_complement(0) == t3.full());
  Poset c2 = fixtures::chain2();
  CHECK(c2.pseudo_complement(mask(c2, {"b"})) == 0);
}

TEST_CASE("regularization") {
  Poset t3 = fixtures::tree3();
  CHECK(t3.regularize(mask(t3, {"p0", "p1"})) == t3.full());
  CHECK(t3.regularize(mask(t3, {"p0"})) == mask(t3, {"p0"}));
  CHECK(t3.regularize(0) == 0);
}

TEST_CASE("separativity") {
  CHECK_FALSE(fixtures::tree3().separativity_witness().has_value());
  CHECK_FALSE(fixtures::anti2().separativity_witness().has_value());
  CHECK_FALSE(fixtures::tree7().separativity_witness().has_value());
  auto witness = fixtures::chain2().separativity_witness();
  REQUIRE(witness.has_value());
  CHECK(fixtures::chain2().element(*witness) == "b");
}

TEST_CASE("compatibility") {
  Poset t3 = fixtures::tree3();
  CHECK(t3.compatible(t3.index_of("p0"), t3.index_of("r")));
  CHECK_FALSE(t3.compatible(t3.index_of("p0"), t3.index_of("p1")));
  for (int p = 0; p < t3.size(); ++p) CHECK(t3.compatible(p, p));
}

TEST_CASE("construction validates its input") {
  CHECK_THROWS_AS(Poset::from_generators({}, {}), InputError);
  CHECK_THROWS_AS(Poset::from_generators({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(Poset::from_generators({"a"}, {{"a", "zz"}}), InputError);
  CHECK_THROWS_AS(Poset::from_generators({"a", "b"}, {{"a", "b"}, {"b", "a"}}),
                  InputError);
  CHECK_THROWS_AS(
      Poset::from_generators({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}}),
      InputError);
  CHECK_THROWS_AS(fixtures::tree3().index_of("zz"), InputError);
  CHECK_THROWS_AS(fixtures::tree3().mask_of(std::vector<std::string>{"q"}),
                  InputError);
}

TEST_CASE("generators are closed transitively") {
  Poset t7 = fixtures::tree7();
  CHECK(t7.leq(t7.index_of("00"), t7.index_of("e")));
  CHECK(t7.leq(t7.index_of("11"), t7.index_of("e")));
  CHECK_FALSE(t7.leq(t7.index_of("00"), t7.index_of("1")));
}

TEST_CASE("bitmask operations agree with the naive oracle on tree7") {
  Poset t7 = fixtures::tree7();
  oracle::Order o = oracle::tree7();
  for (const auto& s : oracle::subsets(o)) {
    Mask m = from_set(t7, s);
    CHECK(t7.up_closure(m) == from_set(t7, oracle::up(o, s)));
    CHECK(t7.down_closure(m) == from_set(t7, oracle::down(o, s)));
    CHECK(t7.pseudo_complement(m) == from_set(t7, oracle::pseudo_complement(o, s)));
    CHECK(t7.regularize(m) == from_set(t7, oracle::regularize(o, s)));
    CHECK(t7.is_dense(m) == oracle::dense(o, s));
  }
}

TEST_CASE("closure and density laws hold on every small poset") {
  for (int n = 1; n <= 3; ++n) {
    for (const Poset& p : corpus::enumerate_posets(n)) {
      const Mask full = p.full();
      for (Mask x = 0;; ++x) {
        CHECK(p.up_closure(p.up_closure(x)) == p.up_closure(x));
        CHECK(p.down_closure(p.down_closure(x)) == p.down_closure(x));
        CHECK(p.is_down_closed(p.pseudo_complement(x)));
        CHECK(p.pseudo_complement(x) == p.pseudo_complement(p.up_closure(x)));
        // X union X' is dense for every X; D is dense iff D = D union D'.
        CHECK(p.is_dense(x | p.pseudo_complement(x)));
        CHECK(p.is_dense(x) == (x == (x | p.pseudo_complement(x))));
        if (p.is_down_closed(x)) {
          CHECK((x & ~p.regularize(x)) == 0);
          CHECK(p.regularize(p.regularize(x)) == p.regularize(x));
          for (Mask y = 0;; ++y) {
            if (p.is_down_closed(y) && (x & ~y) == 0)
              CHECK((p.regularize(x) & ~p.regularize(y)) == 0);
            if (y == full) break;
          }
        }
        if (x == full) break;
      }
    }
  }
}
