#include <doctest.h>

#include "forcinglab/corpus.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/language.hpp"

using namespace forcinglab;

namespace {

Signature sig() {
  return Signature::create({{"R", 1}, {"S", 2}}, {"n0", "n1", "n2"});
}

// Random ASTs for the round-trip property. Variables are always bound.
Formula random_formula(corpus::Rng& rng, const Signature& s,
                       std::vector<std::string>& bound, int depth) {
  int pick = depth == 0 ? 0 : static_cast<int>(rng.below(7));
  switch (pick) {
    default:
    case 0: {
      bool binary_rel = rng.chance(1, 2);
      std::vector<Term> args;
      int arity = binary_rel ? 2 : 1;
      for (int i = 0; i < arity; ++i) {
        if (!bound.empty() && rng.chance(1, 3))
          args.push_back({false, bound[rng.below(bound.size())]});
        else
          args.push_back({true, s.names()[rng.below(s.names().size())]});
      }
      return Formula::atom(binary_rel ? "S" : "R", std::move(args));
    }
    case 1:
      return Formula::negation(random_formula(rng, s, bound, depth - 1));
    case 2:
      return Formula::conjunction(random_formula(rng, s, bound, depth - 1),
                                  random_formula(rng, s, bound, depth - 1));
    case 3:
      return Formula::disjunction(random_formula(rng, s, bound, depth - 1),
                                  random_formula(rng, s, bound, depth - 1));
    case 4:
      return Formula::implication(random_formula(rng, s, bound, depth - 1),
                                  random_formula(rng, s, bound, depth - 1));
    case 5:
      return Formula::equivalence(random_formula(rng, s, bound, depth - 1),
                                  random_formula(rng, s, bound, depth - 1));
    case 6: {
      std::string var = "v" + std::to_string(bound.size());
      bound.push_back(var);
      Formula body = random_formula(rng, s, bound, depth - 1);
      bound.pop_back();
      return rng.chance(1, 2) ? Formula::exists(var, std::move(body))
                              : Formula::forall(var, std::move(body));
    }
  }
}

}  // namespace

TEST_CASE("parsing the grammar") {
  Signature s = sig();
  Formula a = parse_formula("R(n0)", s);
  CHECK(a.kind() == Formula::Kind::atom);
  CHECK(a.print() == "R(n0)");

  Formula e = parse_formula("exists t. R(t)", s);
  CHECK(e.kind() == Formula::Kind::exists);
  CHECK(e.var() == "t");
  CHECK(e.body().print() == "R(t)");

  Formula nested = parse_formula(
      "forall t. (S(t, n0) -> not (R(t) or exists u. S(t, u)))", s);
  CHECK(nested.print() ==
        "forall t. (S(t, n0) -> not (R(t) or exists u. S(t, u)))");

  // Whitespace-insensitive.
  CHECK(parse_formula("( R(n0)and R(n1) )", s) ==
        parse_formula("(R(n0) and R(n1))", s));
}

TEST_CASE("parser diagnostics") {
  Signature s = sig();
  CHECK_THROWS_WITH_AS(parse_formula("R(n0, n0)", s),
                       doctest::Contains("expects 1 argument"), InputError);
  CHECK_THROWS_WITH_AS(parse_formula("T(n0)", s),
                       doctest::Contains("unknown relation"), InputError);
  CHECK_THROWS_WITH_AS(parse_formula("R(t)", s),
                       doctest::Contains("neither a name nor a bound variable"),
                       InputError);
  CHECK_THROWS_WITH_AS(parse_formula("(R(n0) and", s),
                       doctest::Contains("position"), InputError);
  CHECK_THROWS_AS(parse_formula("exists n0. R(n0)", s), InputError);
  CHECK_THROWS_AS(parse_formula("R(n0) R(n1)", s), InputError);
  CHECK_THROWS_AS(parse_formula("not(and)", s), InputError);
}

TEST_CASE("instantiation") {
  Signature s = sig();
  Formula rt = Formula::atom("S", {{false, "u"}, {false, "t"}});
  Formula st = Formula::atom("S", {{false, "t"}, {false, "u"}});

  CHECK(instantiate(s, Formula::atom("R", {{false, "t"}}), "t", "n0").print() ==
        "R(n0)");
  Formula under = parse_formula("exists t. R(t)", s);
  CHECK(instantiate(s, under, "t", "n0") == under);  // no free occurrence
  CHECK(instantiate(s, st, "t", "n1").print() == "S(n1, u)");
  CHECK_THROWS_AS(instantiate(s, rt, "t", "zz"), InputError);
}

TEST_CASE("free variables after substitution") {
  Signature s = sig();
  Formula f = Formula::conjunction(Formula::atom("S", {{false, "t"}, {false, "u"}}),
                                   Formula::atom("R", {{false, "t"}}));
  CHECK(f.free_variables() == std::vector<std::string>{"t", "u"});
  Formula g = instantiate(s, f, "t", "n2");
  CHECK(g.free_variables() == std::vector<std::string>{"u"});
}

TEST_CASE("subformula closure") {
  Signature s = sig();
  Formula a = parse_formula("R(n0)", s);
  Formula b = parse_formula("R(n1)", s);

  Formula conj = Formula::conjunction(a, b);
  auto c1 = subformula_closure(std::array{conj});
  CHECK(c1.size() == 3);

  auto c2 = subformula_closure(std::array{Formula::negation(a)});
  CHECK(c2.size() == 2);

  Formula ex = parse_formula("exists t. R(t)", s);
  auto c3 = subformula_closure(std::array{ex});
  REQUIRE(c3.size() == 2);
  CHECK(c3[0].print() == "R(t)");
  CHECK(c3[1].print() == "exists t. R(t)");
}

TEST_CASE("ground instances") {
  Signature s = sig();
  Formula body = parse_formula("exists t. R(t)", s).body();
  auto grounded = ground_instances(s, body);
  REQUIRE(grounded.size() == 3);
  CHECK(grounded[0].print() == "R(n0)");

  Formula st = Formula::atom("S", {{false, "t"}, {false, "u"}});
  CHECK(ground_instances(s, st).size() == 9);
  CHECK(ground_instances(s, parse_formula("R(n2)", s)).size() == 1);
}

TEST_CASE("print then parse is the identity") {
  Signature s = sig();
  corpus::Rng rng(20240817);
  std::vector<std::string> bound;
  for (int i = 0; i < 300; ++i) {
    Formula f = random_formula(rng, s, bound, 4);
    CAPTURE(f.print());
    CHECK(parse_formula(f.print(), s) == f);
  }
}
