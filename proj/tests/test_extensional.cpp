#include <doctest.h>

#include "forcinglab/corpus.hpp"
#include "forcinglab/errors.hpp"
#include "forcinglab/extensional.hpp"
#include "forcinglab/fixtures.hpp"
#include "helpers.hpp"

using namespace forcinglab;
using helpers::all_partitions;

namespace {

bool relation_subset(const Partition& fine, const Partition& coarse) {
  return partition_coarsens(coarse, fine);
}

}  // namespace

TEST_CASE("staged similarity on the fixtures") {
  auto ea = sim_stages(fixtures::ea());
  REQUIRE(ea.stages.size() == 2);
  CHECK(ea.stages[0] == Partition{0, 1, 2});
  CHECK(ea.limit() == Partition{0, 0, 1});

  auto eq = sim_stages(fixtures::eq());
  CHECK(eq.limit() == Partition{0, 1});  // two Quine atoms stay distinct

  auto eb = sim_stages(fixtures::eb());
  REQUIRE(eb.stages.size() == 3);
  CHECK(same_block(eb.stages[1], 0, 1));        // a ~ b at stage 1
  CHECK_FALSE(same_block(eb.stages[1], 2, 3));  // c ~ d not yet
  CHECK(same_block(eb.stages[2], 2, 3));        // c ~ d at stage 2
}

TEST_CASE("derived membership") {
  EpsStructure ea = fixtures::ea();
  auto in = membership_from(ea);
  CHECK(in.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  EpsStructure eq = fixtures::eq();
  CHECK(membership_from(eq) == eq);

  EpsStructure empty = EpsStructure::create({"a", "b"}, {});
  CHECK(membership_from(empty).pair_count() == 0);
}

TEST_CASE("two-sided stage approximations") {
  EpsStructure eb = fixtures::eb();
  auto e1 = eps_alpha(eb, 1);
  CHECK(e1.eps(eb.index_of("a"), eb.index_of("d")));  // via a ~1 b, b eps d
  CHECK(eps_alpha(eb, 0) == eb);

  EpsStructure ea = fixtures::ea();
  auto a1 = eps_alpha(ea, 1);
  CHECK(a1.pairs() == std::vector<std::pair<int, int>>{{0, 2}, {1, 2}});

  // Clamped to the fixpoint, and equal to the one-sided form there.
  CHECK(eps_alpha(eb, 99) == membership_from(eb));
}

TEST_CASE("quasi-extensionality holds for the derived structure") {
  CHECK(check_E(fixtures::ea()).pass);
  CHECK(check_E(fixtures::eq()).pass);
  CHECK(check_E(fixtures::eb()).pass);
  for (const auto& e : corpus::enumerate_eps(3)) CHECK(check_E(e).pass);
}

TEST_CASE("well-foundedness") {
  CHECK(is_well_founded(fixtures::ea()));
  CHECK_FALSE(is_well_founded(fixtures::eq()));
  CHECK(is_well_founded(membership_from(fixtures::eb())));
  CHECK_FALSE(is_well_founded(
      EpsStructure::create({"a", "b"}, {{"a", "b"}, {"b", "a"}})));
}

TEST_CASE("eps simulates the limit similarity") {
  CHECK(check_simulation(fixtures::ea()).pass);
  CHECK(check_simulation(fixtures::eq()).pass);
  for (const auto& e : corpus::enumerate_eps(3)) CHECK(check_simulation(e).pass);
}

TEST_CASE("greatest bisimulation") {
  CHECK(greatest_bisimulation(fixtures::eq()) == Partition{0, 0});
  CHECK(greatest_bisimulation(fixtures::ea()) == Partition{0, 0, 1});
  EpsStructure loose = EpsStructure::create({"a", "b", "c"}, {});
  CHECK(greatest_bisimulation(loose) == Partition{0, 0, 0});
}

TEST_CASE("quotients") {
  EpsStructure ea = fixtures::ea();
  auto q = quotient(ea, sim_stages(ea).limit());
  CHECK(q.nodes() == std::vector<std::string>{"a", "c"});
  CHECK(q.pairs() == std::vector<std::pair<int, int>>{{0, 1}});

  auto qd = quotient(ea, discrete_partition(ea.size()));
  CHECK(qd == membership_from(ea));

  EpsStructure eq = fixtures::eq();
  CHECK(quotient(eq, sim_stages(eq).limit()) == eq);

  // Merging a memberless node with a node that has members is incompatible.
  CHECK_THROWS_AS(quotient(ea, Partition{0, 1, 0}), InputError);
}

TEST_CASE("limit is the least closed equivalence, exhaustively") {
  for (const auto& e : corpus::enumerate_eps(3)) {
    auto staged = sim_stages(e);
    const Partition& limit = staged.limit();
    CHECK(successor_stage(e, limit) == limit);
    for (const auto& r : all_partitions(e.size())) {
      // Closed means F(R) is contained in R as a relation.
      if (relation_subset(successor_stage(e, r), r)) CHECK(relation_subset(limit, r));
    }
  }
}

TEST_CASE("stage chain properties on the exhaustive corpus") {
  for (const auto& e : corpus::enumerate_eps(3)) {
    auto staged = sim_stages(e);
    const size_t bound =
        static_cast<size_t>(e.size()) * (static_cast<size_t>(e.size()) - 1) / 2 + 1;
    CHECK(staged.stages.size() <= bound);
    CHECK(staged.stages[0] == discrete_partition(e.size()));
    for (size_t k = 1; k < staged.stages.size(); ++k)
      CHECK(partition_coarsens(staged.stages[k], staged.stages[k - 1]));

    // eps is contained in the derived membership.
    auto in = membership_from(e);
    for (auto [x, y] : e.pairs()) CHECK(in.eps(x, y));

    // Well-foundedness transfers both ways.
    CHECK(is_well_founded(e) == is_well_founded(in));

    // The quotient by the limit is extensional.
    auto q = quotient(e, staged.limit());
    for (int x = 0; x < q.size(); ++x)
      for (int y = x + 1; y < q.size(); ++y)
        CHECK(q.members_of(x) != q.members_of(y));

    // The greatest bisimulation is at least as coarse as the limit.
    CHECK(partition_coarsens(greatest_bisimulation(e), staged.limit()));
  }
}

TEST_CASE("structure construction validates nodes") {
  CHECK_THROWS_AS(EpsStructure::create({"a", "a"}, {}), InputError);
  CHECK_THROWS_AS(EpsStructure::create({"a"}, {{"a", "zz"}}), InputError);
}
