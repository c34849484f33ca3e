#include <doctest.h>

#include <functional>

#include "stackprod/follower.hpp"
#include "stackprod/generator.hpp"
#include "stackprod/leader.hpp"
#include "stackprod/oracle.hpp"
#include "test_support.hpp"

using namespace stackprod;
using namespace stackprod::testing;

namespace {

ErrorCode code_of(const std::function<void()>& call) {
  try {
    call();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::kParse;
}

RawInstance two_facilities() {
  RawInstance raw;
  raw.facilities = {{2, 1}, {1, 1}};
  raw.leader_budget = 1;
  raw.follower_budget = R("1/2");
  return raw;
}

// The first three facilities of the five-facility game.
Instance table1_head() {
  RawInstance raw = table1_raw();
  raw.facilities.resize(3);
  return Instance::validate(raw);
}

// Maximum of worst_case over the grid, by recursion over the units.
Ratio grid_maximum(const Instance& inst, unsigned resolution) {
  std::vector<Ratio> x(inst.size());
  Ratio best;
  const Ratio step = inst.leader_budget() / resolution;
  std::function<void(std::size_t, unsigned)> walk = [&](std::size_t i, unsigned left) {
    if (i == inst.size()) {
      best = std::max(best, worst_case(inst, LeaderStrategy{x}));
      return;
    }
    for (unsigned k = 0; k <= left; ++k) {
      x[i] = step * k;
      walk(i + 1, left - k);
    }
    x[i] = 0;
  };
  walk(0, resolution);
  return best;
}

}  // namespace

TEST_CASE("follower oracle on the worked strategies") {
  Instance inst = table1();
  for (const char* x : {"0,7/10,3/10,0,4", "3/8,5/8,1/4,0,15/4", "1/15,2/3,4/15,0,4", "0,0,0,0,0"}) {
    OracleVerdict verdict = follower_oracle(inst, leader(x));
    CHECK(verdict.agree);
    CHECK(verdict.gap == 0);
    CHECK(verdict.oracle_value == worst_case(inst, leader(x)));
    REQUIRE(verdict.witness.has_value());
    CHECK(evaluate(inst, leader(x), FollowerStrategy{*verdict.witness}) == verdict.oracle_value);
  }
  CHECK(follower_oracle(inst, leader("0,7/10,3/10,0,4")).oracle_value == R("4/3"));
}

TEST_CASE("subset oracle") {
  OracleVerdict verdict = leader_subset_oracle(table1());
  CHECK(verdict.agree);
  CHECK(verdict.oracle_value == R("28/3"));
  CHECK(verdict.solver_value == R("28/3"));
  REQUIRE(verdict.witness.has_value());
  CHECK(*verdict.witness == Rs("1/2,5/6,1/3,10/3,0"));

  Instance single = Instance::validate(generate_instance(1, 4));
  OracleVerdict one = leader_subset_oracle(single);
  CHECK(one.agree);
  CHECK(one.oracle_value == solve(single).value);
}

TEST_CASE("grid oracle") {
  Instance head = table1_head();
  const Ratio optimum = solve(head).value;
  OracleVerdict coarse = leader_grid_oracle(head, 60);
  CHECK(coarse.agree);
  CHECK(coarse.solver_value == optimum);
  CHECK(coarse.oracle_value <= optimum);
  CHECK(coarse.oracle_value > 0);
  OracleVerdict fine = leader_grid_oracle(head, 120);
  CHECK(fine.agree);
  CHECK(fine.gap >= coarse.gap);  // gap is oracle minus solver, so never positive
  REQUIRE(fine.witness.has_value());
  CHECK(worst_case(head, LeaderStrategy{*fine.witness}) == fine.oracle_value);

  Instance two = Instance::validate(two_facilities());
  CHECK(leader_grid_oracle(two, 100).oracle_value == 1);
  CHECK(leader_grid_oracle(two, 100).gap == 0);
  CHECK(leader_grid_oracle(two, 1).oracle_value == 1);
  CHECK(leader_grid_oracle(table1_head(), 1).oracle_value == 0);
}

TEST_CASE("grid oracle equals direct grid search") {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    Instance inst = Instance::validate(seed % 2 ? generate_instance(1 + seed % 3, seed)
                                                : generate_tie_heavy_instance(1 + seed % 3, seed));
    const unsigned resolution = 4 + seed % 9;
    OracleVerdict verdict = leader_grid_oracle(inst, resolution);
    CAPTURE(seed);
    CHECK(verdict.oracle_value == grid_maximum(inst, resolution));
    CHECK(verdict.agree);
  }
}

TEST_CASE("oracle limits") {
  Instance inst = table1();
  Instance big = Instance::validate(generate_instance(8, 1));
  LeaderStrategy zeros{std::vector<Ratio>(8)};
  CHECK(code_of([&] { follower_oracle(big, zeros); }) == ErrorCode::kTooLarge);
  CHECK(code_of([&] { follower_oracle(inst, leader("0,0,0,0,0"), 4); }) == ErrorCode::kTooLarge);
  CHECK(code_of([&] { leader_subset_oracle(inst, 4); }) == ErrorCode::kTooLarge);
  CHECK(code_of([&] { leader_grid_oracle(inst, 8); }) == ErrorCode::kTooLarge);
  CHECK(code_of([&] { leader_grid_oracle(table1_head(), 0); }) == ErrorCode::kZeroResolution);
  CHECK(code_of([&] { follower_oracle(inst, leader("6,0,0,0,0")); }) ==
        ErrorCode::kInfeasibleStrategy);
  CHECK_NOTHROW(leader_grid_oracle(inst, 2, 5));
}
