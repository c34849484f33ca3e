#include <doctest.h>

#include <algorithm>

#include "stackprod/classify.hpp"
#include "stackprod/generator.hpp"
#include "stackprod/leader.hpp"
#include "test_support.hpp"

using namespace stackprod;
using namespace stackprod::testing;

namespace {

bool has_rate_ties(const Instance& inst) {
  for (std::size_t i = 1; i < inst.size(); ++i)
    if (inst[i - 1].production_rate == inst[i].production_rate) return true;
  return false;
}

bool balanced_family(StrategyKind kind) {
  return kind == StrategyKind::kBalanced || kind == StrategyKind::kSeriedBalanced;
}

}  // namespace

TEST_CASE("classify the worked strategies") {
  Instance inst = table1();

  StrategyClass balanced = classify(inst, leader("3/8,5/8,1/4,0,15/4"));
  CHECK(balanced.kind == StrategyKind::kBalanced);
  CHECK(balanced.support == set_of({1, 2, 3, 5}));
  CHECK(balanced.top == std::optional<std::size_t>(4));
  CHECK(balanced.common_ratio == std::optional<Ratio>(5));
  CHECK_FALSE(balanced.residual.has_value());

  StrategyClass semi = classify(inst, leader("1/15,2/3,4/15,0,4"));
  CHECK(semi.kind == StrategyKind::kSemiBalanced);
  CHECK(semi.support == set_of({2, 3, 5}));
  CHECK(semi.residual == std::optional<std::size_t>(0));
  CHECK(semi.common_ratio == std::optional<Ratio>(R("16/3")));
  CHECK_FALSE(semi.top.has_value());

  StrategyClass other = classify(inst, leader("0,7/10,3/10,0,4"));
  CHECK(other.kind == StrategyKind::kOther);
  CHECK(other.support.empty());

  StrategyClass seried = classify(inst, leader("1/2,5/6,1/3,10/3,0"));
  CHECK(seried.kind == StrategyKind::kSeriedBalanced);
  CHECK(seried.support == set_of({1, 2, 3, 4}));
  CHECK(seried.top == std::optional<std::size_t>(3));
}

TEST_CASE("classify edge cases") {
  Instance inst = table1();
  CHECK(classify(inst, leader("0,0,0,0,0")).kind == StrategyKind::kOther);
  // Balanced ratios but only four of the five units spent.
  CHECK(classify(inst, leader("3/10,1/2,1/5,0,3")).kind == StrategyKind::kOther);
  CHECK(classify(inst, leader("5,0,0,0,0")).kind == StrategyKind::kSeriedBalanced);
  CHECK(classify(inst, leader("0,5,0,0,0")).kind == StrategyKind::kBalanced);
  // Two distinct low ratios.
  CHECK(classify(inst, leader("1/15,1/2,4/15,1/6,4")).kind == StrategyKind::kOther);
  CHECK_THROWS_AS(classify(inst, leader("1,2,3")), Error);
  CHECK_THROWS_AS(classify(inst, leader("6,0,0,0,0")), Error);
  CHECK(std::string(strategy_kind_name(StrategyKind::kSemiBalanced)) == "SemiBalanced");
}

TEST_CASE("property: balanced allocations classify as balanced on their support") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Instance inst = Instance::validate(seed % 2 ? generate_instance(1 + seed % 8, seed)
                                                : generate_tie_heavy_instance(1 + seed % 8, seed));
    SeededRng rng(seed + 1000);
    FacilitySet set;
    for (std::size_t i = 0; i < inst.size(); ++i)
      if (rng.chance(1, 2)) set.push_back(i);
    if (set.empty()) set.push_back(inst.size() - 1);
    StrategyClass c = classify(inst, balanced_allocation(inst, set));
    CAPTURE(seed);
    CHECK(balanced_family(c.kind));
    CHECK(c.support == set);
    CHECK((c.kind == StrategyKind::kSeriedBalanced) == (set.back() + 1 == set.size()));
  }
}

TEST_CASE("property: solve returns a seried-balanced strategy") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    Instance inst = Instance::validate(generate_instance(1 + seed % 10, seed));
    SolveReport report = solve(inst);
    StrategyClass c = classify(inst, report.strategy);
    CHECK(c.kind == StrategyKind::kSeriedBalanced);
    CHECK(c.support == report.support);
  }
}

TEST_CASE("property: classification ignores input order") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const std::size_t n = 2 + seed % 6;
    RawInstance raw = generate_instance(n, seed);
    Instance inst = Instance::validate(raw);
    SeededRng rng(seed);
    LeaderStrategy x;
    switch (seed % 3) {
      case 0: x = solve(inst).strategy; break;
      case 1: {
        FacilitySet set;
        for (std::size_t i = 0; i < n; ++i)
          if (rng.chance(1, 2)) set.push_back(i);
        if (set.empty()) set.push_back(0);
        x = balanced_allocation(inst, set);
        break;
      }
      default: x = random_leader_strategy(inst, seed); break;
    }
    const auto x_original = inst.to_original_order(x.amounts);

    RawInstance flipped = raw;
    std::reverse(flipped.facilities.begin(), flipped.facilities.end());
    Instance other = Instance::validate(flipped);
    LeaderStrategy x2{other.to_normalized_order(
        std::vector<Ratio>(x_original.rbegin(), x_original.rend()))};

    StrategyClass a = classify(inst, x);
    StrategyClass b = classify(other, x2);
    CAPTURE(seed);
    if (has_rate_ties(inst)) {
      CHECK(balanced_family(a.kind) == balanced_family(b.kind));
    } else {
      CHECK(a.kind == b.kind);
    }
    // Compare supports by original id, mirrored through the reversal.
    std::vector<std::size_t> ids_b;
    for (std::size_t id : other.original_ids(b.support)) ids_b.push_back(n - 1 - id);
    std::sort(ids_b.begin(), ids_b.end());
    std::vector<std::size_t> ids_a = inst.original_ids(a.support);
    std::sort(ids_a.begin(), ids_a.end());
    CHECK(ids_a == ids_b);
    CHECK(a.common_ratio == b.common_ratio);
  }
}
