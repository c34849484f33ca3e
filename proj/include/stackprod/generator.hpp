#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "stackprod/instance.hpp"

namespace stackprod {

// Deterministic across platforms: mt19937_64 is fully specified and the
// bounded draws below do not go through the standard distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

  // Uniform integer in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool chance(std::uint64_t numerator, std::uint64_t denominator);

 private:
  std::mt19937_64 engine_;
};

// Random valid game: p_i in (0, 20], a_i in (0, 2], R_l in (0, 10] with
// denominators up to 4, and R_f a uniform grid point in (0, sum a_i).
// Throws kInvalidArgument when n == 0.
RawInstance generate_instance(std::size_t n, std::uint64_t seed);

// Like generate_instance but draws from a handful of values so that tied
// production rates, ratios and prefix sums show up often.
RawInstance generate_tie_heavy_instance(std::size_t n, std::uint64_t seed);

// Random feasible leader strategy (normalized order). Mixes zero entries,
// partial budgets and full budgets.
LeaderStrategy random_leader_strategy(const Instance& instance,
                                      std::uint64_t seed);

// Random feasible follower strategy, sometimes a greedy vertex and sometimes
// an interior point.
FollowerStrategy random_follower_strategy(const Instance& instance,
                                          std::uint64_t seed);

}  // namespace stackprod
