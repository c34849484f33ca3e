#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stackprod/instance.hpp"

namespace stackprod {

inline constexpr std::size_t kFollowerOracleLimit = 7;
inline constexpr std::size_t kSubsetOracleLimit = 20;
inline constexpr std::size_t kGridOracleLimit = 4;
inline constexpr unsigned kDefaultGridResolution = 64;

struct OracleVerdict {
  Ratio oracle_value;
  Ratio solver_value;
  Ratio gap;  // oracle_value - solver_value
  bool agree = false;
  // Strategy attaining oracle_value, normalized order. For the follower
  // oracle this is a follower allocation, otherwise a leader allocation.
  std::optional<std::vector<Ratio>> witness;
};

// Minimum of P(x, y) over the greedy fillings of every permutation of the
// facilities, compared with best_response. Throws kTooLarge above `limit`.
OracleVerdict follower_oracle(const Instance& instance, const LeaderStrategy& x,
                              std::size_t limit = kFollowerOracleLimit);

// Maximum over all nonempty subsets S of p_bar(S) * R_l, compared with solve.
// Throws kTooLarge above `limit`.
OracleVerdict leader_subset_oracle(const Instance& instance,
                                   std::size_t limit = kSubsetOracleLimit);

// Maximum of worst_case(x) over the simplex grid x_i = k_i R_l / resolution,
// sum k_i <= resolution. The grid only lower-bounds the true optimum, so
// agree means solve's value is at least the grid maximum. Throws kTooLarge or
// kZeroResolution.
OracleVerdict leader_grid_oracle(const Instance& instance, unsigned resolution,
                                 std::size_t limit = kGridOracleLimit);

}  // namespace stackprod
