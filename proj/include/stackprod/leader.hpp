#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "stackprod/instance.hpp"

namespace stackprod {

// Composed net production rate of a facility set:
//   max{(sum_S a_i - R_f) / (sum_S a_i / p_i), 0},  and 0 for the empty set.
// It is the worst-case production per leader resource when the resources are
// spread over S with equal destruction ratios.
Ratio composed_net_rate(const Instance& instance, const FacilitySet& set);

// The unique full-budget allocation over `set` whose destruction ratios are
// all equal: x_i = a_i R_l / (p_i sum_S a_j / p_j). Throws kEmptySupport.
LeaderStrategy balanced_allocation(const Instance& instance,
                                   const FacilitySet& set);

// Allocation that puts `residual_amount` on `residual` and spreads the rest
// evenly (in destruction ratio) over `set`. Throws kEmptySupport,
// kInvalidArgument (residual in set or out of range), or kNotSemiBalanced when
// the residual amount is not in (0, R_l) or its destruction ratio is not
// strictly below the common ratio of `set`.
LeaderStrategy semi_balanced_allocation(const Instance& instance,
                                        const FacilitySet& set,
                                        std::size_t residual,
                                        const Ratio& residual_amount);

// Closed-form worst-case value of that semi-balanced allocation. Same
// preconditions and errors as semi_balanced_allocation.
Ratio semi_balanced_value(const Instance& instance, const FacilitySet& set,
                          std::size_t residual, const Ratio& residual_amount);

struct PrefixRate {
  std::size_t prefix_size;  // j, the prefix {1..j} in normalized order
  Ratio rate;
};

struct SolveReport {
  LeaderStrategy strategy;
  FacilitySet support;  // {0, ..., i*-1}
  Ratio rate;
  Ratio value;  // rate * R_l
  // Rate of every accepted prefix, in the order the scan visited them.
  std::vector<PrefixRate> trace;
  // First facility rejected by the scan (its rate did not exceed the prefix
  // rate); empty when every facility was accepted.
  std::optional<std::size_t> stopped_at;
};

// Optimal leader strategy. Grows the prefix {1..j} while the next facility's
// production rate strictly exceeds the composed net rate of the prefix, then
// returns the balanced allocation over that prefix. Single linear pass over
// the normalized instance.
SolveReport solve(const Instance& instance);

}  // namespace stackprod
