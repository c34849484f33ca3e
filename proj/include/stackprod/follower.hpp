#pragma once

#include <cstddef>
#include <vector>

#include "stackprod/instance.hpp"

namespace stackprod {

// The follower's canonical optimal reply to a leader strategy.
struct FollowerBestResponse {
  // Normalized positions in destruction order: non-increasing destruction
  // ratio p_i x_i / a_i, ties by ascending original id.
  std::vector<std::size_t> order;
  // Position (normalized) of the facility where cumulative destruction
  // quantity first reaches R_f. It may be only partly destroyed.
  std::size_t threshold;
  // Facilities receiving destructive resources, including the threshold.
  FacilitySet destroyed;
  FollowerStrategy strategy;
  Ratio worst_case_value;
};

// p_i x_i / a_i per facility, normalized order.
std::vector<Ratio> destruction_ratios(const Instance& instance,
                                      const LeaderStrategy& x);

// Greedy destruction by ratio. Runs in O(n log n).
FollowerBestResponse best_response(const Instance& instance,
                                   const LeaderStrategy& x);

// Total production after destruction: sum p_i x_i (1 - y_i / a_i).
Ratio evaluate(const Instance& instance, const LeaderStrategy& x,
               const FollowerStrategy& y);

// Per-facility productions p_i x_i and reductions p_i x_i y_i / a_i.
struct ProductionBreakdown {
  std::vector<Ratio> production;
  std::vector<Ratio> reduction;
  Ratio total;
};

ProductionBreakdown production_breakdown(const Instance& instance,
                                         const LeaderStrategy& x,
                                         const FollowerStrategy& y);

// Production the leader keeps against the follower's best reply.
Ratio worst_case(const Instance& instance, const LeaderStrategy& x);

}  // namespace stackprod
