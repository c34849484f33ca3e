#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "stackprod/ratio.hpp"

namespace stackprod {

// Unvalidated game data in input (original id) order.
struct RawFacility {
  Ratio production_rate;
  Ratio destruction_quantity;
};

struct RawInstance {
  std::vector<RawFacility> facilities;
  Ratio leader_budget;
  Ratio follower_budget;
};

struct Facility {
  std::size_t id;  // zero-based position in the input
  Ratio production_rate;
  Ratio destruction_quantity;
};

// Normalized facility positions, strictly ascending.
using FacilitySet = std::vector<std::size_t>;

// A validated game. Facilities are stored by non-increasing production rate
// with ties broken by ascending original id; every index taken or returned
// by the solver API is a position in this normalized order.
class Instance {
 public:
  // Throws Error with kEmptyInstance, kNonPositiveRate, kNonPositiveQuantity,
  // kNonPositiveBudget or kTrivialFollower.
  static Instance validate(const RawInstance& raw);

  std::size_t size() const { return facilities_.size(); }
  std::span<const Facility> facilities() const { return facilities_; }
  const Facility& operator[](std::size_t position) const {
    return facilities_[position];
  }

  const Ratio& leader_budget() const { return leader_budget_; }
  const Ratio& follower_budget() const { return follower_budget_; }
  const Ratio& total_destruction_quantity() const { return total_quantity_; }

  // Normalized position of the facility with the given original id.
  std::size_t position_of(std::size_t id) const { return position_of_id_[id]; }

  // Reorders per-facility values between input order and normalized order.
  std::vector<Ratio> to_original_order(std::span<const Ratio> normalized) const;
  std::vector<Ratio> to_normalized_order(std::span<const Ratio> original) const;

  // Original ids (zero-based) of a normalized set, ascending.
  std::vector<std::size_t> original_ids(const FacilitySet& set) const;
  // Normalized set from zero-based original ids. Throws kInvalidArgument on
  // an out-of-range or repeated id.
  FacilitySet from_original_ids(std::span<const std::size_t> ids) const;

  // The instance in input order.
  RawInstance to_raw() const;

 private:
  Instance() = default;

  std::vector<Facility> facilities_;
  std::vector<std::size_t> position_of_id_;
  Ratio leader_budget_;
  Ratio follower_budget_;
  Ratio total_quantity_;
};

// Leader allocation, one entry per facility in normalized order.
// Feasible when every entry is non-negative and the sum is at most R_l.
struct LeaderStrategy {
  std::vector<Ratio> amounts;
};

// Follower allocation in normalized order. Feasible when 0 <= y_i <= a_i and
// the sum is at most R_f.
struct FollowerStrategy {
  std::vector<Ratio> amounts;
};

// Throw Error(kDimensionMismatch) or Error(kInfeasibleStrategy) naming the
// violated constraint. Facility numbers in messages are 1-based original ids.
void check_feasible(const Instance& instance, const LeaderStrategy& x);
void check_feasible(const Instance& instance, const FollowerStrategy& y);

}  // namespace stackprod
