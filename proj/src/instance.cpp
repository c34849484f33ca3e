#include "stackprod/instance.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stackprod/error.hpp"

namespace stackprod {
namespace {

std::string facility_label(std::size_t id) {
  return "facility " + std::to_string(id + 1);
}

}  // namespace

Instance Instance::validate(const RawInstance& raw) {
  const std::size_t n = raw.facilities.size();
  if (n == 0) throw Error(ErrorCode::kEmptyInstance, "instance has no facilities");

  Instance inst;
  inst.facilities_.reserve(n);
  for (std::size_t id = 0; id < n; ++id) {
    const RawFacility& f = raw.facilities[id];
    if (sgn(f.production_rate) <= 0)
      throw Error(ErrorCode::kNonPositiveRate,
                  facility_label(id) + ": production rate p = " +
                      format_ratio(f.production_rate) + " must be positive");
    if (sgn(f.destruction_quantity) <= 0)
      throw Error(ErrorCode::kNonPositiveQuantity,
                  facility_label(id) + ": destruction quantity a = " +
                      format_ratio(f.destruction_quantity) + " must be positive");
    Facility& added = inst.facilities_.emplace_back(
        Facility{id, f.production_rate, f.destruction_quantity});
    added.production_rate.canonicalize();
    added.destruction_quantity.canonicalize();
    inst.total_quantity_ += added.destruction_quantity;
  }
  if (sgn(raw.leader_budget) <= 0)
    throw Error(ErrorCode::kNonPositiveBudget,
                "leader budget R_l = " + format_ratio(raw.leader_budget) +
                    " must be positive");
  if (sgn(raw.follower_budget) <= 0)
    throw Error(ErrorCode::kNonPositiveBudget,
                "follower budget R_f = " + format_ratio(raw.follower_budget) +
                    " must be positive");
  inst.leader_budget_ = raw.leader_budget;
  inst.leader_budget_.canonicalize();
  inst.follower_budget_ = raw.follower_budget;
  inst.follower_budget_.canonicalize();
  if (inst.follower_budget_ >= inst.total_quantity_)
    throw Error(ErrorCode::kTrivialFollower,
                "follower budget R_f = " + format_ratio(raw.follower_budget) +
                    " can destroy every facility (sum of a = " +
                    format_ratio(inst.total_quantity_) + ")");

  std::vector<double> hints(n);
  for (std::size_t id = 0; id < n; ++id) hints[id] = to_double(inst.facilities_[id].production_rate);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t lhs, std::size_t rhs) {
    int c = compare_hinted(inst.facilities_[lhs].production_rate, hints[lhs],
                           inst.facilities_[rhs].production_rate, hints[rhs]);
    if (c != 0) return c > 0;
    return lhs < rhs;
  });
  // Deep copies in sorted order, so limbs sit in scan order.
  std::vector<Facility> ordered;
  ordered.reserve(n);
  for (std::size_t id : order) {
    const Facility& f = inst.facilities_[id];
    ordered.push_back(Facility{f.id, Ratio(f.production_rate), Ratio(f.destruction_quantity)});
  }
  inst.facilities_ = std::move(ordered);
  inst.position_of_id_.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    inst.position_of_id_[inst.facilities_[pos].id] = pos;
  return inst;
}

std::vector<Ratio> Instance::to_original_order(
    std::span<const Ratio> normalized) const {
  if (normalized.size() != size())
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(size()) + " values, got " +
                    std::to_string(normalized.size()));
  std::vector<Ratio> out(size());
  for (std::size_t pos = 0; pos < size(); ++pos)
    out[facilities_[pos].id] = normalized[pos];
  return out;
}

std::vector<Ratio> Instance::to_normalized_order(
    std::span<const Ratio> original) const {
  if (original.size() != size())
    throw Error(ErrorCode::kDimensionMismatch,
                "expected " + std::to_string(size()) + " values, got " +
                    std::to_string(original.size()));
  std::vector<Ratio> out(size());
  for (std::size_t pos = 0; pos < size(); ++pos)
    out[pos] = original[facilities_[pos].id];
  return out;
}

std::vector<std::size_t> Instance::original_ids(const FacilitySet& set) const {
  std::vector<std::size_t> ids;
  ids.reserve(set.size());
  for (std::size_t pos : set) ids.push_back(facilities_.at(pos).id);
  std::sort(ids.begin(), ids.end());
  return ids;
}

FacilitySet Instance::from_original_ids(std::span<const std::size_t> ids) const {
  FacilitySet set;
  set.reserve(ids.size());
  for (std::size_t id : ids) {
    if (id >= size())
      throw Error(ErrorCode::kInvalidArgument,
                  "facility id " + std::to_string(id + 1) + " out of range 1.." +
                      std::to_string(size()));
    set.push_back(position_of_id_[id]);
  }
  std::sort(set.begin(), set.end());
  if (std::adjacent_find(set.begin(), set.end()) != set.end())
    throw Error(ErrorCode::kInvalidArgument, "facility set has a repeated id");
  return set;
}

RawInstance Instance::to_raw() const {
  RawInstance raw;
  raw.facilities.resize(size());
  for (const Facility& f : facilities_)
    raw.facilities[f.id] = {f.production_rate, f.destruction_quantity};
  raw.leader_budget = leader_budget_;
  raw.follower_budget = follower_budget_;
  return raw;
}

void check_feasible(const Instance& instance, const LeaderStrategy& x) {
  if (x.amounts.size() != instance.size())
    throw Error(ErrorCode::kDimensionMismatch,
                "leader strategy has " + std::to_string(x.amounts.size()) +
                    " entries, instance has " + std::to_string(instance.size()) +
                    " facilities");
  Ratio total;
  for (std::size_t pos = 0; pos < instance.size(); ++pos) {
    if (sgn(x.amounts[pos]) < 0)
      throw Error(ErrorCode::kInfeasibleStrategy,
                  "x_" + std::to_string(instance[pos].id + 1) + " = " +
                      format_ratio(x.amounts[pos]) + " is negative");
    total += x.amounts[pos];
  }
  if (total > instance.leader_budget())
    throw Error(ErrorCode::kInfeasibleStrategy,
                "sum of x = " + format_ratio(total) + " exceeds R_l = " +
                    format_ratio(instance.leader_budget()));
}

void check_feasible(const Instance& instance, const FollowerStrategy& y) {
  if (y.amounts.size() != instance.size())
    throw Error(ErrorCode::kDimensionMismatch,
                "follower strategy has " + std::to_string(y.amounts.size()) +
                    " entries, instance has " + std::to_string(instance.size()) +
                    " facilities");
  Ratio total;
  for (std::size_t pos = 0; pos < instance.size(); ++pos) {
    auto name = [&] { return "y_" + std::to_string(instance[pos].id + 1); };
    if (sgn(y.amounts[pos]) < 0)
      throw Error(ErrorCode::kInfeasibleStrategy,
                  name() + " = " + format_ratio(y.amounts[pos]) + " is negative");
    if (y.amounts[pos] > instance[pos].destruction_quantity)
      throw Error(ErrorCode::kInfeasibleStrategy,
                  name() + " = " + format_ratio(y.amounts[pos]) + " exceeds a = " +
                      format_ratio(instance[pos].destruction_quantity));
    total += y.amounts[pos];
  }
  if (total > instance.follower_budget())
    throw Error(ErrorCode::kInfeasibleStrategy,
                "sum of y = " + format_ratio(total) + " exceeds R_f = " +
                    format_ratio(instance.follower_budget()));
}

}  // namespace stackprod
