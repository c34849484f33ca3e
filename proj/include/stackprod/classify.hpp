#pragma once

#include <cstddef>
#include <optional>

#include "stackprod/instance.hpp"

namespace stackprod {

enum class StrategyKind { kBalanced, kSemiBalanced, kSeriedBalanced, kOther };

const char* strategy_kind_name(StrategyKind kind);

struct StrategyClass {
  StrategyKind kind = StrategyKind::kOther;
  // Facilities sharing the common destruction ratio. Empty for kOther.
  FacilitySet support;
  // The strictly-lower facility of a semi-balanced strategy.
  std::optional<std::size_t> residual;
  // Highest normalized position in the support (balanced kinds only).
  std::optional<std::size_t> top;
  std::optional<Ratio> common_ratio;
};

// Exact classification against the normalized facility order. A strategy
// that does not spend exactly R_l is kOther. Seried-balanced is reported in
// place of balanced whenever the support is a prefix.
StrategyClass classify(const Instance& instance, const LeaderStrategy& x);

}  // namespace stackprod
