#include "stackprod/classify.hpp"

#include <algorithm>
#include <vector>

namespace stackprod {

const char* strategy_kind_name(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kBalanced: return "Balanced";
    case StrategyKind::kSemiBalanced: return "SemiBalanced";
    case StrategyKind::kSeriedBalanced: return "SeriedBalanced";
    case StrategyKind::kOther: return "Other";
  }
  return "Other";
}

StrategyClass classify(const Instance& instance, const LeaderStrategy& x) {
  check_feasible(instance, x);
  StrategyClass result;

  Ratio total;
  for (const Ratio& amount : x.amounts) total += amount;
  if (total != instance.leader_budget()) return result;

  FacilitySet positive;
  std::vector<Ratio> ratios;
  for (std::size_t pos = 0; pos < instance.size(); ++pos) {
    if (sgn(x.amounts[pos]) == 0) continue;
    positive.push_back(pos);
    ratios.push_back(instance[pos].production_rate * x.amounts[pos] /
                     instance[pos].destruction_quantity);
  }

  if (std::all_of(ratios.begin(), ratios.end(),
                  [&](const Ratio& r) { return r == ratios.front(); })) {
    result.top = positive.back();
    result.kind = positive.back() + 1 == positive.size()
                      ? StrategyKind::kSeriedBalanced
                      : StrategyKind::kBalanced;
    result.common_ratio = ratios.front();
    result.support = std::move(positive);
    return result;
  }

  // Semi-balanced: one strictly lowest ratio, every other ratio equal.
  auto lowest = std::min_element(ratios.begin(), ratios.end(),
                                 [](const Ratio& a, const Ratio& b) { return a < b; });
  const std::size_t lowest_index = static_cast<std::size_t>(lowest - ratios.begin());
  const Ratio* common = nullptr;
  for (std::size_t k = 0; k < ratios.size(); ++k) {
    if (k == lowest_index) continue;
    if (common == nullptr) {
      common = &ratios[k];
    } else if (ratios[k] != *common) {
      return result;
    }
  }
  // A tie for the lowest ratio would make `common` equal to it; ratios are
  // not all equal here, so common > lowest exactly when the lowest is unique.
  if (common == nullptr || *common <= *lowest) return result;

  result.kind = StrategyKind::kSemiBalanced;
  result.residual = positive[lowest_index];
  result.common_ratio = *common;
  positive.erase(positive.begin() + static_cast<std::ptrdiff_t>(lowest_index));
  result.support = std::move(positive);
  return result;
}

}  // namespace stackprod
