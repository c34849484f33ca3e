#include "stackprod/follower.hpp"

#include <algorithm>
#include <numeric>

#include "stackprod/error.hpp"

namespace stackprod {

std::vector<Ratio> destruction_ratios(const Instance& instance,
                                      const LeaderStrategy& x) {
  check_feasible(instance, x);
  std::vector<Ratio> ratios(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    if (sgn(x.amounts[i]) == 0) continue;
    ratios[i] = instance[i].production_rate * x.amounts[i] /
                instance[i].destruction_quantity;
  }
  return ratios;
}

FollowerBestResponse best_response(const Instance& instance,
                                   const LeaderStrategy& x) {
  const std::vector<Ratio> ratios = destruction_ratios(instance, x);
  const std::size_t n = instance.size();

  FollowerBestResponse reply;
  reply.order.resize(n);
  std::iota(reply.order.begin(), reply.order.end(), std::size_t{0});
  std::vector<double> hints(n);
  for (std::size_t i = 0; i < n; ++i) hints[i] = to_double(ratios[i]);
  std::sort(reply.order.begin(), reply.order.end(),
            [&](std::size_t lhs, std::size_t rhs) {
              int c = compare_hinted(ratios[lhs], hints[lhs], ratios[rhs], hints[rhs]);
              if (c != 0) return c > 0;
              return instance[lhs].id < instance[rhs].id;
            });

  reply.strategy.amounts.assign(n, Ratio());
  Ratio remaining = instance.follower_budget();
  std::size_t k = 0;
  // R_f < sum a, so the budget runs out at or before the last facility.
  for (; k < n; ++k) {
    const std::size_t pos = reply.order[k];
    const Ratio& quantity = instance[pos].destruction_quantity;
    if (quantity >= remaining) {
      reply.strategy.amounts[pos] = remaining;
      break;
    }
    reply.strategy.amounts[pos] = quantity;
    remaining -= quantity;
  }
  reply.threshold = reply.order[k];
  reply.destroyed.assign(reply.order.begin(), reply.order.begin() + k + 1);
  std::sort(reply.destroyed.begin(), reply.destroyed.end());

  Ratio value;
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(x.amounts[i]) == 0) continue;
    value += instance[i].production_rate * x.amounts[i];
    value -= ratios[i] * reply.strategy.amounts[i];
  }
  reply.worst_case_value = value;
  return reply;
}

ProductionBreakdown production_breakdown(const Instance& instance,
                                         const LeaderStrategy& x,
                                         const FollowerStrategy& y) {
  check_feasible(instance, x);
  check_feasible(instance, y);
  ProductionBreakdown out;
  out.production.resize(instance.size());
  out.reduction.resize(instance.size());
  for (std::size_t i = 0; i < instance.size(); ++i) {
    out.production[i] = instance[i].production_rate * x.amounts[i];
    out.reduction[i] =
        out.production[i] * y.amounts[i] / instance[i].destruction_quantity;
    out.total += out.production[i] - out.reduction[i];
  }
  return out;
}

Ratio evaluate(const Instance& instance, const LeaderStrategy& x,
               const FollowerStrategy& y) {
  return production_breakdown(instance, x, y).total;
}

Ratio worst_case(const Instance& instance, const LeaderStrategy& x) {
  return best_response(instance, x).worst_case_value;
}

}  // namespace stackprod
