#include "stackprod/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "stackprod/error.hpp"
#include "stackprod/follower.hpp"
#include "stackprod/leader.hpp"

namespace stackprod {
namespace {

void check_size(const Instance& instance, std::size_t limit, const char* oracle) {
  if (instance.size() > limit)
    throw Error(ErrorCode::kTooLarge,
                std::string(oracle) + " oracle is limited to " + std::to_string(limit) +
                    " facilities, instance has " + std::to_string(instance.size()));
}

}  // namespace

OracleVerdict follower_oracle(const Instance& instance, const LeaderStrategy& x,
                              std::size_t limit) {
  check_size(instance, limit, "follower");
  check_feasible(instance, x);
  const std::size_t n = instance.size();

  std::vector<Ratio> production(n);
  Ratio total_production;
  for (std::size_t i = 0; i < n; ++i) {
    production[i] = instance[i].production_rate * x.amounts[i];
    total_production += production[i];
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<Ratio> y(n);
  OracleVerdict verdict;
  bool first = true;
  do {
    // Greedy filling of the follower's budget in this order.
    std::fill(y.begin(), y.end(), Ratio(0));
    Ratio remaining = instance.follower_budget();
    for (std::size_t pos : order) {
      if (sgn(remaining) == 0) break;
      const Ratio& quantity = instance[pos].destruction_quantity;
      y[pos] = quantity < remaining ? quantity : remaining;
      remaining -= y[pos];
    }
    Ratio value = total_production;
    for (std::size_t i = 0; i < n; ++i)
      if (sgn(y[i]) != 0) value -= production[i] * y[i] / instance[i].destruction_quantity;
    if (first || value < verdict.oracle_value) {
      verdict.oracle_value = value;
      verdict.witness = y;
      first = false;
    }
  } while (std::next_permutation(order.begin(), order.end()));

  verdict.solver_value = worst_case(instance, x);
  verdict.gap = verdict.oracle_value - verdict.solver_value;
  verdict.agree = sgn(verdict.gap) == 0;
  return verdict;
}

OracleVerdict leader_subset_oracle(const Instance& instance, std::size_t limit) {
  check_size(instance, limit, "subset");
  const std::size_t n = instance.size();

  std::vector<Ratio> weight(n);
  for (std::size_t i = 0; i < n; ++i)
    weight[i] = instance[i].destruction_quantity / instance[i].production_rate;

  // Gray-code walk: each step toggles one facility, so the two sums are
  // updated in O(1) instead of being recomputed per subset.
  Ratio quantity_sum, weight_sum, rate;
  Ratio best_rate;
  std::uint64_t best_mask = 0;
  std::uint64_t gray = 0;
  const std::uint64_t count = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < count; ++k) {
    const unsigned bit = static_cast<unsigned>(__builtin_ctzll(k));
    gray ^= std::uint64_t{1} << bit;
    if (gray & (std::uint64_t{1} << bit)) {
      quantity_sum += instance[bit].destruction_quantity;
      weight_sum += weight[bit];
    } else {
      quantity_sum -= instance[bit].destruction_quantity;
      weight_sum -= weight[bit];
    }
    if (quantity_sum > instance.follower_budget()) {
      rate = (quantity_sum - instance.follower_budget()) / weight_sum;
    } else {
      rate = 0;
    }
    if (best_mask == 0 || rate > best_rate) {
      best_rate = rate;
      best_mask = gray;
    }
  }

  OracleVerdict verdict;
  verdict.oracle_value = best_rate * instance.leader_budget();
  Ratio best_weight;
  for (std::size_t i = 0; i < n; ++i)
    if (best_mask & (std::uint64_t{1} << i)) best_weight += weight[i];
  std::vector<Ratio> witness(n);
  for (std::size_t i = 0; i < n; ++i)
    if (best_mask & (std::uint64_t{1} << i))
      witness[i] = weight[i] * instance.leader_budget() / best_weight;
  verdict.witness = std::move(witness);

  verdict.solver_value = solve(instance).value;
  verdict.gap = verdict.oracle_value - verdict.solver_value;
  verdict.agree = sgn(verdict.gap) == 0;
  return verdict;
}

OracleVerdict leader_grid_oracle(const Instance& instance, unsigned resolution,
                                 std::size_t limit) {
  if (resolution == 0)
    throw Error(ErrorCode::kZeroResolution, "grid resolution must be positive");
  check_size(instance, limit, "grid");
  const std::size_t n = instance.size();

  // The follower's reply can be taken to be a greedy filling for some order,
  // and for a fixed filling y, P(x, y) = sum_i x_i p_i (1 - y_i / a_i) is
  // linear in x. So P(x) is the minimum of at most n! linear forms. Scaling
  // every coefficient by a common denominator turns each form into integers,
  // and x = k R_l / resolution reduces the grid search to integer vectors k.
  std::vector<std::vector<Ratio>> forms;
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  do {
    std::vector<Ratio> coefficients(n);
    Ratio remaining = instance.follower_budget();
    for (std::size_t pos : order) {
      const Facility& f = instance[pos];
      const Ratio y = f.destruction_quantity < remaining ? f.destruction_quantity : remaining;
      remaining -= y;
      coefficients[pos] = f.production_rate * (1 - y / f.destruction_quantity);
    }
    forms.push_back(std::move(coefficients));
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(forms.begin(), forms.end());
  forms.erase(std::unique(forms.begin(), forms.end()), forms.end());

  mpz_class common = 1;
  for (const auto& form : forms)
    for (const Ratio& c : form) mpz_lcm(common.get_mpz_t(), common.get_mpz_t(), c.get_den_mpz_t());
  std::vector<std::vector<mpz_class>> integer_forms;
  for (const auto& form : forms) {
    std::vector<mpz_class> scaled(n);
    for (std::size_t i = 0; i < n; ++i)
      scaled[i] = form[i].get_num() * (common / form[i].get_den());
    integer_forms.push_back(std::move(scaled));
  }

  std::vector<unsigned long> units(n, 0);
  std::vector<unsigned long> best_units(n, 0);
  mpz_class best, worst, value;
  bool first = true;
  while (true) {
    bool have_worst = false;
    for (const auto& form : integer_forms) {
      value = 0;
      for (std::size_t i = 0; i < n; ++i)
        if (units[i]) mpz_addmul_ui(value.get_mpz_t(), form[i].get_mpz_t(), units[i]);
      if (!have_worst || value < worst) {
        worst = value;
        have_worst = true;
      }
    }
    if (first || worst > best) {
      best = worst;
      best_units = units;
      first = false;
    }
    // Next k in lexicographic order with sum k_i <= resolution: bump the last
    // coordinate that has room, zeroing the ones after it.
    unsigned long used = std::accumulate(units.begin(), units.end(), 0ul);
    std::size_t i = n;
    bool exhausted = false;
    while (true) {
      --i;
      if (used < resolution) {
        ++units[i];
        break;
      }
      used -= units[i];
      units[i] = 0;
      if (i == 0) {
        exhausted = true;
        break;
      }
    }
    if (exhausted) break;
  }

  const Ratio step = instance.leader_budget() / resolution;
  OracleVerdict verdict;
  verdict.oracle_value = Ratio(best, common) * step;
  verdict.oracle_value.canonicalize();
  std::vector<Ratio> witness(n);
  for (std::size_t i = 0; i < n; ++i) witness[i] = step * best_units[i];
  verdict.witness = std::move(witness);

  verdict.solver_value = solve(instance).value;
  verdict.gap = verdict.oracle_value - verdict.solver_value;
  verdict.agree = sgn(verdict.gap) <= 0;
  return verdict;
}

}  // namespace stackprod
