#include "stackprod/generator.hpp"

#include <limits>
#include <numeric>

#include "stackprod/error.hpp"
#include "stackprod/leader.hpp"

namespace stackprod {

std::int64_t SeededRng::uniform(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());  // full range
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t cutoff = max - max % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= cutoff);
  return lo + static_cast<std::int64_t>(draw % span);
}

bool SeededRng::chance(std::uint64_t numerator, std::uint64_t denominator) {
  return static_cast<std::uint64_t>(
             uniform(0, static_cast<std::int64_t>(denominator) - 1)) < numerator;
}

namespace {

Ratio fraction(std::int64_t num, std::int64_t den) {
  Ratio value(num, den);
  value.canonicalize();
  return value;
}

// k / d with d in [1, max_den] and k in [1, upper * d].
Ratio draw_ratio(SeededRng& rng, std::int64_t upper, std::int64_t max_den) {
  const std::int64_t den = rng.uniform(1, max_den);
  const std::int64_t num = rng.uniform(1, upper * den);
  Ratio value(num, den);
  value.canonicalize();
  return value;
}

Ratio follower_budget_for(SeededRng& rng, const RawInstance& raw, std::int64_t grid) {
  Ratio total;
  for (const RawFacility& f : raw.facilities) total += f.destruction_quantity;
  return total * fraction(rng.uniform(1, grid - 1), grid);
}

void require_facilities(std::size_t n) {
  if (n == 0) throw Error(ErrorCode::kInvalidArgument, "instance size must be at least 1");
}

}  // namespace

RawInstance generate_instance(std::size_t n, std::uint64_t seed) {
  require_facilities(n);
  SeededRng rng(seed);
  RawInstance raw;
  raw.facilities.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Ratio p = draw_ratio(rng, 20, 4);
    Ratio a = draw_ratio(rng, 2, 4);
    raw.facilities.push_back({std::move(p), std::move(a)});
  }
  raw.leader_budget = draw_ratio(rng, 10, 4);
  raw.follower_budget = follower_budget_for(rng, raw, 64);
  return raw;
}

RawInstance generate_tie_heavy_instance(std::size_t n, std::uint64_t seed) {
  require_facilities(n);
  static const int kRates[][2] = {{1, 1}, {2, 1}, {3, 1}, {4, 1}, {6, 1}, {3, 2}, {1, 2}};
  static const int kQuantities[][2] = {{1, 2}, {1, 1}, {3, 2}, {2, 1}};
  SeededRng rng(seed);
  RawInstance raw;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& p = kRates[rng.uniform(0, 6)];
    const auto& a = kQuantities[rng.uniform(0, 3)];
    Ratio rate(p[0], p[1]), quantity(a[0], a[1]);
    rate.canonicalize();
    quantity.canonicalize();
    raw.facilities.push_back({rate, quantity});
  }
  raw.leader_budget = rng.uniform(1, 4);
  raw.follower_budget = follower_budget_for(rng, raw, 8);
  return raw;
}

LeaderStrategy random_leader_strategy(const Instance& instance, std::uint64_t seed) {
  SeededRng rng(seed);
  const std::size_t n = instance.size();
  LeaderStrategy x{std::vector<Ratio>(n)};

  const std::int64_t mode = rng.uniform(0, 5);
  if (mode == 0) return x;  // nothing allocated
  if (mode == 1) {
    // Balanced over a random nonempty set, so destruction ratios tie.
    FacilitySet set;
    for (std::size_t i = 0; i < n; ++i)
      if (rng.chance(1, 2)) set.push_back(i);
    if (set.empty()) set.push_back(static_cast<std::size_t>(rng.uniform(0, n - 1)));
    return balanced_allocation(instance, set);
  }

  std::vector<std::int64_t> weights(n);
  for (std::size_t i = 0; i < n; ++i)
    weights[i] = rng.chance(1, 3) ? 0 : rng.uniform(1, 12);
  const std::int64_t weight_total = std::accumulate(weights.begin(), weights.end(),
                                                    std::int64_t{0});
  if (weight_total == 0) return x;
  Ratio spend = instance.leader_budget();
  if (rng.chance(1, 2)) spend *= fraction(rng.uniform(1, 7), 8);
  for (std::size_t i = 0; i < n; ++i)
    x.amounts[i] = spend * fraction(weights[i], weight_total);
  for (Ratio& v : x.amounts) v.canonicalize();
  return x;
}

FollowerStrategy random_follower_strategy(const Instance& instance, std::uint64_t seed) {
  SeededRng rng(seed);
  const std::size_t n = instance.size();
  FollowerStrategy y{std::vector<Ratio>(n)};

  if (rng.chance(1, 2)) {
    // Greedy vertex for a uniformly random order (Fisher-Yates).
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    for (std::size_t i = n; i > 1; --i)
      std::swap(order[i - 1], order[static_cast<std::size_t>(rng.uniform(0, i - 1))]);
    Ratio remaining = instance.follower_budget();
    for (std::size_t pos : order) {
      const Ratio& a = instance[pos].destruction_quantity;
      y.amounts[pos] = a < remaining ? a : remaining;
      remaining -= y.amounts[pos];
    }
    return y;
  }

  Ratio total;
  for (std::size_t i = 0; i < n; ++i) {
    y.amounts[i] = instance[i].destruction_quantity * fraction(rng.uniform(0, 8), 8);
    y.amounts[i].canonicalize();
    total += y.amounts[i];
  }
  if (total > instance.follower_budget()) {
    Ratio shrink = instance.follower_budget() / total * fraction(rng.uniform(1, 8), 8);
    for (Ratio& v : y.amounts) v *= shrink;
  }
  return y;
}

}  // namespace stackprod
