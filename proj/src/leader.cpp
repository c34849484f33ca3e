#include "stackprod/leader.hpp"

#include <cstdint>
#include <limits>
#include <numeric>
#include <string>

#include "stackprod/error.hpp"

namespace stackprod {
namespace {

void check_set(const Instance& instance, const FacilitySet& set) {
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (set[k] >= instance.size())
      throw Error(ErrorCode::kInvalidArgument,
                  "facility position " + std::to_string(set[k]) + " out of range");
    if (k > 0 && set[k] <= set[k - 1])
      throw Error(ErrorCode::kInvalidArgument,
                  "facility set must be strictly ascending");
  }
}

Ratio quantity_sum(const Instance& instance, const FacilitySet& set) {
  Ratio total;
  for (std::size_t pos : set) total += instance[pos].destruction_quantity;
  return total;
}

// sum over the set of a_i / p_i
Ratio weight_sum(const Instance& instance, const FacilitySet& set) {
  Ratio total;
  for (std::size_t pos : set)
    total += instance[pos].destruction_quantity / instance[pos].production_rate;
  return total;
}

struct SmallFraction {
  unsigned long num;
  unsigned long den;
};

// Numerator and denominator both below 2^32, so products of two fit in 64 bits.
std::optional<SmallFraction> as_small(const Ratio& value) {
  static_assert(sizeof(unsigned long) >= 8);
  constexpr unsigned long kLimit = std::numeric_limits<std::uint32_t>::max();
  if (sgn(value) <= 0 || !mpz_fits_ulong_p(value.get_num_mpz_t())) return std::nullopt;
  unsigned long num = mpz_get_ui(value.get_num_mpz_t());
  if (num > kLimit || !mpz_fits_ulong_p(value.get_den_mpz_t())) return std::nullopt;
  unsigned long den = mpz_get_ui(value.get_den_mpz_t());
  if (den > kLimit) return std::nullopt;
  return SmallFraction{num, den};
}

// a / p for a facility whose values are small, reduced.
std::optional<SmallFraction> small_weight(const Facility& facility) {
  auto a = as_small(facility.destruction_quantity);
  auto p = as_small(facility.production_rate);
  if (!a || !p) return std::nullopt;
  unsigned long num = a->num * p->den;
  unsigned long den = a->den * p->num;
  unsigned long g = std::gcd(num, den);
  return SmallFraction{num / g, den / g};
}

// Running sum num/den where den is kept as the lcm of the addends'
// denominators instead of being fully reduced after every addition. The
// denominators of a long run of small fractions saturate quickly, so each
// step stays cheap; only readers that need lowest terms pay for a gcd.
class LazySum {
 public:
  explicit LazySum(const Ratio& start)
      : num_(start.get_num()), den_(start.get_den()) {}

  void add(unsigned long num, unsigned long den) {
    mpz_ptr n = num_.get_mpz_t();
    mpz_ptr d = den_.get_mpz_t();
    mpz_ptr t = scratch_.get_mpz_t();
    unsigned long g = mpz_gcd_ui(nullptr, d, den);
    if (g == den) {
      mpz_divexact_ui(t, d, den);
      mpz_addmul_ui(n, t, num);
    } else {
      unsigned long scale = den / g;
      mpz_mul_ui(n, n, scale);
      mpz_divexact_ui(t, d, g);
      mpz_addmul_ui(n, t, num);
      mpz_mul_ui(d, d, scale);
    }
  }

  void add(const Ratio& value) {
    mpz_class g = gcd(den_, value.get_den());
    mpz_class scale = value.get_den() / g;
    num_ = num_ * scale + value.get_num() * (den_ / g);
    den_ *= scale;
  }

  const mpz_class& num() const { return num_; }
  const mpz_class& den() const { return den_; }

 private:
  mpz_class num_;
  mpz_class den_;
  mpz_class scratch_;
};

// out = max(lhs / rhs, 0) in lowest terms; rhs must be positive.
void assign_clamped_quotient(Ratio& out, const LazySum& lhs, const LazySum& rhs) {
  if (sgn(lhs.num()) <= 0) {
    out = 0;
    return;
  }
  mpz_mul(out.get_num_mpz_t(), lhs.num().get_mpz_t(), rhs.den().get_mpz_t());
  mpz_mul(out.get_den_mpz_t(), lhs.den().get_mpz_t(), rhs.num().get_mpz_t());
  mpq_canonicalize(out.get_mpq_t());
}

void add_facility(const Facility& facility, LazySum& net, LazySum& weight) {
  auto a = as_small(facility.destruction_quantity);
  auto w = small_weight(facility);
  if (a && w) {
    net.add(a->num, a->den);
    weight.add(w->num, w->den);
  } else {
    net.add(facility.destruction_quantity);
    weight.add(Ratio(facility.destruction_quantity / facility.production_rate));
  }
}

}  // namespace

Ratio composed_net_rate(const Instance& instance, const FacilitySet& set) {
  check_set(instance, set);
  if (set.empty()) return Ratio(0);
  Ratio net = quantity_sum(instance, set) - instance.follower_budget();
  if (sgn(net) <= 0) return Ratio(0);
  return net / weight_sum(instance, set);
}

LeaderStrategy balanced_allocation(const Instance& instance,
                                   const FacilitySet& set) {
  check_set(instance, set);
  if (set.empty())
    throw Error(ErrorCode::kEmptySupport, "balanced allocation needs a nonempty set");
  const Ratio scale = instance.leader_budget() / weight_sum(instance, set);
  LeaderStrategy x{std::vector<Ratio>(instance.size())};
  for (std::size_t pos : set)
    x.amounts[pos] = instance[pos].destruction_quantity /
                     instance[pos].production_rate * scale;
  return x;
}

LeaderStrategy semi_balanced_allocation(const Instance& instance,
                                        const FacilitySet& set,
                                        std::size_t residual,
                                        const Ratio& residual_amount) {
  check_set(instance, set);
  if (set.empty())
    throw Error(ErrorCode::kEmptySupport, "semi-balanced allocation needs a nonempty set");
  if (residual >= instance.size())
    throw Error(ErrorCode::kInvalidArgument, "residual facility out of range");
  for (std::size_t pos : set)
    if (pos == residual)
      throw Error(ErrorCode::kInvalidArgument, "residual facility lies in the set");
  if (sgn(residual_amount) <= 0 || residual_amount >= instance.leader_budget())
    throw Error(ErrorCode::kNotSemiBalanced,
                "residual amount " + format_ratio(residual_amount) +
                    " must lie strictly between 0 and R_l");

  const Ratio common_ratio =
      (instance.leader_budget() - residual_amount) / weight_sum(instance, set);
  const Facility& r = instance[residual];
  const Ratio residual_ratio =
      r.production_rate * residual_amount / r.destruction_quantity;
  if (residual_ratio >= common_ratio)
    throw Error(ErrorCode::kNotSemiBalanced,
                "residual destruction ratio " + format_ratio(residual_ratio) +
                    " is not below the common ratio " + format_ratio(common_ratio));

  LeaderStrategy x{std::vector<Ratio>(instance.size())};
  for (std::size_t pos : set)
    x.amounts[pos] = common_ratio * instance[pos].destruction_quantity /
                     instance[pos].production_rate;
  x.amounts[residual] = residual_amount;
  return x;
}

Ratio semi_balanced_value(const Instance& instance, const FacilitySet& set,
                          std::size_t residual, const Ratio& residual_amount) {
  // Validates every precondition.
  semi_balanced_allocation(instance, set, residual, residual_amount);

  const Facility& r = instance[residual];
  const Ratio& budget = instance.follower_budget();
  const Ratio set_quantity = quantity_sum(instance, set);
  const Ratio with_residual = set_quantity + r.destruction_quantity;

  if (budget <= set_quantity)
    return composed_net_rate(instance, set) *
               (instance.leader_budget() - residual_amount) +
           r.production_rate * residual_amount;
  if (budget < with_residual)
    return r.production_rate * residual_amount / r.destruction_quantity *
           (with_residual - budget);
  return Ratio(0);
}

SolveReport solve(const Instance& instance) {
  const std::size_t n = instance.size();
  SolveReport report;
  LazySum net(-instance.follower_budget());  // sum a_i - R_f over the prefix
  LazySum weight(Ratio(0));                  // sum a_i / p_i over the prefix

  report.trace.reserve(n);
  const Ratio zero;
  for (std::size_t i = 0; i < n; ++i) {
    const Ratio& prefix_rate = report.trace.empty() ? zero : report.trace.back().rate;
    if (instance[i].production_rate <= prefix_rate) {
      report.stopped_at = i;
      break;
    }
    add_facility(instance[i], net, weight);
    PrefixRate& step = report.trace.emplace_back();
    step.prefix_size = i + 1;
    assign_clamped_quotient(step.rate, net, weight);
  }

  const std::size_t support_size = report.trace.size();
  report.support.resize(support_size);
  std::iota(report.support.begin(), report.support.end(), std::size_t{0});
  report.rate = report.trace.back().rate;
  report.value = report.rate * instance.leader_budget();

  // x_i = (a_i / p_i) * R_l / sum_S a_j / p_j
  Ratio scale;
  mpz_mul(scale.get_num_mpz_t(), instance.leader_budget().get_num_mpz_t(),
          weight.den().get_mpz_t());
  mpz_mul(scale.get_den_mpz_t(), instance.leader_budget().get_den_mpz_t(),
          weight.num().get_mpz_t());
  mpq_canonicalize(scale.get_mpq_t());

  report.strategy.amounts.resize(n);
  Ratio w;
  for (std::size_t i = 0; i < support_size; ++i) {
    const Facility& f = instance[i];
    if (auto small = small_weight(f)) {
      mpz_set_ui(w.get_num_mpz_t(), small->num);
      mpz_set_ui(w.get_den_mpz_t(), small->den);
    } else {
      w = f.destruction_quantity / f.production_rate;
    }
    mpq_mul(report.strategy.amounts[i].get_mpq_t(), w.get_mpq_t(), scale.get_mpq_t());
  }
  return report;
}

}  // namespace stackprod
