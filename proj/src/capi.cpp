#include "stackprod/stackprod.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include <json.hpp>

#include "stackprod/classify.hpp"
#include "stackprod/error.hpp"
#include "stackprod/follower.hpp"
#include "stackprod/generator.hpp"
#include "stackprod/instance.hpp"
#include "stackprod/instance_io.hpp"
#include "stackprod/leader.hpp"
#include "stackprod/oracle.hpp"

struct spg_instance {
  explicit spg_instance(stackprod::Instance validated) : instance(std::move(validated)) {}
  stackprod::Instance instance;
};

namespace {

using nlohmann::json;
using stackprod::ErrorCode;
using stackprod::Instance;
using stackprod::Ratio;

thread_local std::string last_error;

spg_status to_status(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return SPG_ERR_PARSE;
    case ErrorCode::kEmptyInstance: return SPG_ERR_EMPTY_INSTANCE;
    case ErrorCode::kNonPositiveRate: return SPG_ERR_NONPOSITIVE_RATE;
    case ErrorCode::kNonPositiveQuantity: return SPG_ERR_NONPOSITIVE_QUANTITY;
    case ErrorCode::kNonPositiveBudget: return SPG_ERR_NONPOSITIVE_BUDGET;
    case ErrorCode::kTrivialFollower: return SPG_ERR_TRIVIAL_FOLLOWER;
    case ErrorCode::kDimensionMismatch: return SPG_ERR_DIMENSION_MISMATCH;
    case ErrorCode::kInfeasibleStrategy: return SPG_ERR_INFEASIBLE_STRATEGY;
    case ErrorCode::kEmptySupport: return SPG_ERR_EMPTY_SUPPORT;
    case ErrorCode::kNotSemiBalanced: return SPG_ERR_NOT_SEMI_BALANCED;
    case ErrorCode::kTooLarge: return SPG_ERR_TOO_LARGE;
    case ErrorCode::kZeroResolution: return SPG_ERR_ZERO_RESOLUTION;
    case ErrorCode::kInvalidArgument: return SPG_ERR_INVALID_ARGUMENT;
  }
  return SPG_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into a status and last_error.
template <typename Body>
spg_status guarded(Body&& body) {
  try {
    body();
    return SPG_OK;
  } catch (const stackprod::Error& e) {
    last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown error";
  }
  return SPG_ERR_INTERNAL;
}

void require(const void* pointer, const char* name) {
  if (pointer == nullptr)
    throw stackprod::Error(ErrorCode::kInvalidArgument,
                           std::string(name) + " must not be null");
}

char* duplicate(const std::string& text) {
  char* copy = static_cast<char*>(std::malloc(text.size() + 1));
  if (copy == nullptr) throw std::bad_alloc();
  std::memcpy(copy, text.c_str(), text.size() + 1);
  return copy;
}

json ratio_array(std::span<const Ratio> values) {
  json out = json::array();
  for (const Ratio& v : values) out.push_back(stackprod::format_ratio(v));
  return out;
}

// Normalized values -> JSON array in input order.
json original_array(const Instance& inst, std::span<const Ratio> normalized) {
  return ratio_array(inst.to_original_order(normalized));
}

json id_array(const Instance& inst, const stackprod::FacilitySet& set) {
  json out = json::array();
  for (std::size_t id : inst.original_ids(set)) out.push_back(id + 1);
  return out;
}

json optional_id(const Instance& inst, const std::optional<std::size_t>& pos) {
  if (!pos) return nullptr;
  return inst[*pos].id + 1;
}

stackprod::LeaderStrategy leader_from_csv(const Instance& inst, const char* csv) {
  require(csv, "leader strategy");
  auto values = stackprod::parse_ratio_list(csv);
  return {inst.to_normalized_order(values)};
}

stackprod::FollowerStrategy follower_from_csv(const Instance& inst, const char* csv) {
  require(csv, "follower strategy");
  auto values = stackprod::parse_ratio_list(csv);
  return {inst.to_normalized_order(values)};
}

stackprod::FacilitySet set_from_csv(const Instance& inst, const char* csv) {
  require(csv, "facility set");
  std::vector<std::size_t> ids;
  for (const Ratio& v : stackprod::parse_ratio_list(csv)) {
    if (v.get_den() != 1 || v < 1)
      throw stackprod::Error(ErrorCode::kInvalidArgument,
                             "facility ids must be positive integers, got " +
                                 stackprod::format_ratio(v));
    if (!mpz_fits_ulong_p(v.get_num_mpz_t()))
      throw stackprod::Error(ErrorCode::kInvalidArgument, "facility id out of range");
    ids.push_back(mpz_get_ui(v.get_num_mpz_t()) - 1);
  }
  return inst.from_original_ids(ids);
}

void emit(const json& doc, char** out) {
  require(out, "out");
  *out = duplicate(doc.dump());
}

void emit(const std::string& text, char** out) {
  require(out, "out");
  *out = duplicate(text);
}

json verdict_json(const char* oracle, const Instance& inst,
                  const stackprod::OracleVerdict& verdict) {
  json doc;
  doc["oracle"] = oracle;
  doc["oracle_value"] = stackprod::format_ratio(verdict.oracle_value);
  doc["solver_value"] = stackprod::format_ratio(verdict.solver_value);
  doc["gap"] = stackprod::format_ratio(verdict.gap);
  doc["agree"] = verdict.agree;
  doc["witness"] = verdict.witness ? original_array(inst, *verdict.witness) : json(nullptr);
  return doc;
}

spg_status make_instance(const stackprod::RawInstance& raw, spg_instance** out) {
  require(out, "out");
  *out = new spg_instance(Instance::validate(raw));
  return SPG_OK;
}

}  // namespace

extern "C" {

const char* spg_version(void) { return "1.0.0"; }

const char* spg_status_name(spg_status status) {
  switch (status) {
    case SPG_OK: return "Ok";
    case SPG_ERR_PARSE: return stackprod::error_code_name(ErrorCode::kParse);
    case SPG_ERR_EMPTY_INSTANCE: return stackprod::error_code_name(ErrorCode::kEmptyInstance);
    case SPG_ERR_NONPOSITIVE_RATE: return stackprod::error_code_name(ErrorCode::kNonPositiveRate);
    case SPG_ERR_NONPOSITIVE_QUANTITY:
      return stackprod::error_code_name(ErrorCode::kNonPositiveQuantity);
    case SPG_ERR_NONPOSITIVE_BUDGET:
      return stackprod::error_code_name(ErrorCode::kNonPositiveBudget);
    case SPG_ERR_TRIVIAL_FOLLOWER: return stackprod::error_code_name(ErrorCode::kTrivialFollower);
    case SPG_ERR_DIMENSION_MISMATCH:
      return stackprod::error_code_name(ErrorCode::kDimensionMismatch);
    case SPG_ERR_INFEASIBLE_STRATEGY:
      return stackprod::error_code_name(ErrorCode::kInfeasibleStrategy);
    case SPG_ERR_EMPTY_SUPPORT: return stackprod::error_code_name(ErrorCode::kEmptySupport);
    case SPG_ERR_NOT_SEMI_BALANCED: return stackprod::error_code_name(ErrorCode::kNotSemiBalanced);
    case SPG_ERR_TOO_LARGE: return stackprod::error_code_name(ErrorCode::kTooLarge);
    case SPG_ERR_ZERO_RESOLUTION: return stackprod::error_code_name(ErrorCode::kZeroResolution);
    case SPG_ERR_INVALID_ARGUMENT: return stackprod::error_code_name(ErrorCode::kInvalidArgument);
    case SPG_ERR_INTERNAL: return "InternalError";
  }
  return "Unknown";
}

const char* spg_last_error(void) { return last_error.c_str(); }

void spg_string_free(char* text) { std::free(text); }

spg_status spg_format_decimal(const char* rational, int digits, char** out) {
  return guarded([&] {
    require(rational, "rational");
    emit(stackprod::format_decimal(stackprod::parse_ratio(rational), digits), out);
  });
}

spg_status spg_instance_from_json(const char* text, spg_instance** out) {
  return guarded([&] {
    require(text, "json");
    make_instance(stackprod::parse_instance_json(text), out);
  });
}

spg_status spg_instance_from_file(const char* path, spg_instance** out) {
  return guarded([&] {
    require(path, "path");
    make_instance(stackprod::read_instance_file(path), out);
  });
}

spg_status spg_instance_create(size_t n, const char* const* production_rates,
                               const char* const* destruction_quantities,
                               const char* leader_budget, const char* follower_budget,
                               spg_instance** out) {
  return guarded([&] {
    stackprod::RawInstance raw;
    if (n > 0) {
      require(production_rates, "production_rates");
      require(destruction_quantities, "destruction_quantities");
    }
    require(leader_budget, "leader_budget");
    require(follower_budget, "follower_budget");
    for (size_t i = 0; i < n; ++i) {
      require(production_rates[i], "production rate");
      require(destruction_quantities[i], "destruction quantity");
      raw.facilities.push_back({stackprod::parse_ratio(production_rates[i]),
                                stackprod::parse_ratio(destruction_quantities[i])});
    }
    raw.leader_budget = stackprod::parse_ratio(leader_budget);
    raw.follower_budget = stackprod::parse_ratio(follower_budget);
    make_instance(raw, out);
  });
}

void spg_instance_free(spg_instance* instance) { delete instance; }

size_t spg_instance_size(const spg_instance* instance) {
  return instance ? instance->instance.size() : 0;
}

spg_status spg_instance_to_json(const spg_instance* instance, char** out) {
  return guarded([&] {
    require(instance, "instance");
    emit(stackprod::instance_to_json(instance->instance.to_raw()), out);
  });
}

spg_status spg_instance_summary(const spg_instance* instance, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    json doc;
    doc["n"] = inst.size();
    doc["R_l"] = stackprod::format_ratio(inst.leader_budget());
    doc["R_f"] = stackprod::format_ratio(inst.follower_budget());
    doc["sum_a"] = stackprod::format_ratio(inst.total_destruction_quantity());
    json order = json::array();
    for (const stackprod::Facility& f : inst.facilities()) order.push_back(f.id + 1);
    doc["normalized_order"] = std::move(order);
    emit(doc, out);
  });
}

spg_status spg_solve(const spg_instance* instance, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const stackprod::SolveReport report = stackprod::solve(inst);
    json doc;
    doc["strategy"] = original_array(inst, report.strategy.amounts);
    doc["support"] = id_array(inst, report.support);
    doc["rate"] = stackprod::format_ratio(report.rate);
    doc["value"] = stackprod::format_ratio(report.value);
    json trace = json::array();
    for (const stackprod::PrefixRate& step : report.trace)
      trace.push_back({{"prefix", step.prefix_size},
                       {"rate", stackprod::format_ratio(step.rate)}});
    doc["trace"] = std::move(trace);
    doc["stopped_at"] = optional_id(inst, report.stopped_at);
    emit(doc, out);
  });
}

spg_status spg_best_response(const spg_instance* instance, const char* leader_csv,
                             char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto x = leader_from_csv(inst, leader_csv);
    const stackprod::FollowerBestResponse reply = stackprod::best_response(inst, x);
    json doc;
    doc["ratios"] = original_array(inst, stackprod::destruction_ratios(inst, x));
    json order = json::array();
    for (std::size_t pos : reply.order) order.push_back(inst[pos].id + 1);
    doc["order"] = std::move(order);
    doc["threshold"] = inst[reply.threshold].id + 1;
    doc["destroyed"] = id_array(inst, reply.destroyed);
    doc["y"] = original_array(inst, reply.strategy.amounts);
    doc["value"] = stackprod::format_ratio(reply.worst_case_value);
    emit(doc, out);
  });
}

spg_status spg_worst_case(const spg_instance* instance, const char* leader_csv,
                          char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    emit(stackprod::format_ratio(
             stackprod::worst_case(inst, leader_from_csv(inst, leader_csv))),
         out);
  });
}

spg_status spg_evaluate(const spg_instance* instance, const char* leader_csv,
                        const char* follower_csv, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto breakdown = stackprod::production_breakdown(
        inst, leader_from_csv(inst, leader_csv), follower_from_csv(inst, follower_csv));
    json doc;
    doc["production"] = original_array(inst, breakdown.production);
    doc["reduction"] = original_array(inst, breakdown.reduction);
    doc["total"] = stackprod::format_ratio(breakdown.total);
    emit(doc, out);
  });
}

spg_status spg_classify(const spg_instance* instance, const char* leader_csv,
                        char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const stackprod::StrategyClass verdict =
        stackprod::classify(inst, leader_from_csv(inst, leader_csv));
    json doc;
    doc["kind"] = stackprod::strategy_kind_name(verdict.kind);
    doc["support"] = id_array(inst, verdict.support);
    doc["residual"] = optional_id(inst, verdict.residual);
    doc["top"] = optional_id(inst, verdict.top);
    doc["common_ratio"] = verdict.common_ratio
                              ? json(stackprod::format_ratio(*verdict.common_ratio))
                              : json(nullptr);
    emit(doc, out);
  });
}

spg_status spg_composed_net_rate(const spg_instance* instance, const char* ids_csv,
                                 char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    emit(stackprod::format_ratio(
             stackprod::composed_net_rate(inst, set_from_csv(inst, ids_csv))),
         out);
  });
}

spg_status spg_balanced_allocation(const spg_instance* instance, const char* ids_csv,
                                   char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto x = stackprod::balanced_allocation(inst, set_from_csv(inst, ids_csv));
    emit(stackprod::format_ratio_list(inst.to_original_order(x.amounts)), out);
  });
}

spg_status spg_semi_balanced_value(const spg_instance* instance, const char* ids_csv,
                                   size_t residual_id, const char* residual_amount,
                                   char** out) {
  return guarded([&] {
    require(instance, "instance");
    require(residual_amount, "residual_amount");
    const Instance& inst = instance->instance;
    if (residual_id == 0 || residual_id > inst.size())
      throw stackprod::Error(ErrorCode::kInvalidArgument, "residual id out of range");
    const Ratio value = stackprod::semi_balanced_value(
        inst, set_from_csv(inst, ids_csv), inst.position_of(residual_id - 1),
        stackprod::parse_ratio(residual_amount));
    emit(stackprod::format_ratio(value), out);
  });
}

spg_status spg_check_follower(const spg_instance* instance, const char* leader_csv,
                              size_t limit, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto verdict = stackprod::follower_oracle(
        inst, leader_from_csv(inst, leader_csv),
        limit ? limit : stackprod::kFollowerOracleLimit);
    emit(verdict_json("follower", inst, verdict), out);
  });
}

spg_status spg_check_subset(const spg_instance* instance, size_t limit, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto verdict = stackprod::leader_subset_oracle(
        inst, limit ? limit : stackprod::kSubsetOracleLimit);
    emit(verdict_json("subset", inst, verdict), out);
  });
}

spg_status spg_check_grid(const spg_instance* instance, unsigned resolution, size_t limit,
                          char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto verdict = stackprod::leader_grid_oracle(
        inst, resolution, limit ? limit : stackprod::kGridOracleLimit);
    json doc = verdict_json("grid", inst, verdict);
    doc["resolution"] = resolution;
    emit(doc, out);
  });
}

spg_status spg_generate(size_t n, uint64_t seed, char** out) {
  return guarded([&] {
    emit(stackprod::instance_to_json(stackprod::generate_instance(n, seed)), out);
  });
}

spg_status spg_random_strategy(const spg_instance* instance, uint64_t seed, char** out) {
  return guarded([&] {
    require(instance, "instance");
    const Instance& inst = instance->instance;
    const auto x = stackprod::random_leader_strategy(inst, seed);
    emit(stackprod::format_ratio_list(inst.to_original_order(x.amounts)), out);
  });
}

}  // extern "C"
