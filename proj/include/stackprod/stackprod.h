/*
 * C interface to the stackprod solver.
 *
 * Every rational crossing this boundary is a string: inputs accept fraction
 * ("9/10"), integer or decimal ("0.9") forms; outputs are lowest-terms
 * fraction strings. Strategies are comma-separated lists in the instance's
 * input order, e.g. "0,7/10,3/10,0,4". Facility ids in results are 1-based
 * input positions.
 *
 * Functions that produce text allocate it and hand ownership to the caller;
 * release it with spg_string_free. On failure a function returns a non-zero
 * status, leaves its output untouched, and records a message retrievable with
 * spg_last_error (thread-local, valid until the next failing call).
 */
#ifndef STACKPROD_STACKPROD_H_
#define STACKPROD_STACKPROD_H_

#include <stddef.h>
#include <stdint.h>

#if defined(SPG_BUILDING_LIBRARY)
#define SPG_API __attribute__((visibility("default")))
#else
#define SPG_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct spg_instance spg_instance;

typedef enum spg_status {
  SPG_OK = 0,
  SPG_ERR_PARSE = 1,
  SPG_ERR_EMPTY_INSTANCE = 2,
  SPG_ERR_NONPOSITIVE_RATE = 3,
  SPG_ERR_NONPOSITIVE_QUANTITY = 4,
  SPG_ERR_NONPOSITIVE_BUDGET = 5,
  SPG_ERR_TRIVIAL_FOLLOWER = 6,
  SPG_ERR_DIMENSION_MISMATCH = 7,
  SPG_ERR_INFEASIBLE_STRATEGY = 8,
  SPG_ERR_EMPTY_SUPPORT = 9,
  SPG_ERR_NOT_SEMI_BALANCED = 10,
  SPG_ERR_TOO_LARGE = 11,
  SPG_ERR_ZERO_RESOLUTION = 12,
  SPG_ERR_INVALID_ARGUMENT = 13,
  SPG_ERR_INTERNAL = 99
} spg_status;

SPG_API const char* spg_version(void);
/* "TrivialFollower", "ParseError", ... */
SPG_API const char* spg_status_name(spg_status status);
SPG_API const char* spg_last_error(void);
SPG_API void spg_string_free(char* text);

/* Decimal rendering of a rational string rounded to `digits` places. For
 * display only. */
SPG_API spg_status spg_format_decimal(const char* rational, int digits, char** out);

/* Instances. Validation sorts facilities internally; every call below still
 * speaks input order. */
SPG_API spg_status spg_instance_from_json(const char* json, spg_instance** out);
SPG_API spg_status spg_instance_from_file(const char* path, spg_instance** out);
SPG_API spg_status spg_instance_create(size_t n, const char* const* production_rates,
                                       const char* const* destruction_quantities,
                                       const char* leader_budget,
                                       const char* follower_budget,
                                       spg_instance** out);
SPG_API void spg_instance_free(spg_instance* instance);
SPG_API size_t spg_instance_size(const spg_instance* instance);
/* Instance file document (input order, fraction strings). */
SPG_API spg_status spg_instance_to_json(const spg_instance* instance, char** out);
/* {"n", "R_l", "R_f", "sum_a", "normalized_order": [ids]} */
SPG_API spg_status spg_instance_summary(const spg_instance* instance, char** out);

/* Optimal leader strategy:
 * {"strategy": [...], "support": [ids], "rate", "value",
 *  "trace": [{"prefix": j, "rate"}...], "stopped_at": id|null} */
SPG_API spg_status spg_solve(const spg_instance* instance, char** out);

/* Follower best response:
 * {"ratios": [...], "order": [ids], "threshold": id, "destroyed": [ids],
 *  "y": [...], "value"} */
SPG_API spg_status spg_best_response(const spg_instance* instance,
                                     const char* leader_csv, char** out);

/* Worst-case production as a fraction string. */
SPG_API spg_status spg_worst_case(const spg_instance* instance,
                                  const char* leader_csv, char** out);

/* {"production": [...], "reduction": [...], "total"} */
SPG_API spg_status spg_evaluate(const spg_instance* instance, const char* leader_csv,
                                const char* follower_csv, char** out);

/* {"kind", "support": [ids], "residual": id|null, "top": id|null,
 *  "common_ratio": r|null} */
SPG_API spg_status spg_classify(const spg_instance* instance,
                                const char* leader_csv, char** out);

/* Composed net production rate of a set given as comma-separated 1-based ids
 * (empty string for the empty set). Fraction string. */
SPG_API spg_status spg_composed_net_rate(const spg_instance* instance,
                                         const char* ids_csv, char** out);

/* Balanced allocation over a nonempty id set, as a strategy CSV. */
SPG_API spg_status spg_balanced_allocation(const spg_instance* instance,
                                           const char* ids_csv, char** out);

/* Closed-form semi-balanced value: set of ids, residual id, residual amount. */
SPG_API spg_status spg_semi_balanced_value(const spg_instance* instance,
                                           const char* ids_csv, size_t residual_id,
                                           const char* residual_amount, char** out);

/* Oracle verdicts:
 * {"oracle", "oracle_value", "solver_value", "gap", "agree", "witness"}.
 * A limit of 0 selects the default (7 follower, 20 subset, 4 grid). */
SPG_API spg_status spg_check_follower(const spg_instance* instance,
                                      const char* leader_csv, size_t limit,
                                      char** out);
SPG_API spg_status spg_check_subset(const spg_instance* instance, size_t limit,
                                    char** out);
SPG_API spg_status spg_check_grid(const spg_instance* instance, unsigned resolution,
                                  size_t limit, char** out);

/* Random valid instance document, deterministic in (n, seed). */
SPG_API spg_status spg_generate(size_t n, uint64_t seed, char** out);
/* Random feasible leader strategy CSV for the instance. */
SPG_API spg_status spg_random_strategy(const spg_instance* instance, uint64_t seed,
                                       char** out);

#ifdef __cplusplus
}  // extern "C"
#endif

#endif  // STACKPROD_STACKPROD_H_
