// Command-line front end. Talks to the solver exclusively through the C API.

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "stackprod/stackprod.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidation = 2;
constexpr int kExitDisagreement = 3;

// Carries a C API failure up to main.
struct ApiFailure {
  spg_status status;
  std::string message;
};

int exit_code_for(spg_status status) {
  switch (status) {
    case SPG_OK: return kExitOk;
    case SPG_ERR_PARSE:
    case SPG_ERR_INVALID_ARGUMENT:
    case SPG_ERR_INTERNAL: return kExitUsage;
    default: return kExitValidation;
  }
}

void check(spg_status status) {
  if (status != SPG_OK) throw ApiFailure{status, spg_last_error()};
}

// Takes ownership of a string returned by the C API.
std::string take(char* text) {
  std::unique_ptr<char, decltype(&spg_string_free)> owner(text, &spg_string_free);
  return std::string(text);
}

template <typename Call>
std::string fetch(Call&& call) {
  char* out = nullptr;
  check(call(&out));
  return take(out);
}

template <typename Call>
json fetch_json(Call&& call) {
  return json::parse(fetch(std::forward<Call>(call)));
}

struct InstanceDeleter {
  void operator()(spg_instance* p) const { spg_instance_free(p); }
};
using InstanceHandle = std::unique_ptr<spg_instance, InstanceDeleter>;

InstanceHandle load_instance(const std::string& path) {
  spg_instance* raw = nullptr;
  check(spg_instance_from_file(path.c_str(), &raw));
  return InstanceHandle(raw);
}

InstanceHandle instance_from_json(const std::string& text) {
  spg_instance* raw = nullptr;
  check(spg_instance_from_json(text.c_str(), &raw));
  return InstanceHandle(raw);
}

std::string decimal(const std::string& rational) {
  return fetch([&](char** out) { return spg_format_decimal(rational.c_str(), 4, out); });
}

// "28/3 (~9.3333)"
std::string both(const json& rational) {
  const std::string text = rational.get<std::string>();
  if (text.find('/') == std::string::npos) return text;
  return text + " (~" + decimal(text) + ")";
}

std::string join(const json& values, const char* separator = ", ") {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += separator;
    out += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
  }
  return out;
}

// A strategy given inline ("0,7/10,...") or as a file holding either the
// same CSV text or a JSON array of rational strings.
std::string read_strategy(const std::string& inline_value, const std::string& path,
                          const char* name) {
  if (!inline_value.empty() && !path.empty())
    throw CLI::ValidationError(std::string("give --") + name + " or --" + name +
                               "-file, not both");
  if (path.empty()) return inline_value;
  std::ifstream in(path);
  if (!in) throw ApiFailure{SPG_ERR_PARSE, "cannot open strategy file '" + path + "'"};
  std::stringstream buffer;
  buffer << in.rdbuf();
  std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    json values;
    try {
      values = json::parse(text);
    } catch (const json::parse_error& e) {
      throw ApiFailure{SPG_ERR_PARSE, path + ": " + e.what()};
    }
    std::string csv;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (i) csv += ',';
      csv += values[i].is_string() ? values[i].get<std::string>() : values[i].dump();
    }
    return csv;
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' '))
    text.pop_back();
  return text;
}

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

struct Options {
  std::string format = "human";
  std::string instance_path;
  std::string x, x_file, y, y_file;
  std::string oracle = "subset";
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t max_n = 0;
  std::size_t limit = 0;
  unsigned resolution = 64;
  std::size_t n = 5;
  std::string output_path;
};

struct Outcome {
  json result;
  std::string human;
  int exit_code = kExitOk;
  bool include_instance = true;
};

Outcome run_solve(spg_instance* inst) {
  Outcome o;
  o.result = fetch_json([&](char** out) { return spg_solve(inst, out); });
  const json& r = o.result;
  std::ostringstream h;
  h << "optimal strategy x*: (" << join(r["strategy"]) << ")\n";
  h << "support:             {" << join(r["support"]) << "}\n";
  h << "composed net rate:   " << both(r["rate"]) << "\n";
  h << "worst-case value:    " << both(r["value"]) << "\n";
  h << "prefix rates:\n";
  for (const json& step : r["trace"])
    h << "  j=" << step["prefix"].get<std::size_t>() << "  rate " << both(step["rate"]) << "\n";
  if (!r["stopped_at"].is_null())
    h << "stopped before facility " << r["stopped_at"].get<std::size_t>() << "\n";
  o.human = h.str();
  return o;
}

Outcome run_follower(spg_instance* inst, const std::string& x) {
  Outcome o;
  o.result = fetch_json([&](char** out) { return spg_best_response(inst, x.c_str(), out); });
  const json& r = o.result;
  std::ostringstream h;
  h << "destruction ratios: (" << join(r["ratios"]) << ")\n";
  h << "destruction order:  (" << join(r["order"]) << ")\n";
  h << "threshold facility: " << r["threshold"].get<std::size_t>() << "\n";
  h << "destroyed set:      {" << join(r["destroyed"]) << "}\n";
  h << "best response y:    (" << join(r["y"]) << ")\n";
  h << "worst-case value:   " << both(r["value"]) << "\n";
  o.human = h.str();
  return o;
}

Outcome run_evaluate(spg_instance* inst, const std::string& x, const std::string& y) {
  Outcome o;
  o.result = fetch_json(
      [&](char** out) { return spg_evaluate(inst, x.c_str(), y.c_str(), out); });
  const json& r = o.result;
  std::ostringstream h;
  h << "facility  production  reduction\n";
  for (std::size_t i = 0; i < r["production"].size(); ++i)
    h << "  " << (i + 1) << "       " << r["production"][i].get<std::string>() << "  "
      << r["reduction"][i].get<std::string>() << "\n";
  h << "total production after destruction: " << both(r["total"]) << "\n";
  o.human = h.str();
  return o;
}

Outcome run_classify(spg_instance* inst, const std::string& x) {
  Outcome o;
  o.result = fetch_json([&](char** out) { return spg_classify(inst, x.c_str(), out); });
  const json& r = o.result;
  std::ostringstream h;
  h << "kind:    " << r["kind"].get<std::string>() << "\n";
  if (!r["support"].empty()) h << "support: {" << join(r["support"]) << "}\n";
  if (!r["residual"].is_null()) h << "residual facility: " << r["residual"] << "\n";
  if (!r["top"].is_null()) h << "highest facility:  " << r["top"] << "\n";
  if (!r["common_ratio"].is_null()) h << "common ratio: " << both(r["common_ratio"]) << "\n";
  o.human = h.str();
  return o;
}

json run_oracle(spg_instance* inst, const Options& opt, const std::string& x) {
  if (opt.oracle == "follower")
    return fetch_json(
        [&](char** out) { return spg_check_follower(inst, x.c_str(), opt.limit, out); });
  if (opt.oracle == "subset")
    return fetch_json([&](char** out) { return spg_check_subset(inst, opt.limit, out); });
  return fetch_json(
      [&](char** out) { return spg_check_grid(inst, opt.resolution, opt.limit, out); });
}

std::string random_strategy(spg_instance* inst, std::uint64_t seed) {
  return fetch([&](char** out) { return spg_random_strategy(inst, seed, out); });
}

Outcome run_check(const Options& opt, spg_instance* given) {
  Outcome o;
  json disagreements = json::array();
  std::size_t agreed = 0, total = 0;

  auto record = [&](const json& verdict, const std::string& instance_doc,
                    const std::string& x) {
    ++total;
    if (verdict["agree"].get<bool>()) {
      ++agreed;
      return;
    }
    json entry;
    entry["instance"] = json::parse(instance_doc);
    if (!x.empty()) entry["strategy"] = x;
    entry["verdict"] = verdict;
    disagreements.push_back(std::move(entry));
  };

  if (given != nullptr) {
    const std::string doc =
        fetch([&](char** out) { return spg_instance_to_json(given, out); });
    if (opt.oracle == "follower" && opt.x.empty()) {
      for (std::size_t t = 0; t < opt.trials; ++t) {
        const std::string x = random_strategy(given, splitmix64(opt.seed + t));
        record(run_oracle(given, opt, x), doc, x);
      }
    } else {
      json verdict = run_oracle(given, opt, opt.x);
      record(verdict, doc, opt.x);
      o.result["verdict"] = verdict;
    }
  } else {
    o.include_instance = false;
    std::size_t max_n = opt.max_n;
    if (max_n == 0) max_n = opt.oracle == "follower" ? 5 : opt.oracle == "subset" ? 8 : 3;
    for (std::size_t t = 0; t < opt.trials; ++t) {
      const std::uint64_t trial_seed = splitmix64(opt.seed * 1000003ULL + t);
      const std::size_t n = 1 + splitmix64(trial_seed) % max_n;
      const std::string doc = fetch([&](char** out) { return spg_generate(n, trial_seed, out); });
      InstanceHandle inst = instance_from_json(doc);
      std::string x;
      if (opt.oracle == "follower") x = random_strategy(inst.get(), splitmix64(trial_seed));
      record(run_oracle(inst.get(), opt, x), doc, x);
    }
  }

  o.result["oracle"] = opt.oracle;
  o.result["checks"] = total;
  o.result["agreed"] = agreed;
  o.result["disagreements"] = disagreements;
  std::ostringstream h;
  h << opt.oracle << " oracle: " << agreed << "/" << total << " agree\n";
  if (o.result.contains("verdict")) {
    const json& v = o.result["verdict"];
    h << "  oracle value: " << both(v["oracle_value"]) << "\n";
    h << "  solver value: " << both(v["solver_value"]) << "\n";
    h << "  gap:          " << both(v["gap"]) << "\n";
  }
  for (const json& d : disagreements)
    h << "DISAGREEMENT on instance " << d["instance"].dump() << "\n  "
      << d["verdict"].dump() << "\n";
  o.human = h.str();
  o.exit_code = agreed == total ? kExitOk : kExitDisagreement;
  return o;
}

Outcome run_generate(const Options& opt) {
  Outcome o;
  o.include_instance = false;
  const std::string doc =
      fetch([&](char** out) { return spg_generate(opt.n, opt.seed, out); });
  if (opt.output_path.empty()) {
    std::cout << doc;
    o.exit_code = -1;  // document already written
    return o;
  }
  std::ofstream file(opt.output_path, std::ios::binary);
  if (!file) throw ApiFailure{SPG_ERR_PARSE, "cannot write '" + opt.output_path + "'"};
  file << doc;
  o.result["path"] = opt.output_path;
  o.result["n"] = opt.n;
  o.result["seed"] = opt.seed;
  o.human = "wrote " + std::to_string(opt.n) + "-facility instance to " + opt.output_path + "\n";
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact solver for the Stackelberg production game"};
  app.require_subcommand(1);
  Options opt;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Output format")
        ->check(CLI::IsMember({"human", "json"}));
  };
  auto add_x = [&](CLI::App* cmd) {
    cmd->add_option("--x", opt.x, "Leader strategy, comma-separated, input order");
    cmd->add_option("--x-file", opt.x_file, "File with the leader strategy");
  };

  CLI::App* solve = app.add_subcommand("solve", "Optimal leader strategy");
  solve->add_option("instance", opt.instance_path, "Instance JSON file")->required();
  add_format(solve);

  CLI::App* follower = app.add_subcommand("follower", "Follower best response to x");
  follower->add_option("instance", opt.instance_path, "Instance JSON file")->required();
  add_x(follower);
  add_format(follower);

  CLI::App* evaluate = app.add_subcommand("evaluate", "Production after destruction for (x, y)");
  evaluate->add_option("instance", opt.instance_path, "Instance JSON file")->required();
  add_x(evaluate);
  evaluate->add_option("--y", opt.y, "Follower strategy, comma-separated, input order");
  evaluate->add_option("--y-file", opt.y_file, "File with the follower strategy");
  add_format(evaluate);

  CLI::App* classify = app.add_subcommand("classify", "Classify a leader strategy");
  classify->add_option("instance", opt.instance_path, "Instance JSON file")->required();
  add_x(classify);
  add_format(classify);

  CLI::App* check_cmd = app.add_subcommand("check", "Compare the solver with a brute-force oracle");
  check_cmd->add_option("instance", opt.instance_path,
                        "Instance JSON file; omit to check seeded random instances");
  check_cmd->add_option("--oracle", opt.oracle, "Oracle to run")
      ->check(CLI::IsMember({"follower", "subset", "grid"}));
  add_x(check_cmd);
  check_cmd->add_option("--seed", opt.seed, "Seed for random instances/strategies");
  check_cmd->add_option("--trials", opt.trials, "Number of random trials");
  check_cmd->add_option("--max-n", opt.max_n, "Largest random instance size");
  check_cmd->add_option("--resolution", opt.resolution, "Grid oracle resolution");
  check_cmd->add_option("--limit", opt.limit, "Oracle size limit (0 = default)");
  add_format(check_cmd);

  CLI::App* generate = app.add_subcommand("generate", "Write a random valid instance");
  generate->add_option("--n", opt.n, "Number of facilities")->required();
  generate->add_option("--seed", opt.seed, "Random seed");
  generate->add_option("-o,--output", opt.output_path, "Output path (stdout if omitted)");
  add_format(generate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  Outcome outcome;
  std::string command;
  InstanceHandle inst;
  try {
    if (!opt.instance_path.empty()) inst = load_instance(opt.instance_path);
    const std::string x = (follower->parsed() || evaluate->parsed() || classify->parsed() ||
                           check_cmd->parsed())
                              ? read_strategy(opt.x, opt.x_file, "x")
                              : std::string();
    if ((follower->parsed() || evaluate->parsed() || classify->parsed()) && x.empty())
      throw CLI::ValidationError("a leader strategy is required (--x or --x-file)");

    if (solve->parsed()) {
      command = "solve";
      outcome = run_solve(inst.get());
    } else if (follower->parsed()) {
      command = "follower";
      outcome = run_follower(inst.get(), x);
    } else if (evaluate->parsed()) {
      command = "evaluate";
      const std::string y = read_strategy(opt.y, opt.y_file, "y");
      if (y.empty()) throw CLI::ValidationError("a follower strategy is required (--y or --y-file)");
      outcome = run_evaluate(inst.get(), x, y);
    } else if (classify->parsed()) {
      command = "classify";
      outcome = run_classify(inst.get(), x);
    } else if (check_cmd->parsed()) {
      command = "check";
      opt.x = x;
      if (opt.oracle == "grid" && opt.resolution == 0)
        throw ApiFailure{SPG_ERR_ZERO_RESOLUTION, "grid resolution must be positive"};
      outcome = run_check(opt, inst.get());
    } else {
      command = "generate";
      outcome = run_generate(opt);
      if (outcome.exit_code < 0) return kExitOk;
    }
  } catch (const ApiFailure& failure) {
    std::cerr << "error (" << spg_status_name(failure.status) << "): " << failure.message << "\n";
    return exit_code_for(failure.status);
  } catch (const CLI::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  const double elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
          .count();

  if (opt.format == "json") {
    json report;
    json args = json::array();
    for (int i = 1; i < argc; ++i) args.push_back(argv[i]);
    report["command"] = command;
    report["arguments"] = std::move(args);
    if (inst && outcome.include_instance)
      report["instance"] =
          fetch_json([&](char** out) { return spg_instance_summary(inst.get(), out); });
    report["result"] = outcome.result;
    report["elapsed_ms"] = elapsed_ms;
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << outcome.human;
    std::cout << "(" << command << " took " << elapsed_ms << " ms)\n";
  }
  return outcome.exit_code;
}
