#include <doctest.h>
#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>

using json = nlohmann::json;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string command = std::string(STACKPROD_CLI) + " " + args + " 2>&1";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  Run result{0, {}};
  char buffer[4096];
  std::size_t got;
  while ((got = std::fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int raw = pclose(pipe);
  result.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return result;
}

std::string table1() { return std::string(STACKPROD_SAMPLE_PATH); }

std::string scratch(const std::string& name) {
  return std::string(STACKPROD_SCRATCH_DIR) + "/" + name;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream(path) << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool contains(const std::string& text, const std::string& needle) {
  return text.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("solve, human and json") {
  Run human = run("solve " + table1());
  CHECK(human.status == 0);
  CHECK(contains(human.out, "(1/2, 5/6, 1/3, 10/3, 0)"));
  CHECK(contains(human.out, "28/3"));
  CHECK(contains(human.out, "stopped before facility 5"));

  Run machine = run("solve " + table1() + " --format json");
  REQUIRE(machine.status == 0);
  json doc = json::parse(machine.out);
  CHECK(doc["command"] == "solve");
  CHECK(doc["result"]["value"] == "28/3");
  CHECK(doc["result"]["support"] == json::array({1, 2, 3, 4}));
  CHECK(doc["instance"]["n"] == 5);
  CHECK(doc["elapsed_ms"].is_number());
  // The report round-trips through a JSON parser unchanged.
  CHECK(json::parse(doc.dump()) == doc);
}

TEST_CASE("single facility and trivial follower files") {
  const std::string one = scratch("single.json");
  write_file(one, R"({"facilities": [{"p": "3", "a": "2"}], "R_l": "4", "R_f": "1/2"})");
  Run single = run("solve " + one + " --format json");
  REQUIRE(single.status == 0);
  json doc = json::parse(single.out);
  CHECK(doc["result"]["strategy"] == json::array({"4"}));
  CHECK(doc["result"]["value"] == "9");

  CHECK(run("check " + one + " --oracle grid --resolution 1").status == 0);

  const std::string trivial = scratch("trivial.json");
  write_file(trivial, R"({"facilities": [{"p": "3", "a": "2"}], "R_l": "4", "R_f": "2"})");
  Run rejected = run("solve " + trivial);
  CHECK(rejected.status == 2);
  CHECK(contains(rejected.out, "TrivialFollower"));

  const std::string malformed = scratch("malformed.json");
  write_file(malformed, R"({"facilities": [)");
  Run broken = run("solve " + malformed);
  CHECK(broken.status == 1);
  CHECK(contains(broken.out, "malformed JSON"));

  CHECK(run("solve " + scratch("missing.json")).status == 1);
  CHECK(run("").status == 1);
  CHECK(run("solve --format yaml " + table1()).status == 1);
}

TEST_CASE("follower") {
  Run reply = run("follower " + table1() + " --x 0,7/10,3/10,0,4");
  CHECK(reply.status == 0);
  CHECK(contains(reply.out, "(0, 28/5, 6, 0, 16/3)"));
  CHECK(contains(reply.out, "(0, 1, 1/4, 0, 1/2)"));
  CHECK(contains(reply.out, "4/3"));

  Run zero = run("follower " + table1() + " --x 0,0,0,0,0 --format json");
  REQUIRE(zero.status == 0);
  CHECK(json::parse(zero.out)["result"]["value"] == "0");

  Run infeasible = run("follower " + table1() + " --x 6,0,0,0,0");
  CHECK(infeasible.status == 2);
  CHECK(contains(infeasible.out, "InfeasibleStrategy"));

  CHECK(run("follower " + table1() + " --x 1,2").status == 2);
  CHECK(run("follower " + table1() + " --x 1,zz,0,0,0").status == 1);

  const std::string x_file = scratch("x.json");
  write_file(x_file, R"(["0", "7/10", "3/10", 0, 4])");
  Run from_file = run("follower " + table1() + " --x-file " + x_file + " --format json");
  REQUIRE(from_file.status == 0);
  CHECK(json::parse(from_file.out)["result"]["value"] == "4/3");
}

TEST_CASE("evaluate and classify") {
  Run rows = run("evaluate " + table1() + " --x 0,7/10,3/10,0,4 --y 0,7/8,1/8,0,3/4");
  CHECK(rows.status == 0);
  CHECK(contains(rows.out, "29/20"));
  CHECK(contains(rows.out, "49/10"));

  const std::string y_file = scratch("y.csv");
  write_file(y_file, "0,7/8,1/8,0,3/4\n");
  Run from_file = run("evaluate " + table1() + " --x 0,7/10,3/10,0,4 --y-file " + y_file +
                      " --format json");
  REQUIRE(from_file.status == 0);
  CHECK(json::parse(from_file.out)["result"]["total"] == "29/20");

  Run semi = run("classify " + table1() + " --x 1/15,2/3,4/15,0,4 --format json");
  REQUIRE(semi.status == 0);
  json doc = json::parse(semi.out);
  CHECK(doc["result"]["kind"] == "SemiBalanced");
  CHECK(doc["result"]["residual"] == 1);
}

TEST_CASE("check") {
  Run follower = run("check " + table1() + " --oracle follower --x 0,7/10,3/10,0,4");
  CHECK(follower.status == 0);
  CHECK(contains(follower.out, "agree"));

  Run subset = run("check " + table1() + " --oracle subset --format json");
  REQUIRE(subset.status == 0);
  json doc = json::parse(subset.out);
  CHECK(doc["result"]["agreed"] == 1);
  CHECK(doc["result"]["disagreements"].empty());
  CHECK(doc["result"]["verdict"]["oracle_value"] == "28/3");

  Run grid = run("check " + table1() + " --oracle grid --resolution 8 --limit 5");
  CHECK(grid.status == 0);

  Run too_large = run("check " + table1() + " --oracle grid");
  CHECK(too_large.status == 2);
  CHECK(contains(too_large.out, "TooLarge"));
  CHECK(run("check " + table1() + " --oracle grid --resolution 0 --limit 5").status == 2);

  Run random = run("check --oracle follower --seed 5 --trials 40 --max-n 5");
  CHECK(random.status == 0);
  CHECK(contains(random.out, "40/40"));
  Run subset_trials = run("check --oracle subset --seed 5");
  CHECK(subset_trials.status == 0);
  CHECK(contains(subset_trials.out, "100/100"));
  CHECK(run("check --oracle grid --seed 5 --trials 5 --resolution 16").status == 0);
  CHECK(run("check --oracle magic").status == 1);
}

TEST_CASE("generate") {
  const std::string first = scratch("gen_a.json");
  const std::string second = scratch("gen_b.json");
  REQUIRE(run("generate --n 5 --seed 42 -o " + first).status == 0);
  REQUIRE(run("generate --n 5 --seed 42 -o " + second).status == 0);
  CHECK(read_file(first) == read_file(second));
  CHECK(json::parse(read_file(first))["facilities"].size() == 5);
  CHECK(run("check " + first + " --oracle subset").status == 0);

  // The strategy in a solve report, fed back in, reproduces the reported value.
  Run solved = run("solve " + first + " --format json");
  REQUIRE(solved.status == 0);
  json report = json::parse(solved.out);
  std::string x;
  for (const auto& amount : report["result"]["strategy"]) {
    if (!x.empty()) x += ',';
    x += amount.get<std::string>();
  }
  Run replay = run("follower " + first + " --x " + x + " --format json");
  REQUIRE(replay.status == 0);
  CHECK(json::parse(replay.out)["result"]["value"] == report["result"]["value"]);
  Run again = run("solve " + first + " --format json");
  CHECK(json::parse(again.out)["result"] == report["result"]);

  const std::string eight = scratch("gen_8.json");
  REQUIRE(run("generate --n 8 --seed 3 -o " + eight).status == 0);
  CHECK(run("check " + eight + " --oracle subset").status == 0);

  Run to_stdout = run("generate --n 3 --seed 11");
  CHECK(to_stdout.status == 0);
  CHECK(json::parse(to_stdout.out)["facilities"].size() == 3);
  CHECK(run("generate --n 0 --seed 1").status != 0);
}
