#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <string>

#include <sys/wait.h>

#include <json.hpp>

namespace {

struct RunResult {
  int exitCode = -1;
  std::string out;
};

// Runs the tool named by the OSCTOOL environment variable with the given
// arguments, capturing stdout; stderr is discarded.
RunResult runTool(const std::string& args) {
  const char* tool = std::getenv("OSCTOOL");
  REQUIRE(tool != nullptr);
  std::string cmd = std::string("\"") + tool + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  RunResult r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  int status = pclose(pipe);
  if (status >= 0 && WIFEXITED(status)) r.exitCode = WEXITSTATUS(status);
  return r;
}

bool haveTool() {
  if (std::getenv("OSCTOOL")) return true;
  MESSAGE("OSCTOOL is not set; skipping command-line checks");
  return false;
}

TEST_CASE("pair oscillation prints the bare value") {
  if (!haveTool()) return;
  auto r = runTool("osc finite --s 1,2,3 --t 3,4");
  CHECK(r.exitCode == 0);
  CHECK(r.out == "2\n");
}

TEST_CASE("walks report their traces as JSON") {
  if (!haveTool()) return;
  auto r = runTool("walk --alpha 3 --beta \"w*2\"");
  REQUIRE(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "walk");
  CHECK(j["seed"] == 0);
  CHECK(j["result"]["upperTrace"] == nlohmann::json({"w*2", "w", "3"}));
  CHECK(j["result"]["lowerTrace"] == nlohmann::json({"0", "2"}));
  CHECK(j["counterexamples"].is_array());
  CHECK(j["elapsed_ms"] == 0);
}

TEST_CASE("json format carries the envelope for value commands") {
  if (!haveTool()) return;
  auto r = runTool("osc finite --s 1,2,3 --t 3,4 --format json");
  REQUIRE(r.exitCode == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["command"] == "osc finite");
  CHECK(j["result"]["osc"] == 2);
  CHECK(j["budgets"]["search"] == 10000);
}

TEST_CASE("verification runs are deterministic") {
  if (!haveTool()) return;
  auto first = runTool("verify seq --seed 7");
  auto second = runTool("verify seq --seed 7");
  CHECK(first.exitCode == 0);
  CHECK(second.exitCode == 0);
  CHECK(first.out == second.out);
  auto j = nlohmann::json::parse(first.out);
  CHECK(j["result"]["passed"] == true);
  CHECK(j["counterexamples"].empty());
}

TEST_CASE("usage and module errors exit with code 2") {
  if (!haveTool()) return;
  CHECK(runTool("verify bogus").exitCode == 2);
  CHECK(runTool("osc triple --s 1 --t 1 --u 2").exitCode == 2);
  CHECK(runTool("nonsense").exitCode == 2);
  CHECK(runTool("osc finite --s 1,2,3").exitCode == 2);
  // csv is only defined for tabular outputs.
  CHECK(runTool("walk --alpha 3 --beta \"w*2\" --format csv").exitCode == 2);
}

TEST_CASE("help is available") {
  if (!haveTool()) return;
  auto r = runTool("--help");
  CHECK(r.exitCode == 0);
  CHECK(r.out.find("verify") != std::string::npos);
}

TEST_CASE("global flags work before or after the subcommand") {
  if (!haveTool()) return;
  auto before = runTool("--format json osc finite --s 1,2,3 --t 3,4");
  auto after = runTool("osc finite --s 1,2,3 --t 3,4 --format json");
  CHECK(before.exitCode == 0);
  CHECK(before.out == after.out);
}

}  // namespace
