#include <gtest/gtest.h>
#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <nlohmann/json.hpp>

#include "evlogic/model.hpp"
#include "evlogic/semantics.hpp"

namespace {

struct Result {
  int code = -1;
  std::string out;
};

Result run(const std::string& args) {
  const std::string cmd = std::string(EVLOGIC_CLI) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(EVLOGIC_DATA) + "/" + name + ".json"; }

std::string temp(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("evlogic_cli_test_" + name)).string();
}

}  // namespace

TEST(Cli, CheckVerdictsAndExitCodes) {
  Result r = run("check " + data("counter-belief") + " '[B] q'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true at all worlds\n");
  r = run("check " + data("counter-belief") + " 'B{p} q | B{~p} q'");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "false at all worlds\n");
  r = run("check " + data("staircase") + " p --world 2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "true at 2\n");
  EXPECT_EQ(run("check " + data("staircase") + " p --world 1").code, 1);
}

TEST(Cli, InputErrorsExitTwo) {
  EXPECT_EQ(run("check " + data("staircase") + " '[B p'").code, 2);
  EXPECT_EQ(run("check /nonexistent/model.json p").code, 2);
  EXPECT_EQ(run("check " + data("staircase") + " p --world 9").code, 2);
  EXPECT_EQ(run("frobnicate").code, 2);
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("check " + data("staircase") + " p --mode loose").code, 2);
  EXPECT_EQ(run("check " + data("staircase") + " '[B] p' --mode explicit").code, 2);
  EXPECT_EQ(run("add-evidence " + data("staircase") + " 'p & ~p'").code, 2);
  EXPECT_EQ(run("classify " + data("constraint-violation") + " --strict").code, 2);
  EXPECT_EQ(run("validate --axiom nope").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST(Cli, JsonOutput) {
  const Result r = run("check " + data("staircase") + " '[P] p' --format json");
  ASSERT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["true_at"], nlohmann::json::parse(R"(["2", "3"])"));
  EXPECT_EQ(j["holds"], false);
}

TEST(Cli, ClassifyAndDerive) {
  EXPECT_EQ(run("classify " + data("constraint-violation")).code, 1);
  const Result one = run("classify " + data("one-point") + " --format json");
  EXPECT_EQ(one.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(one.out)["report"]["concise"].get<bool>());
  const Result d = run("derive " + data("staircase"));
  EXPECT_EQ(d.code, 0);
  EXPECT_NE(d.out.find("maximal worlds: {2,3}"), std::string::npos);
  const Result dot = run("derive " + data("staircase") + " --format dot");
  EXPECT_EQ(dot.out.rfind("digraph", 0), 0u);
}

TEST(Cli, UpdatesAndHarmony) {
  const std::string out = temp("added.json");
  EXPECT_EQ(run("add-evidence " + data("staircase") + " p -o " + out).code, 0);
  const evlogic::GeneralModel g = evlogic::load_model(out);
  EXPECT_TRUE(evlogic::valid_on_model(g, evlogic::Mode::Intended, evlogic::parse("[B] p")));
  std::filesystem::remove(out);
  EXPECT_EQ(run("harmony " + data("counter-belief") + " 'p | q'").code, 0);
  EXPECT_EQ(run("scenarios " + data("staircase") + " --world 2 --relative-to '~p'").code, 0);
}

TEST(Cli, RepresentFilterAndMorphism) {
  const std::string rep = temp("rep.json");
  EXPECT_EQ(run("represent " + data("one-point") + " --mode explicit -o " + rep).code, 0);
  EXPECT_EQ(run("pmorphism " + rep + " " + data("one-point") + " --mode explicit --map '(1,1,0)=1,(1,1,1)=1'").code, 0);
  EXPECT_EQ(run("pmorphism " + rep + " " + data("one-point") + " --mode explicit").code, 0);
  std::filesystem::remove(rep);
  const Result f = run("filter " + data("counter-belief") + " p");
  EXPECT_EQ(f.code, 0);
  EXPECT_EQ(f.out.rfind("4 classes", 0), 0u);
}

TEST(Cli, ValidateWritesReloadableCounterexample) {
  const std::string out = temp("cx.json");
  const Result r = run("validate --axiom maximality --class all --max-worlds 2 --format json --out " + out);
  ASSERT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  const auto& cx = j["results"][0]["counterexample"];
  ASSERT_FALSE(cx.is_null());
  const std::string instance = cx["instance"];
  const std::string world = cx["world"];
  const Result again = run("check " + out + " '" + instance + "' --mode explicit --world " + world);
  EXPECT_EQ(again.code, 1);
  EXPECT_EQ(again.out, "false at " + world + "\n");
  std::filesystem::remove(out);

  EXPECT_EQ(run("validate --axiom flatness --max-worlds 2").code, 0);
  EXPECT_EQ(run("validate --axiom mp --max-worlds 2").code, 0);
}

TEST(Cli, Examples) {
  const Result r = run("examples");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
}
