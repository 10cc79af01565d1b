#include <filesystem>
#include <fstream>

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include "cli_runner.hpp"

namespace {

using gokit::testing::run_cli;
using nlohmann::json;

class Cli : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    dir_ = std::filesystem::temp_directory_path() / ("gokit_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
    ASSERT_EQ(run_cli("su3 --alpha 1 --beta 2 -o " + model("a1b2")).exit_code, 0);
    ASSERT_EQ(run_cli("su3 --alpha 1 --beta 1 -o " + model("a1b1")).exit_code, 0);
  }
  static void TearDownTestSuite() { std::filesystem::remove_all(dir_); }

  static std::string model(const std::string& name) { return (dir_ / (name + ".json")).string(); }

  static json report(const std::string& args, int expected_exit = 0) {
    const auto run = run_cli(args);
    EXPECT_EQ(run.exit_code, expected_exit) << args << "\n" << run.err;
    return json::parse(run.out);
  }

  static inline std::filesystem::path dir_;
};

TEST_F(Cli, GoTestOnFamily) {
  const json r = report("go-test --samples 200 --seed 0 -m " + model("a1b2"));
  EXPECT_EQ(r["result"]["verdict"], "go");
  EXPECT_EQ(r["config"]["command"], "go-test");
  EXPECT_EQ(r["config"]["seed"], 0);
}

TEST_F(Cli, NatredVerdicts) {
  EXPECT_EQ(report("natred --samples 60 --verify 30 -m " + model("a1b2"), 2)["result"]["verdict"],
            "not_naturally_reductive");
  EXPECT_EQ(report("natred --samples 60 --verify 30 -m " + model("a1b1"))["result"]["verdict"],
            "naturally_reductive_evidence");
}

TEST_F(Cli, EquilibriaAndGraph) {
  const json e = report("equilibria --p 0,0,0,0,1 -m " + model("a1b2"));
  EXPECT_EQ(e["result"]["nullspace_rank"], 3);
  const json g = report("graph --p 1,0,0,0,1 -m " + model("a1b2"));
  EXPECT_NEAR(g["result"]["xi"][3].get<double>(), 2.0, 1e-10);
  EXPECT_NEAR(g["result"]["xi"][7].get<double>(), 4.0, 1e-10);
  const json y = report("graph --p 1,0,0,0,1 --from-invariant Y2 -m " + model("a1b2"));
  EXPECT_LT(y["result"]["membership_residual"].get<double>(), 1e-8);
}

TEST_F(Cli, OtherSubcommands) {
  EXPECT_EQ(report("validate -m " + model("a1b2"))["result"]["jacobi_residual"], 0.0);
  EXPECT_FALSE(report("derived-series -m " + model("a1b2"))["result"]["solvable"].get<bool>());
  EXPECT_LT(report("co-check --samples 20 -m " + model("a1b2"))["result"]["max_residual"].get<double>(),
            1e-10);
  EXPECT_LT(report("orbit-search --a0 0,0,0,1,0,0,0,1 -m " + model("a1b2"))["result"]["residual"]
                .get<double>(),
            1e-6);
  const std::string csv = (dir_ / "traj.csv").string();
  const json lp = report("lp-integrate --h half_z_sq --mu0 0.3,-0.2,0.5,1,2,-1,0.5,10 --dt 0.01 "
                         "--t-end 1 --csv " + csv + " -m " + model("a1b2"));
  EXPECT_TRUE(std::filesystem::exists(csv));
  EXPECT_EQ(lp["config"]["h"], "half_z_sq");
}

TEST_F(Cli, ExitCodes) {
  EXPECT_EQ(run_cli("go-test -m " + (dir_ / "missing.json").string()).exit_code, 1);
  EXPECT_EQ(run_cli("equilibria --p 1,2 -m " + model("a1b2")).exit_code, 1);
  EXPECT_EQ(run_cli("equilibria --p 1,x,0,0,0 -m " + model("a1b2")).exit_code, 1);
  EXPECT_EQ(run_cli("lp-integrate --h nope --mu0 0,0,0,0,0,0,0,1 -m " + model("a1b2")).exit_code, 1);
  EXPECT_EQ(run_cli("no-such-command").exit_code, 1);

  json doc = json::parse(gokit::testing::read_file(model("a1b1")));
  doc["form"]["matrix"][1][1] = 4.0;
  const std::string broken = (dir_ / "broken.json").string();
  std::ofstream(broken) << doc.dump();
  EXPECT_EQ(report("go-test --samples 50 -m " + broken, 2)["result"]["verdict"], "not_go");
}

TEST_F(Cli, MalformedModelDiagnostic) {
  const std::string path = (dir_ / "malformed.json").string();
  std::ofstream(path) << "{\n  \"dim\": 3,\n  \"brackets\": [[0, 1, 2, 1.0]\n}\n";
  const auto run = run_cli("validate -m " + path);
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_NE(run.err.find("line 4"), std::string::npos) << run.err;

  std::ofstream(path) << R"({"dim": 3, "brackets": [[0, 1, 2, "one"]]})";
  const auto field = run_cli("validate -m " + path);
  EXPECT_EQ(field.exit_code, 1);
  EXPECT_NE(field.err.find("brackets[0][3]"), std::string::npos) << field.err;
}

TEST_F(Cli, ValidateFlagsCorruptedBracket) {
  json doc = json::parse(gokit::testing::read_file(model("a1b2")));
  auto& brackets = doc["brackets"];
  brackets[0][3] = brackets[0][3].get<double>() + 0.5;
  const std::string path = (dir_ / "corrupt.json").string();
  std::ofstream(path) << doc.dump();
  const auto run = run_cli("validate -m " + path);
  EXPECT_EQ(run.exit_code, 1);
  EXPECT_NE(run.err.find("jacobi_residual"), std::string::npos) << run.err;
  EXPECT_EQ(run_cli("go-test -m " + path).exit_code, 1);
}

TEST_F(Cli, ByteIdenticalReports) {
  for (const std::string args :
       {"go-test --samples 100 --seed 7", "natred --samples 40 --verify 20 --seed 3",
        "co-check --samples 30 --seed 1", "equilibria --p 0.3,-1,2,0.5,1"}) {
    const auto a = run_cli(args + " -m " + model("a1b2"));
    const auto b = run_cli(args + " -m " + model("a1b2"));
    EXPECT_EQ(a.out, b.out) << args;
    EXPECT_FALSE(a.out.empty());
  }
}

}  // namespace
