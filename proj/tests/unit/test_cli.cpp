#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(RAAGHAM_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* p = ::popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf;
  for (std::size_t n; (n = std::fread(buf.data(), 1, buf.size(), p)) > 0;) r.out.append(buf.data(), n);
  const int status = ::pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return std::string(RAAGHAM_DATA_DIR) + "/" + name; }

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name) {
  auto dir = fs::temp_directory_path() / ("raagham_cli_" + name + "_" + std::to_string(::getpid()));
  fs::remove_all(dir);
  return dir;
}

}  // namespace

TEST(Cli, NormalForm) {
  auto r = run("normal-form --graph " + data("p3.txt") + " --word 'b a^-1 a c'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "b c\n");
  // a and c are not adjacent, so they commute and the commutator is trivial
  r = run("normal-form --graph " + data("p3.txt") + " --word " + data("commutator.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "\n");
}

TEST(Cli, WordEquality) {
  EXPECT_EQ(run("word-eq --graph " + data("p3.txt") + " --word 'a c' --word 'c a'").code, 0);
  EXPECT_EQ(run("word-eq --graph " + data("p3.txt") + " --word 'a b' --word 'b a'").code, 1);
}

TEST(Cli, InvalidInputExitsTwo) {
  EXPECT_EQ(run("normal-form --graph " + data("p3.txt") + " --word 'zz'").code, 2);
  EXPECT_EQ(run("verify --graph " + data("p3.txt") + " --N 1").code, 2);
  EXPECT_EQ(run("verify --graph /nonexistent/graph.txt").code, 2);
  EXPECT_EQ(run("verify --graph " + data("p3.txt") + " --tol -1").code, 2);
  EXPECT_EQ(run("no-such-command").code, 2);
  EXPECT_EQ(run("").code, 2);
}

TEST(Cli, ResourceCapExitsThree) {
  EXPECT_EQ(run("lambda-decay --depth 12").code, 3);
}

TEST(Cli, EmulatorWritesCoverThatChecks) {
  const auto dir = scratch("emu");
  ASSERT_EQ(run("emulator --graph " + data("k5.txt") + " --max-sheets 2 --out " + dir.string()).code, 0);
  ASSERT_TRUE(fs::exists(dir / "cover.txt"));
  auto j = nlohmann::json::parse(slurp(dir / "emulator.json"));
  EXPECT_TRUE(j["found"].get<bool>());
  EXPECT_EQ(j["vertices"], 10);
  EXPECT_EQ(j["embedding"]["crossings"], 0);
  auto check = run("check-cover --graph " + data("k5.txt") + " --cover " + (dir / "cover.txt").string());
  EXPECT_EQ(check.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(check.out)["planar"].get<bool>());
  // no stray temporaries
  for (const auto& e : fs::directory_iterator(dir)) EXPECT_EQ(e.path().string().find(".tmp."), std::string::npos);
  fs::remove_all(dir);
}

TEST(Cli, CertificateVerdicts) {
  EXPECT_EQ(run("certificate --graph " + data("k5.txt")).code, 1);
  auto r = run("certificate --graph " + data("torus.txt"));
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["no_emulator"].get<bool>());
}

TEST(Cli, DoubleWritesMaps) {
  const auto dir = scratch("double");
  ASSERT_EQ(run("double --graph " + data("edge.txt") + " --out " + dir.string()).code, 0);
  EXPECT_EQ(slurp(dir / "double.txt").substr(0, 10), "vertices 4");
  EXPECT_TRUE(fs::exists(dir / "diagonal.hom"));
  EXPECT_TRUE(fs::exists(dir / "retraction.hom"));
  fs::remove_all(dir);
}

TEST(Cli, VerifyReportsPass) {
  auto r = run("verify --graph " + data("c4.txt") + " --N 2 --seed 7");
  ASSERT_EQ(r.code, 0);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_TRUE(j["pass"].get<bool>());
  EXPECT_EQ(j["seed"], 7);
}

TEST(Cli, ConfigFileAndOverrides) {
  const auto dir = scratch("config");
  fs::create_directories(dir);
  {
    std::ofstream(dir / "bad.json") << R"({"N": 1})";
    std::ofstream(dir / "unknown.json") << R"({"colour": 3})";
  }
  EXPECT_EQ(run("verify --graph " + data("p3.txt") + " --config " + (dir / "bad.json").string()).code, 2);
  EXPECT_EQ(run("verify --graph " + data("p3.txt") + " --samples 50 --N 2 --config " + (dir / "bad.json").string()).code, 0);
  EXPECT_EQ(run("verify --graph " + data("p3.txt") + " --config " + (dir / "unknown.json").string()).code, 2);
  auto r = run("verify --graph " + data("p3.txt") + " --samples 50 --config " + data("run.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["seed"], 7);
  fs::remove_all(dir);
}

TEST(Cli, ArtifactsAreDeterministic) {
  const auto a = scratch("det_a"), b = scratch("det_b");
  for (const auto& dir : {a, b}) {
    const std::string o = " --out " + dir.string();
    ASSERT_EQ(run("verify --graph " + data("p3.txt") + " --samples 200 --seed 3" + o).code, 0);
    ASSERT_EQ(run("probe-faithful --graph " + data("edge.txt") + " --depth 3 --seed 5" + o).code, 0);
    ASSERT_EQ(run("simulate --graph " + data("p3.txt") + " --word 'a b' --grid 6" + o).code, 0);
    ASSERT_EQ(run("build-config --graph " + data("c4.txt") + o).code, 0);
  }
  std::size_t compared = 0;
  for (const auto& e : fs::directory_iterator(a)) {
    EXPECT_EQ(slurp(e.path()), slurp(b / e.path().filename())) << e.path().filename();
    ++compared;
  }
  EXPECT_GE(compared, 7u);
  fs::remove_all(a);
  fs::remove_all(b);
}

TEST(Cli, SmoothStudyAndPolydisk) {
  auto s = run("smooth-study --depth 3 --grid 60");
  EXPECT_EQ(s.code, 0);
  EXPECT_EQ(s.out.substr(0, 9), "eps,sup_d");
  auto p = run("polydisk --N 2 --tol 1e-9");
  EXPECT_EQ(p.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(p.out)["pass"].get<bool>());
}
