#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "slocc/enumerate.hpp"
#include "slocc/verify.hpp"

using namespace slocc;

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome run(const std::string& binary, const std::string& args) {
  Outcome r;
  std::string cmd = binary + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

Outcome cli(const std::string& args) { return run(CLI_PATH, args); }

std::string data(const std::string& name) { return std::string(DATA_DIR) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  std::string path = testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Cli, ClassifyExitCodes) {
  Outcome ghz = cli("classify " + data("ghz.json"));
  EXPECT_EQ(ghz.code, 0);
  EXPECT_NE(ghz.out.find(R"("segre":[["0",[1]],["inf",[1]]])"), std::string::npos);
  EXPECT_EQ(cli("classify " + data("truncated.json")).code, 2);
  EXPECT_EQ(cli("classify " + data("sqrt2.json")).code, 3);
  EXPECT_EQ(cli("classify /nonexistent.json").code, 2);
}

TEST(Cli, StdoutCarriesOnlyPayload) {
  Outcome r = cli("classify " + data("sqrt2.json"));
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, Equiv) {
  std::string moved = write_temp("ghz_moved.json", serialize_state(apply(random_ilo(2, 2, 11), parse_state(R"(
    {"m":2,"n":2,"gamma1":[[{"re":"1","im":"0"},{"re":"0","im":"0"}],[{"re":"0","im":"0"},{"re":"0","im":"0"}]],
     "gamma2":[[{"re":"0","im":"0"},{"re":"0","im":"0"}],[{"re":"0","im":"0"},{"re":"1","im":"0"}]]})"))));
  Outcome same = cli("equiv " + data("ghz.json") + " " + moved);
  EXPECT_EQ(same.code, 0);
  EXPECT_EQ(same.out.rfind("EQUIVALENT\n", 0), 0u);
  Outcome diff = cli("equiv " + data("ghz.json") + " " + data("w.json"));
  EXPECT_EQ(diff.code, 1);
  EXPECT_EQ(diff.out.rfind("INEQUIVALENT\n", 0), 0u);
  EXPECT_EQ(cli("equiv " + data("ghz.json") + " " + data("truncated.json")).code, 2);
}

TEST(Cli, Enumerate) {
  Outcome r = cli("enumerate 4 6");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("count: 6\n"), std::string::npos);
  EXPECT_NE(cli("enumerate 6 7").out.find("count: 61\n"), std::string::npos);
  EXPECT_EQ(cli("enumerate 2 5").code, 4);
  Outcome json = cli("enumerate 2 2 --json");
  EXPECT_EQ(json.out.rfind(R"([{"m":2,"n":2,"count":2,"families":[)", 0), 0u);
}

TEST(Cli, RandomRoundTrip) {
  Outcome a = cli("random 2 2 --class 0 --seed 7");
  Outcome b = cli("random 2 2 --class 0 --seed 7");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  auto families = enumerate_families(2, 2);
  EXPECT_TRUE(matches_family(families[0], classify(parse_state(a.out))));
  std::string path = write_temp("random.json", a.out);
  Outcome c = cli("classify " + path);
  EXPECT_EQ(parse_cf(c.out.substr(0, c.out.size() - 1)), families[0].canonical);
  EXPECT_EQ(cli("random 2 2 --class 99").code, 4);
}

TEST(Cli, VerifyEmptyRun) {
  Outcome r = cli("verify --trials 0");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "{\"trials\":0,\"failures\":[]}\n");
}

TEST(Cli, VerifyCatchesInjectedBug) {
  Outcome r = run(INJECTED_PATH, "verify --trials 1");
  EXPECT_EQ(r.code, 5);
  EXPECT_NE(r.out.find("\"failures\":[{"), std::string::npos);
}

TEST(Cli, StabDimAndUsage) {
  Outcome r = cli("stab-dim " + data("w.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "5\n");
  EXPECT_EQ(cli("").code, 2);
  EXPECT_EQ(cli("bogus").code, 2);
  EXPECT_EQ(cli("--help").code, 0);
}
