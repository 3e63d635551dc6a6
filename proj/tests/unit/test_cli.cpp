#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "commands.hpp"

namespace {

const std::string kTool = QFROB_TOOL;
const std::string kData = QFROB_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  Run r;
  const std::string cmd = kTool + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe);
  char buf[4096];
  while (std::size_t n = std::fread(buf, 1, sizeof buf, pipe)) r.out.append(buf, n);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

}  // namespace

TEST_CASE("linkage command") {
  const Run r = run("linkage --type A1 --ell 4 --window 0..7");
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["schema_version"] == 1);
  CHECK(j["command"] == "linkage");
  CHECK(j["artifacts"]["block_table"]["block_count"] == 5);

  const Run a2 = run("linkage --type A2 --ell 6 --window box");
  CHECK(a2.code == 0);
  CHECK(nlohmann::json::parse(a2.out)["artifacts"]["block_table"]["rows"].size() == 36);

  const Run empty = run("linkage --window 5..4");
  CHECK(empty.code == 0);
  CHECK(nlohmann::json::parse(empty.out)["artifacts"]["block_table"]["rows"].empty());

  const Run verify = run("linkage --window 0..30 --suite verify");
  CHECK(verify.code == 0);
  const auto vj = nlohmann::json::parse(verify.out);
  for (const auto& c : vj["checks"]) CHECK(c["status"] != "fail");
}

TEST_CASE("bad configuration exits with 2") {
  CHECK(run("linkage --ell 5").code == 2);
  CHECK(run("linkage --type E8").code == 2);
  CHECK(run("linkage --window 3").code == 2);
  CHECK(run("linkage --suite everything").code == 2);
  CHECK(run("frobenius-check --type A2").code == 2);
  CHECK(run("--no-such-flag linkage").code == 2);
  CHECK(run("").code == 2);
}

TEST_CASE("frobenius-check command") {
  CHECK(run("frobenius-check").code == 0);
  CHECK(run("frobenius-check --ell 6").code == 0);
  const Run bad = run("frobenius-check --corrupt");
  CHECK(bad.code == 1);
  bool named = false;
  const auto bj = nlohmann::json::parse(bad.out);
  for (const auto& c : bj["checks"])
    if (c["status"] == "fail") {
      CHECK(c.contains("counterexample"));
      named = named || c["name"].get<std::string>().find("[E,F]") != std::string::npos;
    }
  CHECK(named);
}

TEST_CASE("triple-verify command") {
  CHECK(run("triple-verify --group " + kData + "/z4_z2.group").code == 0);
  CHECK(run("triple-verify --group " + kData + "/s3_a3.group").code == 0);
  const Run nn = run("triple-verify --group " + kData + "/non_normal.group");
  CHECK(nn.code == 2);
  CHECK(nn.out.find("not normal") != std::string::npos);
  CHECK(run("triple-verify --group " + kData + "/missing.group").code == 2);
  CHECK(run("triple-verify").code == 2);
}

TEST_CASE("config file and output path") {
  const std::string conf = "cli_test.conf", out = "cli_test.json";
  {
    std::ofstream f(conf);
    f << "type=A1\nell=6\nwindow=0..11\nout=" << out << "\n";
  }
  CHECK(run("--config " + conf + " linkage").code == 0);
  std::ifstream in(out);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto j = nlohmann::json::parse(ss.str());
  CHECK(j["params"]["ell"] == 6);
  CHECK(j["artifacts"]["block_table"]["rows"].size() == 12);
  // Flags override the file.
  CHECK(run("--config " + conf + " --ell 4 --out " + out + " linkage").code == 0);
  std::ifstream in2(out);
  CHECK(nlohmann::json::parse(in2)["params"]["ell"] == 4);
  std::remove(conf.c_str());
  std::remove(out.c_str());
}

TEST_CASE("reports are byte-stable") {
  const std::string args = "triple-verify --seed 7 --group " + kData + "/s3_a3.group";
  CHECK(run(args).out == run(args).out);
  CHECK(run("linkage --window 0..20 --suite verify").out == run("linkage --window 0..20 --suite verify").out);
}
