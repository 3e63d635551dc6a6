#pragma once

// Command implementations shared by the qfrob executable and the
// acceptance runner.

#include <cstdint>
#include <stdexcept>
#include <string>

#include "json.hpp"
#include "qfrob/blocks.hpp"
#include "qfrob/report.hpp"

namespace qfrob::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string cartan_type = "A1";
  int ell = 4;
  std::string window = "0..7";  // "lo..hi", "a,b..c,d" or "box"
  std::string suite = "predict";
  std::uint64_t seed = 20261016;
  std::string out;
  std::string format = "json";
  std::string group;
  bool corrupt = false;
};

// Bad configuration or input; maps to exit code 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommandResult {
  std::string command;
  Json params = Json::object();
  Report report;
  Json artifacts = Json::object();

  int exit_code() const { return report.ok() ? 0 : 1; }
};

CommandResult cmd_linkage(const RunConfig& c);
CommandResult cmd_frobenius_check(const RunConfig& c);
CommandResult cmd_triple_verify(const RunConfig& c);

Json block_table_json(const BlockTable& t);
std::string render_json(const CommandResult& r);
std::string render_text(const CommandResult& r);

}  // namespace qfrob::cli
