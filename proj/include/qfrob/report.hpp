#pragma once

#include <optional>
#include <string>
#include <vector>

namespace qfrob {

enum class Status { pass, fail, skip };

inline const char* status_name(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

struct Check {
  std::string name;
  Status status = Status::pass;
  std::string details;
  std::optional<std::string> counterexample;
};

struct Report {
  std::vector<Check> checks;

  bool ok() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return false;
    return true;
  }

  void pass(std::string name, std::string details = {}) {
    checks.push_back({std::move(name), Status::pass, std::move(details), std::nullopt});
  }
  void fail(std::string name, std::string details, std::string counterexample) {
    checks.push_back({std::move(name), Status::fail, std::move(details), std::move(counterexample)});
  }
  void skip(std::string name, std::string details) {
    checks.push_back({std::move(name), Status::skip, std::move(details), std::nullopt});
  }
  void expect(bool ok, std::string name, std::string details, std::string counterexample = "see details") {
    if (ok) pass(std::move(name), std::move(details));
    else fail(std::move(name), std::move(details), std::move(counterexample));
  }

  void merge(const Report& other, const std::string& prefix = {}) {
    for (auto c : other.checks) {
      if (!prefix.empty()) c.name = prefix + ": " + c.name;
      checks.push_back(std::move(c));
    }
  }

  const Check* find_failure() const {
    for (const auto& c : checks)
      if (c.status == Status::fail) return &c;
    return nullptr;
  }
};

}  // namespace qfrob
