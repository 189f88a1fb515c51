#pragma once

#include <json.hpp>
#include <string>
#include <utility>
#include <vector>

namespace wedgekit {

struct Check {
  std::string name;
  bool pass = false;
  std::string witness;  // filled on failure, or with a short confirmation
};

/// Machine-readable account of one CLI command: echoed inputs, outputs, and
/// the checks that ran. Field order is fixed so equal runs serialize to
/// identical bytes.
struct Report {
  std::string command;
  std::string mode;  // "exact" | "float"
  std::vector<std::pair<std::string, nlohmann::ordered_json>> inputs;
  std::vector<std::pair<std::string, nlohmann::ordered_json>> outputs;
  std::vector<Check> checks;

  void add_input(std::string key, nlohmann::ordered_json value) {
    inputs.emplace_back(std::move(key), std::move(value));
  }
  void add_output(std::string key, nlohmann::ordered_json value) {
    outputs.emplace_back(std::move(key), std::move(value));
  }
  void add_check(std::string name, bool pass, std::string witness = {}) {
    checks.push_back(Check{std::move(name), pass, std::move(witness)});
  }

  bool all_pass() const;

  nlohmann::ordered_json to_json() const;
  std::string to_text() const;
};

}  // namespace wedgekit
