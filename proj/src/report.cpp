#include "wedgekit/report.hpp"

#include <sstream>

namespace wedgekit {

bool Report::all_pass() const {
  for (const Check& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

nlohmann::ordered_json Report::to_json() const {
  nlohmann::ordered_json j;
  j["command"] = command;
  j["mode"] = mode;
  j["inputs"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : inputs) j["inputs"][key] = value;
  j["outputs"] = nlohmann::ordered_json::object();
  for (const auto& [key, value] : outputs) j["outputs"][key] = value;
  j["checks"] = nlohmann::ordered_json::array();
  for (const Check& c : checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["pass"] = c.pass;
    jc["witness"] = c.witness;
    j["checks"].push_back(jc);
  }
  j["all_pass"] = all_pass();
  return j;
}

namespace {

void print_value(std::ostream& os, const nlohmann::ordered_json& v, int indent) {
  const std::string pad(static_cast<size_t>(indent), ' ');
  if (v.is_array() && !v.empty() && v.front().is_string()) {
    // Scalar tokens join onto one line; matrix rows (which contain spaces)
    // stay one per line.
    bool tokens = true;
    for (const auto& item : v) {
      tokens = tokens && item.get<std::string>().find(' ') == std::string::npos;
    }
    if (tokens) {
      os << pad;
      for (size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i].get<std::string>();
      os << "\n";
    } else {
      for (const auto& item : v) os << pad << item.get<std::string>() << "\n";
    }
  } else if (v.is_string()) {
    os << pad << v.get<std::string>() << "\n";
  } else {
    os << pad << v.dump() << "\n";
  }
}

}  // namespace

std::string Report::to_text() const {
  std::ostringstream os;
  os << "command: " << command << "\n";
  os << "mode: " << mode << "\n";
  for (const auto& [key, value] : inputs) {
    os << "input " << key << ":\n";
    print_value(os, value, 2);
  }
  for (const auto& [key, value] : outputs) {
    os << "output " << key << ":\n";
    print_value(os, value, 2);
  }
  if (!checks.empty()) {
    os << "checks:\n";
    for (const Check& c : checks) {
      os << "  [" << (c.pass ? "pass" : "FAIL") << "] " << c.name;
      if (!c.witness.empty()) os << " -- " << c.witness;
      os << "\n";
    }
    os << (all_pass() ? "all checks passed" : "CHECK FAILURE") << "\n";
  }
  return os.str();
}

}  // namespace wedgekit
