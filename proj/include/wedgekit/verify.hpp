#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wedgekit/report.hpp"
#include "wedgekit/types.hpp"
#include "wedgekit/wedge.hpp"

namespace wedgekit {

struct VerifyOptions {
  std::optional<int> n_min;  // per-suite default when unset
  std::optional<int> n_max;
  int trials = 100;
  std::uint64_t seed = 0;
  Count cap = default_component_cap;
};

const std::vector<std::string>& verify_ids();

/// Runs one named suite in exact mode with a deterministic generator.
/// Unknown ids and invalid ranges raise DomainError.
Report run_verify(const std::string& id, const VerifyOptions& opts = {});

}  // namespace wedgekit
