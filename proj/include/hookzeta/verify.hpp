#pragma once

// End-to-end verification across all modules, reported as JSON.

#include <cstdint>

#include <json.hpp>

#include "hookzeta/limits.hpp"

namespace hookzeta {

struct VerifyOptions {
  int n_max = 5;
  // depth of the p-power breadth-first enumeration
  int max_exp = 8;
  // a(m) is compared with direct enumeration for m up to this bound
  long coeff_limit = 40;
  std::uint64_t seed = 1;
  // flips one entry of s_1 in the Craig generators (mutation test)
  bool inject_sign_error = false;
  Limits limits = default_limits();
};

/// {"n_max", "seed", "checks": [{"name", "passed", "cases", "failures"}],
///  "erratum": {...}, "failed": [names], "passed"}
nlohmann::json run_verification(const VerifyOptions& options);

}  // namespace hookzeta
