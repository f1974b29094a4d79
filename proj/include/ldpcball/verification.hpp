#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <json.hpp>

#include "ldpcball/linear_code.hpp"

namespace ldpcball {

struct Violation {
  std::string fingerprint;  // of the offending code, see code_fingerprint()
  nlohmann::json witness;   // includes the code file text so it can be replayed
};

struct ResourceFailure {
  std::size_t instance = 0;
  std::string message;
};

/// Outcome of one verification suite. Passes iff no violations were found;
/// resource failures are reported separately and do not count as violations.
struct VerificationReport {
  std::string suite;
  std::size_t instances = 0;
  std::vector<Violation> violations;
  std::vector<ResourceFailure> resource_failures;
  double wall_seconds = 0.0;
  nlohmann::json details = nlohmann::json::object();

  bool passed() const noexcept { return violations.empty(); }
};

nlohmann::json to_json(const VerificationReport& report);

/// 64-bit FNV-1a of the canonical code file text, as 16 hex digits.
std::string code_fingerprint(const LinearCode& code);

/// Witness skeleton: fingerprint, check name, and the replayable code text.
Violation make_violation(const LinearCode& code, const std::string& check, nlohmann::json data);

}  // namespace ldpcball
