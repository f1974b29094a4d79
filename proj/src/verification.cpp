#include "ldpcball/verification.hpp"

#include <cstdint>
#include <cstdio>

#include "ldpcball/code_io.hpp"

namespace ldpcball {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["suite"] = report.suite;
  j["instances"] = report.instances;
  j["pass"] = report.passed();
  j["wall_seconds"] = report.wall_seconds;
  auto& v = j["violations"] = nlohmann::json::array();
  for (const auto& x : report.violations) v.push_back({{"fingerprint", x.fingerprint}, {"witness", x.witness}});
  auto& r = j["resource_failures"] = nlohmann::json::array();
  for (const auto& x : report.resource_failures) r.push_back({{"instance", x.instance}, {"message", x.message}});
  j["details"] = report.details;
  return j;
}

std::string code_fingerprint(const LinearCode& code) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : format_code(code)) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Violation make_violation(const LinearCode& code, const std::string& check, nlohmann::json data) {
  data["check"] = check;
  data["code"] = format_code(code);
  return {code_fingerprint(code), std::move(data)};
}

}  // namespace ldpcball
