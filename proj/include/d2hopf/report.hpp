#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace d2hopf {

/// One verified identity: a stable id, a readable statement, the size of the
/// quantifier domain that was swept, the verdict, and a witness on failure
/// (or an informational note).
struct CheckResult {
  std::string id;
  std::string statement;
  std::size_t domain = 0;
  bool pass = false;
  std::string witness;
};

inline CheckResult check_pass(std::string id, std::string statement,
                              std::size_t domain, std::string note = "") {
  return {std::move(id), std::move(statement), domain, true, std::move(note)};
}

inline CheckResult check_fail(std::string id, std::string statement,
                              std::size_t domain, std::string witness) {
  return {std::move(id), std::move(statement), domain, false,
          std::move(witness)};
}

inline bool all_pass(const std::vector<CheckResult>& v) {
  for (const auto& c : v)
    if (!c.pass) return false;
  return true;
}

inline std::vector<CheckResult> prefix_checks(const std::string& pre,
                                              std::vector<CheckResult> v) {
  for (auto& c : v) c.id = pre + c.id;
  return v;
}

inline void append_checks(std::vector<CheckResult>& dst,
                          std::vector<CheckResult> src) {
  for (auto& c : src) dst.push_back(std::move(c));
}

}  // namespace d2hopf
