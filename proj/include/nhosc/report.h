#pragma once

#include <string>
#include <vector>

namespace nhosc {

enum class CheckStatus { Pass, Fail, Warn };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::Pass;
  std::string detail;
};

/// Ordered list of named checks. WARN entries never make a report fail.
class VerificationReport {
 public:
  void add(std::string name, bool ok, std::string detail = {});
  void warn(std::string name, std::string detail);
  void append(const VerificationReport& other);

  const std::vector<CheckResult>& checks() const { return checks_; }
  bool passed() const;
  std::size_t count(CheckStatus status) const;
  /// First failing check, or nullptr.
  const CheckResult* first_failure() const;
  const CheckResult* find(const std::string& name) const;

 private:
  std::vector<CheckResult> checks_;
};

}  // namespace nhosc
