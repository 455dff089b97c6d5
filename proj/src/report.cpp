#include "nhosc/report.h"

#include <algorithm>

namespace nhosc {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass:
      return "PASS";
    case CheckStatus::Fail:
      return "FAIL";
    case CheckStatus::Warn:
      return "WARN";
  }
  return "?";
}

void VerificationReport::add(std::string name, bool ok, std::string detail) {
  checks_.push_back({std::move(name), ok ? CheckStatus::Pass : CheckStatus::Fail, std::move(detail)});
}

void VerificationReport::warn(std::string name, std::string detail) {
  checks_.push_back({std::move(name), CheckStatus::Warn, std::move(detail)});
}

void VerificationReport::append(const VerificationReport& other) {
  checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
}

bool VerificationReport::passed() const { return first_failure() == nullptr; }

std::size_t VerificationReport::count(CheckStatus status) const {
  return static_cast<std::size_t>(std::count_if(
      checks_.begin(), checks_.end(), [status](const CheckResult& c) { return c.status == status; }));
}

const CheckResult* VerificationReport::first_failure() const {
  for (const auto& c : checks_) {
    if (c.status == CheckStatus::Fail) return &c;
  }
  return nullptr;
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks_) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

}  // namespace nhosc
