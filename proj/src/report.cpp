#include "crosslab/report.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <sstream>

namespace crosslab {

void VerificationReport::add(const std::string& name, double residual, double tolerance,
                             const std::string& params) {
  checks_.push_back(Check{name, residual <= tolerance, residual, tolerance, params});
}

void VerificationReport::merge(const VerificationReport& other) {
  for (const Check& c : other.checks()) {
    checks_.push_back(c);
  }
}

bool VerificationReport::all_passed() const {
  return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
}

bool VerificationReport::all_passed_except(const std::string& name) const {
  return std::all_of(checks_.begin(), checks_.end(),
                     [&name](const Check& c) { return c.passed || c.name == name; });
}

double VerificationReport::max_residual() const {
  double out = 0.0;
  for (const Check& c : checks_) out = std::max(out, c.residual);
  return out;
}

nlohmann::json VerificationReport::to_json() const {
  std::vector<Check> sorted = checks_;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Check& a, const Check& b) { return a.name < b.name; });
  nlohmann::json checks = nlohmann::json::array();
  for (const Check& c : sorted) {
    checks.push_back({{"check", c.name},
                      {"passed", c.passed},
                      {"residual", c.residual},
                      {"tolerance", c.tolerance},
                      {"params", nlohmann::json::parse(c.params.empty() ? "{}" : c.params)}});
  }
  return {{"suite", suite_}, {"checks", checks}, {"passed", all_passed()}};
}

std::string VerificationReport::summary() const {
  std::ostringstream os;
  os << "suite " << suite_ << ": " << (all_passed() ? "PASS" : "FAIL");
  size_t failed = 0;
  for (const Check& c : checks_) {
    if (!c.passed) ++failed;
  }
  os << " (" << checks_.size() << " checks";
  if (failed > 0) os << ", " << failed << " failed";
  os << ", max residual " << max_residual() << ")";
  return os.str();
}

}  // namespace crosslab
