#include "flagoct/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

#include <json.hpp>

#include "flagoct/errors.hpp"

namespace flagoct {

const char* to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
  }
  return "unknown";
}

Check Check::make(std::string id, std::string description, bool passed, std::string details,
                  std::string anchor) {
  return Check{std::move(id), std::move(description), passed ? CheckStatus::pass : CheckStatus::fail,
               std::move(details), std::move(anchor)};
}

void VerificationReport::finalize() {
  std::stable_sort(checks.begin(), checks.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
  for (std::size_t i = 1; i < checks.size(); ++i)
    if (checks[i].id == checks[i - 1].id) throw PreconditionError("duplicate check id '" + checks[i].id + "'");
}

Summary VerificationReport::summary() const {
  Summary s;
  for (const auto& c : checks) {
    switch (c.status) {
      case CheckStatus::pass: ++s.pass; break;
      case CheckStatus::fail: ++s.fail; break;
      case CheckStatus::skipped: ++s.skipped; break;
    }
  }
  return s;
}

bool VerificationReport::all_passed() const { return summary().fail == 0; }

const Check* VerificationReport::find(const std::string& id) const {
  auto it = std::find_if(checks.begin(), checks.end(), [&](const Check& c) { return c.id == id; });
  return it == checks.end() ? nullptr : &*it;
}

std::string VerificationReport::to_json() const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["seed"] = seed;
  j["runtime_ms"] = runtime_ms;
  const Summary s = summary();
  j["summary"] = {{"pass", s.pass}, {"fail", s.fail}, {"skipped", s.skipped}, {"total", checks.size()}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    j["checks"].push_back({{"id", c.id},
                           {"description", c.description},
                           {"status", to_string(c.status)},
                           {"details", c.details},
                           {"anchor", c.anchor}});
  }
  return j.dump(2);
}

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "suite " << suite << " (seed " << seed << ")\n";
  for (const auto& c : checks) {
    out << "  " << std::left << std::setw(8) << to_string(c.status) << c.id << ": " << c.description;
    if (!c.details.empty()) out << " [" << c.details << "]";
    out << '\n';
  }
  const Summary s = summary();
  out << s.pass << " passed, " << s.fail << " failed, " << s.skipped << " skipped in " << std::fixed
      << std::setprecision(1) << runtime_ms << " ms\n";
  return out.str();
}

}  // namespace flagoct
