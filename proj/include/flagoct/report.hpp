#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flagoct {

enum class CheckStatus { pass, fail, skipped };

const char* to_string(CheckStatus status);

struct Check {
  std::string id;
  std::string description;
  CheckStatus status = CheckStatus::skipped;
  std::string details;
  /// Where the verified statement lives, in words (e.g. "restriction table of e_M(E_k)").
  std::string anchor;

  static Check make(std::string id, std::string description, bool passed, std::string details,
                    std::string anchor);
  bool passed() const { return status == CheckStatus::pass; }
};

struct Summary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skipped = 0;
};

struct VerificationReport {
  std::string suite;
  std::vector<Check> checks;
  std::uint64_t seed = 0;
  double runtime_ms = 0;

  /// Sorts checks by id; ids must be unique.
  void finalize();
  Summary summary() const;
  bool all_passed() const;
  const Check* find(const std::string& id) const;

  std::string to_json() const;
  std::string to_text() const;
};

}  // namespace flagoct
