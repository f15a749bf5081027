#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagoct/cohomology.hpp"
#include "flagoct/report.hpp"

namespace flagoct {

struct SuiteOptions {
  std::uint64_t seed = 20240601;
  int degree_cutoff = 8;
  /// Replaces the published restriction table (used for corrupted-fixture runs).
  std::optional<RestrictionTable> table;
};

const std::vector<std::string>& suite_names();
bool is_suite_name(const std::string& name);

/// Runs one suite, or every suite for "all". PreconditionError for an unknown name.
VerificationReport run_suite(const std::string& name, const SuiteOptions& options = {});

/// Individual suites; each includes at least one deliberately falsified fixture.
std::vector<Check> octonion_checks(std::uint64_t seed);
std::vector<Check> jordan_checks(std::uint64_t seed);
std::vector<Check> roots_checks();
std::vector<Check> cohomology_checks(std::uint64_t seed, const RestrictionTable& table);
std::vector<Check> gkm_checks(std::uint64_t seed, const RestrictionTable& table, int degree_cutoff);
std::vector<Check> ktheory_checks(std::uint64_t seed);

/// Table with the (s1, E1) entry negated; the relation checks must reject it.
RestrictionTable corrupted_table();

/// Reads {"E1": [6 entries], "E2": [...], "E3": [...]} ordered 1, s1, s2, s1s2, s2s1, s1s2s1,
/// entries in Q[b1,b2,b3].
RestrictionTable parse_table_fixture(const std::string& json_text);

}  // namespace flagoct
