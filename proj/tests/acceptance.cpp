// One line per acceptance criterion: status, elapsed time against its budget, and the
// checks that decided it. Exit status 1 if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "flagoct/cohomology.hpp"
#include "flagoct/groebner.hpp"
#include "flagoct/suites.hpp"

using namespace flagoct;

namespace {

struct Outcome {
  bool passed = true;
  std::string details;
};

// Requires every listed check to be present and passing.
Outcome require(const std::vector<Check>& checks, const std::vector<std::string>& ids) {
  Outcome out;
  for (const auto& id : ids) {
    const Check* found = nullptr;
    for (const auto& c : checks)
      if (c.id == id) found = &c;
    if (!found) {
      out.passed = false;
      out.details += " missing:" + id;
    } else if (!found->passed()) {
      out.passed = false;
      out.details += " failed:" + id + " [" + found->details + "]";
    }
  }
  return out;
}

std::vector<std::string> with_prefix(const std::vector<Check>& checks, const std::string& prefix) {
  std::vector<std::string> ids;
  for (const auto& c : checks)
    if (c.id.rfind(prefix, 0) == 0) ids.push_back(c.id);
  return ids;
}

struct Criterion {
  int number;
  const char* title;
  double budget_ms;
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::uint64_t seed = SuiteOptions{}.seed;
  const RestrictionTable table = RestrictionTable::published();

  const std::vector<Criterion> criteria{
      {1, "coinvariant presentation: dimensions (1,2,2,1) in degrees 0,8,16,24, total 6", 1000,
       [] {
         const CohRing coh = CohRing::standard();
         const auto dims = graded_quotient_dimensions(coh.gb, 32);
         std::size_t total = 0;
         bool ok = true;
         std::string shape;
         for (std::size_t d = 0; d < dims.size(); ++d) {
           total += dims[d];
           if (d % 8 == 0) shape += std::to_string(dims[d]) + (d < 32 ? "," : "");
           const std::size_t want = d == 0 || d == 24 ? 1 : d == 8 || d == 16 ? 2 : 0;
           ok = ok && dims[d] == want;
         }
         return Outcome{ok && total == 6, " dims " + shape + " total " + std::to_string(total)};
       }},
      {2, "identities in H*(X;Q): beta quadric, Poincare duals, fundamental class pairing", 1000,
       [] {
         return require(verify_presentation(), {"presentation.a-beta-quadric", "presentation.b-poincare-duals",
                                                "presentation.c-fundamental-class"});
       }},
      {3, "BGG: divided-difference chain, frac membership, Delta^2 = 0 on 100 polynomials", 1000,
       [&] {
         const auto checks = cohomology_checks(seed, table);
         return require(checks, {"bgg.chain", "frac-identity", "bgg.delta-squared"});
       }},
      {4, "equivariant relations: ten substitution checks", 1000,
       [&] {
         const auto checks = verify_equivariant_relations(table);
         std::vector<std::string> ids;
         for (const auto& id : with_prefix(checks, "equivariant.S"))
           if (id.substr(id.size() - 2) != ".1") ids.push_back(id);
         Outcome out = require(checks, ids);
         if (ids.size() != 10) out = {false, " expected 10 checks, found " + std::to_string(ids.size())};
         return out;
       }},
      {5, "GKM: 200 class tuples, P1 <=> P2 on 200 tuples, free rank up to degree 16", 60000,
       [&] {
         return require(gkm_checks(seed, table, 16),
                        {"gkm.membership.random-classes", "gkm.p1-p2.arbitrary", "gkm.free-rank"});
       }},
      {6, "coprimality: displayed squares and pairwise coprime products", 1000,
       [&] { return require(gkm_checks(seed, table, 0), {"gkm.euler.squares", "gkm.euler.coprime"}); }},
      {7, "octonions and h3(O): composition, alternativity, witness, root spaces, bracket identities, determinant",
       10000,
       [&] {
         Outcome a = require(octonion_checks(seed),
                             {"octonion.composition", "octonion.alternativity", "octonion.non-associative-witness"});
         const Outcome b = require(jordan_checks(seed), {"jordan.root-space", "jordan.bracket.generic", "jordan.determinant"});
         return Outcome{a.passed && b.passed, a.details + b.details};
       }},
      {8, "Weyl combinatorics: orders, semidirect structure, root partition, inversion table, cell polynomial", 10000,
       [] {
         return require(roots_checks(), {"roots.group-orders", "roots.spin8-elements", "roots.semidirect",
                                         "roots.coset-partition", "roots.inversion-table", "roots.cell-polynomial"});
       }},
      {9, "K-theory: factorizations, invariance, X permutation, to_x round trip, membership agreement", 60000,
       [&] {
         return require(ktheory_checks(seed),
                        {"X1-X2-factorization", "X1-X3-factorization", "X3-X2-factorization", "ktheory.x.invariance",
                         "ktheory.x-permutation.claimed", "ktheory.to-x.monomials", "ktheory.membership.agreement"});
       }},
      {10, "negative controls: every suite rejects its falsified fixture", 60000,
       [&] {
         Outcome out;
         for (const auto& name : suite_names()) {
           if (name == "all") continue;
           const VerificationReport r = run_suite(name, SuiteOptions{seed, 8, std::nullopt});
           const auto ids = [&] {
             std::vector<std::string> v;
             for (const auto& c : r.checks)
               if (c.id.find("control") != std::string::npos) v.push_back(c.id);
             return v;
           }();
           if (ids.empty()) {
             out.passed = false;
             out.details += " no control in " + name;
           }
           const Outcome o = require(r.checks, ids);
           out.passed = out.passed && o.passed;
           out.details += o.details;
         }
         SuiteOptions corrupted{seed, 8, corrupted_table()};
         if (run_suite("all", corrupted).all_passed()) {
           out.passed = false;
           out.details += " corrupted table accepted by all suites";
         }
         return out;
       }},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = c.run();
    } catch (const std::exception& e) {
      out = {false, std::string(" exception: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = ms <= c.budget_ms;
    const bool ok = out.passed && in_time;
    all = all && ok;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.1f ms / %.0f ms", ms, c.budget_ms);
    std::cout << "criterion " << c.number << ": " << (ok ? "PASS" : "FAIL") << " (" << timing << ") " << c.title;
    if (!in_time) std::cout << " over budget";
    if (!out.details.empty()) std::cout << " |" << out.details;
    std::cout << "\n";
  }
  return all ? 0 : 1;
}
