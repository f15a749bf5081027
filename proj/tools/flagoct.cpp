// flagoct: verification front end.
//
//   flagoct verify <suite> [--seed N] [--degree-cutoff D] [--format text|json] [--table-fixture FILE]
//   flagoct gkm-check --ring {Hb|HT|RT|RX} --file FILE [--format text|json]
//   flagoct expand <expr> --ring NAME
//
// Exit status: 0 all checks pass (or tuple is a member), 1 a check fails, 2 usage or input error.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "flagoct/character.hpp"
#include "flagoct/cohomology.hpp"
#include "flagoct/errors.hpp"
#include "flagoct/expression.hpp"
#include "flagoct/gkm.hpp"
#include "flagoct/ktheory.hpp"
#include "flagoct/suites.hpp"

using namespace flagoct;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw PreconditionError("cannot read " + path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::uint64_t default_seed() {
  if (const char* env = std::getenv("FLAGOCT_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw PreconditionError(std::string("FLAGOCT_SEED is not an unsigned integer: ") + env);
    }
  }
  return SuiteOptions{}.seed;
}

RingPtr polynomial_ring(const std::string& name) {
  if (name == "Hx") return euler_ring();
  if (name == "Hbeta") return beta_ring();
  if (name == "Hb") return b_ring();
  if (name == "Hb3") return b3_ring();
  if (name == "HT") return rho_ring();
  if (name == "HL") return l_ring();
  if (name == "lambda") return lambda_ring();
  if (name == "RX") return x_ring();
  return nullptr;
}

std::string edge_text(const GkmEdge& e) {
  return "{" + Sigma3Element::all()[e.from].name() + ", " + Sigma3Element::all()[e.to].name() + "} via " +
         transposition_name(e.transposition);
}

struct TupleOutcome {
  bool member = true;
  std::string reason;
};

TupleOutcome check_tuple(const std::string& ring, const nlohmann::json& entries) {
  auto entry = [&](const Sigma3Element& s) {
    const std::string key = s.name();
    if (!entries.contains(key) || !entries[key].is_string())
      throw PreconditionError("entries must map " + key + " to an expression string");
    return entries[key].get<std::string>();
  };
  if (entries.size() != 6) throw PreconditionError("entries must have exactly the six keys 1, s1, s2, s1s2, s2s1, s1s2s1");

  auto from_result = [](const MembershipResult& r) {
    return TupleOutcome{r.member, r.failing_edge ? "fails at edge " + edge_text(*r.failing_edge) : ""};
  };
  if (ring == "Hb" || ring == "HT") {
    const GkmGraph graph = ring == "Hb" ? GkmGraph::abstract() : GkmGraph::realized();
    CohTuple t{Polynomial(graph.ring()), Polynomial(graph.ring()), Polynomial(graph.ring()),
               Polynomial(graph.ring()), Polynomial(graph.ring()), Polynomial(graph.ring())};
    for (const auto& s : Sigma3Element::all()) t[s.index()] = parse_polynomial(entry(s), graph.ring());
    if (ring == "HT")
      for (const auto& s : Sigma3Element::all())
        if (!is_spin8_invariant(rho_to_l(t[s.index()])))
          return {false, "component at " + s.name() + " is not W_Spin(8)-invariant"};
    return from_result(check_membership(graph, t));
  }
  if (ring == "RT") {
    KTuple t;
    for (const auto& s : Sigma3Element::all()) t[s.index()] = parse_character(entry(s));
    return from_result(check_k_membership_rt(t));
  }
  if (ring == "RX") {
    XTuple t{Polynomial(x_ring()), Polynomial(x_ring()), Polynomial(x_ring()),
             Polynomial(x_ring()), Polynomial(x_ring()), Polynomial(x_ring())};
    for (const auto& s : Sigma3Element::all()) {
      t[s.index()] = parse_polynomial(entry(s), x_ring());
      if (!has_integer_coefficients(t[s.index()]))
        return {false, "component at " + s.name() + " has non-integer coefficients"};
    }
    return from_result(check_k_membership_x(t));
  }
  throw PreconditionError("ring must be one of Hb, HT, RT, RX");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the octonionic flag manifold computations"};
  app.require_subcommand(1);

  std::string suite, format = "text", fixture;
  std::optional<std::uint64_t> seed;
  int cutoff = 8;
  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", suite, "octonion, jordan, roots, cohomology, gkm, ktheory or all")->required();
  verify->add_option("--seed", seed, "random seed (default: FLAGOCT_SEED or built-in)");
  verify->add_option("--degree-cutoff", cutoff, "largest degree for the free-rank check (even, <= 16)");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--table-fixture", fixture, "JSON restriction table replacing the published one");

  std::string ring, file;
  auto* gkm = app.add_subcommand("gkm-check", "test a tuple for membership in a GKM description");
  gkm->add_option("--ring", ring, "Hb, HT, RT or RX")->required()->check(CLI::IsMember({"Hb", "HT", "RT", "RX"}));
  gkm->add_option("--file", file, "tuple record (JSON)")->required();
  gkm->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  std::string expr, expand_ring;
  auto* expand = app.add_subcommand("expand", "print the canonical form of an expression");
  expand->add_option("expr", expr, "expression")->required();
  expand->add_option("--ring", expand_ring, "Hx, Hbeta, Hb, Hb3, HT, HL, lambda, RT or RX")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) {
      if (!is_suite_name(suite)) {
        std::cerr << "unknown suite '" << suite << "'\n";
        return kExitUsage;
      }
      SuiteOptions options;
      options.seed = seed ? *seed : default_seed();
      if (cutoff < 0 || cutoff % 2 != 0 || cutoff > kMaxRankDegree) {
        std::cerr << "--degree-cutoff must be even and between 0 and " << kMaxRankDegree << "\n";
        return kExitUsage;
      }
      options.degree_cutoff = cutoff;
      if (!fixture.empty()) options.table = parse_table_fixture(read_file(fixture));
      const VerificationReport report = run_suite(suite, options);
      std::cout << (format == "json" ? report.to_json() : report.to_text()) << "\n";
      return report.all_passed() ? 0 : kExitFail;
    }
    if (*gkm) {
      const nlohmann::json doc = nlohmann::json::parse(read_file(file));
      if (doc.contains("ring") && doc["ring"] != ring) {
        std::cerr << "file declares ring " << doc["ring"].dump() << " but --ring is " << ring << "\n";
        return kExitUsage;
      }
      if (!doc.contains("entries") || !doc["entries"].is_object()) throw PreconditionError("record needs an entries object");
      const TupleOutcome out = check_tuple(ring, doc["entries"]);
      if (format == "json") {
        nlohmann::ordered_json j;
        j["ring"] = ring;
        j["member"] = out.member;
        j["reason"] = out.reason;
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << (out.member ? "member" : "not a member: " + out.reason) << "\n";
      }
      return out.member ? 0 : kExitFail;
    }
    if (*expand) {
      if (expand_ring == "RT") {
        const Character c = parse_character(expr);
        std::cout << c.to_string() << "\nweights " << c.weight_list() << "\n";
        return 0;
      }
      const RingPtr r = polynomial_ring(expand_ring);
      if (!r) {
        std::cerr << "unknown ring '" << expand_ring << "'\n";
        return kExitUsage;
      }
      const Polynomial p = parse_polynomial(expr, r);
      std::cout << p.to_string() << "\n";
      if (expand_ring == "RX" && has_integer_coefficients(p)) {
        const Character c = expand_rep(p);
        std::cout << "character " << c.to_string() << "\nweights " << c.weight_list() << "\n";
      }
      return 0;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnknownVariableError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "bad JSON input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceError& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
