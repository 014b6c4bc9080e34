// qinvar: MUB construction, invariant-information sweeps and property suites.
//
// Exit codes: 0 pass, 1 check failure, 2 usage or domain error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "qinvar/channels.hpp"
#include "qinvar/csv.hpp"
#include "qinvar/gf.hpp"
#include "qinvar/mub.hpp"
#include "qinvar/sweep.hpp"
#include "qinvar/verify.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

// Writes to the file if given, stdout otherwise.
bool emit(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    return true;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) {
    std::cerr << "error: cannot open " << path << " for writing\n";
    return false;
  }
  f << content;
  return static_cast<bool>(f);
}

int cmd_mub(int d, double tol, const std::string& dump) {
  if (d < 2 || !qinvar::gf::factor_prime_power(d).valid()) {
    std::cerr << "error: " << d << " is not a prime power\n";
    return kExitUsage;
  }
  if (d > qinvar::gf::kMaxOrder) {
    std::cerr << "error: " << d << " exceeds the supported maximum " << qinvar::gf::kMaxOrder << "\n";
    return kExitUsage;
  }
  const qinvar::MubSet set = qinvar::build_mubs(static_cast<std::size_t>(d));
  const qinvar::MubReport r = qinvar::verify_mubs(set, tol);
  std::cout << "dimension: " << d << "\n"
            << "construction: " << qinvar::to_string(set.construction) << "\n"
            << "bases: " << set.bases.size() << "\n"
            << "max_overlap_error: " << qinvar::csv::format_double(r.max_overlap_error) << "\n"
            << "max_trace_identity_error: " << qinvar::csv::format_double(r.max_trace_identity_error) << "\n"
            << "orthonormality_error: " << qinvar::csv::format_double(r.orthonormality_error) << "\n"
            << "tolerance: " << qinvar::csv::format_double(tol) << "\n"
            << "result: " << (r.passed ? "pass" : "FAIL") << "\n";
  if (!dump.empty()) {
    std::ostringstream os;
    qinvar::csv::write_mub(os, set);
    if (!emit(dump, os.str())) return kExitUsage;
  }
  return r.passed ? kExitPass : kExitFail;
}

int cmd_isotropic(int d, std::size_t steps, const std::string& out) {
  if (d != 3) {
    std::cerr << "error: isotropic sweep supports d = 3 only\n";
    return kExitUsage;
  }
  const auto rows = qinvar::isotropic_sweep({"F", 0.0, 1.0, steps});
  std::ostringstream os;
  qinvar::csv::write_isotropic(os, rows);
  if (!emit(out, os.str())) return kExitUsage;
  bool ordered = true;
  for (const auto& r : rows) ordered = ordered && r.lhs <= r.rhs + 1e-9;
  if (!ordered) std::cerr << "error: lhs exceeds rhs on at least one row\n";
  return ordered ? kExitPass : kExitFail;
}

int cmd_decoherence(const std::string& kind_name, std::size_t steps, const std::string& out) {
  const auto kind = qinvar::parse_channel_kind(kind_name);
  if (!kind) {
    std::cerr << "error: unknown channel kind '" << kind_name << "'\n";
    return kExitUsage;
  }
  const auto rows = qinvar::decoherence_sweep(*kind, {"a", 0.0, 1.0, steps}, {"p", 0.0, 1.0, steps});
  std::ostringstream os;
  qinvar::csv::write_decoherence(os, *kind, rows);
  if (!emit(out, os.str())) return kExitUsage;
  bool agree = true;
  if (*kind == qinvar::ChannelKind::kDepolarization)
    for (const auto& r : rows) agree = agree && std::abs(r.info - r.info_closed) <= 1e-10;
  if (!agree) std::cerr << "error: simulation disagrees with the closed form\n";
  return agree ? kExitPass : kExitFail;
}

int cmd_verify(const std::string& suite, std::uint64_t seed, const std::string& out) {
  const auto report = qinvar::run_suite(suite, seed);
  if (!report) {
    std::cerr << "error: unknown suite '" << suite << "'; known:";
    for (const auto& n : qinvar::suite_names()) std::cerr << ' ' << n;
    std::cerr << "\n";
    return kExitUsage;
  }
  if (!emit(out, qinvar::to_json(*report))) return kExitUsage;
  return report->passed() ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant information and complementarity toolkit for qudits"};
  app.require_subcommand(1);

  int mub_d = 0;
  double mub_tol = qinvar::kMubTol;
  std::string mub_dump;
  auto* mub = app.add_subcommand("mub", "Build and verify d+1 mutually unbiased bases");
  mub->add_option("d", mub_d, "Dimension (prime power <= 32)")->required();
  mub->add_option("--tol", mub_tol, "Verification tolerance")->capture_default_str();
  mub->add_option("--dump", mub_dump, "Write bases as CSV (basis,vector,component,re,im)");

  int iso_d = 3;
  std::size_t iso_steps = 101;
  std::string iso_out;
  auto* iso = app.add_subcommand("isotropic-sweep", "Local vs global information of two-qutrit isotropic states");
  iso->add_option("--d", iso_d, "Local dimension")->capture_default_str();
  iso->add_option("--steps", iso_steps, "Grid points on F in [0, 1]")->capture_default_str()->check(CLI::Range(2, 1000000));
  iso->add_option("--out", iso_out, "CSV output file (default stdout)");

  std::string deco_kind = "depolarization";
  std::size_t deco_steps = 101;
  std::string deco_out;
  auto* deco = app.add_subcommand("decoherence-sweep", "Local information of a|00>+sqrt(1-a^2)|11> under decoherence");
  deco->add_option("--kind", deco_kind, "depolarization | dephasing | dissipation")->capture_default_str();
  deco->add_option("--steps", deco_steps, "Grid points per axis on [0, 1]^2")->capture_default_str()->check(CLI::Range(2, 100000));
  deco->add_option("--out", deco_out, "CSV output file (default stdout)");

  std::string suite;
  std::uint64_t seed = 1;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "Run a seeded property suite and print a JSON report");
  verify->add_option("--suite", suite, "Suite name")->required();
  verify->add_option("--seed", seed, "Random seed")->envname("QINVAR_SEED")->capture_default_str();
  verify->add_option("--out", verify_out, "JSON output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*mub) return cmd_mub(mub_d, mub_tol, mub_dump);
    if (*iso) return cmd_isotropic(iso_d, iso_steps, iso_out);
    if (*deco) return cmd_decoherence(deco_kind, deco_steps, deco_out);
    if (*verify) return cmd_verify(suite, seed, verify_out);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
