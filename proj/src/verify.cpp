#include "qinvar/verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <utility>

#include <json.hpp>

#include "qinvar/channels.hpp"
#include "qinvar/entangle.hpp"
#include "qinvar/invinfo.hpp"
#include "qinvar/mub.hpp"
#include "qinvar/random.hpp"
#include "qinvar/sweep.hpp"

namespace qinvar {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.informational || c.passed; });
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"mub",  "eq2-eq4", "eq5",         "eq6",        "eq10",
                                              "eq12", "channels", "conjecture9", "gap-example"};
  return names;
}

namespace {

// Evaluates f(i) for i in [0, n); results land in index order.
std::vector<double> map_samples(std::size_t n, Execution exec, const std::function<double(std::size_t)>& f) {
  std::vector<double> out(n);
  const auto count = static_cast<long>(n);
  if (exec == Execution::kSerial) {
    for (long i = 0; i < count; ++i) out[i] = f(static_cast<std::size_t>(i));
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) out[i] = f(static_cast<std::size_t>(i));
  }
  return out;
}

CheckResult upper_check(std::string name, const std::vector<double>& values, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.samples = values.size();
  c.worst = values.empty() ? 0.0 : *std::max_element(values.begin(), values.end());
  c.tolerance = tol;
  c.passed = c.worst <= tol;
  return c;
}

CheckResult lower_check(std::string name, const std::vector<double>& values, double tol) {
  CheckResult c;
  c.name = std::move(name);
  c.samples = values.size();
  c.worst = values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
  c.tolerance = tol;
  c.lower_bound = true;
  c.passed = c.worst >= tol;
  return c;
}

std::string dim_label(std::size_t d) { return "d=" + std::to_string(d); }

SuiteReport suite_mub(Execution) {
  SuiteReport r;
  for (std::size_t d : {2, 3, 4, 5, 7, 8, 9}) {
    const MubSet set = build_mubs(d);
    const MubReport m = verify_mubs(set);
    r.checks.push_back(upper_check("overlap " + dim_label(d), {m.max_overlap_error}, kMubTol));
    r.checks.push_back(upper_check("trace identity " + dim_label(d), {m.max_trace_identity_error}, kMubTol));
    r.checks.push_back(upper_check("orthonormality " + dim_label(d), {m.orthonormality_error}, kMubTol));
    const bool complete = set.bases.size() == d + 1;
    r.checks.push_back(upper_check("basis count " + dim_label(d), {complete ? 0.0 : 1.0}, 0.0));
  }
  return r;
}

SuiteReport suite_eq2_eq4(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  for (std::size_t d : {2, 3, 4, 5, 7, 9}) {
    const MubSet set = build_mubs(d);
    const std::string stream = "eq2-eq4/" + std::to_string(d);
    const auto dev = map_samples(500, exec, [&](std::size_t i) {
      Rng rng = derived_rng(seed, stream, i);
      const DensityMatrix rho = random_mixed_state({d}, rng);
      return std::abs(invariant_info_mub(rho, set).raw - invariant_info_closed(rho).raw);
    });
    r.checks.push_back(upper_check("mub-sum vs closed form " + dim_label(d), dev, 1e-9));
  }
  return r;
}

SuiteReport suite_eq5(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  const auto res = map_samples(1000, exec, [&](std::size_t i) {
    Rng rng = derived_rng(seed, "eq5", i);
    return std::abs(pure_complementarity_residual(random_pure_state({3, 3}, rng)));
  });
  r.checks.push_back(upper_check("pure two-qutrit complementarity |residual|", res, 1e-9));
  return r;
}

SuiteReport suite_eq6(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 1000}, {3, 1000}, {5, 200}}) {
    const std::string stream = "eq6/" + std::to_string(d);
    const auto defects = map_samples(n, exec, [&](std::size_t i) {
      Rng rng = derived_rng(seed, stream, i);
      return mixed_complementarity_defect(random_mixed_state({d, d}, rng)).defect;
    });
    auto c = lower_check("mixed complementarity defect " + dim_label(d), defects, -1e-9);
    c.note = "tangle: reduced-purity surrogate";
    r.checks.push_back(std::move(c));
  }
  return r;
}

SuiteReport suite_eq10(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 200}, {3, 200}}) {
    const std::string stream = "eq10/" + std::to_string(d);
    const auto res = map_samples(n, exec, [&](std::size_t i) {
      Rng rng = derived_rng(seed, stream, i);
      return std::abs(info_gap_report(random_mixed_state({d, d}, rng)).purification_residual);
    });
    r.checks.push_back(upper_check("purified 12:R complementarity |residual| " + dim_label(d), res, 1e-9));
  }
  return r;
}

SuiteReport suite_eq12(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  for (auto [d, n] : {std::pair<std::size_t, std::size_t>{2, 500}, {3, 500}}) {
    const std::string stream = "eq12/" + std::to_string(d);
    std::vector<double> below(n), above(n);
    map_samples(n, exec, [&](std::size_t i) {
      Rng rng = derived_rng(seed, stream, i);
      const GapReport g = info_gap_report(random_mixed_state({d, d}, rng));
      below[i] = g.lower_bound - g.gap;
      above[i] = g.gap - g.upper_bound;
      return std::max(below[i], above[i]);
    });
    r.checks.push_back(upper_check("lower bound - gap " + dim_label(d), below, 1e-9));
    r.checks.push_back(upper_check("gap - upper bound " + dim_label(d), above, 1e-9));
  }
  return r;
}

SuiteReport suite_channels(std::uint64_t seed, Execution exec) {
  SuiteReport r;
  constexpr std::size_t kSamples = 200;
  for (ChannelKind kind : {ChannelKind::kDepolarization, ChannelKind::kDephasing, ChannelKind::kDissipation}) {
    const std::string label(to_string(kind));
    std::vector<double> trace_err(kSamples), neg_eig(kSamples);
    map_samples(kSamples, exec, [&](std::size_t i) {
      Rng rng = derived_rng(seed, "channels/" + label, i);
      std::uniform_real_distribution<double> unit(0.0, 1.0);
      const DensityMatrix rho = random_mixed_state({2, 2}, rng);
      const DensityMatrix out = apply_channel(rho, {kind, unit(rng), {}});
      trace_err[i] = std::abs(out.matrix().trace() - Complex(1.0));
      neg_eig[i] = min_eigenvalue(out.matrix());
      return 0.0;
    });
    r.checks.push_back(upper_check(label + " trace preservation", trace_err, 1e-12));
    r.checks.push_back(lower_check(label + " positivity (min eigenvalue)", neg_eig, -1e-10));
  }

  const SweepAxis a_axis{"a", 0.0, 1.0, 101};
  const SweepAxis p_axis{"p", 0.0, 1.0, 101};
  const auto rows = decoherence_sweep(ChannelKind::kDepolarization, a_axis, p_axis, exec);
  std::vector<double> dev;
  dev.reserve(rows.size());
  for (const auto& row : rows) dev.push_back(std::abs(row.info - row.info_closed));
  r.checks.push_back(upper_check("depolarization vs closed form (101x101)", dev, 1e-10));

  const DensityMatrix damped = apply_channel(density_from_pure(superposition_state(0.6)),
                                             {ChannelKind::kDissipation, 1.0, {}});
  Matrix ground = Matrix::Zero(4, 4);
  ground(0, 0) = 1.0;
  r.checks.push_back(upper_check("dissipation p=1 -> |00><00|", {max_abs_diff(damped.matrix(), ground)}, 1e-12));
  return r;
}

SuiteReport suite_conjecture9(Execution exec) {
  SuiteReport r;
  const SweepAxis axis{"F", 0.0, 1.0, 101};
  const auto slack = map_samples(axis.steps, exec, [&](std::size_t i) {
    const ConjectureProbe p = isotropic_conjecture_probe(axis.value(i));
    return p.rhs - p.lhs;
  });
  auto c = lower_check("conjecture probe rhs - lhs (d=3, 101 points)", slack, -1e-9);
  c.informational = true;
  const auto violations = std::count_if(slack.begin(), slack.end(), [](double s) { return s < -1e-9; });
  c.note = "conjecture probe; violations: " + std::to_string(violations);
  r.checks.push_back(std::move(c));
  return r;
}

SuiteReport suite_gap_example() {
  SuiteReport r;
  const std::vector<double> probs{5.0 / 12, 4.0 / 12, 2.0 / 12, 1.0 / 12};
  const GapReport g = info_gap_report(DensityMatrix::diagonal(probs, {2, 2}));
  auto c = upper_check("|gap + 5/54|", {std::abs(g.gap + 5.0 / 54.0)}, 1e-12);
  c.note = "gap = " + std::to_string(g.gap);
  r.checks.push_back(std::move(c));
  r.checks.push_back(upper_check("lower bound - gap", {g.lower_bound - g.gap}, 1e-9));
  r.checks.push_back(upper_check("gap - upper bound", {g.gap - g.upper_bound}, 1e-9));
  return r;
}

}  // namespace

std::optional<SuiteReport> run_suite(std::string_view name, std::uint64_t seed, Execution exec) {
  SuiteReport r;
  if (name == "mub") r = suite_mub(exec);
  else if (name == "eq2-eq4") r = suite_eq2_eq4(seed, exec);
  else if (name == "eq5") r = suite_eq5(seed, exec);
  else if (name == "eq6") r = suite_eq6(seed, exec);
  else if (name == "eq10") r = suite_eq10(seed, exec);
  else if (name == "eq12") r = suite_eq12(seed, exec);
  else if (name == "channels") r = suite_channels(seed, exec);
  else if (name == "conjecture9") r = suite_conjecture9(exec);
  else if (name == "gap-example") r = suite_gap_example();
  else return std::nullopt;
  r.suite = std::string(name);
  r.seed = seed;
  return r;
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json j;
  j["suite"] = report.suite;
  j["seed"] = report.seed;
  j["passed"] = report.passed();
  auto& checks = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : report.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["samples"] = c.samples;
    cj["worst"] = c.worst;
    cj["bound"] = c.lower_bound ? ">=" : "<=";
    cj["tolerance"] = c.tolerance;
    cj["passed"] = c.passed;
    cj["informational"] = c.informational;
    if (!c.note.empty()) cj["note"] = c.note;
    checks.push_back(std::move(cj));
  }
  return j.dump(2) + "\n";
}

}  // namespace qinvar
