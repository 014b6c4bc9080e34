#include "qinvar/entangle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qinvar/invinfo.hpp"

namespace qinvar {

namespace {

struct Sides {
  std::vector<std::size_t> a;
  std::vector<std::size_t> b;
};

Sides split_sides(const Dims& dims, std::size_t split) {
  if (split == 0 || split >= dims.size()) throw std::invalid_argument("bipartition leaves one side empty");
  Sides s;
  s.a.resize(split);
  s.b.resize(dims.size() - split);
  std::iota(s.a.begin(), s.a.end(), std::size_t{0});
  std::iota(s.b.begin(), s.b.end(), split);
  return s;
}

std::size_t side_dim(const Dims& dims, const std::vector<std::size_t>& side) {
  std::size_t n = 1;
  for (std::size_t i : side) n *= dims[i];
  return n;
}

std::size_t require_square_pair(const Dims& dims, const char* what) {
  if (dims.size() != 2 || dims[0] != dims[1] || dims[0] < 2)
    throw std::invalid_argument(std::string(what) + ": expected a d x d bipartite state");
  return dims[0];
}

constexpr double kPureTol = 1e-10;

}  // namespace

std::string_view to_string(TangleSource s) {
  switch (s) {
    case TangleSource::kPureState:
      return "pure-state";
    case TangleSource::kIsotropicD3:
      return "isotropic-d3";
    case TangleSource::kReducedPurity:
      return "reduced-purity-surrogate";
  }
  return "unknown";
}

double pure_tangle(const PureState& psi, std::size_t split) {
  const Sides s = split_sides(psi.dims(), split);
  const double ta = 2.0 * (1.0 - purity(reduced_state(psi, s.a)));
  const double tb = 2.0 * (1.0 - purity(reduced_state(psi, s.b)));
  if (std::abs(ta - tb) > 1e-10) throw std::logic_error("pure_tangle: reduced purities disagree");
  return ta;
}

void IsotropicParams::validate() const {
  if (d < 2) throw std::invalid_argument("isotropic state: d < 2");
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw std::invalid_argument("isotropic state: fidelity outside [0, 1]");
}

DensityMatrix isotropic_state(const IsotropicParams& params) {
  params.validate();
  const auto d = static_cast<Eigen::Index>(params.d);
  const Eigen::Index n = d * d;
  Vector phi = Vector::Zero(n);
  for (Eigen::Index i = 0; i < d; ++i) phi(i * d + i) = 1.0 / std::sqrt(static_cast<double>(d));
  const Matrix proj = phi * phi.adjoint();
  const double background = (1.0 - params.fidelity) / static_cast<double>(n - 1);
  Matrix rho = background * (Matrix::Identity(n, n) - proj) + params.fidelity * proj;
  return DensityMatrix(std::move(rho), {params.d, params.d});
}

double isotropic_tangle_d3(double fidelity) {
  if (!(fidelity >= 0.0 && fidelity <= 1.0)) throw std::invalid_argument("isotropic_tangle_d3: fidelity outside [0, 1]");
  if (fidelity <= 1.0 / 3.0) return 0.0;
  const double x = fidelity - 1.0 / 3.0;
  return 3.0 * x * x;
}

double pure_complementarity_residual(const PureState& psi, std::size_t split) {
  const Sides s = split_sides(psi.dims(), split);
  const std::size_t da = side_dim(psi.dims(), s.a);
  if (da != side_dim(psi.dims(), s.b)) throw std::invalid_argument("pure_complementarity_residual: sides differ in dimension");
  const double info_a = invariant_info_closed(reduced_state(psi, s.a)).raw;
  const double info_b = invariant_info_closed(reduced_state(psi, s.b)).raw;
  const double tau = pure_tangle(psi, split);
  return info_a + info_b + info_normalization(da) * tau - 2.0 * std::log2(static_cast<double>(da));
}

namespace {

ComplementarityDefect defect_with(const DensityMatrix& rho12, std::size_t d, double tangle, TangleSource source) {
  ComplementarityDefect r;
  r.info_1 = invariant_info_closed(partial_trace(rho12, {0})).raw;
  r.info_2 = invariant_info_closed(partial_trace(rho12, {1})).raw;
  r.tangle = tangle;
  r.tangle_source = source;
  r.defect = 2.0 * std::log2(static_cast<double>(d)) - r.info_1 - r.info_2 - info_normalization(d) * tangle;
  return r;
}

// Tangle for an arbitrary d x d state: exact for pure input, otherwise the
// smaller of the two reduced-purity expressions, which bounds the convex-roof
// tangle from above.
std::pair<double, TangleSource> generic_tangle(const DensityMatrix& rho12) {
  const double p1 = purity(partial_trace(rho12, {0}));
  const double p2 = purity(partial_trace(rho12, {1}));
  const bool pure = purity(rho12) >= 1.0 - kPureTol;
  return {2.0 * (1.0 - std::max(p1, p2)), pure ? TangleSource::kPureState : TangleSource::kReducedPurity};
}

// Fidelity of a two-qutrit state that is exactly isotropic, if it is one.
std::optional<double> isotropic_fidelity_d3(const DensityMatrix& rho12) {
  if (rho12.dims() != Dims{3, 3}) return std::nullopt;
  double f = 0.0;
  for (Eigen::Index i = 0; i < 3; ++i)
    for (Eigen::Index j = 0; j < 3; ++j) f += rho12.matrix()(4 * i, 4 * j).real() / 3.0;
  f = std::clamp(f, 0.0, 1.0);
  if (max_abs_diff(rho12.matrix(), isotropic_state({3, f}).matrix()) > kHermitianTol) return std::nullopt;
  return f;
}

}  // namespace

ComplementarityDefect mixed_complementarity_defect(const DensityMatrix& rho12) {
  const std::size_t d = require_square_pair(rho12.dims(), "mixed_complementarity_defect");
  if (const auto f = isotropic_fidelity_d3(rho12))
    return defect_with(rho12, 3, isotropic_tangle_d3(*f), TangleSource::kIsotropicD3);
  const auto [tangle, source] = generic_tangle(rho12);
  return defect_with(rho12, d, tangle, source);
}

ComplementarityDefect mixed_complementarity_defect(const IsotropicParams& params) {
  const DensityMatrix rho = isotropic_state(params);
  if (params.d == 3) return defect_with(rho, 3, isotropic_tangle_d3(params.fidelity), TangleSource::kIsotropicD3);
  return mixed_complementarity_defect(rho);
}

ConjectureProbe isotropic_conjecture_probe(double fidelity, std::size_t d) {
  if (d != 3) throw std::invalid_argument("isotropic_conjecture_probe: only d = 3 is supported");
  const DensityMatrix rho = isotropic_state({d, fidelity});
  const double dd = static_cast<double>(d);
  const double local = invariant_info_closed(partial_trace(rho, {0})).raw +
                       invariant_info_closed(partial_trace(rho, {1})).raw;
  ConjectureProbe p;
  p.lhs = local + info_normalization(d) * isotropic_tangle_d3(fidelity);
  p.rhs = 2.0 * dd * dd / (dd * dd - 1.0) * std::log2(dd) * (purity(rho) - 1.0 / (dd * dd));
  p.satisfied = p.lhs <= p.rhs + kBoundSlack;
  return p;
}

GapReport info_gap_report(const DensityMatrix& rho12) {
  GapReport r;
  r.d = require_square_pair(rho12.dims(), "info_gap_report");
  const double log_d = std::log2(static_cast<double>(r.d));
  const std::size_t big = r.d * r.d;

  r.info_12 = invariant_info_closed(rho12).raw;
  r.info_1 = invariant_info_closed(partial_trace(rho12, {0})).raw;
  r.info_2 = invariant_info_closed(partial_trace(rho12, {1})).raw;
  r.gap = r.info_12 - r.info_1 - r.info_2;
  r.upper_bound = 2.0 * log_d;

  const auto [tangle, source] = generic_tangle(rho12);
  r.tangle_12 = tangle;
  r.tangle_source = source;

  // Reference R padded to dimension d^2; the 12:R cut is a pure d^2 x d^2 state.
  const PureState psi = purify(rho12);
  const std::vector<std::size_t> system{0, 1};
  const std::vector<std::size_t> reference{2};
  const DensityMatrix rho12_back = reduced_state(psi, system);
  const DensityMatrix rho_r = reduced_state(psi, reference);
  r.info_r = invariant_info_closed(rho_r).raw;
  r.tangle_12r = 2.0 * (1.0 - purity(rho12_back));
  r.purification_residual =
      invariant_info_closed(rho12_back).raw + r.info_r + info_normalization(big) * r.tangle_12r - 4.0 * log_d;

  r.lower_bound = 2.0 * log_d - r.info_r - info_normalization(big) * r.tangle_12r + info_normalization(r.d) * r.tangle_12;
  r.bounds_hold = r.lower_bound - kBoundSlack <= r.gap && r.gap <= r.upper_bound + kBoundSlack;
  return r;
}

}  // namespace qinvar
