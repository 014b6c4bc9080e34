#include "qinvar/invinfo.hpp"

#include <cmath>
#include <stdexcept>

namespace qinvar {

std::string_view to_string(InfoMethod m) {
  return m == InfoMethod::kMubSum ? "mub-sum" : "closed-form";
}

double info_normalization(std::size_t d) {
  if (d < 2) throw std::invalid_argument("info_normalization: dimension < 2");
  const double dd = static_cast<double>(d);
  return dd / (dd - 1.0) * std::log2(dd);
}

namespace {
InfoResult make_result(double raw, InfoMethod method, std::size_t dim) {
  return {raw < 0.0 ? 0.0 : raw, raw, method, dim};
}
}  // namespace

InfoResult invariant_info_mub(const DensityMatrix& rho, const MubSet& mubs) {
  const std::size_t d = rho.size();
  if (d != mubs.dim) throw std::invalid_argument("invariant_info_mub: state and MUB dimensions differ");
  const double inv_d = 1.0 / static_cast<double>(d);
  double sum = 0.0;
  for (const Matrix& u : mubs.bases) {
    // p_j = <alpha,j| rho |alpha,j>
    const Matrix rotated = u.adjoint() * rho.matrix() * u;
    double total = 0.0;
    for (Eigen::Index j = 0; j < rotated.rows(); ++j) {
      const double pj = rotated(j, j).real();
      total += pj;
      sum += (pj - inv_d) * (pj - inv_d);
    }
    if (std::abs(total - 1.0) > 1e-10) throw std::runtime_error("invariant_info_mub: outcome probabilities do not sum to 1");
  }
  return make_result(info_normalization(d) * sum, InfoMethod::kMubSum, d);
}

InfoResult invariant_info_closed(const DensityMatrix& rho) {
  const std::size_t d = rho.size();
  return make_result(info_normalization(d) * (purity(rho) - 1.0 / static_cast<double>(d)), InfoMethod::kClosedForm, d);
}

AdditivityProbe additivity_probe(const DensityMatrix& rho, const DensityMatrix& sigma) {
  AdditivityProbe p;
  p.lhs = invariant_info_closed(tensor(rho, sigma)).bits;
  p.rhs = invariant_info_closed(rho).bits + invariant_info_closed(sigma).bits;
  p.gap = p.lhs - p.rhs;
  return p;
}

}  // namespace qinvar
