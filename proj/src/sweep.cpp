#include "qinvar/sweep.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "qinvar/entangle.hpp"
#include "qinvar/invinfo.hpp"

namespace qinvar {

void SweepAxis::validate() const {
  if (steps < 2) throw std::invalid_argument("sweep axis '" + name + "': steps must be >= 2");
  if (!(min < max)) throw std::invalid_argument("sweep axis '" + name + "': min must be < max");
}

double SweepAxis::value(std::size_t i) const {
  if (i + 1 == steps) return max;
  return min + static_cast<double>(i) * (max - min) / static_cast<double>(steps - 1);
}

namespace {

void require_unit_axis(const SweepAxis& axis) {
  axis.validate();
  if (axis.min < 0.0 || axis.max > 1.0) throw std::invalid_argument("sweep axis '" + axis.name + "' must lie in [0, 1]");
}

IsotropicRow isotropic_point(double f) {
  const DensityMatrix rho = isotropic_state({3, f});
  IsotropicRow row;
  row.fidelity = f;
  row.info_1 = invariant_info_closed(partial_trace(rho, {0})).bits;
  row.info_2 = invariant_info_closed(partial_trace(rho, {1})).bits;
  row.tangle = isotropic_tangle_d3(f);
  row.lhs = row.info_1 + row.info_2 + info_normalization(3) * row.tangle;
  row.rhs = invariant_info_closed(rho).bits;
  return row;
}

DecoherenceRow decoherence_point(ChannelKind kind, double a, double p) {
  DecoherenceRow row;
  row.a = a;
  row.p = p;
  row.info = local_info_after_channel(a, {kind, p, {}});
  row.info_closed = kind == ChannelKind::kDepolarization ? local_info_depolarized_closed(a, p)
                                                          : std::numeric_limits<double>::quiet_NaN();
  return row;
}

}  // namespace

std::vector<IsotropicRow> isotropic_sweep(const SweepAxis& fidelity, Execution exec, std::size_t d) {
  if (d != 3) throw std::invalid_argument("isotropic_sweep: only d = 3 is supported");
  require_unit_axis(fidelity);
  const auto n = static_cast<long>(fidelity.steps);
  std::vector<IsotropicRow> rows(fidelity.steps);
  if (exec == Execution::kSerial) {
    for (long i = 0; i < n; ++i) rows[i] = isotropic_point(fidelity.value(i));
  } else {
#pragma omp parallel for schedule(static)
    for (long i = 0; i < n; ++i) rows[i] = isotropic_point(fidelity.value(i));
  }
  return rows;
}

std::vector<DecoherenceRow> decoherence_sweep(ChannelKind kind, const SweepAxis& a_axis, const SweepAxis& p_axis,
                                              Execution exec) {
  require_unit_axis(a_axis);
  require_unit_axis(p_axis);
  const auto na = static_cast<long>(a_axis.steps);
  const auto np = static_cast<long>(p_axis.steps);
  std::vector<DecoherenceRow> rows(static_cast<std::size_t>(na * np));
  if (exec == Execution::kSerial) {
    for (long i = 0; i < na; ++i)
      for (long j = 0; j < np; ++j) rows[i * np + j] = decoherence_point(kind, a_axis.value(i), p_axis.value(j));
  } else {
#pragma omp parallel for collapse(2) schedule(static)
    for (long i = 0; i < na; ++i)
      for (long j = 0; j < np; ++j) rows[i * np + j] = decoherence_point(kind, a_axis.value(i), p_axis.value(j));
  }
  return rows;
}

}  // namespace qinvar
