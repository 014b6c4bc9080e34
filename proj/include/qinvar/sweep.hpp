#pragma once

// Parameter sweeps behind the isotropic-state and decoherence figures.
// Rows are always returned in grid order regardless of execution mode.

#include <cstddef>
#include <string>
#include <vector>

#include "qinvar/channels.hpp"
#include "qinvar/execution.hpp"

namespace qinvar {

struct SweepAxis {
  std::string name;
  double min = 0.0;
  double max = 1.0;
  std::size_t steps = 101;

  // Throws std::invalid_argument unless steps >= 2 and min < max.
  void validate() const;
  double step() const { return (max - min) / static_cast<double>(steps - 1); }
  // Endpoints are returned exactly.
  double value(std::size_t i) const;
};

struct IsotropicRow {
  double fidelity;
  double info_1;
  double info_2;
  double tangle;  // closed-form two-qutrit isotropic tangle
  double lhs;     // info_1 + info_2 + (3/2) log2 3 tangle
  double rhs;     // I(rho_12)
};

// Only d == 3 is supported; the F axis must lie in [0, 1].
std::vector<IsotropicRow> isotropic_sweep(const SweepAxis& fidelity, Execution exec = Execution::kParallel,
                                          std::size_t d = 3);

struct DecoherenceRow {
  double a;
  double p;
  double info;
  double info_closed;  // depolarization only; NaN otherwise
};

// Row-major over (a, p): a is the slow index.
std::vector<DecoherenceRow> decoherence_sweep(ChannelKind kind, const SweepAxis& a_axis, const SweepAxis& p_axis,
                                              Execution exec = Execution::kParallel);

}  // namespace qinvar
