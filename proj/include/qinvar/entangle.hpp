#pragma once

// Tangle, isotropic states, and the local/nonlocal information balance for
// bipartite d x d systems.
//
// Bipartitions are given by a split index: subsystems [0, split) form side A
// and [split, n) form side B.

#include <cstddef>
#include <string_view>

#include "qinvar/qlinalg.hpp"

namespace qinvar {

// 2 (1 - Tr rho_A^2), cross-checked against side B to 1e-10.
// Throws std::invalid_argument for a split that leaves a side empty.
double pure_tangle(const PureState& psi, std::size_t split = 1);

struct IsotropicParams {
  std::size_t d = 3;
  double fidelity = 0.0;  // <Phi+| rho |Phi+>, in [0, 1]

  // Throws std::invalid_argument for d < 2 or fidelity outside [0, 1].
  void validate() const;
  bool separable() const { return fidelity <= 1.0 / static_cast<double>(d); }
};

// (1-F)/(d^2-1) (I - |Phi+><Phi+|) + F |Phi+><Phi+| on dims {d, d}.
DensityMatrix isotropic_state(const IsotropicParams& params);

// Tangle of the two-qutrit isotropic state: 0 for F <= 1/3, 3 (F - 1/3)^2 above.
double isotropic_tangle_d3(double fidelity);

// I(rho_A) + I(rho_B) + N(D) tau - 2 log2 D for a pure D x D state.
// Throws std::invalid_argument when the two sides differ in dimension.
double pure_complementarity_residual(const PureState& psi, std::size_t split = 1);

enum class TangleSource {
  kPureState,       // exact: 2 (1 - Tr rho_1^2)
  kIsotropicD3,     // closed-form two-qutrit isotropic tangle
  kReducedPurity,   // surrogate for mixed input: 2 (1 - max(Tr rho_1^2, Tr rho_2^2))
};

std::string_view to_string(TangleSource s);

struct ComplementarityDefect {
  double defect = 0.0;  // 2 log2 d - I(rho_1) - I(rho_2) - N(d) tau
  double info_1 = 0.0;
  double info_2 = 0.0;
  double tangle = 0.0;
  TangleSource tangle_source = TangleSource::kReducedPurity;
};

// rho12 must have dims {d, d}.
ComplementarityDefect mixed_complementarity_defect(const DensityMatrix& rho12);
// Uses the closed-form tangle when d == 3, the surrogate otherwise.
ComplementarityDefect mixed_complementarity_defect(const IsotropicParams& params);

struct ConjectureProbe {
  double lhs = 0.0;  // I(rho_1) + I(rho_2) + N(d) tau
  double rhs = 0.0;  // 2 d^2/(d^2-1) log2 d (Tr rho^2 - 1/d^2)
  bool satisfied = false;
};

// Numerical probe of the conjectured isotropic bound; only d == 3 has a
// printed tangle, so other d throw std::invalid_argument.
ConjectureProbe isotropic_conjecture_probe(double fidelity, std::size_t d = 3);

struct GapReport {
  std::size_t d = 0;
  double info_12 = 0.0;
  double info_1 = 0.0;
  double info_2 = 0.0;
  double info_r = 0.0;  // reference system of the purification
  double gap = 0.0;     // info_12 - info_1 - info_2
  double lower_bound = 0.0;
  double upper_bound = 0.0;  // 2 log2 d
  double tangle_12 = 0.0;
  double tangle_12r = 0.0;   // 2 (1 - Tr rho_12^2) across the 12:R cut
  double purification_residual = 0.0;  // I(rho_12) + I(rho_R) + N(d^2) tau_12R - 4 log2 d
  TangleSource tangle_source = TangleSource::kReducedPurity;
  bool bounds_hold = false;
};

inline constexpr double kBoundSlack = 1e-9;

// rho12 must have dims {d, d}.
GapReport info_gap_report(const DensityMatrix& rho12);

}  // namespace qinvar
