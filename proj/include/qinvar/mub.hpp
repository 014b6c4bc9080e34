#pragma once

// Complete sets of d+1 mutually unbiased bases for prime-power d.
//
// Odd d = p^k: the computational basis followed by, for each a in GF(d),
//   |a, j>_m = d^{-1/2} exp(2 pi i tr(a m^2 + j m) / p),   j, m in GF(d).
// Even d = 2^k: the computational basis followed by the joint eigenbases of
// d commuting classes of k-qubit Paulis {X^x Z^{S_c x} : x != 0}, where
// S_c[i][j] = tr(c e_i e_j) over GF(2^k) with the polynomial basis e_i.

#include <cstddef>
#include <string_view>
#include <vector>

#include "qinvar/qlinalg.hpp"

namespace qinvar {

enum class MubConstruction { kQuadraticPhase, kPauliClasses };

std::string_view to_string(MubConstruction c);

struct MubSet {
  std::size_t dim = 0;
  std::vector<Matrix> bases;  // d+1 unitaries; column j is |alpha, j>
  MubConstruction construction = MubConstruction::kQuadraticPhase;
};

// Throws std::invalid_argument if d is not a prime power or exceeds 32.
MubSet build_mubs(std::size_t d);

struct MubReport {
  double max_overlap_error = 0.0;         // | |<a,j|b,k>|^2 - 1/d |, a != b
  double max_trace_identity_error = 0.0;  // Tr(P_aj P_bk) vs delta_ab delta_jk + (1 - delta_ab)/d
  double orthonormality_error = 0.0;      // max |U^dagger U - I|
  bool passed = false;
};

inline constexpr double kMubTol = 1e-10;

// Exhaustive over all basis and vector pairs; evaluated in parallel over basis pairs.
MubReport verify_mubs(const MubSet& set, double tol = kMubTol);
// Single-threaded reference for verify_mubs.
MubReport verify_mubs_serial(const MubSet& set, double tol = kMubTol);

// projectors(set)[alpha][j] = |alpha, j><alpha, j|.
std::vector<std::vector<Matrix>> projectors(const MubSet& set);

}  // namespace qinvar
