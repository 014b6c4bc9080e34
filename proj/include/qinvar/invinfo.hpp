#pragma once

// Invariant information: the summed squared deviation of complete-MUB outcome
// probabilities from uniform, normalized so a pure state carries log2(d) bits.

#include <cstddef>
#include <string_view>

#include "qinvar/mub.hpp"
#include "qinvar/qlinalg.hpp"

namespace qinvar {

enum class InfoMethod { kMubSum, kClosedForm };

std::string_view to_string(InfoMethod m);

struct InfoResult {
  double bits = 0.0;  // clamped to >= 0
  double raw = 0.0;   // value before clamping
  InfoMethod method = InfoMethod::kClosedForm;
  std::size_t dim = 0;
};

// d/(d-1) * log2 d
double info_normalization(std::size_t d);

// N * sum_{alpha,j} (Tr(rho P_alpha_j) - 1/d)^2.
// Throws std::invalid_argument on a dimension mismatch and std::runtime_error
// if a basis's outcome probabilities do not sum to one.
InfoResult invariant_info_mub(const DensityMatrix& rho, const MubSet& mubs);

// N * (Tr rho^2 - 1/D); valid for any dimension D >= 2.
InfoResult invariant_info_closed(const DensityMatrix& rho);

struct AdditivityProbe {
  double lhs = 0.0;  // I(rho (x) sigma)
  double rhs = 0.0;  // I(rho) + I(sigma)
  double gap = 0.0;  // lhs - rhs
};

AdditivityProbe additivity_probe(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qinvar
