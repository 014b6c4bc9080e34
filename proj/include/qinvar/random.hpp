#pragma once

// Seeded generators for random states and unitaries.
//
// Streams are derived from (seed, stream name, sample index), so a sample's
// value does not depend on how many other samples or suites were drawn, nor
// on the thread that draws it.

#include <cstdint>
#include <random>
#include <string_view>

#include "qinvar/qlinalg.hpp"

namespace qinvar {

using Rng = std::mt19937_64;

Rng derived_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index = 0);

// Haar-distributed: i.i.d. complex Gaussian amplitudes, normalized.
PureState random_pure_state(const Dims& dims, Rng& rng);

// Convex mixture of between 1 and product(dims) Haar pure states with
// exponentially distributed weights.
DensityMatrix random_mixed_state(const Dims& dims, Rng& rng);

// Mixture with exactly `components` pure states.
DensityMatrix random_mixed_state(const Dims& dims, Rng& rng, std::size_t components);

// Haar unitary via QR of a complex Ginibre matrix with phase-fixed R.
Matrix random_unitary(std::size_t n, Rng& rng);

}  // namespace qinvar
