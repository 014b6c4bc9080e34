#pragma once

namespace qinvar {

// Selects the OpenMP kernel or its single-threaded reference. Both produce
// bit-identical results: every grid point or sample is computed independently
// and reductions are taken over a fixed order.
enum class Execution { kSerial, kParallel };

}  // namespace qinvar
