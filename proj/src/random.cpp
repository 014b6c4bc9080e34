#include "qinvar/random.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace qinvar {

namespace {

// FNV-1a, fixed across platforms.
std::uint64_t hash_name(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

Complex gaussian(Rng& rng) {
  std::normal_distribution<double> n(0.0, 1.0);
  const double re = n(rng);
  const double im = n(rng);
  return {re, im};
}

}  // namespace

Rng derived_rng(std::uint64_t seed, std::string_view stream, std::uint64_t index) {
  const std::uint64_t h = hash_name(stream);
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(h), static_cast<std::uint32_t>(h >> 32),
                    static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
  return Rng(seq);
}

PureState random_pure_state(const Dims& dims, Rng& rng) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  Vector v(n);
  for (Eigen::Index i = 0; i < n; ++i) v(i) = gaussian(rng);
  return PureState::normalized(std::move(v), dims);
}

DensityMatrix random_mixed_state(const Dims& dims, Rng& rng) {
  std::uniform_int_distribution<std::size_t> count(1, product(dims));
  return random_mixed_state(dims, rng, count(rng));
}

DensityMatrix random_mixed_state(const Dims& dims, Rng& rng, std::size_t components) {
  if (components == 0) throw std::invalid_argument("random_mixed_state: need at least one component");
  const auto n = static_cast<Eigen::Index>(product(dims));
  std::exponential_distribution<double> weight(1.0);
  Matrix m = Matrix::Zero(n, n);
  for (std::size_t c = 0; c < components; ++c) {
    const double w = weight(rng);
    const PureState psi = random_pure_state(dims, rng);
    m += w * psi.amplitudes() * psi.amplitudes().adjoint();
  }
  m = 0.5 * (m + m.adjoint());
  m /= m.trace().real();
  return DensityMatrix(std::move(m), dims);
}

Matrix random_unitary(std::size_t n, Rng& rng) {
  const auto k = static_cast<Eigen::Index>(n);
  Matrix g(k, k);
  for (Eigen::Index i = 0; i < k; ++i)
    for (Eigen::Index j = 0; j < k; ++j) g(i, j) = gaussian(rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ() * Matrix::Identity(k, k);
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index i = 0; i < k; ++i) {
    const Complex d = r(i, i);
    if (std::abs(d) > 0) q.col(i) *= d / std::abs(d);
  }
  return q;
}

}  // namespace qinvar
