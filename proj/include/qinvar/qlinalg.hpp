#pragma once

// Dense complex linear algebra for small multipartite Hilbert spaces.

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qinvar {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Dims = std::vector<std::size_t>;

inline constexpr double kStateTol = 1e-12;      // Hermiticity, trace, norm
inline constexpr double kPositivityTol = 1e-10;  // allowed negative eigenvalue
inline constexpr double kHermitianTol = 1e-10;   // input to spectrum()

std::size_t product(const Dims& dims);

class PureState {
 public:
  // Throws std::invalid_argument if product(dims) != size or the norm is off by > 1e-12.
  PureState(Vector amplitudes, Dims dims);
  // Normalizes first; throws on a zero vector.
  static PureState normalized(Vector amplitudes, Dims dims);

  const Vector& amplitudes() const { return amps_; }
  const Dims& dims() const { return dims_; }
  std::size_t size() const { return static_cast<std::size_t>(amps_.size()); }

 private:
  Vector amps_;
  Dims dims_;
};

class DensityMatrix {
 public:
  // Validates Hermiticity and unit trace (1e-12) and positivity (-1e-10).
  DensityMatrix(Matrix entries, Dims dims);

  static DensityMatrix maximally_mixed(Dims dims);
  static DensityMatrix diagonal(std::span<const double> probabilities, Dims dims);

  const Matrix& matrix() const { return m_; }
  const Dims& dims() const { return dims_; }
  std::size_t size() const { return static_cast<std::size_t>(m_.rows()); }
  Complex operator()(std::size_t r, std::size_t c) const { return m_(r, c); }

 private:
  Matrix m_;
  Dims dims_;
};

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // descending
  Matrix eigenvectors;          // columns, first non-negligible component real positive
};

// Throws std::invalid_argument when m is not Hermitian within 1e-10.
Spectrum spectrum(const Matrix& m);
double min_eigenvalue(const Matrix& m);

DensityMatrix density_from_pure(const PureState& psi);

// keep: indices of subsystems to retain, in any order; the result lists them ascending.
DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep);
DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep);
// Reduced state on the given subsystems computed straight from the amplitudes.
DensityMatrix reduced_state(const PureState& psi, std::span<const std::size_t> keep);

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma);
PureState tensor(const PureState& a, const PureState& b);

double purity(const DensityMatrix& rho);

// Pure state on dims(rho) ++ [size(rho)] whose reduction to the leading
// subsystems is rho: sum_i sqrt(lambda_i) |e_i>|i>, eigenvalues descending.
PureState purify(const DensityMatrix& rho);

// Basis state |i> in a space of the given dims.
PureState basis_state(std::size_t index, Dims dims);

double max_abs_diff(const Matrix& a, const Matrix& b);

}  // namespace qinvar
