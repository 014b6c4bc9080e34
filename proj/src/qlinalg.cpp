#include "qinvar/qlinalg.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>

namespace qinvar {

std::size_t product(const Dims& dims) {
  return std::accumulate(dims.begin(), dims.end(), std::size_t{1}, std::multiplies<>());
}

namespace {

void require_dims(const Dims& dims, std::size_t size, const char* what) {
  if (dims.empty()) throw std::invalid_argument(std::string(what) + ": empty dims");
  for (std::size_t d : dims)
    if (d == 0) throw std::invalid_argument(std::string(what) + ": zero subsystem dimension");
  if (product(dims) != size) throw std::invalid_argument(std::string(what) + ": dims do not match size");
}

double hermitian_defect(const Matrix& m) { return (m - m.adjoint()).cwiseAbs().maxCoeff(); }

// Canonical phase: first component with modulus above the cutoff is made real positive.
void canonicalize_phase(Eigen::Ref<Vector> v) {
  const double cutoff = 1e-8 * v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) > cutoff) {
      v *= std::conj(v(i)) / std::abs(v(i));
      v(i) = std::abs(v(i));
      return;
    }
  }
}

}  // namespace

PureState::PureState(Vector amplitudes, Dims dims) : amps_(std::move(amplitudes)), dims_(std::move(dims)) {
  require_dims(dims_, size(), "PureState");
  if (std::abs(amps_.norm() - 1.0) > kStateTol) throw std::invalid_argument("PureState: not normalized");
}

PureState PureState::normalized(Vector amplitudes, Dims dims) {
  const double n = amplitudes.norm();
  if (n == 0.0) throw std::invalid_argument("PureState: zero vector");
  amplitudes /= n;
  return PureState(std::move(amplitudes), std::move(dims));
}

DensityMatrix::DensityMatrix(Matrix entries, Dims dims) : m_(std::move(entries)), dims_(std::move(dims)) {
  if (m_.rows() != m_.cols()) throw std::invalid_argument("DensityMatrix: not square");
  require_dims(dims_, size(), "DensityMatrix");
  if (hermitian_defect(m_) > kStateTol) throw std::invalid_argument("DensityMatrix: not Hermitian");
  if (std::abs(m_.trace() - Complex(1.0)) > kStateTol) throw std::invalid_argument("DensityMatrix: trace != 1");
  if (min_eigenvalue(m_) < -kPositivityTol) throw std::invalid_argument("DensityMatrix: not positive semidefinite");
}

DensityMatrix DensityMatrix::maximally_mixed(Dims dims) {
  const auto n = static_cast<Eigen::Index>(product(dims));
  return DensityMatrix(Matrix::Identity(n, n) / static_cast<double>(n), std::move(dims));
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probabilities, Dims dims) {
  const auto n = static_cast<Eigen::Index>(probabilities.size());
  Matrix m = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) m(i, i) = probabilities[static_cast<std::size_t>(i)];
  return DensityMatrix(std::move(m), std::move(dims));
}

Spectrum spectrum(const Matrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("spectrum: not square");
  if (hermitian_defect(m) > kHermitianTol) throw std::invalid_argument("spectrum: not Hermitian");
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  if (solver.info() != Eigen::Success) throw std::runtime_error("spectrum: eigendecomposition failed");

  // Eigen sorts ascending; reverse for descending order.
  const Eigen::Index n = m.rows();
  Spectrum s;
  s.eigenvalues = solver.eigenvalues().reverse();
  s.eigenvectors = solver.eigenvectors().rowwise().reverse();
  for (Eigen::Index c = 0; c < n; ++c) canonicalize_phase(s.eigenvectors.col(c));
  return s;
}

double min_eigenvalue(const Matrix& m) {
  const Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw std::runtime_error("min_eigenvalue: eigendecomposition failed");
  return solver.eigenvalues()(0);
}

DensityMatrix density_from_pure(const PureState& psi) {
  const Vector& v = psi.amplitudes();
  Matrix m = v * v.adjoint();
  return DensityMatrix(std::move(m), psi.dims());
}

namespace {

// Mixed-radix split of a flat index into (kept, traced) sub-indices.
struct IndexSplit {
  std::vector<std::size_t> kept;
  std::vector<std::size_t> traced;
  std::size_t kept_size;
  std::size_t traced_size;
};

IndexSplit split_indices(const Dims& dims, std::span<const std::size_t> keep) {
  const std::size_t n = dims.size();
  std::vector<bool> is_kept(n, false);
  if (keep.empty()) throw std::invalid_argument("partial_trace: empty keep set");
  for (std::size_t k : keep) {
    if (k >= n) throw std::invalid_argument("partial_trace: subsystem index out of range");
    if (is_kept[k]) throw std::invalid_argument("partial_trace: duplicate subsystem index");
    is_kept[k] = true;
  }
  IndexSplit s;
  const std::size_t total = product(dims);
  s.kept.resize(total);
  s.traced.resize(total);
  s.kept_size = 1;
  s.traced_size = 1;
  for (std::size_t i = 0; i < n; ++i) (is_kept[i] ? s.kept_size : s.traced_size) *= dims[i];

  for (std::size_t flat = 0; flat < total; ++flat) {
    std::size_t rem = flat;
    std::size_t kept = 0, traced = 0, kept_stride = 1, traced_stride = 1;
    for (std::size_t i = n; i-- > 0;) {
      const std::size_t digit = rem % dims[i];
      rem /= dims[i];
      if (is_kept[i]) {
        kept += digit * kept_stride;
        kept_stride *= dims[i];
      } else {
        traced += digit * traced_stride;
        traced_stride *= dims[i];
      }
    }
    s.kept[flat] = kept;
    s.traced[flat] = traced;
  }
  return s;
}

Dims kept_dims(const Dims& dims, std::span<const std::size_t> keep) {
  std::vector<std::size_t> sorted(keep.begin(), keep.end());
  std::sort(sorted.begin(), sorted.end());
  Dims out;
  for (std::size_t k : sorted) out.push_back(dims[k]);
  return out;
}

}  // namespace

DensityMatrix partial_trace(const DensityMatrix& rho, std::span<const std::size_t> keep) {
  const IndexSplit s = split_indices(rho.dims(), keep);
  const std::size_t total = rho.size();
  const auto ks = static_cast<Eigen::Index>(s.kept_size);
  Matrix out = Matrix::Zero(ks, ks);
  const Matrix& m = rho.matrix();
  for (std::size_t r = 0; r < total; ++r) {
    for (std::size_t c = 0; c < total; ++c) {
      if (s.traced[r] != s.traced[c]) continue;
      out(static_cast<Eigen::Index>(s.kept[r]), static_cast<Eigen::Index>(s.kept[c])) +=
          m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c));
    }
  }
  return DensityMatrix(std::move(out), kept_dims(rho.dims(), keep));
}

DensityMatrix partial_trace(const DensityMatrix& rho, std::initializer_list<std::size_t> keep) {
  return partial_trace(rho, std::span<const std::size_t>(keep.begin(), keep.size()));
}

DensityMatrix reduced_state(const PureState& psi, std::span<const std::size_t> keep) {
  const IndexSplit s = split_indices(psi.dims(), keep);
  // Reshape amplitudes into a kept x traced matrix M; the reduced state is M M^dagger.
  Matrix amps = Matrix::Zero(static_cast<Eigen::Index>(s.kept_size), static_cast<Eigen::Index>(s.traced_size));
  for (std::size_t flat = 0; flat < psi.size(); ++flat)
    amps(static_cast<Eigen::Index>(s.kept[flat]), static_cast<Eigen::Index>(s.traced[flat])) =
        psi.amplitudes()(static_cast<Eigen::Index>(flat));
  Matrix out = amps * amps.adjoint();
  return DensityMatrix(std::move(out), kept_dims(psi.dims(), keep));
}

DensityMatrix tensor(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const Matrix& a = rho.matrix();
  const Matrix& b = sigma.matrix();
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  Dims dims = rho.dims();
  dims.insert(dims.end(), sigma.dims().begin(), sigma.dims().end());
  return DensityMatrix(std::move(out), std::move(dims));
}

PureState tensor(const PureState& a, const PureState& b) {
  Vector out(a.amplitudes().size() * b.amplitudes().size());
  for (Eigen::Index i = 0; i < a.amplitudes().size(); ++i)
    out.segment(i * b.amplitudes().size(), b.amplitudes().size()) = a.amplitudes()(i) * b.amplitudes();
  Dims dims = a.dims();
  dims.insert(dims.end(), b.dims().begin(), b.dims().end());
  return PureState::normalized(std::move(out), std::move(dims));
}

double purity(const DensityMatrix& rho) {
  // Tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
  return rho.matrix().squaredNorm();
}

PureState purify(const DensityMatrix& rho) {
  const Spectrum s = spectrum(rho.matrix());
  const auto n = static_cast<Eigen::Index>(rho.size());
  Vector psi = Vector::Zero(n * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double lambda = std::max(s.eigenvalues(i), 0.0);
    if (lambda == 0.0) continue;
    const double w = std::sqrt(lambda);
    // |e_i>|i>: system index r, reference index i -> flat r*n + i.
    for (Eigen::Index r = 0; r < n; ++r) psi(r * n + i) += w * s.eigenvectors(r, i);
  }
  Dims dims = rho.dims();
  dims.push_back(rho.size());
  return PureState::normalized(std::move(psi), std::move(dims));
}

PureState basis_state(std::size_t index, Dims dims) {
  const std::size_t n = product(dims);
  if (index >= n) throw std::invalid_argument("basis_state: index out of range");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(n));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return PureState(std::move(v), std::move(dims));
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("max_abs_diff: shape mismatch");
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qinvar
