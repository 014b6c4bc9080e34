#include "qinvar/mub.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "qinvar/gf.hpp"

namespace qinvar {

std::string_view to_string(MubConstruction c) {
  switch (c) {
    case MubConstruction::kQuadraticPhase:
      return "quadratic-phase";
    case MubConstruction::kPauliClasses:
      return "pauli-classes";
  }
  return "unknown";
}

namespace {

Complex root_of_unity(int numerator, int denominator) {
  const double angle = 2.0 * std::numbers::pi * numerator / denominator;
  return {std::cos(angle), std::sin(angle)};
}

Matrix odd_prime_power_basis(const gf::Field& field, const gf::FieldElement& a) {
  const int d = field.order();
  const int p = field.characteristic();
  const double scale = 1.0 / std::sqrt(static_cast<double>(d));
  const auto elems = field.elements();
  Matrix u(d, d);
  for (int j = 0; j < d; ++j) {
    for (int m = 0; m < d; ++m) {
      const auto& em = elems[m];
      const int t = (a * em * em + elems[j] * em).trace();
      u(m, j) = scale * root_of_unity(t, p);
    }
  }
  return u;
}

// Hermitian single-qubit Pauli for (x, z): I, X, Z, Y.
Eigen::Matrix2cd qubit_pauli(int x, int z) {
  Eigen::Matrix2cd m;
  const Complex i(0.0, 1.0);
  if (!x && !z) m << 1, 0, 0, 1;
  if (x && !z) m << 0, 1, 1, 0;
  if (!x && z) m << 1, 0, 0, -1;
  if (x && z) m << 0, -i, i, 0;
  return m;
}

// Tensor product over k qubits; qubit 0 is the most significant factor.
Matrix pauli_string(const std::vector<int>& x, const std::vector<int>& z) {
  Matrix out = Matrix::Identity(1, 1);
  for (std::size_t q = 0; q < x.size(); ++q) {
    const Eigen::Matrix2cd s = qubit_pauli(x[q], z[q]);
    Matrix next(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index r = 0; r < out.rows(); ++r)
      for (Eigen::Index c = 0; c < out.cols(); ++c) next.block(2 * r, 2 * c, 2, 2) = out(r, c) * s;
    out = std::move(next);
  }
  return out;
}

// Joint eigenbasis of the commuting class {X^x Z^(S x)}: one column per sign pattern of the k generators.
Matrix pauli_class_basis(const std::vector<std::vector<int>>& s, int k) {
  const int d = 1 << k;
  std::vector<Matrix> generators;
  for (int i = 0; i < k; ++i) {
    std::vector<int> x(k, 0), z(k, 0);
    x[i] = 1;
    for (int r = 0; r < k; ++r) z[r] = s[r][i];
    generators.push_back(pauli_string(x, z));
  }
  const Matrix id = Matrix::Identity(d, d);
  Matrix u(d, d);
  for (int signs = 0; signs < d; ++signs) {
    Matrix proj = id;
    for (int i = 0; i < k; ++i) {
      const double sign = ((signs >> i) & 1) ? -1.0 : 1.0;
      proj = proj * (0.5 * (id + sign * generators[i]));
    }
    Eigen::Index best = 0;
    proj.colwise().norm().maxCoeff(&best);
    Vector v = proj.col(best);
    v /= v.norm();
    for (Eigen::Index m = 0; m < v.size(); ++m) {
      if (std::abs(v(m)) > 1e-8) {
        v *= std::conj(v(m)) / std::abs(v(m));
        v(m) = std::abs(v(m));
        break;
      }
    }
    u.col(signs) = v;
  }
  return u;
}

MubSet build_even(int k) {
  const gf::Field field(2, k);
  const int d = field.order();
  std::vector<gf::FieldElement> basis;  // polynomial basis 1, x, x^2, ...
  for (int i = 0; i < k; ++i) basis.push_back(field.element(1 << i));

  MubSet set;
  set.dim = static_cast<std::size_t>(d);
  set.construction = MubConstruction::kPauliClasses;
  set.bases.push_back(Matrix::Identity(d, d));
  for (const auto& c : field.elements()) {
    std::vector<std::vector<int>> s(k, std::vector<int>(k));
    for (int r = 0; r < k; ++r)
      for (int col = 0; col < k; ++col) s[r][col] = (c * basis[r] * basis[col]).trace();
    set.bases.push_back(pauli_class_basis(s, k));
  }
  return set;
}

MubSet build_odd(int p, int k) {
  const gf::Field field(p, k);
  const int d = field.order();
  MubSet set;
  set.dim = static_cast<std::size_t>(d);
  set.construction = MubConstruction::kQuadraticPhase;
  set.bases.push_back(Matrix::Identity(d, d));
  for (const auto& a : field.elements()) set.bases.push_back(odd_prime_power_basis(field, a));
  return set;
}

struct PairErrors {
  double overlap = 0.0;
  double trace_identity = 0.0;
};

PairErrors pair_errors(const MubSet& set, const std::vector<std::vector<Matrix>>& proj, std::size_t a,
                       std::size_t b) {
  const std::size_t d = set.dim;
  const double inv_d = 1.0 / static_cast<double>(d);
  PairErrors e;
  if (a != b) {
    const Matrix g = set.bases[a].adjoint() * set.bases[b];
    for (Eigen::Index j = 0; j < g.rows(); ++j)
      for (Eigen::Index k = 0; k < g.cols(); ++k) e.overlap = std::max(e.overlap, std::abs(std::norm(g(j, k)) - inv_d));
  }
  for (std::size_t j = 0; j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      // Tr(A B) = sum_ij A_ij conj(B_ij) for Hermitian B.
      const double tr = proj[a][j].cwiseProduct(proj[b][k].conjugate()).sum().real();
      const double expected = a == b ? (j == k ? 1.0 : 0.0) : inv_d;
      e.trace_identity = std::max(e.trace_identity, std::abs(tr - expected));
    }
  }
  return e;
}

double orthonormality_error(const Matrix& u) {
  const auto n = u.cols();
  return (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
}

void require_shape(const MubSet& set) {
  if (set.dim < 2) throw std::invalid_argument("verify_mubs: dimension < 2");
  for (const auto& u : set.bases) {
    if (static_cast<std::size_t>(u.rows()) != set.dim || static_cast<std::size_t>(u.cols()) != set.dim)
      throw std::invalid_argument("verify_mubs: basis has wrong shape");
  }
}

}  // namespace

MubSet build_mubs(std::size_t d) {
  if (d > static_cast<std::size_t>(gf::kMaxOrder))
    throw std::invalid_argument("build_mubs: dimension " + std::to_string(d) + " exceeds supported maximum 32");
  const gf::PrimePower pk = gf::factor_prime_power(static_cast<int>(d));
  if (!pk.valid()) throw std::invalid_argument("build_mubs: " + std::to_string(d) + " is not a prime power");
  return pk.p == 2 ? build_even(pk.k) : build_odd(pk.p, pk.k);
}

std::vector<std::vector<Matrix>> projectors(const MubSet& set) {
  std::vector<std::vector<Matrix>> out(set.bases.size());
  for (std::size_t a = 0; a < set.bases.size(); ++a) {
    const Matrix& u = set.bases[a];
    out[a].reserve(static_cast<std::size_t>(u.cols()));
    for (Eigen::Index j = 0; j < u.cols(); ++j) out[a].push_back(u.col(j) * u.col(j).adjoint());
  }
  return out;
}

MubReport verify_mubs_serial(const MubSet& set, double tol) {
  require_shape(set);
  const auto proj = projectors(set);
  MubReport r;
  const std::size_t n = set.bases.size();
  for (std::size_t a = 0; a < n; ++a) {
    r.orthonormality_error = std::max(r.orthonormality_error, orthonormality_error(set.bases[a]));
    for (std::size_t b = a; b < n; ++b) {
      const PairErrors e = pair_errors(set, proj, a, b);
      r.max_overlap_error = std::max(r.max_overlap_error, e.overlap);
      r.max_trace_identity_error = std::max(r.max_trace_identity_error, e.trace_identity);
    }
  }
  r.passed = r.max_overlap_error <= tol && r.max_trace_identity_error <= tol && r.orthonormality_error <= tol;
  return r;
}

MubReport verify_mubs(const MubSet& set, double tol) {
  require_shape(set);
  const auto proj = projectors(set);
  const std::size_t n = set.bases.size();
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a; b < n; ++b) pairs.emplace_back(a, b);

  double overlap = 0.0, trace_identity = 0.0, ortho = 0.0;
  const auto count = static_cast<long>(pairs.size());
#pragma omp parallel for schedule(dynamic) reduction(max : overlap, trace_identity)
  for (long i = 0; i < count; ++i) {
    const PairErrors e = pair_errors(set, proj, pairs[i].first, pairs[i].second);
    overlap = std::max(overlap, e.overlap);
    trace_identity = std::max(trace_identity, e.trace_identity);
  }
#pragma omp parallel for reduction(max : ortho)
  for (long a = 0; a < static_cast<long>(n); ++a) ortho = std::max(ortho, orthonormality_error(set.bases[a]));

  MubReport r;
  r.max_overlap_error = overlap;
  r.max_trace_identity_error = trace_identity;
  r.orthonormality_error = ortho;
  r.passed = overlap <= tol && trace_identity <= tol && ortho <= tol;
  return r;
}

}  // namespace qinvar
