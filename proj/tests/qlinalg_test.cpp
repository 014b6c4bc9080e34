#include "qinvar/qlinalg.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "qinvar/random.hpp"

using namespace qinvar;

namespace {

Matrix diag(std::initializer_list<double> values) {
  const auto n = static_cast<Eigen::Index>(values.size());
  Matrix m = Matrix::Zero(n, n);
  Eigen::Index i = 0;
  for (double v : values) m(i, i) = v, ++i;
  return m;
}

PureState bell(std::size_t d) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(d * d));
  for (std::size_t i = 0; i < d; ++i) v(static_cast<Eigen::Index>(i * d + i)) = 1.0;
  return PureState::normalized(v, {d, d});
}

}  // namespace

TEST(qlinalg, state_validation) {
  Vector v(2);
  v << 1.0, 1.0;
  EXPECT_THROW(PureState(v, {2}), std::invalid_argument);
  EXPECT_THROW(PureState::normalized(v, {3}), std::invalid_argument);
  EXPECT_THROW(PureState::normalized(Vector::Zero(2), {2}), std::invalid_argument);

  Matrix not_hermitian = diag({0.5, 0.5});
  not_hermitian(0, 1) = 0.1;
  EXPECT_THROW(DensityMatrix(not_hermitian, {2}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(diag({0.5, 0.6}), {2}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(diag({1.5, -0.5}), {2}), std::invalid_argument);
  EXPECT_THROW(DensityMatrix(diag({0.5, 0.5}), {3}), std::invalid_argument);
}

TEST(qlinalg, density_from_pure_examples) {
  EXPECT_LE(max_abs_diff(density_from_pure(basis_state(0, {2})).matrix(), diag({1, 0})), 1e-15);

  const DensityMatrix plus = density_from_pure(PureState::normalized(Vector::Ones(2), {2}));
  EXPECT_LE(max_abs_diff(plus.matrix(), Matrix::Constant(2, 2, 0.5)), 1e-15);

  Vector v = Vector::Zero(4);
  v(0) = 0.6;
  v(3) = 0.8;
  const DensityMatrix rho = density_from_pure(PureState(v, {2, 2}));
  EXPECT_NEAR(rho(0, 0).real(), 0.36, 1e-15);
  EXPECT_NEAR(rho(0, 3).real(), 0.48, 1e-15);
  EXPECT_NEAR(rho(3, 0).real(), 0.48, 1e-15);
  EXPECT_NEAR(rho(3, 3).real(), 0.64, 1e-15);
  EXPECT_NEAR(purity(rho), 1.0, 1e-12);
}

TEST(qlinalg, partial_trace_examples) {
  const DensityMatrix b = density_from_pure(bell(2));
  EXPECT_LE(max_abs_diff(partial_trace(b, {0}).matrix(), diag({0.5, 0.5})), 1e-15);
  EXPECT_LE(max_abs_diff(partial_trace(b, {1}).matrix(), diag({0.5, 0.5})), 1e-15);

  Vector v = Vector::Zero(4);
  v(0) = 0.6;
  v(3) = 0.8;
  const DensityMatrix rho = density_from_pure(PureState(v, {2, 2}));
  EXPECT_LE(max_abs_diff(partial_trace(rho, {0}).matrix(), diag({0.36, 0.64})), 1e-15);

  Rng rng = derived_rng(3, "qlinalg/product");
  const DensityMatrix a = random_mixed_state({3}, rng);
  const DensityMatrix s = random_mixed_state({2}, rng);
  const DensityMatrix prod = tensor(a, s);
  EXPECT_LE(max_abs_diff(partial_trace(prod, {0}).matrix(), a.matrix()), 1e-14);
  EXPECT_LE(max_abs_diff(partial_trace(prod, {1}).matrix(), s.matrix()), 1e-14);
  EXPECT_EQ(partial_trace(prod, {1}).dims(), (Dims{2}));
}

TEST(qlinalg, partial_trace_matches_pure_reduction) {
  Rng rng = derived_rng(5, "qlinalg/reduce");
  const PureState psi = random_pure_state({2, 3, 2}, rng);
  const DensityMatrix rho = density_from_pure(psi);
  for (std::vector<std::size_t> keep : {std::vector<std::size_t>{0}, {1}, {2}, {0, 2}, {1, 2}, {0, 1, 2}}) {
    EXPECT_LE(max_abs_diff(partial_trace(rho, keep).matrix(), reduced_state(psi, keep).matrix()), 1e-14);
  }
  // Keep order does not matter.
  const std::vector<std::size_t> rev{2, 0};
  const std::vector<std::size_t> fwd{0, 2};
  EXPECT_LE(max_abs_diff(partial_trace(rho, rev).matrix(), partial_trace(rho, fwd).matrix()), 0.0);
}

TEST(qlinalg, partial_trace_errors) {
  const DensityMatrix rho = DensityMatrix::maximally_mixed({2, 2});
  EXPECT_THROW(partial_trace(rho, {}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {2}), std::invalid_argument);
  EXPECT_THROW(partial_trace(rho, {0, 0}), std::invalid_argument);
}

TEST(qlinalg, tensor_examples) {
  const DensityMatrix half = DensityMatrix::maximally_mixed({2});
  EXPECT_LE(max_abs_diff(tensor(half, half).matrix(), diag({0.25, 0.25, 0.25, 0.25})), 1e-15);
  const DensityMatrix zero = density_from_pure(basis_state(0, {2}));
  const DensityMatrix one = density_from_pure(basis_state(1, {2}));
  EXPECT_LE(max_abs_diff(tensor(zero, one).matrix(), density_from_pure(basis_state(1, {2, 2})).matrix()), 0.0);
  EXPECT_EQ(tensor(zero, one).dims(), (Dims{2, 2}));
}

TEST(qlinalg, purity_examples) {
  EXPECT_NEAR(purity(DensityMatrix::maximally_mixed({3})), 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(purity(density_from_pure(bell(3))), 1.0, 1e-12);
  const double p[] = {5.0 / 12, 4.0 / 12, 2.0 / 12, 1.0 / 12};
  EXPECT_NEAR(purity(DensityMatrix::diagonal(p, {2, 2})), 46.0 / 144.0, 1e-15);
}

TEST(qlinalg, purity_is_multiplicative) {
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = derived_rng(9, "qlinalg/purity", i);
    const DensityMatrix a = random_mixed_state({2}, rng);
    const DensityMatrix b = random_mixed_state({2}, rng);
    EXPECT_NEAR(purity(tensor(a, b)), purity(a) * purity(b), 1e-12);
  }
}

TEST(qlinalg, trace_preserved_by_partial_trace) {
  for (std::size_t i = 0; i < 50; ++i) {
    Rng rng = derived_rng(10, "qlinalg/trace", i);
    const DensityMatrix rho = random_mixed_state({3, 3}, rng);
    const Matrix r = partial_trace(rho, {1}).matrix();
    EXPECT_NEAR(r.trace().real(), 1.0, 1e-12);
    EXPECT_LE((r - r.adjoint()).cwiseAbs().maxCoeff(), 1e-15);
  }
}

TEST(qlinalg, pure_bipartite_reductions_share_purity) {
  for (std::size_t i = 0; i < 100; ++i) {
    Rng rng = derived_rng(11, "qlinalg/schmidt", i);
    const PureState psi = random_pure_state({3, 3}, rng);
    const std::vector<std::size_t> a{0}, b{1};
    EXPECT_NEAR(purity(reduced_state(psi, a)), purity(reduced_state(psi, b)), 1e-10);
  }
}

TEST(qlinalg, spectrum_examples) {
  const Spectrum s = spectrum(diag({0.2, 0.7}));
  EXPECT_DOUBLE_EQ(s.eigenvalues(0), 0.7);
  EXPECT_DOUBLE_EQ(s.eigenvalues(1), 0.2);

  Matrix x(2, 2);
  x << 0, 1, 1, 0;
  const Spectrum sx = spectrum(x);
  EXPECT_NEAR(sx.eigenvalues(0), 1.0, 1e-15);
  EXPECT_NEAR(sx.eigenvalues(1), -1.0, 1e-15);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_NEAR(std::abs(sx.eigenvectors(0, 0)), h, 1e-15);
  EXPECT_NEAR(std::abs(sx.eigenvectors(1, 1)), h, 1e-15);
  // Phase convention: leading component real and positive.
  EXPECT_NEAR(sx.eigenvectors(0, 0).imag(), 0.0, 1e-15);
  EXPECT_GT(sx.eigenvectors(0, 0).real(), 0.0);

  Matrix bad = x;
  bad(0, 1) = 2.0;
  EXPECT_THROW(spectrum(bad), std::invalid_argument);
}

TEST(qlinalg, spectrum_reconstructs_random_hermitian) {
  Rng rng = derived_rng(12, "qlinalg/spectrum");
  std::normal_distribution<double> g;
  Matrix m(9, 9);
  for (Eigen::Index i = 0; i < 9; ++i)
    for (Eigen::Index j = 0; j < 9; ++j) m(i, j) = Complex(g(rng), g(rng));
  m = (m + m.adjoint()).eval();
  const Spectrum s = spectrum(m);
  const Matrix rebuilt = s.eigenvectors * s.eigenvalues.cast<Complex>().asDiagonal() * s.eigenvectors.adjoint();
  EXPECT_LE(max_abs_diff(rebuilt, m), 1e-9);
  for (Eigen::Index i = 1; i < 9; ++i) EXPECT_GE(s.eigenvalues(i - 1), s.eigenvalues(i));
  EXPECT_NEAR(s.eigenvalues.sum(), m.trace().real(), 1e-10);
}

TEST(qlinalg, purify_examples) {
  // Pure input: psi (x) |0>_R up to phase.
  const PureState psi = PureState::normalized((Vector(2) << Complex(0.6, 0.0), Complex(0.0, 0.8)).finished(), {2});
  const PureState lifted = purify(density_from_pure(psi));
  EXPECT_EQ(lifted.dims(), (Dims{2, 2}));
  const Complex overlap = (tensor(psi, basis_state(0, {2})).amplitudes().adjoint() * lifted.amplitudes())(0);
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);

  // Degenerate spectrum: any maximally entangled purification is valid.
  const PureState mm = purify(DensityMatrix::maximally_mixed({2}));
  const std::vector<std::size_t> first{0}, second{1};
  EXPECT_NEAR(purity(reduced_state(mm, first)), 0.5, 1e-12);
  EXPECT_NEAR(purity(reduced_state(mm, second)), 0.5, 1e-12);

  const double p[] = {5.0 / 12, 4.0 / 12, 2.0 / 12, 1.0 / 12};
  const DensityMatrix rho = DensityMatrix::diagonal(p, {2, 2});
  const PureState big = purify(rho);
  EXPECT_EQ(big.dims(), (Dims{2, 2, 4}));
  const std::vector<std::size_t> sys{0, 1};
  EXPECT_LE(max_abs_diff(reduced_state(big, sys).matrix(), rho.matrix()), 1e-12);
}

TEST(qlinalg, purify_round_trip_random) {
  for (std::size_t d : {2, 3, 4}) {
    for (std::size_t i = 0; i < 30; ++i) {
      Rng rng = derived_rng(13, "qlinalg/purify/" + std::to_string(d), i);
      const DensityMatrix rho = random_mixed_state({d}, rng);
      const PureState psi = purify(rho);
      EXPECT_LE(max_abs_diff(partial_trace(density_from_pure(psi), {0}).matrix(), rho.matrix()), 1e-10);
    }
  }
}

TEST(qlinalg, purify_is_deterministic) {
  Rng rng = derived_rng(14, "qlinalg/det");
  const DensityMatrix rho = random_mixed_state({3, 3}, rng);
  EXPECT_EQ(purify(rho).amplitudes(), purify(rho).amplitudes());
}

TEST(qlinalg, random_unitary_is_unitary) {
  Rng rng = derived_rng(15, "qlinalg/unitary");
  const Matrix u = random_unitary(5, rng);
  EXPECT_LE(max_abs_diff(u.adjoint() * u, Matrix::Identity(5, 5)), 1e-12);
}
