#include "qinvar/mub.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

using namespace qinvar;

namespace {

// Brute-force worst |<a,j|b,k>|^2 - 1/d over every cross-basis vector pair.
double brute_force_overlap_error(const MubSet& set) {
  const double inv_d = 1.0 / static_cast<double>(set.dim);
  double worst = 0.0;
  for (std::size_t a = 0; a < set.bases.size(); ++a)
    for (std::size_t b = 0; b < set.bases.size(); ++b) {
      if (a == b) continue;
      for (Eigen::Index j = 0; j < set.bases[a].cols(); ++j)
        for (Eigen::Index k = 0; k < set.bases[b].cols(); ++k) {
          Complex ip = 0.0;
          for (Eigen::Index m = 0; m < set.bases[a].rows(); ++m)
            ip += std::conj(set.bases[a](m, j)) * set.bases[b](m, k);
          worst = std::max(worst, std::abs(std::norm(ip) - inv_d));
        }
    }
  return worst;
}

}  // namespace

TEST(mub, qubit_bases_are_z_x_y) {
  const MubSet set = build_mubs(2);
  ASSERT_EQ(set.bases.size(), 3u);
  const double h = 1.0 / std::sqrt(2.0);
  EXPECT_LE(max_abs_diff(set.bases[0], Matrix::Identity(2, 2)), 0.0);
  // X eigenbasis: |+>, |->.
  Matrix x(2, 2);
  x << h, h, h, -h;
  EXPECT_LE(max_abs_diff(set.bases[1], x), 1e-15);
  // Y eigenbasis: (|0> +- i|1>)/sqrt2 in some order.
  for (Eigen::Index j = 0; j < 2; ++j) {
    EXPECT_NEAR(std::abs(set.bases[2](1, j).imag()), h, 1e-15);
    EXPECT_NEAR(set.bases[2](0, j).real(), h, 1e-15);
  }
  const MubReport r = verify_mubs(set, 1e-12);
  EXPECT_TRUE(r.passed);
}

TEST(mub, complete_sets_for_prime_powers) {
  for (std::size_t d : {2, 3, 4, 5, 7, 8, 9}) {
    const MubSet set = build_mubs(d);
    EXPECT_EQ(set.bases.size(), d + 1) << d;
    EXPECT_EQ(set.construction, d % 2 == 0 ? MubConstruction::kPauliClasses : MubConstruction::kQuadraticPhase);
    const MubReport r = verify_mubs(set);
    EXPECT_TRUE(r.passed) << d;
    EXPECT_LE(r.max_overlap_error, 1e-10);
    EXPECT_LE(r.max_trace_identity_error, 1e-10);
    EXPECT_LE(r.orthonormality_error, 1e-10);
    EXPECT_LE(brute_force_overlap_error(set), 1e-10) << d;
  }
}

TEST(mub, larger_supported_dimensions) {
  for (std::size_t d : {11, 16, 25, 27}) EXPECT_TRUE(verify_mubs(build_mubs(d)).passed) << d;
}

TEST(mub, deterministic) {
  for (std::size_t d : {4, 9}) {
    const MubSet a = build_mubs(d), b = build_mubs(d);
    for (std::size_t i = 0; i < a.bases.size(); ++i) EXPECT_EQ(a.bases[i], b.bases[i]);
  }
}

TEST(mub, rejects_invalid_dimensions) {
  EXPECT_THROW(build_mubs(6), std::invalid_argument);
  EXPECT_THROW(build_mubs(12), std::invalid_argument);
  EXPECT_THROW(build_mubs(1), std::invalid_argument);
  EXPECT_THROW(build_mubs(37), std::invalid_argument);
  EXPECT_THROW(build_mubs(64), std::invalid_argument);
}

TEST(mub, duplicated_basis_fails_verification) {
  for (std::size_t d : {2, 3, 5}) {
    MubSet set = build_mubs(d);
    set.bases[1] = set.bases[0];
    const MubReport r = verify_mubs(set);
    EXPECT_FALSE(r.passed);
    EXPECT_NEAR(r.max_overlap_error, 1.0 - 1.0 / static_cast<double>(d), 1e-12);
  }
}

TEST(mub, parallel_verification_matches_serial) {
  for (std::size_t d : {4, 7, 9}) {
    const MubSet set = build_mubs(d);
    const MubReport a = verify_mubs(set), b = verify_mubs_serial(set);
    EXPECT_EQ(a.max_overlap_error, b.max_overlap_error);
    EXPECT_EQ(a.max_trace_identity_error, b.max_trace_identity_error);
    EXPECT_EQ(a.orthonormality_error, b.orthonormality_error);
    EXPECT_EQ(a.passed, b.passed);
  }
}

TEST(mub, projectors_complete_and_unbiased) {
  const MubSet two = build_mubs(2);
  const auto p2 = projectors(two);
  Matrix zero = Matrix::Zero(2, 2), one = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  one(1, 1) = 1.0;
  EXPECT_LE(max_abs_diff(p2[0][0], zero), 0.0);
  EXPECT_LE(max_abs_diff(p2[0][1], one), 0.0);

  const MubSet five = build_mubs(5);
  const auto p = projectors(five);
  for (const auto& basis : p) {
    Matrix sum = Matrix::Zero(5, 5);
    for (const auto& proj : basis) sum += proj;
    EXPECT_LE(max_abs_diff(sum, Matrix::Identity(5, 5)), 1e-10);
  }
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      for (std::size_t j = 0; j < 5; ++j)
        for (std::size_t k = 0; k < 5; ++k) EXPECT_NEAR((p[a][j] * p[b][k]).trace().real(), 0.2, 1e-10);
}

TEST(mub, odd_prime_matches_closed_form_phases) {
  // d = 3, basis a = 1: components 3^{-1/2} exp(2 pi i (m^2 + j m)/3).
  const MubSet set = build_mubs(3);
  for (int j = 0; j < 3; ++j)
    for (int m = 0; m < 3; ++m) {
      const double angle = 2.0 * M_PI * ((m * m + j * m) % 3) / 3.0;
      const Complex expected = std::polar(1.0 / std::sqrt(3.0), angle);
      EXPECT_NEAR(std::abs(set.bases[2](m, j) - expected), 0.0, 1e-15);
    }
}
