#pragma once

// Finite fields GF(p^k) for small orders (p^k <= 32).
//
// Elements are polynomials over GF(p) of degree < k, reduced modulo a fixed
// monic irreducible polynomial. The modulus is the lexicographically lowest
// monic irreducible of degree k, where polynomials are compared by the
// integer sum(c_i * p^i) of their non-leading coefficients.

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace qinvar::gf {

inline constexpr int kMaxOrder = 32;

bool is_prime(int n);

// Returns {p, k} with n == p^k, or {0, 0} if n is not a prime power.
struct PrimePower {
  int p = 0;
  int k = 0;
  bool valid() const { return p != 0; }
};
PrimePower factor_prime_power(int n);

class FieldElement;

class Field {
 public:
  // Throws std::invalid_argument for non-prime p, k < 1, or p^k above the cap.
  Field(int p, int k);

  int characteristic() const { return impl_->p; }
  int degree() const { return impl_->k; }
  int order() const { return impl_->q; }

  // Coefficients c_0..c_k of the monic modulus (c_k == 1).
  const std::vector<int>& modulus() const { return impl_->modulus; }

  FieldElement zero() const;
  FieldElement one() const;
  // The class of x (the polynomial generator); equals the integer 1 when k == 1.
  FieldElement generator() const;
  // Element with index i in [0, q): coefficients are the base-p digits of i.
  FieldElement element(int index) const;
  FieldElement from_coeffs(std::vector<int> coeffs) const;
  std::vector<FieldElement> elements() const;

  std::string modulus_string() const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.impl_ == b.impl_ ||
           (a.impl_->p == b.impl_->p && a.impl_->k == b.impl_->k && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  friend class FieldElement;
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);

  struct Impl {
    int p;
    int k;
    int q;
    std::vector<int> modulus;
    std::vector<std::uint8_t> add;  // q*q tables indexed [a*q + b]
    std::vector<std::uint8_t> mul;
    std::vector<std::uint8_t> neg;
    std::vector<std::uint8_t> inv;  // inv[0] unused
    std::vector<std::uint8_t> trace;
  };

  std::shared_ptr<const Impl> impl_;
};

class FieldElement {
 public:
  const Field& field() const { return field_; }
  int index() const { return index_; }
  std::vector<int> coeffs() const;
  bool is_zero() const { return index_ == 0; }

  // All binary operations throw std::invalid_argument on mismatched fields.
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  FieldElement operator-() const;

  // Throws std::domain_error for the zero element.
  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  // a + a^p + ... + a^(p^(k-1)), reported as a residue in [0, p).
  int trace() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.index_ == b.index_ && a.field_ == b.field_;
  }

 private:
  friend class Field;
  FieldElement(Field field, int index) : field_(std::move(field)), index_(index) {}

  Field field_;
  int index_;
};

FieldElement add(const FieldElement& a, const FieldElement& b);
FieldElement mul(const FieldElement& a, const FieldElement& b);
FieldElement inv(const FieldElement& a);
int trace(const FieldElement& a);

}  // namespace qinvar::gf
