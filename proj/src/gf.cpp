#include "qinvar/gf.hpp"

#include <stdexcept>
#include <utility>

namespace qinvar::gf {

namespace {

using Poly = std::vector<int>;  // c_0 .. c_n, trailing zeros trimmed

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over GF(p).
Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const int lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = ((a[shift + i] - lead * m[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_mul(const Poly& a, const Poly& b, int p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

Poly digits(int index, int p, int k) {
  Poly c(k, 0);
  for (int i = 0; i < k; ++i) {
    c[i] = index % p;
    index /= p;
  }
  return c;
}

int undigits(const Poly& c, int p) {
  int idx = 0;
  for (std::size_t i = c.size(); i-- > 0;) idx = idx * p + c[i];
  return idx;
}

// Monic polynomial of degree n whose lower coefficients are the digits of code.
Poly monic(int code, int p, int n) {
  Poly c = digits(code, p, n);
  c.push_back(1);
  return c;
}

int ipow(int b, int e) {
  int r = 1;
  while (e-- > 0) r *= b;
  return r;
}

bool irreducible(const Poly& f, int p) {
  const int n = static_cast<int>(f.size()) - 1;
  for (int deg = 1; 2 * deg <= n; ++deg) {
    for (int code = 0; code < ipow(p, deg); ++code) {
      if (poly_mod(f, monic(code, p, deg), p).empty()) return false;
    }
  }
  return true;
}

Poly lowest_irreducible(int p, int k) {
  for (int code = 0; code < ipow(p, k); ++code) {
    Poly f = monic(code, p, k);
    if (irreducible(f, p)) return f;
  }
  throw std::logic_error("gf: no irreducible polynomial found");
}

}  // namespace

bool is_prime(int n) {
  if (n < 2) return false;
  for (int i = 2; i * i <= n; ++i)
    if (n % i == 0) return false;
  return true;
}

PrimePower factor_prime_power(int n) {
  if (n < 2) return {};
  int p = 2;
  while (n % p != 0) ++p;
  int k = 0;
  while (n % p == 0) {
    n /= p;
    ++k;
  }
  if (n != 1) return {};
  return {p, k};
}

Field::Field(int p, int k) {
  if (!is_prime(p)) throw std::invalid_argument("gf: characteristic " + std::to_string(p) + " is not prime");
  if (k < 1) throw std::invalid_argument("gf: extension degree must be >= 1");
  if (ipow(p, k) > kMaxOrder || ipow(p, k) <= 0)
    throw std::invalid_argument("gf: order exceeds supported maximum of " + std::to_string(kMaxOrder));

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->k = k;
  impl->q = ipow(p, k);
  impl->modulus = lowest_irreducible(p, k);

  const int q = impl->q;
  impl->add.resize(q * q);
  impl->mul.resize(q * q);
  impl->neg.resize(q);
  impl->inv.assign(q, 0);
  impl->trace.resize(q);

  for (int a = 0; a < q; ++a) {
    const Poly pa = digits(a, p, k);
    Poly na(k);
    for (int i = 0; i < k; ++i) na[i] = (p - pa[i]) % p;
    impl->neg[a] = static_cast<std::uint8_t>(undigits(na, p));
    for (int b = 0; b < q; ++b) {
      const Poly pb = digits(b, p, k);
      Poly s(k);
      for (int i = 0; i < k; ++i) s[i] = (pa[i] + pb[i]) % p;
      impl->add[a * q + b] = static_cast<std::uint8_t>(undigits(s, p));

      Poly prod = poly_mod(poly_mul(pa, pb, p), impl->modulus, p);
      prod.resize(k, 0);
      impl->mul[a * q + b] = static_cast<std::uint8_t>(undigits(prod, p));
    }
  }
  for (int a = 1; a < q; ++a)
    for (int b = 1; b < q; ++b)
      if (impl->mul[a * q + b] == 1) impl->inv[a] = static_cast<std::uint8_t>(b);

  // tr(a) = a + a^p + ... + a^(p^(k-1))
  for (int a = 0; a < q; ++a) {
    int acc = 0;
    int frob = a;
    for (int i = 0; i < k; ++i) {
      acc = impl->add[acc * q + frob];
      int next = 1;
      for (int e = 0; e < p; ++e) next = impl->mul[next * q + frob];
      frob = next;
    }
    if (acc >= p) throw std::logic_error("gf: trace left the prime subfield");
    impl->trace[a] = static_cast<std::uint8_t>(acc);
  }

  impl_ = std::move(impl);
}

FieldElement Field::zero() const { return FieldElement(*this, 0); }
FieldElement Field::one() const { return FieldElement(*this, 1); }
FieldElement Field::generator() const { return FieldElement(*this, impl_->k == 1 ? 1 : impl_->p); }

FieldElement Field::element(int index) const {
  if (index < 0 || index >= impl_->q) throw std::out_of_range("gf: element index out of range");
  return FieldElement(*this, index);
}

FieldElement Field::from_coeffs(std::vector<int> coeffs) const {
  if (static_cast<int>(coeffs.size()) > impl_->k) throw std::invalid_argument("gf: too many coefficients");
  coeffs.resize(impl_->k, 0);
  for (int& c : coeffs) c = ((c % impl_->p) + impl_->p) % impl_->p;
  return FieldElement(*this, undigits(coeffs, impl_->p));
}

std::vector<FieldElement> Field::elements() const {
  std::vector<FieldElement> out;
  out.reserve(impl_->q);
  for (int i = 0; i < impl_->q; ++i) out.push_back(FieldElement(*this, i));
  return out;
}

std::string Field::modulus_string() const {
  std::string s;
  const auto& m = impl_->modulus;
  for (std::size_t i = m.size(); i-- > 0;) {
    if (m[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (m[i] != 1 || i == 0) s += std::to_string(m[i]);
    if (i >= 1) s += "x";
    if (i >= 2) s += "^" + std::to_string(i);
  }
  return s;
}

std::vector<int> FieldElement::coeffs() const { return digits(index_, field_.characteristic(), field_.degree()); }

namespace {
void require_same(const FieldElement& a, const FieldElement& b) {
  if (!(a.field() == b.field())) throw std::invalid_argument("gf: elements belong to different fields");
}
}  // namespace

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const int q = a.field_.order();
  return FieldElement(a.field_, a.field_.impl_->add[a.index_ * q + b.index_]);
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same(a, b);
  const int q = a.field_.order();
  return FieldElement(a.field_, a.field_.impl_->mul[a.index_ * q + b.index_]);
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, field_.impl_->neg[index_]); }

FieldElement FieldElement::inverse() const {
  if (index_ == 0) throw std::domain_error("gf: inverse of zero");
  return FieldElement(field_, field_.impl_->inv[index_]);
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement result = field_.one();
  FieldElement base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    base = base * base;
    e >>= 1U;
  }
  return result;
}

int FieldElement::trace() const { return field_.impl_->trace[index_]; }

FieldElement add(const FieldElement& a, const FieldElement& b) { return a + b; }
FieldElement mul(const FieldElement& a, const FieldElement& b) { return a * b; }
FieldElement inv(const FieldElement& a) { return a.inverse(); }
int trace(const FieldElement& a) { return a.trace(); }

}  // namespace qinvar::gf
