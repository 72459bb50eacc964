#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfbraid/rational.hpp"

namespace hopfbraid {

struct zero_input : std::runtime_error {
  zero_input() : std::runtime_error("operation undefined for zero input") {}
};

struct invalid_sign : std::runtime_error {
  explicit invalid_sign(const std::string& w)
      : std::runtime_error("sqrt_of_sign expects +1 or -1, got " + w) {}
};

// Element of the cyclotomic field Q(zeta_m), stored as sparse coordinates in
// the power basis 1, zeta, ..., zeta^{phi(m)-1} reduced modulo the m-th
// cyclotomic polynomial.  Every operation renormalizes to the smallest
// conductor containing the value, with the convention that a conductor is
// never congruent to 2 mod 4 (so rationals live at conductor 1).  With that
// convention the (conductor, coordinates) pair is unique per value and
// equality, ordering and hashing are structural.
class CycloScalar {
 public:
  using Term = std::pair<int, Rational>;  // (exponent, coefficient)

  CycloScalar() : conductor_(1) {}
  CycloScalar(const Rational& r);
  CycloScalar(long long n);

  // zeta_m^k (k may be any integer, reduced mod m)
  static CycloScalar root_of_unity(long m, long k);
  // +1 -> 1, -1 -> zeta_4; anything else is rejected
  static CycloScalar sqrt_of_sign(const CycloScalar& sign);

  long conductor() const { return conductor_; }
  const std::vector<Term>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const { return conductor_ == 1; }
  // throws if the value does not lie in Q
  Rational rational_value() const;

  CycloScalar operator-() const;
  CycloScalar& operator+=(const CycloScalar& o);
  CycloScalar& operator-=(const CycloScalar& o);
  CycloScalar& operator*=(const CycloScalar& o);
  CycloScalar& operator/=(const CycloScalar& o);
  friend CycloScalar operator+(CycloScalar a, const CycloScalar& b) { return a += b; }
  friend CycloScalar operator-(CycloScalar a, const CycloScalar& b) { return a -= b; }
  friend CycloScalar operator*(CycloScalar a, const CycloScalar& b) { return a *= b; }
  friend CycloScalar operator/(CycloScalar a, const CycloScalar& b) { return a /= b; }

  CycloScalar inverse() const;  // throws division_by_zero on 0
  CycloScalar pow(long e) const;

  // Galois conjugate zeta_m -> zeta_m^j; requires gcd(j, conductor) == 1.
  CycloScalar galois(long j) const;
  // complex conjugate (j = -1)
  CycloScalar conj() const { return galois(-1); }

  bool operator==(const CycloScalar& o) const {
    return conductor_ == o.conductor_ && terms_ == o.terms_;
  }
  bool operator!=(const CycloScalar& o) const { return !(*this == o); }
  // canonical order: conductor, then lexicographic dense coordinates
  bool operator<(const CycloScalar& o) const;

  // multiplicative order if the value is a root of unity, nullopt otherwise;
  // throws zero_input on 0
  std::optional<long> multiplicative_order() const;

  // dense power-basis coordinates, length phi(conductor)
  std::vector<Rational> dense_coeffs() const;
  static CycloScalar from_dense(long conductor, const std::vector<Rational>& coeffs);

  // "1", "-i", "z8^3", "1/2 + 1/2*z5^2", ...
  std::string str() const;

 private:
  long conductor_;
  std::vector<Term> terms_;  // sorted by exponent, no zero coefficients

  void canonicalize();        // reduce conductor to the minimum
  CycloScalar lifted(long target) const;
};

unsigned long euler_phi(unsigned long m);
// coefficients of the m-th cyclotomic polynomial, ascending degree
const std::vector<long long>& cyclotomic_polynomial(long m);

}  // namespace hopfbraid
