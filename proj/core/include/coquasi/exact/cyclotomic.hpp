#pragma once

// Exact arithmetic in cyclotomic fields Q(zeta_N).
//
// An element is stored as a polynomial in zeta_N of degree < phi(N) with
// rational coefficients, reduced modulo the N-th cyclotomic polynomial, so
// that two elements are equal exactly when their coefficient vectors are.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace coquasi::exact {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Integer polynomial, coefficient i multiplies x^i. No trailing zeros.
using IntPoly = std::vector<BigInt>;

/// Phi_N(x), obtained by dividing x^N - 1 by Phi_d(x) for every proper divisor d.
IntPoly cyclotomic_polynomial(int order);

/// Euler's totient, equal to deg Phi_N.
int totient(int order);

std::string to_string(const IntPoly& poly, char var = 'x');

class CycloContext;

class Cyclo {
 public:
  /// Zero of Q = Q(zeta_1).
  Cyclo();

  static Cyclo zero(int order);
  static Cyclo one(int order);
  static Cyclo from_rational(int order, const Rational& value);
  /// Reduces an arbitrary-length polynomial in zeta_N.
  static Cyclo from_polynomial(int order, std::span<const Rational> coeffs);
  /// Sum over e of counts[e] * zeta_N^e; counts has length N.
  static Cyclo from_root_counts(int order, std::span<const std::int64_t> counts);

  int order() const;
  int degree() const { return static_cast<int>(coeffs_.size()); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  bool is_zero() const;
  bool is_one() const;

  /// The same field element viewed in Q(zeta_M); requires order() | M.
  Cyclo lift(int multiple_order) const;

  /// Multiplicative inverse; throws DivisionByZero on zero.
  Cyclo inverse() const;

  /// this * zeta_N^k.
  Cyclo times_root(std::int64_t k) const;

  Cyclo operator-() const;
  Cyclo& operator+=(const Cyclo& rhs);
  Cyclo& operator-=(const Cyclo& rhs);
  Cyclo& operator*=(const Cyclo& rhs);
  Cyclo& operator/=(const Cyclo& rhs);

  friend Cyclo operator+(Cyclo lhs, const Cyclo& rhs) { return lhs += rhs; }
  friend Cyclo operator-(Cyclo lhs, const Cyclo& rhs) { return lhs -= rhs; }
  friend Cyclo operator*(Cyclo lhs, const Cyclo& rhs) { return lhs *= rhs; }
  friend Cyclo operator/(Cyclo lhs, const Cyclo& rhs) { return lhs /= rhs; }

  /// Field equality; operands of different order are compared in the common field.
  friend bool operator==(const Cyclo& lhs, const Cyclo& rhs);

  /// e.g. "1 - 1/2*z^3" where z is a primitive root of the element's order.
  std::string to_string() const;

 private:
  Cyclo(std::shared_ptr<const CycloContext> ctx, std::vector<Rational> coeffs);

  std::shared_ptr<const CycloContext> ctx_;
  std::vector<Rational> coeffs_;
};

/// zeta_N^(k mod N).
Cyclo root_of_unity(int order, std::int64_t k);

}  // namespace coquasi::exact
