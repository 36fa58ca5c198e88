// Dense univariate polynomials over Q: exact arithmetic, gcd, resultants.
#pragma once

#include <newtonbif/poly.hpp>

#include <complex>
#include <string>
#include <utility>
#include <vector>

namespace nbif {

class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);  // coeffs[k] multiplies t^k
  static UniPoly constant(const Rational& a);
  static UniPoly variable();
  // 1-variable polynomial with nonnegative exponents only
  static UniPoly from_sparse(const SparsePoly& p);

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  Rational coeff(int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const;

  UniPoly operator-() const;
  UniPoly operator+(const UniPoly& o) const;
  UniPoly operator-(const UniPoly& o) const;
  UniPoly operator*(const UniPoly& o) const;
  bool operator==(const UniPoly& o) const { return c_ == o.c_; }
  UniPoly scaled(const Rational& a) const;
  UniPoly shifted(int k) const;  // multiply by t^k, k >= 0
  UniPoly monic() const;
  UniPoly derivative() const;

  Rational evaluate(const Rational& t) const;
  std::complex<double> evaluate(std::complex<double> t) const;

  // largest k with t^k dividing the polynomial (0 for the zero polynomial)
  int valuation() const;
  // divide by t^valuation()
  UniPoly stripped() const;

  std::string to_string(const std::string& var = "t") const;

 private:
  std::vector<Rational> c_;  // invariant: empty or back() != 0
  void normalize();
};

// Euclidean division a = q*b + r with deg r < deg b; b must be nonzero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);

// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

// Resultant via the Euclidean remainder sequence.  Zero when either argument
// is zero or the arguments share a root.
Rational resultant(const UniPoly& a, const UniPoly& b);

// a divided by gcd(a, a'): same roots, all simple.
UniPoly squarefree_part(const UniPoly& a);

Rational power(const Rational& a, int e);  // e >= 0

}  // namespace nbif
