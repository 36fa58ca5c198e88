// Dense bivariate polynomials Q[v][u]: pseudo-division, primitive-sequence
// gcds, and resultants by evaluation-interpolation.
#pragma once

#include <newtonbif/unipoly.hpp>

#include <optional>

namespace nbif {

class BiPoly {
 public:
  BiPoly() = default;
  explicit BiPoly(std::vector<UniPoly> coeffs);  // coeffs[k] in v multiplies u^k
  // 2-variable polynomial, u = first variable, v = second, exponents >= 0
  static BiPoly from_sparse(const SparsePoly& p);

  int degree_u() const { return static_cast<int>(c_.size()) - 1; }
  int degree_v() const;
  bool is_zero() const { return c_.empty(); }
  const UniPoly& coeff(int k) const;  // zero polynomial outside
  const std::vector<UniPoly>& coeffs() const { return c_; }
  const UniPoly& leading_u() const;

  BiPoly operator-() const;
  BiPoly operator+(const BiPoly& o) const;
  BiPoly operator-(const BiPoly& o) const;
  BiPoly operator*(const BiPoly& o) const;
  bool operator==(const BiPoly& o) const { return c_ == o.c_; }

  BiPoly derivative_u() const;
  BiPoly derivative_v() const;
  BiPoly shifted_u(int k) const;
  BiPoly transpose() const;  // swap the roles of u and v

  UniPoly at_v(const Rational& a) const;  // polynomial in u
  UniPoly at_u(const Rational& a) const;  // polynomial in v
  Rational evaluate(const Rational& u0, const Rational& v0) const;
  std::complex<double> evaluate(std::complex<double> u0, std::complex<double> v0) const;

  SparsePoly to_sparse() const;  // 2 variables, for reporting
  std::string to_string() const;

 private:
  std::vector<UniPoly> c_;  // invariant: empty or back() nonzero
  void normalize();
};

BiPoly mul_unipoly(const BiPoly& p, const UniPoly& a);  // multiply by a(v)

// gcd in v of all u-coefficients (monic); zero polynomial for zero input
UniPoly content_u(const BiPoly& p);
BiPoly primitive_part_u(const BiPoly& p);

// Pseudo-remainder of a by b in the variable u (b nonzero); the result is a
// Q[v]-multiple of the true remainder, which is all gcd computations need.
BiPoly pseudo_remainder_u(const BiPoly& a, const BiPoly& b);

// Exact quotient a / b, or nullopt when b does not divide a.
std::optional<BiPoly> exact_divide(const BiPoly& a, const BiPoly& b);

// gcd in Q[u,v] up to a rational constant, canonically scaled.
BiPoly gcd_bi(const BiPoly& a, const BiPoly& b);

// Squarefree part over Q[u,v]: same zero set, every factor once.
BiPoly squarefree_bi(const BiPoly& a);

// Resultant eliminating u, computed by interpolation over sample values of v
// at which neither leading u-coefficient vanishes.
UniPoly resultant_u(const BiPoly& a, const BiPoly& b);

// UniPoly through the given (point, value) pairs, exactly (Lagrange).
UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& samples);

// BiPoly R(u, v) of degree < #samples in u with R(a_j, v) = g_j(v).
BiPoly interpolate_bi(const std::vector<std::pair<Rational, UniPoly>>& samples);

// Complex coefficient vector (in v) of p(u0, v) for numeric u0.
std::vector<std::complex<double>> at_u_numeric(const BiPoly& p, std::complex<double> u0);

// Shift every variable's exponents so the minimum is zero; torus zero sets
// are unchanged (the shift is a monomial unit).
SparsePoly clear_negative_exponents(const SparsePoly& p);

}  // namespace nbif
