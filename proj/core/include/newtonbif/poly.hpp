// Sparse multivariate polynomials with exact rational coefficients, over
// either Z^n_{>=0} (affine) or Z^n (laurent) exponent lattices.
#pragma once

#include <newtonbif/numeric.hpp>

#include <map>
#include <string>
#include <vector>

namespace nbif {

using Exponent = std::vector<std::int64_t>;

std::int64_t total_degree(const Exponent& e);

// graded lexicographic term order (degree first, then lex)
struct GradedLexLess {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

enum class PolyMode { affine, laurent };

// Exponents are bounded to keep everything desk scale; enforced at insertion.
inline constexpr std::int64_t kMaxExponentMagnitude = 64;

class SparsePoly {
 public:
  using TermMap = std::map<Exponent, Rational, GradedLexLess>;

  explicit SparsePoly(int ambient_dim, PolyMode mode = PolyMode::affine);

  // Text grammar: terms joined by + or -, a term being an optional rational
  // coefficient (p/q or integer) and '*'-joined powers x<k>^<e>.  Whitespace
  // is ignored.  x,y,z,w are accepted as shorthand for x1..x4.
  static SparsePoly parse(const std::string& text, int ambient_dim,
                          PolyMode mode = PolyMode::affine);

  int ambient_dim() const { return dim_; }
  PolyMode mode() const { return mode_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  Rational constant_term() const;

  // zero coefficient erases the term
  void set_coefficient(const Exponent& e, const Rational& c);
  Rational coefficient(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);

  SparsePoly operator-() const;
  SparsePoly operator+(const SparsePoly& o) const;
  SparsePoly operator-(const SparsePoly& o) const;
  SparsePoly operator*(const SparsePoly& o) const;
  SparsePoly scaled(const Rational& c) const;

  SparsePoly partial_derivative(int var) const;  // var is 0-based

  // Exact evaluation; throws std::domain_error on a zero coordinate under a
  // negative exponent.
  Rational evaluate(const std::vector<Rational>& point) const;
  std::complex<double> evaluate(const std::vector<std::complex<double>>& point) const;

  std::vector<Exponent> support() const;

  // Canonical form: graded-lex term order, coefficients in lowest terms.
  std::string to_string() const;

 private:
  int dim_;
  PolyMode mode_;
  TermMap terms_;
  void check_exponent(const Exponent& e) const;
};

// Rewrites p in the coordinates of the sublattice spanned by basis (rows in
// Z^n): each exponent v must decompose as an integer combination of the basis
// vectors, and the result lives in basis.size() laurent variables.  Throws
// std::domain_error when some exponent is outside the lattice.
SparsePoly monomial_change_of_coordinates(const SparsePoly& p,
                                          const std::vector<Exponent>& basis);

}  // namespace nbif
