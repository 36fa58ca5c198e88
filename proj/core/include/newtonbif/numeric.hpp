// Exact rational scalars and the exact/numeric/heuristic status model shared
// by every quantity the library reports.
#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <complex>
#include <cstdint>
#include <optional>
#include <string>

namespace nbif {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

// How a number was obtained.  "exact" is reserved for values produced by
// integer/rational elimination with rational roots or a verified certificate;
// "numeric" means floating point within the configured tolerances;
// "heuristic" means a randomized search with no completeness claim.
enum class NumStatus { exact, numeric, heuristic };

const char* to_cstr(NumStatus s);

// Meet of two statuses: a value derived from both inherits the weaker one.
NumStatus combine(NumStatus a, NumStatus b);

double to_double(const Rational& q);

// Base-10 integer from "[+-]digits", immune to the C-style base prefixes the
// multiprecision string constructor would apply ("025" is twenty five here).
// Throws std::invalid_argument on anything else.
Integer integer_from_decimal(const std::string& s);

// Canonical text form "p/q" (or "p" for integers), denominator positive.
std::string rational_string(const Rational& q);

// Accepts "p", "-p", "p/q" and plain decimals like "0.25" or "-1.25e-2".
// Returns nullopt on malformed input.
std::optional<Rational> parse_rational(const std::string& text);

// A complex scalar that remembers whether it is exactly known.  The exact
// field is only set for verified real rational values; approx is always kept
// in sync for numeric work.
struct Scalar {
  std::complex<double> approx{0.0, 0.0};
  std::optional<Rational> exact;
  NumStatus status = NumStatus::numeric;

  static Scalar make_exact(const Rational& q);
  static Scalar make_approx(std::complex<double> z, NumStatus s = NumStatus::numeric);

  bool is_exact() const { return exact.has_value(); }
  std::string to_string() const;
};

// |a - b| <= tol * max(1, |a|, |b|)
bool approx_equal(std::complex<double> a, std::complex<double> b, double tol);

// Continued-fraction reconstruction of the nearest rational with denominator
// <= max_den, accepted only when within tol of x.  This is recognition, not
// proof: callers must verify exactness through an independent exact check
// before upgrading a value.
std::optional<Rational> recognize_rational(double x, double tol, std::uint64_t max_den);

}  // namespace nbif
