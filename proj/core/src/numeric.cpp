#include <newtonbif/numeric.hpp>

#include <cmath>
#include <cstdlib>
#include <stdexcept>

namespace nbif {

const char* to_cstr(NumStatus s) {
  switch (s) {
    case NumStatus::exact: return "exact";
    case NumStatus::numeric: return "numeric";
    case NumStatus::heuristic: return "heuristic";
  }
  return "numeric";
}

NumStatus combine(NumStatus a, NumStatus b) {
  if (a == NumStatus::heuristic || b == NumStatus::heuristic) return NumStatus::heuristic;
  if (a == NumStatus::numeric || b == NumStatus::numeric) return NumStatus::numeric;
  return NumStatus::exact;
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

Integer integer_from_decimal(const std::string& s) {
  std::size_t i = 0;
  bool neg = false;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) neg = s[i++] == '-';
  if (i == s.size()) throw std::invalid_argument("expected digits: " + s);
  std::size_t start = i;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      throw std::invalid_argument("expected digits: " + s);
  while (start + 1 < s.size() && s[start] == '0') ++start;  // defuse octal prefixes
  Integer v(s.substr(start));
  return neg ? Integer(-v) : v;
}

std::string rational_string(const Rational& q) {
  if (denominator(q) == 1) return numerator(q).str();
  return numerator(q).str() + "/" + denominator(q).str();
}

std::optional<Rational> parse_rational(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) return std::nullopt;

  auto slash = s.find('/');
  try {
    if (slash != std::string::npos) {
      Integer num = integer_from_decimal(s.substr(0, slash));
      Integer den = integer_from_decimal(s.substr(slash + 1));
      if (den == 0) return std::nullopt;
      return Rational(num) / Rational(den);
    }
    // integer fast path
    if (s.find_first_of(".eE") == std::string::npos) return Rational(integer_from_decimal(s));

    // decimal: mantissa [.fraction] [e exponent]
    std::size_t epos = s.find_first_of("eE");
    std::string mant = (epos == std::string::npos) ? s : s.substr(0, epos);
    long expo = 0;
    if (epos != std::string::npos) {
      std::size_t used = 0;
      expo = std::stol(s.substr(epos + 1), &used);
      if (used != s.size() - epos - 1) return std::nullopt;
    }
    bool neg = false;
    std::size_t i = 0;
    if (i < mant.size() && (mant[i] == '+' || mant[i] == '-')) neg = mant[i++] == '-';
    std::string digits;
    long frac_digits = 0;
    bool seen_dot = false;
    for (; i < mant.size(); ++i) {
      if (mant[i] == '.') {
        if (seen_dot) return std::nullopt;
        seen_dot = true;
      } else if (std::isdigit(static_cast<unsigned char>(mant[i]))) {
        digits.push_back(mant[i]);
        if (seen_dot) ++frac_digits;
      } else {
        return std::nullopt;
      }
    }
    if (digits.empty()) return std::nullopt;
    Rational r(integer_from_decimal(digits));
    long net = expo - frac_digits;
    Integer p10 = pow(Integer(10), static_cast<unsigned>(net < 0 ? -net : net));
    if (net >= 0)
      r *= p10;
    else
      r /= p10;
    if (neg) r = -r;
    return r;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

Scalar Scalar::make_exact(const Rational& q) {
  Scalar s;
  s.exact = q;
  s.approx = {to_double(q), 0.0};
  s.status = NumStatus::exact;
  return s;
}

Scalar Scalar::make_approx(std::complex<double> z, NumStatus st) {
  Scalar s;
  s.approx = z;
  s.status = st == NumStatus::exact ? NumStatus::numeric : st;
  return s;
}

std::string Scalar::to_string() const {
  if (exact) return rational_string(*exact);
  if (approx.imag() == 0.0) return std::to_string(approx.real());
  return std::to_string(approx.real()) + (approx.imag() < 0 ? "-" : "+") +
         std::to_string(std::abs(approx.imag())) + "i";
}

bool approx_equal(std::complex<double> a, std::complex<double> b, double tol) {
  double scale = std::max({1.0, std::abs(a), std::abs(b)});
  return std::abs(a - b) <= tol * scale;
}

std::optional<Rational> recognize_rational(double x, double tol, std::uint64_t max_den) {
  if (!std::isfinite(x)) return std::nullopt;
  // classic continued-fraction convergents p_k/q_k of x
  double v = x;
  long long p0 = 1, q0 = 0;  // p_{-1}/q_{-1}
  long long p1 = 0, q1 = 1;  // will hold p_0/q_0 after first step
  for (int k = 0; k < 64; ++k) {
    double fl = std::floor(v);
    if (fl > 9.2e18 || fl < -9.2e18) return std::nullopt;
    long long a = static_cast<long long>(fl);
    long long p = a * p0 + p1;
    long long q = a * q0 + q1;
    if (q < 0 || static_cast<std::uint64_t>(q) > max_den) break;
    p1 = p0; q1 = q0; p0 = p; q0 = q;
    if (q0 > 0) {
      double err = std::abs(x - static_cast<double>(p0) / static_cast<double>(q0));
      if (err <= tol) return Rational(Integer(p0), Integer(q0));
    }
    double rem = v - fl;
    if (rem < 1e-15) break;
    v = 1.0 / rem;
  }
  if (q0 > 0) {
    double err = std::abs(x - static_cast<double>(p0) / static_cast<double>(q0));
    if (err <= tol) return Rational(Integer(p0), Integer(q0));
  }
  return std::nullopt;
}

}  // namespace nbif
