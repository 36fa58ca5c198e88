#include <newtonbif/unipoly.hpp>

#include <stdexcept>

namespace nbif {

Rational power(const Rational& a, int e) {
  if (e < 0) throw std::invalid_argument("negative exponent");
  Rational r(1), base = a;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

void UniPoly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { normalize(); }

UniPoly UniPoly::constant(const Rational& a) { return UniPoly({a}); }

UniPoly UniPoly::variable() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::from_sparse(const SparsePoly& p) {
  if (p.ambient_dim() != 1) throw std::invalid_argument("expected a univariate polynomial");
  std::vector<Rational> c;
  for (const auto& [e, a] : p.terms()) {
    if (e[0] < 0) throw std::invalid_argument("negative exponent in a dense conversion");
    if (static_cast<std::size_t>(e[0]) >= c.size()) c.resize(e[0] + 1, Rational(0));
    c[e[0]] = a;
  }
  return UniPoly(std::move(c));
}

Rational UniPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return Rational(0);
  return c_[k];
}

Rational UniPoly::leading() const {
  if (c_.empty()) return Rational(0);
  return c_.back();
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
  std::vector<Rational> c(std::max(c_.size(), o.c_.size()), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] += o.c_[k];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
  if (c_.empty() || o.c_.empty()) return UniPoly();
  std::vector<Rational> c(c_.size() + o.c_.size() - 1, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] += c_[i] * o.c_[j];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::scaled(const Rational& a) const {
  UniPoly r = *this;
  for (auto& x : r.c_) x *= a;
  r.normalize();
  return r;
}

UniPoly UniPoly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (c_.empty()) return UniPoly();
  std::vector<Rational> c(c_.size() + k, Rational(0));
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return UniPoly(std::move(c));
}

UniPoly UniPoly::monic() const {
  if (c_.empty()) return UniPoly();
  return scaled(Rational(1) / c_.back());
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return UniPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k) c[k - 1] = Rational(static_cast<int>(k)) * c_[k];
  return UniPoly(std::move(c));
}

Rational UniPoly::evaluate(const Rational& t) const {
  Rational r(0);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * t + c_[k];
  return r;
}

std::complex<double> UniPoly::evaluate(std::complex<double> t) const {
  std::complex<double> r(0.0, 0.0);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * t + to_double(c_[k]);
  return r;
}

int UniPoly::valuation() const {
  for (std::size_t k = 0; k < c_.size(); ++k)
    if (c_[k] != 0) return static_cast<int>(k);
  return 0;
}

UniPoly UniPoly::stripped() const {
  int v = valuation();
  if (v == 0) return *this;
  return UniPoly(std::vector<Rational>(c_.begin() + v, c_.end()));
}

std::string UniPoly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t k = c_.size(); k-- > 0;) {
    if (c_[k] == 0) continue;
    Rational a = c_[k];
    if (out.empty()) {
      if (a < 0) out += "-", a = -a;
    } else {
      out += a < 0 ? " - " : " + ";
      if (a < 0) a = -a;
    }
    bool unit = a == 1 && k > 0;
    if (!unit) out += rational_string(a);
    if (k > 0) {
      if (!unit) out += "*";
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("division by the zero polynomial");
  UniPoly r = a;
  std::vector<Rational> q(a.degree() >= b.degree() ? a.degree() - b.degree() + 1 : 0, Rational(0));
  const Rational lb = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    int k = r.degree() - b.degree();
    Rational f = r.leading() / lb;
    q[k] = f;
    r = r - b.shifted(k).scaled(f);
  }
  return {UniPoly(std::move(q)), r};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return Rational(0);
  if (a.degree() == 0) return power(a.coeff(0), b.degree());
  if (b.degree() == 0) return power(b.coeff(0), a.degree());
  UniPoly r = divmod(a, b).second;
  Rational sign = (a.degree() % 2 == 1 && b.degree() % 2 == 1) ? Rational(-1) : Rational(1);
  if (r.is_zero()) return Rational(0);
  return sign * power(b.leading(), a.degree() - r.degree()) * resultant(b, r);
}

UniPoly squarefree_part(const UniPoly& a) {
  if (a.degree() <= 0) return a;
  UniPoly g = gcd(a, a.derivative());
  if (g.degree() == 0) return a;
  auto [q, r] = divmod(a, g);
  if (!r.is_zero()) throw std::logic_error("squarefree division left a remainder");
  return q;
}

}  // namespace nbif
