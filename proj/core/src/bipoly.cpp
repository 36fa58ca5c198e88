#include <newtonbif/bipoly.hpp>

#include <algorithm>
#include <stdexcept>

namespace nbif {

namespace {
const UniPoly kZero;
}

void BiPoly::normalize() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BiPoly::BiPoly(std::vector<UniPoly> coeffs) : c_(std::move(coeffs)) { normalize(); }

BiPoly BiPoly::from_sparse(const SparsePoly& p) {
  if (p.ambient_dim() != 2) throw std::invalid_argument("expected a bivariate polynomial");
  int du = -1;
  for (const auto& [e, a] : p.terms()) {
    if (e[0] < 0 || e[1] < 0)
      throw std::invalid_argument("negative exponent in a dense conversion");
    du = std::max<int>(du, static_cast<int>(e[0]));
  }
  std::vector<std::vector<Rational>> cc(du + 1);
  for (const auto& [e, a] : p.terms()) {
    auto& col = cc[e[0]];
    if (static_cast<std::size_t>(e[1]) >= col.size()) col.resize(e[1] + 1, Rational(0));
    col[e[1]] = a;
  }
  std::vector<UniPoly> c;
  c.reserve(cc.size());
  for (auto& col : cc) c.emplace_back(std::move(col));
  return BiPoly(std::move(c));
}

int BiPoly::degree_v() const {
  int d = -1;
  for (const auto& q : c_) d = std::max(d, q.degree());
  return d;
}

const UniPoly& BiPoly::coeff(int k) const {
  if (k < 0 || static_cast<std::size_t>(k) >= c_.size()) return kZero;
  return c_[k];
}

const UniPoly& BiPoly::leading_u() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

BiPoly BiPoly::operator-() const {
  BiPoly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
  std::vector<UniPoly> c(std::max(c_.size(), o.c_.size()));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) c[k] = c[k] + o.c_[k];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + (-o); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
  if (c_.empty() || o.c_.empty()) return BiPoly();
  std::vector<UniPoly> c(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i)
    for (std::size_t j = 0; j < o.c_.size(); ++j) c[i + j] = c[i + j] + c_[i] * o.c_[j];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::derivative_u() const {
  if (c_.size() <= 1) return BiPoly();
  std::vector<UniPoly> c(c_.size() - 1);
  for (std::size_t k = 1; k < c_.size(); ++k)
    c[k - 1] = c_[k].scaled(Rational(static_cast<int>(k)));
  return BiPoly(std::move(c));
}

BiPoly BiPoly::derivative_v() const {
  std::vector<UniPoly> c(c_.size());
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k].derivative();
  return BiPoly(std::move(c));
}

BiPoly BiPoly::shifted_u(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  if (c_.empty()) return BiPoly();
  std::vector<UniPoly> c(c_.size() + k);
  for (std::size_t i = 0; i < c_.size(); ++i) c[i + k] = c_[i];
  return BiPoly(std::move(c));
}

BiPoly BiPoly::transpose() const {
  std::vector<UniPoly> c(degree_v() + 1 > 0 ? degree_v() + 1 : 0);
  std::vector<std::vector<Rational>> cc(c.size());
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (int j = 0; j <= c_[k].degree(); ++j) {
      if (c_[k].coeff(j) == 0) continue;
      auto& col = cc[j];
      if (col.size() <= k) col.resize(k + 1, Rational(0));
      col[k] = c_[k].coeff(j);
    }
  for (std::size_t j = 0; j < cc.size(); ++j) c[j] = UniPoly(std::move(cc[j]));
  return BiPoly(std::move(c));
}

UniPoly BiPoly::at_v(const Rational& a) const {
  std::vector<Rational> c(c_.size(), Rational(0));
  for (std::size_t k = 0; k < c_.size(); ++k) c[k] = c_[k].evaluate(a);
  return UniPoly(std::move(c));
}

UniPoly BiPoly::at_u(const Rational& a) const {
  UniPoly r;
  Rational p(1);
  for (std::size_t k = 0; k < c_.size(); ++k) {
    r = r + c_[k].scaled(p);
    p *= a;
  }
  return r;
}

Rational BiPoly::evaluate(const Rational& u0, const Rational& v0) const {
  Rational r(0);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * u0 + c_[k].evaluate(v0);
  return r;
}

std::complex<double> BiPoly::evaluate(std::complex<double> u0, std::complex<double> v0) const {
  std::complex<double> r(0.0, 0.0);
  for (std::size_t k = c_.size(); k-- > 0;) r = r * u0 + c_[k].evaluate(v0);
  return r;
}

SparsePoly BiPoly::to_sparse() const {
  SparsePoly p(2);
  for (std::size_t k = 0; k < c_.size(); ++k)
    for (int j = 0; j <= c_[k].degree(); ++j)
      if (c_[k].coeff(j) != 0)
        p.add_term({static_cast<std::int64_t>(k), j}, c_[k].coeff(j));
  return p;
}

std::string BiPoly::to_string() const { return to_sparse().to_string(); }

BiPoly mul_unipoly(const BiPoly& p, const UniPoly& a) {
  std::vector<UniPoly> c(p.coeffs());
  for (auto& q : c) q = q * a;
  return BiPoly(std::move(c));
}

UniPoly content_u(const BiPoly& p) {
  UniPoly g;
  for (const auto& q : p.coeffs()) g = gcd(g, q);
  return g;
}

BiPoly primitive_part_u(const BiPoly& p) {
  if (p.is_zero()) return p;
  UniPoly c = content_u(p);
  if (c.degree() == 0) return mul_unipoly(p, UniPoly::constant(Rational(1) / c.coeff(0)));
  std::vector<UniPoly> out;
  out.reserve(p.coeffs().size());
  for (const auto& q : p.coeffs()) {
    auto [d, r] = divmod(q, c);
    if (!r.is_zero()) throw std::logic_error("content division left a remainder");
    out.push_back(d);
  }
  return BiPoly(std::move(out));
}

BiPoly pseudo_remainder_u(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) throw std::invalid_argument("pseudo-division by zero");
  BiPoly r = a;
  const UniPoly d = b.leading_u();
  while (!r.is_zero() && r.degree_u() >= b.degree_u()) {
    int k = r.degree_u() - b.degree_u();
    BiPoly lead = mul_unipoly(b.shifted_u(k), r.leading_u());
    r = mul_unipoly(r, d) - lead;
  }
  return r;
}

std::optional<BiPoly> exact_divide(const BiPoly& a, const BiPoly& b) {
  if (b.is_zero()) return std::nullopt;
  if (a.is_zero()) return BiPoly();
  BiPoly r = a;
  std::vector<UniPoly> q(a.degree_u() >= b.degree_u() ? a.degree_u() - b.degree_u() + 1 : 0);
  while (!r.is_zero() && r.degree_u() >= b.degree_u()) {
    int k = r.degree_u() - b.degree_u();
    auto [f, rem] = divmod(r.leading_u(), b.leading_u());
    if (!rem.is_zero()) return std::nullopt;
    q[k] = f;
    std::vector<UniPoly> fb{f};
    r = r - (b.shifted_u(k) * BiPoly(std::move(fb)));
  }
  if (!r.is_zero()) return std::nullopt;
  return BiPoly(std::move(q));
}

namespace {

// canonical scaling: primitive in u with monic leading u-coefficient
BiPoly canonical_primitive(const BiPoly& p) {
  if (p.is_zero()) return p;
  BiPoly pp = primitive_part_u(p);
  Rational l = pp.leading_u().leading();
  return mul_unipoly(pp, UniPoly::constant(Rational(1) / l));
}

}  // namespace

BiPoly gcd_bi(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() && b.is_zero()) return BiPoly();
  UniPoly cont = gcd(content_u(a), content_u(b));
  if (a.is_zero()) return mul_unipoly(canonical_primitive(b), cont);
  if (b.is_zero()) return mul_unipoly(canonical_primitive(a), cont);
  BiPoly x = primitive_part_u(a), y = primitive_part_u(b);
  if (x.degree_u() < y.degree_u()) std::swap(x, y);
  while (!y.is_zero()) {
    BiPoly r = pseudo_remainder_u(x, y);
    x = y;
    y = r.is_zero() ? BiPoly() : primitive_part_u(r);
  }
  return mul_unipoly(canonical_primitive(x), cont);
}

BiPoly squarefree_bi(const BiPoly& a) {
  if (a.is_zero() || (a.degree_u() <= 0 && a.degree_v() <= 0)) return a;
  const BiPoly d = gcd_bi(gcd_bi(a, a.derivative_u()), a.derivative_v());
  auto q = exact_divide(a, d);
  if (!q) throw std::logic_error("squarefree division failed");
  return *q;
}

UniPoly interpolate(const std::vector<std::pair<Rational, Rational>>& samples) {
  UniPoly r;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    UniPoly basis = UniPoly::constant(samples[j].second);
    for (std::size_t l = 0; l < samples.size(); ++l) {
      if (l == j) continue;
      // (t - a_l) / (a_j - a_l)
      Rational den = samples[j].first - samples[l].first;
      basis = basis * UniPoly({-samples[l].first / den, Rational(1) / den});
    }
    r = r + basis;
  }
  return r;
}

BiPoly interpolate_bi(const std::vector<std::pair<Rational, UniPoly>>& samples) {
  BiPoly r;
  for (std::size_t j = 0; j < samples.size(); ++j) {
    UniPoly basis = UniPoly::constant(Rational(1));
    for (std::size_t l = 0; l < samples.size(); ++l) {
      if (l == j) continue;
      Rational den = samples[j].first - samples[l].first;
      basis = basis * UniPoly({-samples[l].first / den, Rational(1) / den});
    }
    // basis(u) * g_j(v)
    std::vector<UniPoly> c(basis.degree() + 1);
    for (int k = 0; k <= basis.degree(); ++k) c[k] = samples[j].second.scaled(basis.coeff(k));
    r = r + BiPoly(std::move(c));
  }
  return r;
}

UniPoly resultant_u(const BiPoly& a, const BiPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  if (a.degree_u() == 0 && b.degree_u() == 0) return UniPoly::constant(Rational(1));
  if (a.degree_u() == 0) {
    UniPoly r = UniPoly::constant(Rational(1));
    for (int k = 0; k < b.degree_u(); ++k) r = r * a.coeff(0);
    return r;
  }
  if (b.degree_u() == 0) {
    UniPoly r = UniPoly::constant(Rational(1));
    for (int k = 0; k < a.degree_u(); ++k) r = r * b.coeff(0);
    return r;
  }
  const int bound = a.degree_u() * std::max(b.degree_v(), 0) +
                    b.degree_u() * std::max(a.degree_v(), 0) + 1;
  std::vector<std::pair<Rational, Rational>> samples;
  for (std::int64_t k = 0; static_cast<int>(samples.size()) < bound; ++k) {
    // 0, 1, -1, 2, -2, ...
    Rational v0 = (k % 2 == 1) ? Rational((k + 1) / 2) : Rational(-(k / 2));
    if (a.leading_u().evaluate(v0) == 0 || b.leading_u().evaluate(v0) == 0) continue;
    samples.emplace_back(v0, resultant(a.at_v(v0), b.at_v(v0)));
  }
  return interpolate(samples);
}

std::vector<std::complex<double>> at_u_numeric(const BiPoly& p, std::complex<double> u0) {
  std::vector<std::complex<double>> out(p.degree_v() + 1 > 0 ? p.degree_v() + 1 : 0,
                                        {0.0, 0.0});
  std::complex<double> pw(1.0, 0.0);
  for (int k = 0; k <= p.degree_u(); ++k) {
    const UniPoly& q = p.coeff(k);
    for (int j = 0; j <= q.degree(); ++j) out[j] += pw * to_double(q.coeff(j));
    pw *= u0;
  }
  return out;
}

SparsePoly clear_negative_exponents(const SparsePoly& p) {
  if (p.is_zero()) return SparsePoly(p.ambient_dim());
  const int n = p.ambient_dim();
  Exponent mn(n, 0);
  bool first = true;
  for (const auto& [e, a] : p.terms()) {
    for (int i = 0; i < n; ++i) mn[i] = first ? e[i] : std::min(mn[i], e[i]);
    first = false;
  }
  SparsePoly out(n);
  for (const auto& [e, a] : p.terms()) {
    Exponent s(n);
    for (int i = 0; i < n; ++i) s[i] = e[i] - mn[i];
    out.add_term(s, a);
  }
  return out;
}

}  // namespace nbif
