#include <newtonbif/errors.hpp>
#include <newtonbif/intlinalg.hpp>
#include <newtonbif/poly.hpp>

#include <sstream>
#include <stdexcept>

namespace nbif {

std::int64_t total_degree(const Exponent& e) {
  std::int64_t d = 0;
  for (auto x : e) d += x;
  return d;
}

bool GradedLexLess::operator()(const Exponent& a, const Exponent& b) const {
  std::int64_t da = total_degree(a), db = total_degree(b);
  if (da != db) return da < db;
  return a < b;  // lexicographic tie break
}

SparsePoly::SparsePoly(int ambient_dim, PolyMode mode) : dim_(ambient_dim), mode_(mode) {
  if (ambient_dim < 1 || ambient_dim > 8)
    throw GuardLimitError("ambient dimension must be between 1 and 8");
}

void SparsePoly::check_exponent(const Exponent& e) const {
  if (static_cast<int>(e.size()) != dim_)
    throw std::invalid_argument("exponent length does not match ambient dimension");
  for (auto x : e) {
    if (x < 0 && mode_ == PolyMode::affine)
      throw std::invalid_argument("negative exponent in affine mode");
    if (x > kMaxExponentMagnitude || x < -kMaxExponentMagnitude)
      throw std::invalid_argument("exponent magnitude exceeds 64");
  }
}

Rational SparsePoly::constant_term() const {
  Exponent zero(dim_, 0);
  auto it = terms_.find(zero);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::set_coefficient(const Exponent& e, const Rational& c) {
  check_exponent(e);
  if (c == 0)
    terms_.erase(e);
  else
    terms_[e] = c;
}

Rational SparsePoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void SparsePoly::add_term(const Exponent& e, const Rational& c) {
  check_exponent(e);
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    if (c != 0) terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

SparsePoly SparsePoly::operator-() const {
  SparsePoly r(dim_, mode_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

SparsePoly SparsePoly::operator+(const SparsePoly& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("ambient dimension mismatch");
  SparsePoly r = *this;
  if (o.mode_ == PolyMode::laurent) r.mode_ = PolyMode::laurent;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

SparsePoly SparsePoly::operator-(const SparsePoly& o) const { return *this + (-o); }

SparsePoly SparsePoly::operator*(const SparsePoly& o) const {
  if (o.dim_ != dim_) throw std::invalid_argument("ambient dimension mismatch");
  SparsePoly r(dim_, mode_ == PolyMode::laurent || o.mode_ == PolyMode::laurent
                         ? PolyMode::laurent
                         : PolyMode::affine);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) {
      Exponent e(dim_);
      for (int i = 0; i < dim_; ++i) e[i] = e1[i] + e2[i];
      r.add_term(e, c1 * c2);
    }
  return r;
}

SparsePoly SparsePoly::scaled(const Rational& c) const {
  SparsePoly r(dim_, mode_);
  if (c == 0) return r;
  for (const auto& [e, co] : terms_) r.terms_.emplace(e, co * c);
  return r;
}

SparsePoly SparsePoly::partial_derivative(int var) const {
  if (var < 0 || var >= dim_) throw std::invalid_argument("variable index out of range");
  SparsePoly r(dim_, mode_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exponent d = e;
    d[var] -= 1;
    r.add_term(d, c * Rational(e[var]));
  }
  return r;
}

Rational SparsePoly::evaluate(const std::vector<Rational>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  Rational acc(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0) {
        if (e[i] < 0) throw std::domain_error("zero coordinate under a negative exponent");
        t = 0;
        break;
      }
      Rational base = point[i];
      std::int64_t k = e[i];
      if (k < 0) {
        base = 1 / base;
        k = -k;
      }
      for (std::int64_t j = 0; j < k; ++j) t *= base;
    }
    acc += t;
  }
  return acc;
}

std::complex<double> SparsePoly::evaluate(const std::vector<std::complex<double>>& point) const {
  if (static_cast<int>(point.size()) != dim_)
    throw std::invalid_argument("evaluation point has wrong dimension");
  std::complex<double> acc = 0.0;
  for (const auto& [e, c] : terms_) {
    std::complex<double> t = to_double(c);
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (point[i] == 0.0 && e[i] < 0)
        throw std::domain_error("zero coordinate under a negative exponent");
      t *= std::pow(point[i], static_cast<double>(e[i]));
    }
    acc += t;
  }
  return acc;
}

std::vector<Exponent> SparsePoly::support() const {
  std::vector<Exponent> s;
  s.reserve(terms_.size());
  for (const auto& [e, c] : terms_) s.push_back(e);
  return s;
}

std::string SparsePoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Rational a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    bool has_vars = total_degree(e) != 0 || e != Exponent(dim_, 0);
    bool coeff_shown = (a != 1) || !has_vars;
    if (coeff_shown) out << rational_string(a);
    bool first_var = true;
    for (int i = 0; i < dim_; ++i) {
      if (e[i] == 0) continue;
      if (!first_var || coeff_shown) out << "*";
      out << "x" << (i + 1);
      if (e[i] != 1) out << "^" << e[i];
      first_var = false;
    }
  }
  return out.str();
}

SparsePoly monomial_change_of_coordinates(const SparsePoly& p,
                                          const std::vector<Exponent>& basis) {
  if (basis.empty()) throw std::invalid_argument("empty coordinate basis");
  const int d = static_cast<int>(basis.size());
  ZMat b;
  b.reserve(basis.size());
  for (const auto& row : basis) {
    if (static_cast<int>(row.size()) != p.ambient_dim())
      throw std::invalid_argument("basis vector length does not match ambient dimension");
    b.push_back(zvec_of(row));
  }
  if (rank(b) != d) throw std::invalid_argument("basis vectors are not linearly independent");
  SparsePoly out(d, PolyMode::laurent);
  for (const auto& [e, c] : p.terms()) {
    auto coords = integer_coordinates(b, zvec_of(e));
    if (!coords)
      throw std::domain_error("exponent is not in the lattice spanned by the basis");
    out.add_term(int64_of(*coords), c);
  }
  return out;
}

}  // namespace nbif
