#include <newtonbif/critical.hpp>

#include <newtonbif/errors.hpp>
#include <newtonbif/roots.hpp>

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

namespace nbif {

const char* to_cstr(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    default: return "unknown";
  }
}

namespace {

using Cpx = std::complex<double>;

Cpx cpow_int(Cpx z, std::int64_t e) {
  if (e < 0) return Cpx(1.0, 0.0) / cpow_int(z, -e);
  Cpx r(1.0, 0.0);
  while (e) {
    if (e & 1) r *= z;
    z *= z;
    e >>= 1;
  }
  return r;
}

Rational rat_pow(const Rational& a, std::int64_t e) {
  if (e >= 0) return power(a, static_cast<int>(e));
  if (a == 0) throw std::domain_error("zero base under a negative exponent");
  return Rational(1) / power(a, static_cast<int>(-e));
}

SparsePoly constant_poly(int dim, PolyMode mode, const Rational& c) {
  SparsePoly p(dim, mode);
  p.add_term(Exponent(dim, 0), c);
  return p;
}

// p must depend on `var` only; rewrite as a univariate (same mode)
SparsePoly one_var_from(const SparsePoly& p, int var) {
  SparsePoly out(1, p.mode());
  for (const auto& [e, a] : p.terms()) out.add_term({e[var]}, a);
  return out;
}

// substitute the second variable of a bivariate (laurent) polynomial
SparsePoly substitute_second(const SparsePoly& p, const Rational& v0) {
  SparsePoly out(1, p.mode());
  for (const auto& [e, a] : p.terms()) out.add_term({e[0]}, a * rat_pow(v0, e[1]));
  return out;
}

// polynomial whose C*-roots are exactly the torus zeros of a 1-variable
// laurent polynomial
UniPoly torus_numerator(const SparsePoly& p1) {
  return UniPoly::from_sparse(clear_negative_exponents(p1)).stripped();
}

bool bipoly_constant(const BiPoly& b) { return b.degree_u() <= 0 && b.degree_v() <= 0; }

BiPoly bipoly_of(const SparsePoly& p2) { return BiPoly::from_sparse(p2); }

// divide out pure powers of u and v (a torus unit)
BiPoly strip_monomials(const BiPoly& b) {
  if (b.is_zero()) return b;
  return BiPoly::from_sparse(clear_negative_exponents(b.to_sparse()));
}

// |p(x)| relative to the total term magnitude at x
double normalized_residual(const SparsePoly& p, const std::vector<Cpx>& x) {
  Cpx s(0.0, 0.0);
  double scale = 0.0;
  for (const auto& [e, a] : p.terms()) {
    Cpx tv(to_double(a), 0.0);
    for (std::size_t i = 0; i < x.size(); ++i) tv *= cpow_int(x[i], e[i]);
    s += tv;
    scale += std::abs(tv);
  }
  const double r = std::abs(s) / std::max(1.0, scale);
  return std::isfinite(r) ? r : 1.0;
}

std::string short_poly(const SparsePoly& p) {
  std::string s = p.to_string();
  if (s.size() > 120) s = s.substr(0, 117) + "...";
  return s;
}

// deterministic scan of generic nonzero rational line positions
std::vector<Rational> line_scan() {
  std::vector<Rational> out;
  for (int k = 0; k < 40; ++k) {
    Rational a = Rational(k + 2) / Rational(2 * k + 3);
    out.push_back(k % 2 ? -a : a);
  }
  return out;
}

struct CPoint {
  Cpx u, v;
};

// Numeric points on {w = 0}, gathered on generic vertical and horizontal
// lines; every irreducible component is met.  With `torus`, lines and roots
// avoid the coordinate axes exactly.
std::vector<CPoint> sample_curve_points(const BiPoly& w, bool torus, const Tolerances& tol,
                                        int lines_per_direction) {
  std::vector<CPoint> out;
  const auto scan = line_scan();
  auto shoot = [&](const BiPoly& poly, bool swapped) {
    if (poly.degree_v() < 1) return;
    const UniPoly lc = poly.transpose().leading_u();
    int used = 0;
    for (const Rational& a : scan) {
      if (used >= lines_per_direction) break;
      if (lc.evaluate(a) == 0) continue;
      const UniPoly slice = poly.at_u(a);
      if (slice.degree() < 1) continue;
      if (torus && slice.coeff(0) == 0) continue;
      std::vector<Cpx> roots;
      try {
        roots = complex_roots(slice, tol.cluster);
      } catch (const PrecisionError&) {
        continue;
      }
      const Cpx ac(to_double(a), 0.0);
      for (const Cpx& z : roots)
        out.push_back(swapped ? CPoint{z, ac} : CPoint{ac, z});
      ++used;
    }
  };
  shoot(w, false);
  shoot(w.transpose(), true);
  return out;
}

// Values of `val` (1 variable, laurent allowed when torus) at the roots of q.
// Rational roots give exact values; the rest are numeric, upgraded to exact
// when a gcd certificate proves the recognized value is attained.
void values_at_roots(const UniPoly& q, const SparsePoly& val, bool torus,
                     const Tolerances& tol, std::vector<Scalar>& out, NumStatus& used) {
  if (q.is_zero()) throw std::logic_error("values at the roots of the zero polynomial");
  UniPoly rem = squarefree_part(q);
  if (torus) rem = rem.stripped();
  if (rem.degree() < 1) return;
  for (const Rational& r : rational_roots(rem)) {
    out.push_back(Scalar::make_exact(val.evaluate(std::vector<Rational>{r})));
    rem = divmod(rem, UniPoly({-r, Rational(1)})).first;
  }
  if (rem.degree() < 1) return;
  used = combine(used, NumStatus::numeric);
  for (const Cpx& z : complex_roots(rem, tol.cluster)) {
    const Cpx w = val.evaluate(std::vector<Cpx>{z});
    const auto re = recognize_rational(w.real(), tol.recognize, tol.max_den);
    const auto im = recognize_rational(w.imag(), tol.recognize, tol.max_den);
    if (re && im && *im == 0) {
      const SparsePoly diff = val - constant_poly(1, val.mode(), *re);
      const UniPoly m = torus ? torus_numerator(diff) : UniPoly::from_sparse(diff);
      if (m.is_zero() || gcd(rem, m).degree() >= 1) {
        out.push_back(Scalar::make_exact(*re));
        continue;
      }
    }
    out.push_back(Scalar::make_approx(w));
  }
}

// One constant value per irreducible component of {curve = 0} (value_poly is
// constant there since the curve consists of critical points).  Exact loop
// with certified division first, numeric sampling for whatever remains.
void component_values(const BiPoly& curve, const SparsePoly& value_poly, bool torus,
                      const Tolerances& tol, std::vector<Scalar>& out, NumStatus& used) {
  BiPoly cur = squarefree_bi(curve);
  while (!cur.is_zero() && !bipoly_constant(cur)) {
    const auto pts = sample_curve_points(cur, torus, tol, 1);
    bool stripped_one = false;
    if (!pts.empty()) {
      const Cpx w = value_poly.evaluate(std::vector<Cpx>{pts[0].u, pts[0].v});
      const auto re = recognize_rational(w.real(), tol.recognize, tol.max_den);
      const auto im = recognize_rational(w.imag(), tol.recognize, tol.max_den);
      if (re && im && *im == 0) {
        const SparsePoly diff = value_poly - constant_poly(2, value_poly.mode(), *re);
        const BiPoly m = torus ? bipoly_of(clear_negative_exponents(diff)) : bipoly_of(diff);
        if (m.is_zero()) {
          out.push_back(Scalar::make_exact(*re));
          return;
        }
        const BiPoly g = gcd_bi(cur, m);
        if (!bipoly_constant(g)) {
          out.push_back(Scalar::make_exact(*re));
          const auto q = exact_divide(cur, g);
          if (!q) throw std::logic_error("component division failed");
          cur = *q;
          stripped_one = true;
        }
      }
    }
    if (!stripped_one) {
      // numeric fallback: hit every remaining component from generic lines
      used = combine(used, NumStatus::numeric);
      for (const CPoint& p : sample_curve_points(cur, torus, tol, 2))
        out.push_back(Scalar::make_approx(value_poly.evaluate(std::vector<Cpx>{p.u, p.v})));
      return;
    }
  }
}

// Common zeros of a coprime pair.  Families carry a rational second
// coordinate and the exact polynomial of matching first coordinates; the
// rest is numeric.
struct PairSolutions {
  struct Family {
    Rational v;
    UniPoly du;  // nonconstant; stripped of u-powers when torus
  };
  std::vector<Family> families;
  std::vector<CPoint> numeric;
  NumStatus used = NumStatus::exact;
};

PairSolutions solve_pair(const BiPoly& P, const BiPoly& Q, bool torus, const Tolerances& tol) {
  PairSolutions out;
  if (P.is_zero() || Q.is_zero()) throw std::logic_error("solve_pair needs nonzero input");
  if (bipoly_constant(P) || bipoly_constant(Q)) return out;
  if (P.degree_u() == 0 && Q.degree_u() == 0) return out;  // coprime in one variable

  auto numeric_cross = [&](const BiPoly& A, const BiPoly& B, const Cpx& vstar) {
    // roots of A(., v*) filtered by the residual of B
    auto coeffs = at_u_numeric(A.transpose(), vstar);
    std::vector<Cpx> roots;
    try {
      roots = complex_roots(std::move(coeffs));
    } catch (const std::exception&) {
      return;
    }
    const SparsePoly bs = B.to_sparse();
    for (const Cpx& u : roots) {
      if (torus && (std::abs(u) < 1e-9 || std::abs(vstar) < 1e-9)) continue;
      if (normalized_residual(bs, {u, vstar}) <= tol.residual) out.numeric.push_back({u, vstar});
    }
  };

  if (P.degree_u() == 0 || Q.degree_u() == 0) {
    const BiPoly& pure = (P.degree_u() == 0) ? P : Q;    // polynomial in v alone
    const BiPoly& other = (P.degree_u() == 0) ? Q : P;
    UniPoly base = squarefree_part(pure.coeff(0));
    if (torus) base = base.stripped();
    if (base.degree() < 1) return out;
    for (const Rational& vr : rational_roots(base)) {
      base = divmod(base, UniPoly({-vr, Rational(1)})).first;
      UniPoly du = other.at_v(vr);
      if (torus) du = du.stripped();
      if (du.degree() >= 1) out.families.push_back({vr, du});
    }
    if (base.degree() >= 1) {
      out.used = NumStatus::numeric;
      for (const Cpx& vstar : complex_roots(base, tol.cluster)) numeric_cross(other, other, vstar);
    }
    return out;
  }

  const UniPoly R = resultant_u(P, Q);
  if (R.is_zero()) throw std::logic_error("vanishing resultant of a coprime pair");
  UniPoly rem = squarefree_part(R);
  if (torus) rem = rem.stripped();
  if (rem.degree() < 1) return out;
  for (const Rational& vr : rational_roots(rem)) {
    rem = divmod(rem, UniPoly({-vr, Rational(1)})).first;
    UniPoly du = gcd(P.at_v(vr), Q.at_v(vr));
    if (torus) du = du.stripped();
    if (du.degree() >= 1) out.families.push_back({vr, du});
  }
  if (rem.degree() >= 1) {
    out.used = NumStatus::numeric;
    for (const Cpx& vstar : complex_roots(rem, tol.cluster)) {
      if (torus && std::abs(vstar) < 1e-9) continue;
      const std::size_t before = out.numeric.size();
      numeric_cross(P, Q, vstar);
      if (out.numeric.size() == before) numeric_cross(Q, P, vstar);
    }
  }
  return out;
}

std::string cpx_string(const Cpx& z) {
  std::ostringstream os;
  os.precision(12);
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? " - " : " + ") << std::abs(z.imag()) << "i";
  return os.str();
}

CheckResult pass_result(NumStatus s, std::string detail) {
  return {Verdict::pass, s, std::move(detail), std::nullopt};
}

CheckResult fail_result(NumStatus s, std::string detail, Witness w) {
  return {Verdict::fail, s, std::move(detail), std::move(w)};
}

CheckResult unknown_result(NumStatus s, std::string detail,
                           std::optional<Witness> w = std::nullopt) {
  return {Verdict::unknown, s, std::move(detail), std::move(w)};
}

// randomized multistart Newton iteration on a square gradient system;
// returns heuristic values of value_poly at the solutions found
std::vector<Scalar> multistart_values(const SparsePoly& value_poly,
                                      const std::vector<SparsePoly>& grad, bool torus,
                                      const Tolerances& tol, std::uint64_t seed) {
  const int d = static_cast<int>(grad.size());
  std::vector<std::vector<SparsePoly>> jac(d);
  for (int j = 0; j < d; ++j)
    for (int k = 0; k < d; ++k) jac[j].push_back(grad[j].partial_derivative(k));
  std::mt19937_64 rng(seed ^ 0x6e6577746f6e6266ULL);
  std::uniform_real_distribution<double> ang(0.0, 6.283185307179586);
  std::uniform_real_distribution<double> rad(0.4, 2.2), box(-2.5, 2.5);
  std::vector<Scalar> vals;
  const int starts = 50 * d;
  for (int s = 0; s < starts; ++s) {
    std::vector<Cpx> x(d);
    for (int i = 0; i < d; ++i)
      x[i] = torus ? std::polar(rad(rng), ang(rng)) : Cpx(box(rng), box(rng));
    bool ok = false;
    for (int it = 0; it < 60; ++it) {
      Eigen::VectorXcd F(d);
      Eigen::MatrixXcd J(d, d);
      bool finite = true;
      double res = 0.0;
      for (int j = 0; j < d; ++j) {
        const Cpx fj = grad[j].evaluate(x);
        if (!std::isfinite(std::abs(fj))) finite = false;
        F(j) = fj;
        res = std::max(res, normalized_residual(grad[j], x));
        for (int k = 0; k < d; ++k) J(j, k) = jac[j][k].evaluate(x);
      }
      if (!finite) break;
      if (res <= 1e-12) {
        ok = true;
        break;
      }
      const Eigen::VectorXcd delta = J.fullPivLu().solve(F);
      if (!delta.allFinite()) break;
      bool sane = true;
      for (int i = 0; i < d; ++i) {
        x[i] -= delta(i);
        const double m = std::abs(x[i]);
        if (!std::isfinite(m) || m > 1e8 || (torus && m < 1e-8)) sane = false;
      }
      if (!sane) break;
    }
    if (!ok) continue;
    bool on_torus = true;
    for (const Cpx& c : x) on_torus = on_torus && std::abs(c) > 1e-8;
    if (torus && !on_torus) continue;
    vals.push_back(Scalar::make_approx(value_poly.evaluate(x), NumStatus::heuristic));
  }
  return vals;
}

std::uint64_t mix_seed(std::uint64_t seed, int salt) {
  return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(salt + 1));
}

}  // namespace

std::vector<Scalar> merge_values(std::vector<Scalar> vals, const Tolerances& tol) {
  auto rank = [](const Scalar& s) {
    return s.status == NumStatus::exact ? 0 : (s.status == NumStatus::numeric ? 1 : 2);
  };
  std::stable_sort(vals.begin(), vals.end(), [&](const Scalar& a, const Scalar& b) {
    if (rank(a) != rank(b)) return rank(a) < rank(b);
    if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
    return a.approx.imag() < b.approx.imag();
  });
  std::vector<Scalar> out;
  for (const Scalar& v : vals) {
    bool merged = false;
    for (const Scalar& o : out) {
      if (o.is_exact() && v.is_exact()) {
        if (*o.exact == *v.exact) merged = true;
      } else if (approx_equal(o.approx, v.approx, tol.cluster)) {
        merged = true;
      }
      if (merged) break;
    }
    if (!merged) out.push_back(v);
  }
  std::sort(out.begin(), out.end(), [](const Scalar& a, const Scalar& b) {
    if (a.approx.real() != b.approx.real()) return a.approx.real() < b.approx.real();
    return a.approx.imag() < b.approx.imag();
  });
  return out;
}

FaceRestriction restrict_to_face_torus(const SparsePoly& f, const LatticePolytope& np,
                                       int face_index) {
  const FaceDescriptor& face = np.faces().at(face_index);
  if (face.dim < 1)
    throw std::invalid_argument("face restrictions need a face of dimension at least one");
  const SparsePoly gp = gamma_part(f, np, face);
  if (gp.is_zero()) throw std::logic_error("face carries no support points");
  const auto basis_rows = np.face_span_basis(face);
  const Exponent base = np.vertices()[face.vertex_indices[0]];
  const int n = f.ambient_dim();
  SparsePoly shifted(n, PolyMode::laurent);
  for (const auto& [e, a] : gp.terms()) {
    Exponent d(n);
    for (int i = 0; i < n; ++i) d[i] = e[i] - base[i];
    shifted.add_term(d, a);
  }
  FaceRestriction r;
  r.face_index = face_index;
  r.dim = face.dim;
  for (const auto& b : basis_rows) r.basis.push_back(zvec_of(b));
  r.base_vertex = base;
  r.laurent = monomial_change_of_coordinates(shifted, basis_rows);
  r.cleared = clear_negative_exponents(r.laurent);
  return r;
}

TorusCriticalValues critical_values_torus(const FaceRestriction& r, const Tolerances& tol,
                                          std::uint64_t seed) {
  TorusCriticalValues out;
  const SparsePoly& g = r.laurent;
  NumStatus used = NumStatus::exact;

  if (r.dim == 1) {
    const UniPoly q = torus_numerator(g.partial_derivative(0));
    if (q.is_zero()) {  // g constant on the torus
      out.values.push_back(Scalar::make_exact(g.constant_term()));
      return out;
    }
    if (q.degree() >= 1) values_at_roots(q, g, true, tol, out.values, used);
    out.values = merge_values(std::move(out.values), tol);
    return out;
  }

  if (r.dim == 2) {
    const SparsePoly gu = g.partial_derivative(0), gv = g.partial_derivative(1);
    if (gu.is_zero() && gv.is_zero()) {
      out.values.push_back(Scalar::make_exact(g.constant_term()));
      return out;
    }
    if (gu.is_zero() || gv.is_zero()) {
      // g depends on one variable: the critical set is a union of lines
      const int var = gu.is_zero() ? 1 : 0;
      const SparsePoly g1 = one_var_from(g, var);
      const UniPoly q = torus_numerator(g1.partial_derivative(0));
      if (q.degree() >= 1) values_at_roots(q, g1, true, tol, out.values, used);
      out.values = merge_values(std::move(out.values), tol);
      return out;
    }
    const BiPoly pu = bipoly_of(clear_negative_exponents(gu));
    const BiPoly pv = bipoly_of(clear_negative_exponents(gv));
    const BiPoly h2 = gcd_bi(pu, pv);
    BiPoly a = pu, b = pv;
    if (!bipoly_constant(h2)) {
      component_values(h2, g, true, tol, out.values, used);
      a = exact_divide(pu, h2).value();
      b = exact_divide(pv, h2).value();
    }
    a = strip_monomials(a);
    b = strip_monomials(b);
    if (!bipoly_constant(a) && !bipoly_constant(b)) {
      const PairSolutions ps = solve_pair(a, b, true, tol);
      used = combine(used, ps.used);
      for (const auto& fam : ps.families) {
        const SparsePoly gslice = substitute_second(g, fam.v);
        values_at_roots(fam.du, gslice, true, tol, out.values, used);
      }
      for (const CPoint& p : ps.numeric)
        out.values.push_back(Scalar::make_approx(g.evaluate(std::vector<Cpx>{p.u, p.v})));
    }
    out.values = merge_values(std::move(out.values), tol);
    out.completeness = used;
    return out;
  }

  // restrictions of dimension three and higher: randomized search only
  std::vector<SparsePoly> grad;
  for (int j = 0; j < r.dim; ++j) grad.push_back(g.partial_derivative(j));
  out.values = merge_values(multistart_values(g, grad, true, tol, mix_seed(seed, r.face_index)),
                            tol);
  out.completeness = NumStatus::heuristic;
  return out;
}

CheckResult restriction_nondegenerate(const FaceRestriction& r, const Tolerances& tol,
                                      std::uint64_t seed) {
  const SparsePoly& g = r.laurent;

  auto univariate_case = [&](const SparsePoly& g1) -> CheckResult {
    const UniPoly q0 = torus_numerator(g1);
    const UniPoly q1 = torus_numerator(g1.partial_derivative(0));
    if (q0.is_zero() || q1.is_zero())
      return pass_result(NumStatus::exact, "face part is a torus unit");
    const UniPoly h = gcd(q0, q1);
    if (h.degree() >= 1) {
      const auto rr = rational_roots(h);
      std::string where = rr.empty() ? "a root of " + h.to_string()
                                     : "t = " + rational_string(rr.front());
      return fail_result(NumStatus::exact,
                         "the face part and its derivative share a torus zero",
                         Witness{"common factor " + h.to_string() + "; zero at " + where,
                                 NumStatus::exact});
    }
    return pass_result(NumStatus::exact, "univariate face system has constant gcd");
  };

  if (r.dim == 1) return univariate_case(g);

  if (r.dim == 2) {
    const SparsePoly gu = g.partial_derivative(0), gv = g.partial_derivative(1);
    if (gu.is_zero() && gv.is_zero())
      return pass_result(NumStatus::exact, "face part is a torus unit");
    if (gu.is_zero()) return univariate_case(one_var_from(g, 1));
    if (gv.is_zero()) return univariate_case(one_var_from(g, 0));

    const BiPoly p0 = bipoly_of(clear_negative_exponents(g));
    const BiPoly p1 = bipoly_of(clear_negative_exponents(gu));
    const BiPoly p2 = bipoly_of(clear_negative_exponents(gv));
    if (bipoly_constant(p0) || bipoly_constant(p1) || bipoly_constant(p2))
      return pass_result(NumStatus::exact,
                         "a member of the face system is a monomial, hence torus-free");
    const BiPoly h3 = gcd_bi(gcd_bi(p0, p1), p2);
    if (!bipoly_constant(h3))
      return fail_result(NumStatus::exact, "the face system vanishes on a curve",
                         Witness{"common factor " + short_poly(h3.to_sparse()) +
                                     " of the face part and both partial derivatives",
                                 NumStatus::exact});

    NumStatus used = NumStatus::exact;
    std::optional<Witness> numeric_evidence;
    const SparsePoly p2s = p2.to_sparse();

    auto check_family = [&](const Rational& vr, const UniPoly& du,
                            bool need_third) -> std::optional<CheckResult> {
      UniPoly e = du;
      if (need_third) {
        const UniPoly third = p2.at_v(vr);
        if (!third.is_zero()) e = gcd(du, third).stripped();
      }
      if (e.degree() < 1) return std::nullopt;
      const auto rr = rational_roots(e);
      const std::string where = rr.empty() ? "a root of " + e.to_string()
                                           : "t1 = " + rational_string(rr.front());
      return fail_result(
          NumStatus::exact, "the face system has a torus zero",
          Witness{"t2 = " + rational_string(vr) + ", t1 from " + e.to_string() + " (" + where +
                      ")",
                  NumStatus::exact});
    };

    // solve one coprime pair: certify exact families, remember numeric survivors
    auto run_pair = [&](const BiPoly& A, const BiPoly& B,
                        bool need_third) -> std::optional<CheckResult> {
      const PairSolutions ps = solve_pair(A, B, true, tol);
      used = combine(used, ps.used);
      for (const auto& fam : ps.families)
        if (auto res = check_family(fam.v, fam.du, need_third)) return res;
      for (const CPoint& p : ps.numeric)
        if (normalized_residual(p2s, {p.u, p.v}) <= tol.residual)
          numeric_evidence = Witness{"numeric torus zero near (" + cpx_string(p.u) + ", " +
                                         cpx_string(p.v) + ")",
                                     NumStatus::numeric};
      return std::nullopt;
    };

    try {
      const BiPoly w = gcd_bi(p0, p1);
      if (!bipoly_constant(w)) {
        if (auto res = run_pair(w, p2, false)) return *res;
        const BiPoly as = strip_monomials(exact_divide(p0, w).value());
        const BiPoly bs = strip_monomials(exact_divide(p1, w).value());
        if (!bipoly_constant(as) && !bipoly_constant(bs))
          if (auto res = run_pair(as, bs, true)) return *res;
      } else {
        if (auto res = run_pair(strip_monomials(p0), strip_monomials(p1), true)) return *res;
      }
    } catch (const PrecisionError& e) {
      return unknown_result(NumStatus::numeric,
                            std::string("numeric root isolation failed: ") + e.what());
    }
    if (numeric_evidence)
      return unknown_result(NumStatus::numeric,
                            "a numeric common zero of the face system resisted certification",
                            numeric_evidence);
    return pass_result(used, "no torus zero of the face system");
  }

  // dimension three and higher: randomized probe, never conclusive
  std::vector<SparsePoly> sys;
  for (int j = 0; j < r.dim; ++j) sys.push_back(g.partial_derivative(j));
  const auto sols = multistart_values(g, sys, true, tol, mix_seed(seed, 7 + r.face_index));
  for (const Scalar& s : sols)
    if (std::abs(s.approx) <= tol.residual)
      return unknown_result(NumStatus::heuristic,
                            "randomized search found a numeric zero of the face system",
                            Witness{"face part value " + cpx_string(s.approx) +
                                        " at a numeric critical point",
                                    NumStatus::heuristic});
  return unknown_result(NumStatus::heuristic,
                        "no exact procedure for face systems of dimension three or more");
}

CheckResult restriction_fiber_isolated(const FaceRestriction& r, const Scalar& b,
                                       const Tolerances& tol, std::uint64_t) {
  const SparsePoly& g = r.laurent;
  if (r.dim == 1)
    return pass_result(NumStatus::exact,
                       "one-dimensional restriction: singular loci are finite");
  if (r.dim == 2) {
    const SparsePoly gu = g.partial_derivative(0), gv = g.partial_derivative(1);
    const BiPoly pu = bipoly_of(clear_negative_exponents(gu));
    const BiPoly pv = bipoly_of(clear_negative_exponents(gv));
    if (pu.is_zero() && pv.is_zero())
      return pass_result(NumStatus::exact, "constant restriction");
    const BiPoly h2 = gcd_bi(pu, pv);
    if (bipoly_constant(h2))
      return pass_result(NumStatus::exact,
                         "the gradient of the face part has no curve of torus zeros");
    if (b.is_exact()) {
      const SparsePoly diff = g - constant_poly(2, g.mode(), *b.exact);
      const BiPoly m = bipoly_of(clear_negative_exponents(diff));
      if (m.is_zero())  // constant face part: the fiber is the smooth torus
        return pass_result(NumStatus::exact, "the fiber is the whole torus, which is smooth");
      const BiPoly w = gcd_bi(h2, m);
      if (!bipoly_constant(w))
        return fail_result(
            NumStatus::exact, "the fiber of the face part is singular along a curve",
            Witness{"curve factor " + short_poly(w.to_sparse()), NumStatus::exact});
      return pass_result(NumStatus::exact,
                         "no singular curve of the face part lies in the fiber");
    }
    std::vector<Scalar> comp;
    NumStatus used = NumStatus::exact;
    try {
      component_values(h2, g, true, tol, comp, used);
    } catch (const PrecisionError& e) {
      return unknown_result(NumStatus::numeric,
                            std::string("numeric root isolation failed: ") + e.what());
    }
    for (const Scalar& c : comp)
      if (approx_equal(c.approx, b.approx, 10.0 * tol.cluster))
        return unknown_result(NumStatus::numeric,
                              "the value is numerically indistinguishable from the value of a "
                              "positive-dimensional singular component");
    return pass_result(NumStatus::numeric,
                       "the value stays away from every singular-component value");
  }
  return unknown_result(NumStatus::heuristic,
                        "no exact procedure for restrictions of dimension three or more");
}

CheckResult face_nondegenerate(const SparsePoly& f, const LatticePolytope& np, int face_index,
                               const Tolerances& tol, std::uint64_t seed) {
  const FaceDescriptor& face = np.faces().at(face_index);
  if (face.dim < 0) throw std::invalid_argument("nondegeneracy of the empty face");
  if (face.contains_origin)
    throw std::invalid_argument("nondegeneracy is defined for origin-free faces");
  if (face.dim == 0)
    return pass_result(NumStatus::exact, "vertex face: a monomial never vanishes on the torus");
  return restriction_nondegenerate(restrict_to_face_torus(f, np, face_index), tol, seed);
}

CheckResult nondegenerate_at_infinity(const NewtonData& nd, const Tolerances& tol,
                                      std::uint64_t seed) {
  NumStatus status = NumStatus::exact;
  int checked = 0;
  std::optional<CheckResult> first_unknown;
  for (std::size_t fi = 0; fi < nd.newton.faces().size(); ++fi) {
    const FaceDescriptor& face = nd.newton.faces()[fi];
    if (face.dim < 0 || face.contains_origin) continue;
    CheckResult res = face_nondegenerate(nd.f, nd.newton, static_cast<int>(fi), tol, seed);
    ++checked;
    const std::string label = face_label(nd.newton, face);
    if (res.verdict == Verdict::fail) {
      res.detail = "face " + label + ": " + res.detail;
      return res;
    }
    if (res.verdict == Verdict::unknown && !first_unknown) {
      res.detail = "face " + label + ": " + res.detail;
      first_unknown = res;
    }
    status = combine(status, res.status);
  }
  if (first_unknown) {
    first_unknown->status = status;
    return *first_unknown;
  }
  return pass_result(status, "all " + std::to_string(checked) +
                                 " origin-free faces have torus-free face systems");
}

CheckResult isolated_singularities_over(const NewtonData& nd, const Scalar& b,
                                        const Tolerances& tol, std::uint64_t seed) {
  if (nd.atypical.empty())
    return pass_result(NumStatus::exact, "no atypical faces");
  NumStatus status = NumStatus::exact;
  std::optional<CheckResult> first_unknown;
  for (const FaceClassification& fc : nd.atypical) {
    const FaceRestriction r = restrict_to_face_torus(nd.f, nd.newton, fc.face_index);
    CheckResult res = restriction_fiber_isolated(r, b, tol, seed);
    const std::string label = face_label(nd.newton, nd.face_of(fc));
    if (res.verdict == Verdict::fail) {
      res.detail = "face " + label + ": " + res.detail;
      return res;
    }
    if (res.verdict == Verdict::unknown && !first_unknown) {
      res.detail = "face " + label + ": " + res.detail;
      first_unknown = res;
    }
    status = combine(status, res.status);
  }
  if (first_unknown) {
    first_unknown->status = status;
    return *first_unknown;
  }
  return pass_result(status, "every atypical fiber has isolated singular points");
}

AffineCriticalValues affine_critical_values(const SparsePoly& f, const Tolerances& tol,
                                            std::uint64_t seed) {
  AffineCriticalValues out;
  const int n = f.ambient_dim();
  std::vector<SparsePoly> grad;
  bool all_zero = true;
  for (int j = 0; j < n; ++j) {
    grad.push_back(f.partial_derivative(j));
    all_zero = all_zero && grad.back().is_zero();
  }
  if (all_zero) {  // constant polynomial: every point is critical
    out.values.push_back(Scalar::make_exact(f.constant_term()));
    return out;
  }

  NumStatus used = NumStatus::exact;

  auto univariate = [&](const SparsePoly& f1) {
    const UniPoly F = UniPoly::from_sparse(f1);
    const UniPoly Fp = F.derivative();
    if (Fp.degree() < 1) return;  // linear: no critical points
    std::vector<UniPoly> fc(F.degree() + 1), gc(Fp.degree() + 1);
    for (int k = 0; k <= F.degree(); ++k) fc[k] = UniPoly::constant(F.coeff(k));
    fc[0] = UniPoly({F.coeff(0), Rational(-1)});  // subtract the value variable
    for (int k = 0; k <= Fp.degree(); ++k) gc[k] = UniPoly::constant(Fp.coeff(k));
    UniPoly R = resultant_u(BiPoly(std::move(fc)), BiPoly(std::move(gc)));
    if (R.is_zero()) throw std::logic_error("vanishing critical-value resultant");
    R = squarefree_part(R);
    for (const Rational& c : rational_roots(R)) {
      out.values.push_back(Scalar::make_exact(c));
      R = divmod(R, UniPoly({-c, Rational(1)})).first;
    }
    if (R.degree() >= 1)  // the enumeration stays complete: these are all roots
      for (const Cpx& z : complex_roots(R, tol.cluster))
        out.values.push_back(Scalar::make_approx(z));
  };

  if (n == 1) {
    univariate(f);
  } else if (n == 2) {
    if (grad[0].is_zero() || grad[1].is_zero()) {
      // f depends on a single variable; critical values are its univariate ones
      univariate(one_var_from(f, grad[0].is_zero() ? 1 : 0));
    } else {
      const BiPoly px = bipoly_of(grad[0]), py = bipoly_of(grad[1]);
      const BiPoly h = gcd_bi(px, py);
      BiPoly a = px, b = py;
      if (!bipoly_constant(h)) {
        component_values(h, f, false, tol, out.values, used);
        a = exact_divide(px, h).value();
        b = exact_divide(py, h).value();
      }
      if (!bipoly_constant(a) && !bipoly_constant(b)) {
        const PairSolutions ps = solve_pair(a, b, false, tol);
        used = combine(used, ps.used);
        for (const auto& fam : ps.families) {
          const SparsePoly fslice = substitute_second(f, fam.v);
          values_at_roots(fam.du, fslice, false, tol, out.values, used);
        }
        for (const CPoint& p : ps.numeric)
          out.values.push_back(Scalar::make_approx(f.evaluate(std::vector<Cpx>{p.u, p.v})));
      }
    }
  } else if (n <= 4) {
    out.values = multistart_values(f, grad, false, tol, mix_seed(seed, 17));
    used = NumStatus::heuristic;
  } else {
    out.completeness = NumStatus::heuristic;
    return out;  // out of reach: empty heuristic list
  }
  out.values = merge_values(std::move(out.values), tol);
  out.completeness = used;
  return out;
}

}  // namespace nbif
