#include <newtonbif/euler.hpp>

#include <newtonbif/bipoly.hpp>
#include <newtonbif/errors.hpp>
#include <newtonbif/roots.hpp>

#include <algorithm>
#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>
#include <vector>

namespace nbif {

namespace {

using Cpx = std::complex<double>;

// number of distinct complex roots of a nonzero polynomial, exactly
int exact_root_count(const UniPoly& p) {
  const int d = squarefree_part(p).degree();
  return d < 0 ? 0 : d;
}

// positions of the roots of a squarefree polynomial: rational ones exactly,
// the rest numerically
void root_positions(const UniPoly& p, const Tolerances& tol, std::vector<Scalar>& out) {
  if (p.degree() < 1) return;
  UniPoly rem = p;
  for (const Rational& a : rational_roots(p)) {
    out.push_back(Scalar::make_exact(a));
    rem = divmod(rem, UniPoly({-a, Rational(1)})).first;
  }
  if (rem.degree() >= 1)
    for (const Cpx& z : complex_roots(rem, tol.cluster)) out.push_back(Scalar::make_approx(z));
}

// drop leading coefficients that are negligible against the largest one
void trim_leading(std::vector<Cpx>& c) {
  double mx = 0.0;
  for (const Cpx& z : c) mx = std::max(mx, std::abs(z));
  if (mx <= 0.0) {
    c.clear();
    return;
  }
  while (!c.empty() && std::abs(c.back()) <= 1e-10 * mx) c.pop_back();
}

// cluster the points under a relative merge tolerance and return each
// cluster's centroid: for a numerically split multiple root the mean is far
// closer to the true position than any single member
std::vector<Cpx> cluster_centroids(std::vector<Cpx> pts, double tol) {
  std::sort(pts.begin(), pts.end(), [](const Cpx& a, const Cpx& b) {
    if (a.real() != b.real()) return a.real() < b.real();
    return a.imag() < b.imag();
  });
  std::vector<std::pair<Cpx, int>> acc;  // running (sum, count) per cluster
  for (const Cpx& z : pts) {
    bool placed = false;
    for (auto& [sum, cnt] : acc) {
      const Cpx mean = sum / double(cnt);
      if (std::abs(z - mean) <= tol * std::max({1.0, std::abs(z), std::abs(mean)})) {
        sum += z;
        ++cnt;
        placed = true;
        break;
      }
    }
    if (!placed) acc.push_back({z, 1});
  }
  std::vector<Cpx> out;
  for (const auto& [sum, cnt] : acc) out.push_back(sum / double(cnt));
  return out;
}

// distinct y-roots of the numeric coefficient list of a fiber polynomial;
// merge_tol should be coarse enough to absorb the error in the position the
// coefficients were sampled at
int numeric_fiber_count(std::vector<Cpx> fib, double merge_tol) {
  trim_leading(fib);
  if (fib.size() <= 1) return 0;
  return count_distinct(complex_roots(std::move(fib)), merge_tol);
}

// --- exact path (rational c) -----------------------------------------------

FiberTopology chi_exact(const SparsePoly& f, const Rational& c, const Tolerances& tol) {
  FiberTopology out;
  out.value = Scalar::make_exact(c);

  SparsePoly shift(2);
  shift.add_term(Exponent(2, 0), c);
  const BiPoly h = squarefree_bi(BiPoly::from_sparse(f - shift).transpose());  // u = y, v = x

  if (h.degree_u() == 0) {
    // no y left: the fiber is a union of vertical lines
    const UniPoly vert = h.coeff(0);
    out.chi = std::max(0, vert.degree());
    root_positions(vert, tol, out.vertical_lines);
    return out;
  }

  const UniPoly cont = content_u(h);  // squarefree: one root per vertical line
  const BiPoly h1 = exact_divide(h, BiPoly({cont})).value();
  const int v_count = std::max(0, cont.degree());
  const int r_gen = h1.degree_u();

  // exceptional x: zeros of the leading coefficient or the y-discriminant
  // that do not carry a vertical line
  const UniPoly disc = h1.leading_u() * resultant_u(h1, h1.derivative_u());
  if (disc.is_zero()) throw std::logic_error("vanishing discriminant of a squarefree curve");
  const UniPoly ws = squarefree_part(disc);
  const UniPoly rest = divmod(ws, gcd(ws, cont)).first;
  const int s_count = std::max(0, rest.degree());

  int covered = 0;
  UniPoly rem = rest;
  for (const Rational& a : rational_roots(rest)) {
    const int r = exact_root_count(h1.at_v(a));
    out.exceptional_points.push_back({Scalar::make_exact(a), r});
    covered += r;
    rem = divmod(rem, UniPoly({-a, Rational(1)})).first;
  }
  if (rem.degree() >= 1) {
    out.status = NumStatus::numeric;
    const BiPoly ht = h1.transpose();  // u = x, v = y
    for (const Cpx& a : complex_roots(rem, tol.cluster)) {
      const int r = numeric_fiber_count(at_u_numeric(ht, a), 100 * tol.root_count);
      out.exceptional_points.push_back({Scalar::make_approx(a), r});
      covered += r;
    }
  }

  root_positions(cont, tol, out.vertical_lines);
  out.generic_root_count = r_gen;
  out.chi = v_count + r_gen * (1 - s_count - v_count) + covered;
  return out;
}

// --- numeric path (non-rational c) ------------------------------------------

FiberTopology chi_numeric(const SparsePoly& f, Cpx c, const Tolerances& tol) {
  FiberTopology out;
  out.value = Scalar::make_approx(c);
  out.status = NumStatus::numeric;
  const double merge = 100 * tol.root_count;

  const BiPoly B = BiPoly::from_sparse(f).transpose();  // u = y, v = x
  const int m = B.degree_u();

  if (m == 0) {
    // f depends on x alone: the fiber is a union of vertical lines
    const UniPoly q = B.coeff(0);
    std::vector<Cpx> qc(q.degree() + 1);
    for (int k = 0; k <= q.degree(); ++k) qc[k] = Cpx(to_double(q.coeff(k)), 0.0);
    qc[0] -= c;
    const std::vector<Cpx> roots = complex_roots(std::move(qc));
    count_distinct(roots, tol.root_count);  // refuse ambiguous clusterings
    for (const Cpx& z : cluster_centroids(roots, tol.root_count))
      out.vertical_lines.push_back(Scalar::make_approx(z));
    out.chi = static_cast<int>(out.vertical_lines.size());
    return out;
  }

  // vertical lines: common zeros of every positive-degree y-coefficient at
  // which the constant coefficient matches c
  UniPoly g;
  for (int k = 1; k <= m; ++k) g = gcd(g, B.coeff(k));
  std::vector<Cpx> vpos;
  if (g.degree() >= 1) {
    const UniPoly a0 = B.coeff(0);
    for (const Cpx& z : complex_roots(g, tol.cluster)) {
      const Cpx val = a0.evaluate(z);
      if (std::abs(val - c) <= tol.residual * std::max({1.0, std::abs(val), std::abs(c)}))
        vpos.push_back(z);
    }
  }

  // The discriminant surface W(x, s) = lc(x) * Res_y(f - s, f_y) is exact in
  // both variables: its s-degree is at most m, so m+1 exact resultants at
  // rational s-samples determine it by interpolation.  Its exact squarefree
  // part keeps the numeric roots of the specialization s = c well
  // conditioned (a collision of two branch positions at a special c splits
  // only at sqrt(machine epsilon), which the centroid absorbs).
  const UniPoly lc = B.leading_u();
  std::vector<std::pair<Rational, UniPoly>> rsamples;
  int dmax = 0;
  for (int j = 0; j <= m; ++j) {
    const int mag = (j + 1) / 2;
    const Rational sj(j % 2 ? mag : -mag);
    SparsePoly shift(2);
    shift.add_term(Exponent(2, 0), sj);
    const BiPoly bj = BiPoly::from_sparse(f - shift).transpose();  // u = y, v = x
    UniPoly rj = resultant_u(bj, bj.derivative_u());
    dmax = std::max(dmax, rj.degree());
    rsamples.push_back({sj, std::move(rj)});
  }
  std::vector<UniPoly> rcoeffs(dmax + 1);  // x^k coefficient of Res as a poly in s
  for (int k = 0; k <= dmax; ++k) {
    std::vector<std::pair<Rational, Rational>> pts;
    for (const auto& [sj, rj] : rsamples) pts.push_back({sj, rj.coeff(k)});
    rcoeffs[k] = interpolate(pts);
  }
  std::vector<UniPoly> lcu(lc.degree() + 1);
  for (int k = 0; k <= lc.degree(); ++k) lcu[k] = UniPoly::constant(lc.coeff(k));
  const BiPoly wxs = squarefree_bi(BiPoly(std::move(rcoeffs)) * BiPoly(std::move(lcu)));
  const BiPoly wt = wxs.transpose();  // u = s, v = x
  std::vector<Cpx> wc = at_u_numeric(wt, c);

  // Res_y(f - c, f_y) identically zero in x means the fiber carries a
  // multiple curve component and the covering count would be wrong
  double scale = 0.0;
  for (int k = 0; k <= wt.degree_u(); ++k) {
    double n1 = 0.0;
    const UniPoly& ck = wt.coeff(k);
    for (int l = 0; l <= ck.degree(); ++l) n1 += std::abs(to_double(ck.coeff(l)));
    scale += n1 * std::pow(std::max(1.0, std::abs(c)), k);
  }
  double mx = 0.0;
  for (const Cpx& z : wc) mx = std::max(mx, std::abs(z));
  if (mx <= 1e-9 * std::max(scale, 1e-300))
    throw PrecisionError("the value sits numerically on a multiple-component locus");

  trim_leading(wc);
  std::vector<Cpx> spos;
  if (wc.size() > 1)
    for (const Cpx& z : complex_roots(std::move(wc))) spos.push_back(z);

  // one representative per exceptional position, vertical lines excluded
  std::vector<Cpx> reps;
  for (const Cpx& z : cluster_centroids(spos, tol.root_count)) {
    bool vertical = false;
    for (const Cpx& v : vpos)
      if (std::abs(z - v) <= 10 * tol.root_count * std::max({1.0, std::abs(z), std::abs(v)}))
        vertical = true;
    if (!vertical) reps.push_back(z);
  }

  int covered = 0;
  const BiPoly bt = B.transpose();  // u = x, v = y
  for (const Cpx& a : reps) {
    std::vector<Cpx> fib = at_u_numeric(bt, a);
    fib[0] -= c;
    const int r = numeric_fiber_count(std::move(fib), merge);
    out.exceptional_points.push_back({Scalar::make_approx(a), r});
    covered += r;
  }
  for (const Cpx& v : vpos) out.vertical_lines.push_back(Scalar::make_approx(v));
  out.generic_root_count = m;
  out.chi = static_cast<int>(vpos.size()) +
            m * (1 - static_cast<int>(reps.size()) - static_cast<int>(vpos.size())) + covered;
  return out;
}

}  // namespace

FiberTopology chi_affine_curve_fiber(const SparsePoly& f, const Scalar& c,
                                     const Tolerances& tol) {
  if (f.ambient_dim() != 2 || f.mode() != PolyMode::affine)
    throw std::invalid_argument("the fiber oracle handles affine polynomials in two variables");
  bool constant = true;
  for (const auto& [e, a] : f.terms())
    for (const std::int64_t k : e)
      if (k != 0) constant = false;
  if (constant) throw std::domain_error("a constant map has no curve fibers");
  if (c.is_exact()) return chi_exact(f, *c.exact, tol);
  return chi_numeric(f, c.approx, tol);
}

int euler_jump(const SparsePoly& f, const Scalar& b, const std::vector<Scalar>& candidates,
               const Tolerances& tol) {
  if (f.ambient_dim() != 2)
    throw std::invalid_argument("the jump is only computed for two variables");

  // distance from b to the nearest other candidate value
  double gap = 1.0;
  for (const Scalar& k : candidates) {
    const double d = std::abs(k.approx - b.approx);
    if (d <= 10 * tol.cluster * std::max({1.0, std::abs(k.approx), std::abs(b.approx)}))
      continue;  // b itself (or a duplicate of it)
    gap = std::min(gap, d);
  }
  if (gap < 1e-9) throw PrecisionError("candidate values too close to separate");
  const int e = std::max(3, static_cast<int>(std::ceil(-std::log10(gap))) + 3);
  Rational eps(1);
  for (int i = 0; i < e; ++i) eps = eps / 10;

  const auto right_of = [&](const Rational& step) {
    return b.is_exact() ? Scalar::make_exact(*b.exact + step)
                        : Scalar::make_approx(b.approx + Cpx(to_double(step), 0.0));
  };
  const FiberTopology at_b = chi_affine_curve_fiber(f, b, tol);
  const FiberTopology near1 = chi_affine_curve_fiber(f, right_of(eps), tol);
  const FiberTopology near2 = chi_affine_curve_fiber(f, right_of(eps / 2), tol);
  if (near1.chi != near2.chi)
    throw PrecisionError("no stable Euler characteristic to the right of the value");
  return at_b.chi - near1.chi;  // (-1)^(n-1) (chi(b+eps) - chi(b)) at n = 2
}

Rational pick_generic_value(const std::vector<Scalar>& avoid) {
  for (int j = 0; j < 400; ++j) {
    const int mag = j / 2 + 1;
    const Rational c = Rational(j % 2 ? -(2 * mag - 1) : 2 * mag - 1) / 7;
    bool ok = true;
    for (const Scalar& k : avoid)
      if (std::abs(Cpx(to_double(c), 0.0) - k.approx) < 0.2) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  throw std::logic_error("no generic value found");
}

}  // namespace nbif
