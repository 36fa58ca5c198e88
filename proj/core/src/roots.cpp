#include <newtonbif/roots.hpp>

#include <newtonbif/errors.hpp>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace nbif {

namespace {

// all positive divisors; when the trial-division budget runs out the
// unfactored remainder is kept whole, so the list is a (sound) subset
std::vector<Integer> divisors(Integer n) {
  std::vector<std::pair<Integer, int>> fac;
  Integer m = abs(n);
  long budget = 2'000'000;
  for (Integer d(2); budget > 0 && d * d <= m; ++d, --budget) {
    if (m % d == 0) {
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      fac.emplace_back(d, e);
    }
  }
  if (m > 1) fac.emplace_back(m, 1);
  std::vector<Integer> out{Integer(1)};
  for (const auto& [pr, e] : fac) {
    const std::size_t base = out.size();
    Integer pw(1);
    for (int i = 1; i <= e; ++i) {
      pw *= pr;
      for (std::size_t j = 0; j < base && out.size() < 4096; ++j) out.push_back(out[j] * pw);
    }
  }
  return out;
}

// diagonal similarity scaling by powers of two (Parlett-Reinsch)
template <typename Mat>
void balance_in_place(Mat& A) {
  const double radix = 2.0;
  bool done = false;
  while (!done) {
    done = true;
    for (int i = 0; i < A.rows(); ++i) {
      double c = 0.0, r = 0.0;
      for (int j = 0; j < A.cols(); ++j) {
        if (j == i) continue;
        c += std::abs(A(j, i));
        r += std::abs(A(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double g = r / radix, f = 1.0;
      while (c < g) {
        f *= radix;
        c *= radix * radix;
      }
      g = r * radix;
      while (c > g) {
        f /= radix;
        c /= radix * radix;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        A.row(i) *= 1.0 / f;
        A.col(i) *= f;
      }
    }
  }
}

bool root_less(const std::complex<double>& a, const std::complex<double>& b) {
  if (a.real() != b.real()) return a.real() < b.real();
  return a.imag() < b.imag();
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("rational roots of the zero polynomial");
  UniPoly q = squarefree_part(p);
  std::set<Rational> found;
  if (q.valuation() > 0) {
    found.insert(Rational(0));
    q = q.stripped();
  }
  if (q.degree() == 1) {
    found.insert(-q.coeff(0) / q.coeff(1));
  } else if (q.degree() >= 2) {
    // integer multiple and its content
    Integer den(1);
    for (const auto& c : q.coeffs()) den = lcm(den, denominator(c));
    std::vector<Integer> a(q.degree() + 1);
    Integer cont(0);
    for (int k = 0; k <= q.degree(); ++k) {
      a[k] = numerator(q.coeff(k)) * (den / denominator(q.coeff(k)));
      cont = gcd(cont, a[k]);
    }
    for (auto& v : a) v /= cont;
    const auto nums = divisors(a.front());
    const auto dens = divisors(a.back());
    for (const auto& nu : nums)
      for (const auto& de : dens) {
        Rational cand = Rational(nu) / Rational(de);
        if (q.evaluate(cand) == 0) found.insert(cand);
        if (q.evaluate(-cand) == 0) found.insert(-cand);
      }
  }
  return {found.begin(), found.end()};
}

std::vector<std::complex<double>> complex_roots(const UniPoly& p, double cluster_tol) {
  if (p.is_zero()) throw std::invalid_argument("roots of the zero polynomial");
  const UniPoly sq = squarefree_part(p);
  const int d = sq.degree();
  if (d == 0) return {};
  Eigen::MatrixXd C = Eigen::MatrixXd::Zero(d, d);
  const Rational lead = sq.leading();
  for (int i = 0; i < d; ++i) {
    const double m = to_double(sq.coeff(i) / lead);
    if (!std::isfinite(m)) throw PrecisionError("coefficient overflows double precision");
    C(i, d - 1) = -m;
  }
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  balance_in_place(C);
  Eigen::EigenSolver<Eigen::MatrixXd> es(C);
  if (es.info() != Eigen::Success) throw PrecisionError("eigenvalue iteration failed");
  std::vector<std::complex<double>> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), root_less);
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      const double scale = std::max({1.0, std::abs(roots[i]), std::abs(roots[j])});
      if (std::abs(roots[i] - roots[j]) < 10.0 * cluster_tol * scale)
        throw PrecisionError("two roots too close to separate reliably");
    }
  return roots;
}

std::vector<std::complex<double>> complex_roots(std::vector<std::complex<double>> coeffs) {
  while (!coeffs.empty() && coeffs.back() == std::complex<double>(0.0, 0.0)) coeffs.pop_back();
  if (coeffs.empty()) throw std::invalid_argument("roots of the zero polynomial");
  double maxc = 0.0;
  for (const auto& c : coeffs) maxc = std::max(maxc, std::abs(c));
  if (std::abs(coeffs.back()) < 1e-12 * maxc)
    throw PrecisionError("leading coefficient numerically negligible");
  const int d = static_cast<int>(coeffs.size()) - 1;
  if (d == 0) return {};
  Eigen::MatrixXcd C = Eigen::MatrixXcd::Zero(d, d);
  for (int i = 0; i < d; ++i) C(i, d - 1) = -coeffs[i] / coeffs.back();
  for (int i = 1; i < d; ++i) C(i, i - 1) = 1.0;
  balance_in_place(C);
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(C);
  if (es.info() != Eigen::Success) throw PrecisionError("eigenvalue iteration failed");
  std::vector<std::complex<double>> roots(d);
  for (int i = 0; i < d; ++i) roots[i] = es.eigenvalues()(i);
  std::sort(roots.begin(), roots.end(), root_less);
  return roots;
}

int count_distinct(const std::vector<std::complex<double>>& pts, double merge_tol) {
  const int n = static_cast<int>(pts.size());
  if (n == 0) return 0;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      const double scale = std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) <= merge_tol * scale) parent[find(i)] = find(j);
    }
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      if (find(i) == find(j)) continue;
      const double scale = std::max({1.0, std::abs(pts[i]), std::abs(pts[j])});
      if (std::abs(pts[i] - pts[j]) < 10.0 * merge_tol * scale)
        throw PrecisionError("distinct-value count is tolerance-sensitive");
    }
  int clusters = 0;
  for (int i = 0; i < n; ++i)
    if (find(i) == i) ++clusters;
  return clusters;
}

}  // namespace nbif
