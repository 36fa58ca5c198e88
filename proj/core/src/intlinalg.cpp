#include <newtonbif/intlinalg.hpp>

#include <limits>
#include <stdexcept>

namespace nbif {

ZVec zvec_of(const std::vector<std::int64_t>& v) {
  ZVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[i];
  return out;
}

std::vector<std::int64_t> int64_of(const ZVec& v) {
  std::vector<std::int64_t> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] > std::numeric_limits<std::int64_t>::max() ||
        v[i] < std::numeric_limits<std::int64_t>::min())
      throw std::overflow_error("integer vector entry does not fit in 64 bits");
    out[i] = v[i].convert_to<std::int64_t>();
  }
  return out;
}

Integer dot(const ZVec& a, const ZVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: size mismatch");
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

void make_primitive(ZVec& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g > 1)
    for (auto& x : v) x /= g;
}

int rank(ZMat a) {
  if (a.empty()) return 0;
  const std::size_t m = a.size(), n = a[0].size();
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && a[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[row], a[piv]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][col] == 0) continue;
      // integer row combination, no division needed for rank
      Integer f1 = a[row][col], f2 = a[i][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] = a[i][j] * f1 - a[row][j] * f2;
    }
    ++row;
  }
  return static_cast<int>(row);
}

Integer det(ZMat a) {
  const std::size_t n = a.size();
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("det: matrix not square");
  if (n == 0) return 1;
  // Bareiss fraction-free elimination
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = num / prev;  // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign > 0 ? a[n - 1][n - 1] : -a[n - 1][n - 1];
}

ZMat column_transform_to_echelon(const ZMat& a_in) {
  const std::size_t m = a_in.size();
  const std::size_t n = m == 0 ? 0 : a_in[0].size();
  ZMat a = a_in;
  // U starts as identity; we apply every column operation to both
  ZMat u(n, ZVec(n, 0));
  for (std::size_t i = 0; i < n; ++i) u[i][i] = 1;

  auto col_addmul = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < m; ++i) a[i][dst] += f * a[i][src];
    for (std::size_t i = 0; i < n; ++i) u[i][dst] += f * u[i][src];
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    for (std::size_t i = 0; i < m; ++i) std::swap(a[i][c1], a[i][c2]);
    for (std::size_t i = 0; i < n; ++i) std::swap(u[i][c1], u[i][c2]);
  };

  std::size_t lead = 0;
  for (std::size_t row = 0; row < m && lead < n; ++row) {
    // gcd-chase the row to a single nonzero entry at column `lead`
    bool any = false;
    for (std::size_t c = lead; c < n; ++c)
      if (a[row][c] != 0) { any = true; break; }
    if (!any) continue;
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = lead; c < n; ++c)
        if (a[row][c] != 0 && (best == n || abs(a[row][c]) < abs(a[row][best]))) best = c;
      col_swap(lead, best);
      bool reduced = true;
      for (std::size_t c = lead + 1; c < n; ++c) {
        if (a[row][c] == 0) continue;
        Integer q = a[row][c] / a[row][lead];
        col_addmul(c, lead, -q);
        if (a[row][c] != 0) reduced = false;
      }
      if (reduced) break;
    }
    ++lead;
  }
  return u;
}

ZMat integer_kernel_basis(const ZMat& a, int n_cols) {
  const std::size_t n = static_cast<std::size_t>(n_cols);
  if (a.empty()) {
    ZMat id(n, ZVec(n, 0));
    for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  }
  for (const auto& r : a)
    if (r.size() != n) throw std::invalid_argument("integer_kernel_basis: ragged matrix");
  ZMat u = column_transform_to_echelon(a);
  ZMat basis;
  for (std::size_t c = 0; c < n; ++c) {
    // column c of A*U is zero iff U's column c is a kernel vector
    bool zero = true;
    for (const auto& row : a) {
      Integer s = 0;
      for (std::size_t j = 0; j < n; ++j) s += row[j] * u[j][c];
      if (s != 0) { zero = false; break; }
    }
    if (!zero) continue;
    ZVec k(n);
    for (std::size_t j = 0; j < n; ++j) k[j] = u[j][c];
    make_primitive(k);
    basis.push_back(std::move(k));
  }
  return basis;
}

ZMat saturate_row_span(const ZMat& rows, int n_cols) {
  ZMat ker = integer_kernel_basis(rows, n_cols);
  return integer_kernel_basis(ker, n_cols);
}

std::optional<std::vector<Rational>> solve_rational(const ZMat& a, const std::vector<Rational>& b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw std::invalid_argument("solve_rational: size mismatch");
  const std::size_t n = m == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rational>> w(m, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) w[i][j] = Rational(a[i][j]);
    w[i][n] = b[i];
  }
  std::vector<int> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && w[piv][col] == 0) ++piv;
    if (piv == m) continue;
    std::swap(w[row], w[piv]);
    Rational inv = w[row][col];
    for (std::size_t j = col; j <= n; ++j) w[row][j] /= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || w[i][col] == 0) continue;
      Rational f = w[i][col];
      for (std::size_t j = col; j <= n; ++j) w[i][j] -= f * w[row][j];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++row;
  }
  for (std::size_t i = row; i < m; ++i)
    if (w[i][n] != 0) return std::nullopt;
  std::vector<Rational> x(n, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) x[pivot_col[r]] = w[r][n];
  return x;
}

std::optional<ZVec> integer_coordinates(const ZMat& basis, const ZVec& v) {
  const std::size_t d = basis.size();
  if (d == 0) {
    for (const auto& x : v)
      if (x != 0) return std::nullopt;
    return ZVec{};
  }
  const std::size_t n = basis[0].size();
  if (v.size() != n) throw std::invalid_argument("integer_coordinates: size mismatch");
  // solve c * basis = v, i.e. basis^T c = v
  ZMat bt(n, ZVec(d));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < d; ++k) bt[i][k] = basis[k][i];
  std::vector<Rational> rhs(n);
  for (std::size_t i = 0; i < n; ++i) rhs[i] = Rational(v[i]);
  auto sol = solve_rational(bt, rhs);
  if (!sol) return std::nullopt;
  ZVec c(d);
  for (std::size_t k = 0; k < d; ++k) {
    if (denominator((*sol)[k]) != 1) return std::nullopt;
    c[k] = numerator((*sol)[k]);
  }
  return c;
}

}  // namespace nbif
