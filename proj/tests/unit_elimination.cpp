#include <doctest.h>

#include <newtonbif/bipoly.hpp>
#include <newtonbif/errors.hpp>
#include <newtonbif/intlinalg.hpp>
#include <newtonbif/roots.hpp>
#include <newtonbif/unipoly.hpp>

#include <complex>
#include <random>

using namespace nbif;

namespace {

UniPoly up(std::vector<long> c) {
  std::vector<Rational> q(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) q[i] = Rational(c[i]);
  return UniPoly(std::move(q));
}

UniPoly random_unipoly(std::mt19937& rng, int max_deg, bool allow_zero = false) {
  std::uniform_int_distribution<int> degd(0, max_deg), cd(-5, 5);
  if (allow_zero && degd(rng) == 0 && cd(rng) > 2) return UniPoly();
  const int d = degd(rng);
  std::vector<Rational> c(d + 1);
  for (int k = 0; k <= d; ++k) c[k] = Rational(cd(rng));
  int lead = cd(rng);
  if (lead == 0) lead = 1;
  c[d] = Rational(lead);
  return UniPoly(std::move(c));
}

BiPoly random_bipoly(std::mt19937& rng, int max_deg) {
  std::uniform_int_distribution<int> degd(0, max_deg);
  const int du = degd(rng);
  std::vector<UniPoly> c(du + 1);
  for (int k = 0; k <= du; ++k) c[k] = random_unipoly(rng, max_deg, true);
  return BiPoly(std::move(c));
}

// independent oracle: determinant of the Sylvester matrix (integer entries)
Rational sylvester_resultant(const UniPoly& a, const UniPoly& b) {
  const int m = a.degree(), n = b.degree();
  REQUIRE(m >= 1);
  REQUIRE(n >= 1);
  ZMat s(m + n, ZVec(m + n, Integer(0)));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k <= m; ++k) s[i][i + k] = numerator(a.coeff(m - k));
  for (int j = 0; j < m; ++j)
    for (int k = 0; k <= n; ++k) s[n + j][j + k] = numerator(b.coeff(n - k));
  return Rational(det(s));
}

SparsePoly sp2(const std::string& text) { return SparsePoly::parse(text, 2); }

}  // namespace

TEST_CASE("univariate construction and normalization") {
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly().is_zero());
  CHECK(UniPoly({Rational(1), Rational(2), Rational(0)}).degree() == 1);
  CHECK(UniPoly::constant(Rational(0)).is_zero());
  CHECK(UniPoly::constant(Rational(3)).degree() == 0);
  CHECK(UniPoly::variable().degree() == 1);
  const UniPoly p = up({1, 0, 3});
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(2) == 3);
  CHECK(p.coeff(5) == 0);
  CHECK(p.leading() == 3);

  const UniPoly q = UniPoly::from_sparse(SparsePoly::parse("1 + 2*x1 + x1^3", 1));
  CHECK(q.degree() == 3);
  CHECK(q.coeff(1) == 2);
  CHECK_THROWS_AS(
      UniPoly::from_sparse(SparsePoly::parse("x1^-1", 1, PolyMode::laurent)),
      std::invalid_argument);
}

TEST_CASE("univariate arithmetic") {
  CHECK(up({1, 1}) * up({-1, 1}) == up({-1, 0, 1}));
  CHECK(up({1, 2}).scaled(Rational(3)) == up({3, 6}));
  CHECK(up({1, 2}).shifted(2) == up({0, 0, 1, 2}));
  CHECK(up({0, 2, 0, 1}).derivative() == up({2, 0, 3}));
  CHECK(up({4, 2}).monic() == UniPoly({Rational(2), Rational(1)}));
  CHECK(up({0, 0, 0, 1, 0, 1}).valuation() == 3);
  CHECK(up({0, 0, 0, 1, 0, 1}).stripped() == up({1, 0, 1}));
  CHECK(UniPoly().valuation() == 0);
  CHECK(up({1, 1, 1}).evaluate(Rational(1, 2)) == Rational(7, 4));
  const std::complex<double> v = up({1, 0, 1}).evaluate(std::complex<double>(0.0, 1.0));
  CHECK(std::abs(v) < 1e-14);
}

TEST_CASE("euclidean division") {
  const auto [q, r] = divmod(up({1, -2, 0, 1}), up({-1, 1}));
  CHECK(q == up({-1, 1, 1}));
  CHECK(r.is_zero());
  CHECK_THROWS_AS(divmod(up({1}), UniPoly()), std::invalid_argument);

  std::mt19937 rng(7101);
  for (int it = 0; it < 200; ++it) {
    const UniPoly a = random_unipoly(rng, 6, true);
    const UniPoly b = random_unipoly(rng, 4);
    const auto [qq, rr] = divmod(a, b);
    CHECK(qq * b + rr == a);
    CHECK(rr.degree() < b.degree());
  }
}

TEST_CASE("gcds are monic and divide both arguments") {
  const UniPoly a = up({-1, 1}) * up({1, 0, 1});
  const UniPoly b = up({-1, 1}) * up({3, 1});
  CHECK(gcd(a, b) == up({-1, 1}));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
  CHECK(gcd(up({4, 2}), UniPoly()) == up({2, 1}));

  std::mt19937 rng(4242);
  for (int it = 0; it < 150; ++it) {
    const UniPoly g = random_unipoly(rng, 3);
    const UniPoly x = random_unipoly(rng, 3);
    const UniPoly y = random_unipoly(rng, 3);
    const UniPoly h = gcd(g * x, g * y);
    CHECK(divmod(g * x, h).second.is_zero());
    CHECK(divmod(g * y, h).second.is_zero());
    CHECK(divmod(h, g.monic()).second.is_zero());
    if (!h.is_zero()) CHECK(h.leading() == 1);
  }
}

TEST_CASE("resultants match the sylvester determinant") {
  CHECK(resultant(up({-1, 0, 1}), up({-4, 0, 1})) == 9);
  CHECK(resultant(UniPoly(), up({1, 1})) == 0);
  CHECK(resultant(up({5}), up({1, 2, 3})) == 25);
  CHECK(resultant(up({3}), up({7})) == 1);
  const UniPoly dbl = up({-1, 1}) * up({-1, 1}) * up({2, 1});
  CHECK(resultant(dbl, dbl.derivative()) == 0);

  std::mt19937 rng(90210);
  for (int it = 0; it < 120; ++it) {
    const UniPoly a = random_unipoly(rng, 5);
    const UniPoly b = random_unipoly(rng, 5);
    if (a.degree() < 1 || b.degree() < 1) continue;
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
  for (int it = 0; it < 60; ++it) {
    const UniPoly a = random_unipoly(rng, 3);
    const UniPoly b = random_unipoly(rng, 3);
    const UniPoly c = random_unipoly(rng, 3);
    CHECK(resultant(a * b, c) == resultant(a, c) * resultant(b, c));
  }
}

TEST_CASE("squarefree part keeps exactly the distinct roots") {
  const UniPoly dbl = up({-1, 1}) * up({-1, 1}) * up({2, 1});
  CHECK(squarefree_part(dbl) == up({-2, 1, 1}));
  CHECK(squarefree_part(up({-4, 0, 1})) == up({-4, 0, 1}));

  std::mt19937 rng(555);
  std::uniform_int_distribution<int> rootd(-4, 4), multd(1, 3);
  for (int it = 0; it < 80; ++it) {
    std::vector<int> roots{rootd(rng)};
    while (roots.size() < 3) {
      int r = rootd(rng);
      bool fresh = true;
      for (int s : roots) fresh = fresh && s != r;
      if (fresh) roots.push_back(r);
    }
    UniPoly full = UniPoly::constant(Rational(1));
    UniPoly distinct = UniPoly::constant(Rational(1));
    for (int r : roots) {
      const UniPoly lin = up({-r, 1});
      distinct = distinct * lin;
      for (int e = multd(rng); e > 0; --e) full = full * lin;
    }
    CHECK(squarefree_part(full) == distinct);
  }
}

TEST_CASE("bivariate construction round trip") {
  const SparsePoly s = sp2("x1^2*x2 + 3*x1 + x2^3 + 1");
  const BiPoly p = BiPoly::from_sparse(s);
  CHECK(p.degree_u() == 2);
  CHECK(p.degree_v() == 3);
  CHECK(p.coeff(0) == up({1, 0, 0, 1}));
  CHECK(p.coeff(1) == up({3}));
  CHECK(p.coeff(2) == up({0, 1}));
  CHECK(p.coeff(7).is_zero());
  CHECK(p.to_sparse().to_string() == s.to_string());
  CHECK(p.transpose().to_sparse().to_string() ==
        sp2("x1*x2^2 + 3*x2 + x1^3 + 1").to_string());
  CHECK(BiPoly().is_zero());
  CHECK_THROWS_AS(
      BiPoly::from_sparse(SparsePoly::parse("x1^-1", 2, PolyMode::laurent)),
      std::invalid_argument);
  CHECK_THROWS_AS(BiPoly::from_sparse(SparsePoly::parse("x1", 3)), std::invalid_argument);
}

TEST_CASE("bivariate slices and evaluation agree with the sparse form") {
  const BiPoly p = BiPoly::from_sparse(sp2("x1^2*x2 + 3*x1 + x2^3 + 1"));
  CHECK(p.at_v(Rational(2)) == up({9, 3, 2}));
  CHECK(p.at_u(Rational(1)) == up({4, 1, 0, 1}));
  CHECK(p.evaluate(Rational(2), Rational(3)) == Rational(12 + 6 + 27 + 1));

  const auto cs = at_u_numeric(p, std::complex<double>(1.0, 0.0));
  REQUIRE(cs.size() == 4);
  CHECK(std::abs(cs[0] - 4.0) < 1e-12);
  CHECK(std::abs(cs[1] - 1.0) < 1e-12);
  CHECK(std::abs(cs[2]) < 1e-12);
  CHECK(std::abs(cs[3] - 1.0) < 1e-12);

  std::mt19937 rng(31007);
  std::uniform_int_distribution<int> cd(-4, 4), ed(0, 4), tn(1, 5);
  for (int it = 0; it < 100; ++it) {
    SparsePoly a(2), b(2);
    for (int t = tn(rng); t > 0; --t) a.add_term({ed(rng), ed(rng)}, Rational(cd(rng)));
    for (int t = tn(rng); t > 0; --t) b.add_term({ed(rng), ed(rng)}, Rational(cd(rng)));
    const BiPoly A = BiPoly::from_sparse(a), B = BiPoly::from_sparse(b);
    CHECK((A + B).to_sparse().to_string() == (a + b).to_string());
    CHECK((A - B).to_sparse().to_string() == (a - b).to_string());
    CHECK((A * B).to_sparse().to_string() == (a * b).to_string());
    CHECK(A.derivative_u().to_sparse().to_string() == a.partial_derivative(0).to_string());
    CHECK(A.derivative_v().to_sparse().to_string() == a.partial_derivative(1).to_string());
    const Rational u0 = Rational(cd(rng)) / Rational(3);
    const Rational v0 = Rational(cd(rng)) / Rational(2);
    CHECK(A.evaluate(u0, v0) == a.evaluate({u0, v0}));
    CHECK(A.transpose().evaluate(v0, u0) == A.evaluate(u0, v0));
  }
}

TEST_CASE("content and primitive part") {
  const BiPoly p = BiPoly::from_sparse(sp2("x1^2*x2^2 + x1^2*x2 + x1*x2 + x1"));
  CHECK(content_u(p) == up({1, 1}));
  CHECK(primitive_part_u(p) == BiPoly::from_sparse(sp2("x1^2*x2 + x1")));
  CHECK(mul_unipoly(primitive_part_u(p), content_u(p)) == p);
  CHECK(content_u(BiPoly()).is_zero());
  CHECK(content_u(BiPoly::from_sparse(sp2("2*x1 + 2"))) == up({1}));
}

TEST_CASE("exact division detects divisibility") {
  std::mt19937 rng(60601);
  for (int it = 0; it < 120; ++it) {
    const BiPoly a = random_bipoly(rng, 3);
    const BiPoly b = random_bipoly(rng, 3);
    if (b.is_zero()) {
      CHECK(!exact_divide(a, b).has_value());
      continue;
    }
    const auto q = exact_divide(a * b, b);
    REQUIRE(q.has_value());
    CHECK(*q == a);
    if (b.degree_u() + b.degree_v() >= 1) {
      const BiPoly shifted = a * b + BiPoly({UniPoly::constant(Rational(1))});
      CHECK(!exact_divide(shifted, b).has_value());
    }
  }
}

TEST_CASE("pseudo remainder reduces the degree") {
  std::mt19937 rng(777);
  for (int it = 0; it < 120; ++it) {
    const BiPoly a = random_bipoly(rng, 3);
    BiPoly b = random_bipoly(rng, 2);
    if (b.is_zero()) b = BiPoly({UniPoly::variable()});
    const BiPoly r = pseudo_remainder_u(a, b);
    CHECK(r.degree_u() < b.degree_u());
    CHECK(pseudo_remainder_u(a * b, b).is_zero());
  }
  CHECK_THROWS_AS(pseudo_remainder_u(BiPoly({up({1})}), BiPoly()), std::invalid_argument);
}

TEST_CASE("bivariate gcd with canonical scaling") {
  const BiPoly upv = BiPoly::from_sparse(sp2("x1 + x2"));
  const BiPoly umv = BiPoly::from_sparse(sp2("x1 - x2"));
  CHECK(gcd_bi(upv * upv, upv * umv) == upv);
  CHECK(gcd_bi(mul_unipoly(upv, up({2})), mul_unipoly(upv, up({4}))) == upv);
  const BiPoly vp1 = BiPoly::from_sparse(sp2("x2 + 1"));
  CHECK(gcd_bi(mul_unipoly(upv, up({1, 1})), mul_unipoly(umv, up({1, 1}))) ==
        mul_unipoly(BiPoly({up({1})}), up({1, 1})));
  CHECK(gcd_bi(BiPoly::from_sparse(sp2("x1 + 1")), vp1) == BiPoly({up({1})}));
  CHECK(gcd_bi(BiPoly(), BiPoly()).is_zero());
  CHECK(gcd_bi(upv, BiPoly()) == upv);

  std::mt19937 rng(987654);
  for (int it = 0; it < 60; ++it) {
    const BiPoly g = random_bipoly(rng, 2);
    const BiPoly x = random_bipoly(rng, 2);
    const BiPoly y = random_bipoly(rng, 2);
    if (g.is_zero()) continue;
    const BiPoly h = gcd_bi(g * x, g * y);
    if ((g * x).is_zero() && (g * y).is_zero()) continue;
    CHECK(exact_divide(h, g).has_value());
    CHECK(exact_divide(g * x, h).has_value());
    CHECK(exact_divide(g * y, h).has_value());
  }
}

TEST_CASE("bivariate resultants eliminate the first variable") {
  const BiPoly a = BiPoly::from_sparse(sp2("x1^2 - x2"));
  CHECK(resultant_u(a, BiPoly::from_sparse(sp2("x1 - 1"))) == up({1, -1}));
  CHECK(resultant_u(a, BiPoly::from_sparse(sp2("2*x1"))) == up({0, -4}));
  CHECK(resultant_u(BiPoly::from_sparse(sp2("x1 - x2^2")),
                    BiPoly::from_sparse(sp2("x1 - x2"))) == up({0, -1, 1}));
  const BiPoly common = BiPoly::from_sparse(sp2("x1 - x2"));
  CHECK(resultant_u(common * BiPoly::from_sparse(sp2("x1 + 1")),
                    common * BiPoly::from_sparse(sp2("x1 + 2")))
            .is_zero());
  CHECK(resultant_u(BiPoly(), a).is_zero());

  std::mt19937 rng(1212);
  std::uniform_int_distribution<int> vd(3, 20);
  for (int it = 0; it < 50; ++it) {
    const BiPoly A = random_bipoly(rng, 3);
    const BiPoly B = random_bipoly(rng, 3);
    if (A.degree_u() < 1 || B.degree_u() < 1) continue;
    const UniPoly R = resultant_u(A, B);
    const Rational v0(vd(rng));
    if (A.leading_u().evaluate(v0) == 0 || B.leading_u().evaluate(v0) == 0) continue;
    CHECK(R.evaluate(v0) == resultant(A.at_v(v0), B.at_v(v0)));
  }
}

TEST_CASE("lagrange interpolation is exact") {
  const UniPoly target = UniPoly({Rational(1, 2), Rational(0), Rational(1)});
  std::vector<std::pair<Rational, Rational>> samples;
  for (int k = -1; k <= 1; ++k) samples.emplace_back(Rational(k), target.evaluate(Rational(k)));
  CHECK(interpolate(samples) == target);

  const BiPoly b = BiPoly::from_sparse(sp2("x1^2 + x1*x2 + x2^3"));
  std::vector<std::pair<Rational, UniPoly>> bs;
  for (int k = 0; k <= 2; ++k) bs.emplace_back(Rational(k), b.at_u(Rational(k)));
  CHECK(interpolate_bi(bs) == b);
}

TEST_CASE("negative exponents are cleared by a monomial unit") {
  const SparsePoly l = SparsePoly::parse("x1^-1 + x2", 2, PolyMode::laurent);
  CHECK(clear_negative_exponents(l).to_string() == sp2("1 + x1*x2").to_string());
  CHECK(clear_negative_exponents(sp2("x1^2*x2 + x1^3")).to_string() ==
        sp2("x2 + x1").to_string());
  CHECK(clear_negative_exponents(sp2("x1 + x2")).to_string() == sp2("x1 + x2").to_string());
  CHECK(clear_negative_exponents(SparsePoly(2)).is_zero());
}

TEST_CASE("rational roots are found exactly") {
  const UniPoly p = up({-1, 2}) * up({3, 1}) * up({1, 0, 1});
  const auto r = rational_roots(p);
  REQUIRE(r.size() == 2);
  CHECK(r[0] == Rational(-3));
  CHECK(r[1] == Rational(1, 2));
  CHECK(rational_roots(up({-2, 0, 1})).empty());
  const auto z = rational_roots(up({0, 0, 0, 1}));
  REQUIRE(z.size() == 1);
  CHECK(z[0] == 0);
  const auto lin = rational_roots(up({7, 3}));
  REQUIRE(lin.size() == 1);
  CHECK(lin[0] == Rational(-7, 3));
  const UniPoly big = up({-1, 6}) * up({5, 4}) * up({-7, 1});
  const auto br = rational_roots(big);
  REQUIRE(br.size() == 3);
  CHECK(br[0] == Rational(-5, 4));
  CHECK(br[1] == Rational(1, 6));
  CHECK(br[2] == Rational(7));
  CHECK_THROWS_AS(rational_roots(UniPoly()), std::invalid_argument);

  std::mt19937 rng(24601);
  std::uniform_int_distribution<int> nd(-6, 6), dd(1, 4);
  for (int it = 0; it < 60; ++it) {
    std::vector<Rational> planted;
    UniPoly prod = up({1, 0, 1});  // irrational pair to stir in
    while (planted.size() < 2) {
      const Rational r(nd(rng), dd(rng));
      bool fresh = true;
      for (const auto& s : planted) fresh = fresh && s != r;
      if (!fresh) continue;
      planted.push_back(r);
      prod = prod * UniPoly({Rational(-numerator(r)), Rational(denominator(r))});
    }
    std::sort(planted.begin(), planted.end());
    const auto got = rational_roots(prod);
    CHECK(got == planted);
  }
}

TEST_CASE("numeric roots of exact polynomials") {
  const auto ims = complex_roots(up({1, 0, 1}));
  REQUIRE(ims.size() == 2);
  CHECK(std::abs(ims[0] - std::complex<double>(0, -1)) < 1e-12);
  CHECK(std::abs(ims[1] - std::complex<double>(0, 1)) < 1e-12);

  const UniPoly dbl = up({-1, 1}) * up({-1, 1}) * up({2, 1});
  const auto dr = complex_roots(dbl);
  REQUIRE(dr.size() == 2);
  CHECK(std::abs(dr[0] - std::complex<double>(-2, 0)) < 1e-10);
  CHECK(std::abs(dr[1] - std::complex<double>(1, 0)) < 1e-10);

  CHECK(complex_roots(up({5})).empty());
  CHECK_THROWS_AS(complex_roots(UniPoly()), std::invalid_argument);

  const Rational eps = Rational(1) / Rational(1000000000000);
  const UniPoly close = up({-1, 1}) * UniPoly({-(Rational(1) + eps), Rational(1)});
  CHECK_THROWS_AS(complex_roots(close), PrecisionError);
}

TEST_CASE("numeric roots of complex coefficient polynomials") {
  using C = std::complex<double>;
  const auto sq = complex_roots(std::vector<C>{C(1), C(-2), C(1)});
  REQUIRE(sq.size() == 2);
  CHECK(std::abs(sq[0] - C(1, 0)) < 1e-6);
  CHECK(std::abs(sq[1] - C(1, 0)) < 1e-6);
  CHECK(count_distinct(sq, 1e-6) == 1);

  const auto pure = complex_roots(std::vector<C>{C(1), C(0), C(1)});
  REQUIRE(pure.size() == 2);
  CHECK(std::abs(pure[0] - C(0, -1)) < 1e-12);
  CHECK(std::abs(pure[1] - C(0, 1)) < 1e-12);

  CHECK(complex_roots(std::vector<C>{C(3)}).empty());
  CHECK_THROWS_AS(complex_roots(std::vector<C>{C(0), C(0)}), std::invalid_argument);
  CHECK_THROWS_AS(complex_roots(std::vector<C>{C(1), C(1), C(1e-15)}), PrecisionError);
}

TEST_CASE("distinct-value counting guards its tolerance") {
  using C = std::complex<double>;
  CHECK(count_distinct({}, 1e-9) == 0);
  CHECK(count_distinct({C(0), C(1)}, 1e-9) == 2);
  CHECK(count_distinct({C(0), C(5e-10)}, 1e-9) == 1);
  CHECK(count_distinct({C(0), C(5e-10), C(1), C(1, 2e-10)}, 1e-9) == 2);
  CHECK_THROWS_AS(count_distinct({C(0), C(5e-9)}, 1e-9), PrecisionError);
}
