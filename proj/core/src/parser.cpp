// Recursive-descent parser for the polynomial text grammar.
#include <newtonbif/poly.hpp>

#include <cctype>
#include <stdexcept>
#include <string>

namespace nbif {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t i = 0;

  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool done() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
  char take() {
    skip_ws();
    return s[i++];
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("parse error at position " + std::to_string(i) + ": " + what);
  }
};

Integer parse_digits(Cursor& c) {
  c.skip_ws();
  std::string num;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i])))
    num.push_back(c.s[c.i++]);
  if (num.empty()) c.fail("expected digits");
  return integer_from_decimal(num);
}

Rational parse_coefficient(Cursor& c) {
  Integer num = parse_digits(c);
  if (c.peek() == '/') {
    c.take();
    Integer den = parse_digits(c);
    if (den == 0) c.fail("zero denominator");
    return Rational(num, den);
  }
  return Rational(num);
}

std::int64_t parse_exponent_value(Cursor& c, PolyMode mode) {
  bool neg = false;
  if (c.peek() == '-') {
    c.take();
    neg = true;
  }
  Integer e = parse_digits(c);
  if (e > kMaxExponentMagnitude) c.fail("exponent magnitude exceeds 64");
  std::int64_t v = e.convert_to<std::int64_t>();
  if (neg) {
    if (mode == PolyMode::affine) c.fail("negative exponent in affine mode");
    v = -v;
  }
  return v;
}

// one variable power x<k>[^e]; bare x,y,z,w act as x1..x4
void parse_power(Cursor& c, PolyMode mode, int dim, Exponent& accum) {
  char v = c.take();
  int index;
  if (v == 'x' && c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) {
    Integer k = parse_digits(c);
    if (k < 1 || k > dim) c.fail("variable index out of range");
    index = k.convert_to<int>() - 1;
  } else {
    switch (v) {
      case 'x': index = 0; break;
      case 'y': index = 1; break;
      case 'z': index = 2; break;
      case 'w': index = 3; break;
      default: c.fail(std::string("unexpected character '") + v + "'");
    }
    if (index >= dim) c.fail("variable index out of range");
  }
  std::int64_t e = 1;
  if (c.peek() == '^') {
    c.take();
    e = parse_exponent_value(c, mode);
  }
  accum[index] += e;
  if (accum[index] > kMaxExponentMagnitude || accum[index] < -kMaxExponentMagnitude)
    c.fail("exponent magnitude exceeds 64");
}

// term := factor ('*' factor)*, factor := coefficient | power
void parse_term(Cursor& c, SparsePoly& p, int sign) {
  Rational coeff(sign);
  Exponent e(p.ambient_dim(), 0);
  bool expect_factor = true;
  while (expect_factor) {
    char ch = c.peek();
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      coeff *= parse_coefficient(c);
    } else if (std::isalpha(static_cast<unsigned char>(ch))) {
      parse_power(c, p.mode(), p.ambient_dim(), e);
    } else {
      c.fail("expected a coefficient or a variable");
    }
    if (c.peek() == '*') {
      c.take();
    } else {
      expect_factor = false;
    }
  }
  p.add_term(e, coeff);
}

}  // namespace

SparsePoly SparsePoly::parse(const std::string& text, int ambient_dim, PolyMode mode) {
  SparsePoly p(ambient_dim, mode);
  Cursor c{text};
  if (c.done()) throw std::invalid_argument("empty polynomial text");
  // special case: literal "0"
  int sign = 1;
  char first = c.peek();
  if (first == '+' || first == '-') {
    c.take();
    sign = first == '-' ? -1 : 1;
  }
  parse_term(c, p, sign);
  while (!c.done()) {
    char op = c.take();
    if (op != '+' && op != '-') c.fail("expected '+' or '-' between terms");
    parse_term(c, p, op == '-' ? -1 : 1);
  }
  return p;
}

}  // namespace nbif
