#include "hblab/fexpr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <vector>

namespace hblab {

struct FExpr::Node {
  enum class Kind { constant, z, add, sub, mul, neg, int_pow, one_minus_z_pow };
  Kind kind = Kind::constant;
  double value = 0;  // constant value or exponent
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using NodePtr = std::shared_ptr<const FExpr::Node>;
using Kind = FExpr::Node::Kind;

NodePtr make(Kind k, double v = 0, NodePtr l = nullptr, NodePtr r = nullptr) {
  auto n = std::make_shared<FExpr::Node>();
  n->kind = k;
  n->value = v;
  n->lhs = std::move(l);
  n->rhs = std::move(r);
  return n;
}

bool polynomial(const NodePtr& n) {
  switch (n->kind) {
    case Kind::constant:
    case Kind::z: return true;
    case Kind::one_minus_z_pow: return false;
    case Kind::neg:
    case Kind::int_pow: return polynomial(n->lhs);
    default: return polynomial(n->lhs) && polynomial(n->rhs);
  }
}

std::vector<double> poly_coeffs(const NodePtr& n);

std::vector<double> poly_mul(const std::vector<double>& a, const std::vector<double>& b) {
  std::vector<double> c(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Exact coefficients for polynomial nodes; used to recognise the base 1 - z.
std::vector<double> poly_coeffs(const NodePtr& n) {
  switch (n->kind) {
    case Kind::constant: return {n->value};
    case Kind::z: return {0.0, 1.0};
    case Kind::neg: {
      auto c = poly_coeffs(n->lhs);
      for (auto& x : c) x = -x;
      return c;
    }
    case Kind::add:
    case Kind::sub: {
      auto a = poly_coeffs(n->lhs), b = poly_coeffs(n->rhs);
      a.resize(std::max(a.size(), b.size()), 0.0);
      const double s = n->kind == Kind::add ? 1.0 : -1.0;
      for (std::size_t i = 0; i < b.size(); ++i) a[i] += s * b[i];
      return a;
    }
    case Kind::mul: return poly_mul(poly_coeffs(n->lhs), poly_coeffs(n->rhs));
    case Kind::int_pow: {
      std::vector<double> acc{1.0};
      const auto base = poly_coeffs(n->lhs);
      for (int i = 0; i < static_cast<int>(n->value); ++i) acc = poly_mul(acc, base);
      return acc;
    }
    default: return {};
  }
}

bool is_one_minus_z(const NodePtr& n) {
  if (!polynomial(n)) return false;
  auto c = poly_coeffs(n);
  while (c.size() > 2 && c.back() == 0.0) c.pop_back();
  return c.size() == 2 && c[0] == 1.0 && c[1] == -1.0;
}

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  NodePtr parse() {
    NodePtr e = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("f-spec \"" + s_ + "\": " + what + " at position " + std::to_string(pos_));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  bool starts_primary(char c) const { return std::isdigit(static_cast<unsigned char>(c)) || c == '.' || c == 'z' || c == '('; }

  NodePtr expr() {
    NodePtr lhs = term();
    for (char c = peek(); c == '+' || c == '-'; c = peek()) {
      ++pos_;
      lhs = make(c == '+' ? Kind::add : Kind::sub, 0, lhs, term());
    }
    return lhs;
  }

  NodePtr term() {
    NodePtr lhs = factor();
    for (char c = peek(); c == '*' || starts_primary(c); c = peek()) {
      if (c == '*') ++pos_;
      lhs = make(Kind::mul, 0, lhs, factor());
    }
    return lhs;
  }

  NodePtr factor() {
    if (peek() == '-') {
      ++pos_;
      return make(Kind::neg, 0, factor());
    }
    NodePtr base = primary();
    if (peek() != '^') return base;
    ++pos_;
    const double e = exponent();
    if (e >= 0 && e == std::floor(e) && e <= 4096) return make(Kind::int_pow, e, base);
    if (!is_one_minus_z(base)) fail("non-integer or negative powers are allowed only on (1-z)");
    return make(Kind::one_minus_z_pow, e);
  }

  double exponent() {
    double sign = 1;
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    if (peek() == '-') {
      sign = -1;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    const double v = number();
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return sign * v;
  }

  double number() {
    skip();
    const char* begin = s_.c_str() + pos_;
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    if (end == begin) fail("expected a number");
    pos_ += static_cast<std::size_t>(end - begin);
    return v;
  }

  NodePtr primary() {
    const char c = peek();
    if (c == 'z') {
      ++pos_;
      return make(Kind::z);
    }
    if (c == '(') {
      ++pos_;
      NodePtr e = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return make(Kind::constant, number());
    fail(c == '\0' ? "unexpected end of input" : "unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

CoeffSeries<double> series_of(const NodePtr& n, Index m) {
  switch (n->kind) {
    case Kind::constant: return CoeffSeries<double>::monomial(0, m, n->value);
    case Kind::z: return CoeffSeries<double>::monomial(1, m);
    case Kind::neg: return std::complex<double>(-1.0) * series_of(n->lhs, m);
    case Kind::add: return (series_of(n->lhs, m) + series_of(n->rhs, m)).resized(m);
    case Kind::sub: return (series_of(n->lhs, m) - series_of(n->rhs, m)).resized(m);
    case Kind::mul: return cauchy_product(series_of(n->lhs, m), series_of(n->rhs, m), m);
    case Kind::one_minus_z_pow: return binomial_series<double>(n->value, m);
    case Kind::int_pow: {
      if (is_one_minus_z(n->lhs)) return binomial_series<double>(n->value, m);
      CoeffSeries<double> acc = CoeffSeries<double>::monomial(0, m);
      const CoeffSeries<double> base = series_of(n->lhs, m);
      for (int i = 0; i < static_cast<int>(n->value); ++i) acc = cauchy_product(acc, base, m);
      return acc;
    }
  }
  return CoeffSeries<double>::zero(m);
}

std::complex<double> value_of(const NodePtr& n, std::complex<double> z) {
  switch (n->kind) {
    case Kind::constant: return n->value;
    case Kind::z: return z;
    case Kind::neg: return -value_of(n->lhs, z);
    case Kind::add: return value_of(n->lhs, z) + value_of(n->rhs, z);
    case Kind::sub: return value_of(n->lhs, z) - value_of(n->rhs, z);
    case Kind::mul: return value_of(n->lhs, z) * value_of(n->rhs, z);
    case Kind::one_minus_z_pow: return std::pow(1.0 - z, n->value);
    case Kind::int_pow: {
      std::complex<double> acc = 1.0;
      const std::complex<double> b = value_of(n->lhs, z);
      for (int i = 0; i < static_cast<int>(n->value); ++i) acc *= b;
      return acc;
    }
  }
  return 0.0;
}

}  // namespace

FExpr FExpr::parse(const std::string& text) {
  if (text.find_first_not_of(" \t") == std::string::npos) throw ParseError("f-spec is empty");
  return FExpr(Parser(text).parse(), text);
}

CoeffSeries<double> FExpr::coefficients(Index degree_bound) const {
  if (degree_bound < 1) throw std::invalid_argument("FExpr::coefficients: degree bound must be >= 1");
  return series_of(root_, degree_bound).resized(degree_bound);
}

std::complex<double> FExpr::eval(std::complex<double> z) const { return value_of(root_, z); }

bool FExpr::is_polynomial() const { return polynomial(root_); }

}  // namespace hblab
