// Small expression language for test functions f(z):
//   expr   := term (('+' | '-') term)*
//   term   := factor (('*')? factor)*
//   factor := '-' factor | primary ('^' exponent)?
//   primary:= number | 'z' | '(' expr ')'
// Non-integer or negative exponents are accepted only on the base (1 - z).
#pragma once

#include "hblab/disk_core.hpp"

#include <complex>
#include <memory>
#include <stdexcept>
#include <string>

namespace hblab {

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FExpr {
 public:
  static FExpr parse(const std::string& text);

  /// First `degree_bound` Taylor coefficients.
  CoeffSeries<double> coefficients(Index degree_bound) const;
  std::complex<double> eval(std::complex<double> z) const;
  /// True when no fractional or negative power occurs.
  bool is_polynomial() const;
  const std::string& source() const noexcept { return source_; }

  struct Node;

 private:
  FExpr(std::shared_ptr<const Node> root, std::string source) : root_(std::move(root)), source_(std::move(source)) {}

  std::shared_ptr<const Node> root_;
  std::string source_;
};

}  // namespace hblab
