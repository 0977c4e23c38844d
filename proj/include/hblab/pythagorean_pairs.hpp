// Pythagorean pairs (b, a): |a|^2 + |b|^2 = 1 on the circle, a outer, a(0) > 0.
#pragma once

#include "hblab/disk_core.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

namespace hblab {

/// The triple (a, b, phi = b/a) at one discretization. Treated as immutable
/// once built.
template <typename Real = double>
struct PythagoreanPair {
  using Evaluator = std::function<Complex<Real>(Complex<Real>)>;

  std::optional<Real> alpha;
  BoundaryGrid<Real> grid{8};
  Index degree_bound = 1;

  BoundarySamples<Real> a_boundary{grid, ComplexVector<Real>::Zero(8)};
  BoundarySamples<Real> b_boundary{grid, ComplexVector<Real>::Zero(8)};
  BoundarySamples<Real> phi_boundary{grid, ComplexVector<Real>::Zero(8)};
  CoeffSeries<Real> a_series;
  CoeffSeries<Real> b_series;
  CoeffSeries<Real> phi_series;

  Evaluator a_eval;
  Evaluator b_eval;

  Complex<Real> a(DiskPoint<Real> z) const { return a_eval(z.value()); }
  Complex<Real> b(DiskPoint<Real> z) const { return b_eval(z.value()); }
  Complex<Real> phi(DiskPoint<Real> z) const { return b(z) / a(z); }

  /// max_j | |a|^2 + |b|^2 - 1 | over the grid.
  Real pyth_residual() const {
    const auto sum = a_boundary.values().cwiseAbs2() + b_boundary.values().cwiseAbs2();
    return (sum.array() - Real(1)).abs().maxCoeff();
  }

  Real corona_min() const { return b_boundary.min_abs(); }
};

/// (1 + 4^alpha)^{-1/2}: lower bound of |b_alpha| and of |a_alpha|/|1-z|^alpha.
template <typename Real>
Real corona_bound(Real alpha) {
  return Real(1) / std::sqrt(Real(1) + std::pow(Real(4), alpha));
}

/// b_alpha is the outer function with |b|^2 = 1/(1 + |1-e^{it}|^{2 alpha});
/// a_alpha = (1-z)^alpha b_alpha, so phi = (1-z)^{-alpha}.
template <typename Real = double>
PythagoreanPair<Real> pair_alpha(Real alpha, const BoundaryGrid<Real>& grid, Index degree_bound) {
  if (!(alpha > Real(0))) throw std::invalid_argument("alpha must be positive");
  if (degree_bound < 1 || degree_bound > grid.size() / 2) {
    throw std::invalid_argument("pair_alpha: degree_bound outside [1, n_points/2]");
  }
  const auto b_modulus = sample(grid, [&](Real t) {
    return Real(1) / std::sqrt(Real(1) + std::pow(chord_to_one(t), Real(2) * alpha));
  });
  const auto power = sample(grid, [&](Real t) { return one_minus_boundary_pow(t, alpha); });

  PythagoreanPair<Real> p;
  p.alpha = alpha;
  p.grid = grid;
  p.degree_bound = degree_bound;
  const OuterFunction<Real> b_outer(b_modulus);
  p.b_boundary = b_outer.boundary_trace();
  p.a_boundary = power * p.b_boundary;
  p.phi_boundary = sample(grid, [&](Real t) { return one_minus_boundary_pow(t, -alpha); });
  p.b_series = b_outer.taylor(degree_bound);
  p.a_series = cauchy_product(binomial_series(alpha, degree_bound), p.b_series, degree_bound);
  p.phi_series = binomial_series(-alpha, degree_bound);
  p.b_eval = [b_outer](Complex<Real> z) { return b_outer(z); };
  p.a_eval = [b_outer, alpha](Complex<Real> z) { return one_minus_z_pow(z, alpha) * b_outer(z); };
  return p;
}

/// Pair of a Smirnov quotient phi, given |phi| on the grid and phi's Taylor
/// series. `singular_exponent` is the order of the zero of a at z = 1 (for
/// phi = (1-z)^{-alpha} it is alpha); it only improves accuracy.
template <typename Real = double>
PythagoreanPair<Real> pair_from_phi(const BoundarySamples<Real>& phi_modulus, const CoeffSeries<Real>& phi_analytic,
                                    Index degree_bound, Real singular_exponent = Real(0)) {
  const auto& grid = phi_modulus.grid();
  if (degree_bound < 1 || degree_bound > grid.size() / 2) {
    throw std::invalid_argument("pair_from_phi: degree_bound outside [1, n_points/2]");
  }
  if (phi_modulus.max_abs() == Real(0) || phi_analytic.l2_norm() == Real(0)) {
    throw std::invalid_argument("pair_from_phi: phi must be nonzero");
  }
  ComplexVector<Real> a_mod(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    const Real m = std::abs(phi_modulus[j]);
    // 1/sqrt(1+m^2) written to stay finite for huge m.
    a_mod(j) = m > Real(1) ? (Real(1) / m) / std::sqrt(Real(1) + Real(1) / (m * m)) : Real(1) / std::sqrt(Real(1) + m * m);
  }
  const OuterFunction<Real> a_outer(BoundarySamples<Real>(grid, a_mod), singular_exponent);
  const BoundarySamples<Real> a_trace = a_outer.boundary_trace();

  // phi on the circle: |phi| from the input, argument from phi's series
  // through the trace a (arg b = arg phi + arg a).
  PythagoreanPair<Real> p;
  p.grid = grid;
  p.degree_bound = degree_bound;
  p.a_boundary = a_trace;
  p.a_series = a_outer.taylor(degree_bound);
  p.phi_series = phi_analytic.resized(degree_bound);
  p.b_series = cauchy_product(p.phi_series, p.a_series, degree_bound);
  ComplexVector<Real> b_vals(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    const Real a_abs = std::abs(a_trace[j]);
    b_vals(j) = std::sqrt(std::max(Real(0), Real(1) - a_abs * a_abs));
  }
  // The phase of b is that of phi*a; phi's boundary phase is recovered from
  // phi = b/a once b's phase is taken from the series resynthesis.
  const BoundarySamples<Real> b_synth = synthesize(p.b_series.resized(std::min(degree_bound, grid.size() / 2)), grid);
  for (Index j = 0; j < grid.size(); ++j) {
    const Complex<Real> s = b_synth[j];
    b_vals(j) *= std::abs(s) > Real(0) ? s / std::abs(s) : Complex<Real>(1);
  }
  p.b_boundary = BoundarySamples<Real>(grid, b_vals);
  p.phi_boundary = p.b_boundary / p.a_boundary;
  const CoeffSeries<Real> phi_s = p.phi_series;
  p.a_eval = [a_outer](Complex<Real> z) { return a_outer(z); };
  p.b_eval = [a_outer, phi_s](Complex<Real> z) { return evaluate(phi_s, z) * a_outer(z); };
  return p;
}

/// Outer mate b of a given |a| <= 1: |b|^2 = 1 - |a|^2 on the circle, b(0) > 0.
/// `a_singular_exponent` is the order of a's zero at z = 1, if any.
template <typename Real = double>
PythagoreanPair<Real> mate_of_outer(const BoundarySamples<Real>& a_modulus, Index degree_bound,
                                    Real a_singular_exponent = Real(0)) {
  const auto& grid = a_modulus.grid();
  if (degree_bound < 1 || degree_bound > grid.size() / 2) {
    throw std::invalid_argument("mate_of_outer: degree_bound outside [1, n_points/2]");
  }
  ComplexVector<Real> b_mod(grid.size());
  for (Index j = 0; j < grid.size(); ++j) {
    const Real m = std::abs(a_modulus[j]);
    if (m > Real(1)) {
      throw std::invalid_argument("mate_of_outer: |a| > 1 at node " + std::to_string(j));
    }
    b_mod(j) = std::sqrt(Real(1) - m * m);
    if (!(b_mod(j).real() > Real(0))) {
      throw NumericalError("mate_of_outer: 1 - |a|^2 vanishes at node " + std::to_string(j) +
                           "; log(1 - |a|^2) is not integrable on this grid");
    }
  }
  const OuterFunction<Real> a_outer(a_modulus, a_singular_exponent);
  const OuterFunction<Real> b_outer(BoundarySamples<Real>(grid, b_mod));
  PythagoreanPair<Real> p;
  p.grid = grid;
  p.degree_bound = degree_bound;
  p.a_boundary = a_outer.boundary_trace();
  p.b_boundary = b_outer.boundary_trace();
  p.phi_boundary = p.b_boundary / p.a_boundary;
  p.a_series = a_outer.taylor(degree_bound);
  p.b_series = b_outer.taylor(degree_bound);
  p.phi_series = series_quotient(p.b_series, p.a_series, degree_bound);
  p.a_eval = [a_outer](Complex<Real> z) { return a_outer(z); };
  p.b_eval = [b_outer](Complex<Real> z) { return b_outer(z); };
  return p;
}

/// Tilde pair: a = ((1-z)/2)^alpha with its outer mate.
template <typename Real = double>
PythagoreanPair<Real> tilde_pair(Real alpha, const BoundaryGrid<Real>& grid, Index degree_bound) {
  if (!(alpha > Real(0))) throw std::invalid_argument("alpha must be positive");
  const auto a_mod = sample(grid, [&](Real t) { return std::pow(chord_to_one(t) / Real(2), alpha); });
  PythagoreanPair<Real> p = mate_of_outer(a_mod, degree_bound, alpha);
  p.alpha = alpha;
  return p;
}

/// Finite Blaschke product prod_i (|w_i|/w_i) (w_i - z)/(1 - conj(w_i) z),
/// with the factor z for a zero at the origin.
template <typename Real = double>
class BlaschkeProduct {
 public:
  BlaschkeProduct() = default;
  explicit BlaschkeProduct(std::vector<DiskPoint<Real>> zeros) : zeros_(std::move(zeros)) {}

  const std::vector<DiskPoint<Real>>& zeros() const noexcept { return zeros_; }

  Complex<Real> operator()(Complex<Real> z) const {
    Complex<Real> acc(1);
    for (const auto& w : zeros_) acc *= factor(w.value(), z);
    return acc;
  }

  CoeffSeries<Real> series(Index degree_bound) const {
    CoeffSeries<Real> acc = CoeffSeries<Real>::monomial(0, degree_bound);
    for (const auto& w : zeros_) {
      const Complex<Real> a = w.value();
      ComplexVector<Real> c = ComplexVector<Real>::Zero(degree_bound);
      if (a == Complex<Real>(0)) {
        if (degree_bound > 1) c(1) = 1;
      } else {
        // (|a|/a)(a - z) sum_k conj(a)^k z^k
        const Complex<Real> u = std::abs(a) / a;
        Complex<Real> geo(1);
        for (Index k = 0; k < degree_bound; ++k) {
          c(k) += u * a * geo;
          if (k + 1 < degree_bound) c(k + 1) -= u * geo;
          geo *= std::conj(a);
        }
      }
      acc = cauchy_product(acc, CoeffSeries<Real>(std::move(c)), degree_bound);
    }
    return acc;
  }

 private:
  static Complex<Real> factor(Complex<Real> a, Complex<Real> z) {
    if (a == Complex<Real>(0)) return z;
    return std::abs(a) / a * (a - z) / (Real(1) - std::conj(a) * z);
  }

  std::vector<DiskPoint<Real>> zeros_;
};

/// The pair (u b, a): same a, b and phi multiplied by the inner function u.
template <typename Real>
PythagoreanPair<Real> with_inner_factor(const PythagoreanPair<Real>& pair, const BlaschkeProduct<Real>& u) {
  PythagoreanPair<Real> p = pair;
  p.alpha.reset();
  const auto u_boundary = sample(pair.grid, [&](Real t) { return u(std::polar(Real(1), t)); });
  p.b_boundary = u_boundary * pair.b_boundary;
  p.phi_boundary = u_boundary * pair.phi_boundary;
  const CoeffSeries<Real> u_series = u.series(pair.degree_bound);
  p.b_series = cauchy_product(u_series, pair.b_series, pair.degree_bound);
  p.phi_series = cauchy_product(u_series, pair.phi_series, pair.degree_bound);
  auto b_old = pair.b_eval;
  p.b_eval = [b_old, u](Complex<Real> z) { return u(z) * b_old(z); };
  return p;
}

template <typename Real = double>
struct SandwichReport {
  Real lower = 0;
  Real value = 0;
  Real upper = 0;
  bool holds = false;
};

/// (1+4^alpha)^{-1/2} |1-z|^alpha <= |a_alpha(z)| <= |1-z|^alpha.
template <typename Real>
SandwichReport<Real> sandwich_check(const PythagoreanPair<Real>& pair, DiskPoint<Real> z, Real rel_slack = Real(1e-9)) {
  if (!pair.alpha) throw std::invalid_argument("sandwich_check: needs an alpha-pair");
  const Real alpha = *pair.alpha;
  SandwichReport<Real> r;
  r.upper = std::pow(std::abs(Real(1) - z.value()), alpha);
  r.lower = corona_bound(alpha) * r.upper;
  r.value = std::abs(pair.a(z));
  r.holds = r.value >= r.lower * (Real(1) - rel_slack) && r.value <= r.upper * (Real(1) + rel_slack);
  return r;
}

// ---------------------------------------------------------------------------
// Radial limits at z = 1.
// ---------------------------------------------------------------------------

/// Eliminates c_e h^e for each listed exponent in turn from values taken at
/// h_j = 2^{-j} (increasing j). Listing an exponent twice also removes the
/// h^e log h term.
template <typename Real>
Real richardson_known(std::vector<Real> values, const std::vector<Real>& exponents) {
  if (values.empty()) throw std::invalid_argument("richardson_known: no values");
  for (Real e : exponents) {
    if (values.size() == 1) break;
    const Real f = std::pow(Real(2), e);
    for (std::size_t i = 0; i + 1 < values.size(); ++i) values[i] = (f * values[i + 1] - values[i]) / (f - Real(1));
    values.pop_back();
  }
  return values.back();
}

/// Aitken delta-squared on the last three values.
template <typename Real>
Real aitken_last(const std::vector<Real>& v) {
  const std::size_t n = v.size();
  if (n < 3) return v.back();
  const Real d1 = v[n - 1] - v[n - 2];
  const Real d0 = v[n - 2] - v[n - 3];
  if (d1 == d0) return v.back();
  return v[n - 1] - d1 * d1 / (d1 - d0);
}

template <typename Real = double>
struct RadialLimit {
  Complex<Real> value;
  bool stable = false;
  Real change = 0;  // |E(all rungs) - E(all but the last)|
  std::vector<Real> radii;
  std::vector<Complex<Real>> samples;
};

template <typename Real = double>
struct RadialLimitOptions {
  int max_rungs = 12;
  /// Finest rung kept is the largest j with 2^{-j} M >= min_terms_per_scale.
  Real min_terms_per_scale = 32;
  Real tol_lim = Real(1e-4);
  /// Known exponents of the expansion in h = 1 - r; empty selects Aitken.
  std::vector<Real> exponents;
  /// Rungs fed to the known-exponent extrapolation.
  int window = 9;
};

namespace detail {

template <typename Real>
Complex<Real> extrapolate(const std::vector<Complex<Real>>& v, const std::vector<Real>& exps, int window) {
  const std::size_t w = std::min<std::size_t>(v.size(), std::size_t(window));
  std::vector<Real> re, im;
  for (std::size_t i = v.size() - w; i < v.size(); ++i) {
    re.push_back(v[i].real());
    im.push_back(v[i].imag());
  }
  if (exps.empty()) return {aitken_last(re), aitken_last(im)};
  return {richardson_known(re, exps), richardson_known(im, exps)};
}

}  // namespace detail

/// Limit of the k-th derivative of the series along r_j = 1 - 2^{-j}.
template <typename Real>
RadialLimit<Real> radial_limit_at_one(const CoeffSeries<Real>& series, Index order,
                                      const RadialLimitOptions<Real>& opt = {}) {
  if (order < 0) throw std::invalid_argument("radial_limit_at_one: order must be >= 0");
  const CoeffSeries<Real> d = derivative(series, order);
  const Real m = Real(series.size());
  int rungs = 0;
  while (rungs < opt.max_rungs && std::ldexp(m, -(rungs + 1)) >= opt.min_terms_per_scale) ++rungs;
  rungs = std::max(rungs, 3);
  RadialLimit<Real> out;
  for (int j = 1; j <= rungs; ++j) {
    const Real r = Real(1) - std::ldexp(Real(1), -j);
    out.radii.push_back(r);
    out.samples.push_back(evaluate(d, Complex<Real>(r)));
  }
  out.value = detail::extrapolate(out.samples, opt.exponents, opt.window);
  std::vector<Complex<Real>> shorter(out.samples.begin(), out.samples.end() - 1);
  const Complex<Real> previous = detail::extrapolate(shorter, opt.exponents, opt.window);
  out.change = std::abs(out.value - previous);
  out.stable = std::isfinite(out.change) && out.change <= opt.tol_lim;
  return out;
}

/// Exponent ladder for 1 - b_alpha(r): powers of h^{2 alpha} and integers.
template <typename Real>
std::vector<Real> b_alpha_exponents(Real alpha) {
  std::vector<Real> e;
  for (int i = 1; i <= 5; ++i) e.push_back(Real(2) * alpha * Real(i));
  for (int i = 1; i <= 5; ++i) e.push_back(Real(i));
  std::sort(e.begin(), e.end());
  // An odd integer 2 alpha i brings a (1-r)^e log(1-r) term; keeping the
  // repeat lets the extrapolation remove it. Other repeats are dropped.
  std::vector<Real> out;
  int copies = 0;
  for (Real x : e) {
    copies = (!out.empty() && std::abs(out.back() - x) < Real(1e-12)) ? copies + 1 : 1;
    const bool odd_integer = std::abs(x - std::round(x)) < Real(1e-12) && std::llround(x) % 2 == 1;
    if (copies <= (odd_integer ? 2 : 1)) out.push_back(x);
  }
  return out;
}

/// b(r) -> b(1) for a pair; uses the b_alpha ladder for alpha-pairs.
template <typename Real>
RadialLimit<Real> radial_limit_at_one(const PythagoreanPair<Real>& pair, Index order, Real tol_lim = Real(1e-4)) {
  RadialLimitOptions<Real> opt;
  opt.tol_lim = tol_lim;
  if (pair.alpha && order == 0) opt.exponents = b_alpha_exponents(*pair.alpha);
  return radial_limit_at_one(pair.b_series, order, opt);
}

}  // namespace hblab
