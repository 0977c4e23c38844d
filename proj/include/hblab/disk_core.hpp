// Unit-circle grids, discrete Fourier analysis, Taylor series in the disk and
// outer functions built from boundary log-moduli.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>
#include <vector>

namespace hblab {

using Index = Eigen::Index;

template <typename Real>
using Complex = std::complex<Real>;
template <typename Real>
using ComplexVector = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using RealVector = Eigen::Matrix<Real, Eigen::Dynamic, 1>;
template <typename Real>
using ComplexMatrix = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;

/// Raised when a quadrature or solve produces a non-finite or untrustworthy
/// value. Distinct from std::invalid_argument, which flags caller errors.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Midpoint grid t_j = 2*pi*(j + 1/2)/n on the unit circle. The point t = 0
/// (z = 1) is never a node.
template <typename Real = double>
class BoundaryGrid {
 public:
  explicit BoundaryGrid(Index n_points) : n_(n_points) {
    if (n_points < 8) {
      throw std::invalid_argument("BoundaryGrid: n_points must be at least 8, got " +
                                  std::to_string(n_points));
    }
  }

  Index size() const noexcept { return n_; }
  Real spacing() const noexcept { return Real(2) * std::numbers::pi_v<Real> / Real(n_); }
  Real node(Index j) const noexcept { return spacing() * (Real(j) + Real(0.5)); }
  Complex<Real> point(Index j) const { return std::polar(Real(1), node(j)); }

  RealVector<Real> nodes() const {
    RealVector<Real> t(n_);
    for (Index j = 0; j < n_; ++j) t(j) = node(j);
    return t;
  }

  friend bool operator==(const BoundaryGrid&, const BoundaryGrid&) = default;

 private:
  Index n_;
};

template <typename Real = double>
BoundaryGrid<Real> make_grid(Index n_points) {
  return BoundaryGrid<Real>(n_points);
}

/// Complex values at the nodes of a BoundaryGrid.
template <typename Real = double>
class BoundarySamples {
 public:
  BoundarySamples(BoundaryGrid<Real> grid, ComplexVector<Real> values)
      : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.size()) {
      throw std::invalid_argument("BoundarySamples: expected " + std::to_string(grid_.size()) +
                                  " values, got " + std::to_string(values_.size()));
    }
  }

  const BoundaryGrid<Real>& grid() const noexcept { return grid_; }
  const ComplexVector<Real>& values() const noexcept { return values_; }
  Index size() const noexcept { return values_.size(); }
  Complex<Real> operator[](Index j) const { return values_(j); }

  Real max_abs() const { return values_.cwiseAbs().maxCoeff(); }
  Real min_abs() const { return values_.cwiseAbs().minCoeff(); }

 private:
  BoundaryGrid<Real> grid_;
  ComplexVector<Real> values_;
};

namespace detail {

template <typename Real>
void require_same_grid(const BoundarySamples<Real>& a, const BoundarySamples<Real>& b) {
  if (!(a.grid() == b.grid())) throw std::invalid_argument("BoundarySamples: grid mismatch");
}

}  // namespace detail

/// Samples `fn(t)` at every node; `fn` may return a real or complex value.
template <typename Real, typename Fn>
BoundarySamples<Real> sample(const BoundaryGrid<Real>& grid, Fn&& fn) {
  ComplexVector<Real> v(grid.size());
  for (Index j = 0; j < grid.size(); ++j) v(j) = Complex<Real>(fn(grid.node(j)));
  return BoundarySamples<Real>(grid, std::move(v));
}

template <typename Real>
BoundarySamples<Real> operator*(const BoundarySamples<Real>& a, const BoundarySamples<Real>& b) {
  detail::require_same_grid(a, b);
  return {a.grid(), a.values().cwiseProduct(b.values())};
}

template <typename Real>
BoundarySamples<Real> operator/(const BoundarySamples<Real>& a, const BoundarySamples<Real>& b) {
  detail::require_same_grid(a, b);
  return {a.grid(), a.values().cwiseQuotient(b.values())};
}

template <typename Real>
BoundarySamples<Real> operator+(const BoundarySamples<Real>& a, const BoundarySamples<Real>& b) {
  detail::require_same_grid(a, b);
  return {a.grid(), a.values() + b.values()};
}

template <typename Real>
BoundarySamples<Real> operator-(const BoundarySamples<Real>& a, const BoundarySamples<Real>& b) {
  detail::require_same_grid(a, b);
  return {a.grid(), a.values() - b.values()};
}

template <typename Real>
BoundarySamples<Real> conj(const BoundarySamples<Real>& a) {
  return {a.grid(), a.values().conjugate()};
}

template <typename Real>
BoundarySamples<Real> modulus(const BoundarySamples<Real>& a) {
  return {a.grid(), a.values().cwiseAbs().template cast<Complex<Real>>()};
}

/// Truncated Taylor series c_0 + c_1 z + ... + c_{M-1} z^{M-1} of an H^2 element.
template <typename Real = double>
class CoeffSeries {
 public:
  using Scalar = Complex<Real>;
  using Vector = ComplexVector<Real>;

  CoeffSeries() : coeffs_(Vector::Zero(1)) {}

  explicit CoeffSeries(Vector coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.size() < 1) throw std::invalid_argument("CoeffSeries: degree bound must be positive");
    if (!coeffs_.allFinite()) throw NumericalError("CoeffSeries: non-finite coefficient");
  }

  CoeffSeries(std::initializer_list<Scalar> list) : coeffs_(static_cast<Index>(list.size())) {
    if (list.size() == 0) throw std::invalid_argument("CoeffSeries: degree bound must be positive");
    Index k = 0;
    for (const auto& c : list) coeffs_(k++) = c;
  }

  static CoeffSeries zero(Index degree_bound) { return CoeffSeries(Vector::Zero(degree_bound)); }

  static CoeffSeries monomial(Index power, Index degree_bound, Scalar value = Scalar(1)) {
    Vector c = Vector::Zero(degree_bound);
    if (power < degree_bound) c(power) = value;
    return CoeffSeries(std::move(c));
  }

  Index size() const noexcept { return coeffs_.size(); }
  const Vector& coeffs() const noexcept { return coeffs_; }

  /// Coefficient k, or zero beyond the stored degree bound.
  Scalar operator[](Index k) const { return k < coeffs_.size() && k >= 0 ? coeffs_(k) : Scalar(0); }

  /// Pads with zeros or drops trailing coefficients.
  CoeffSeries resized(Index degree_bound) const {
    Vector c = Vector::Zero(degree_bound);
    const Index keep = std::min(degree_bound, coeffs_.size());
    c.head(keep) = coeffs_.head(keep);
    return CoeffSeries(std::move(c));
  }

  Real l2_norm() const { return coeffs_.norm(); }
  Real l2_norm_squared() const { return coeffs_.squaredNorm(); }

 private:
  Vector coeffs_;
};

namespace detail {

template <typename Real>
ComplexVector<Real> padded_sum(const ComplexVector<Real>& a, const ComplexVector<Real>& b, Real sign) {
  const Index m = std::max(a.size(), b.size());
  ComplexVector<Real> out = ComplexVector<Real>::Zero(m);
  out.head(a.size()) += a;
  out.head(b.size()) += sign * b;
  return out;
}

}  // namespace detail

template <typename Real>
CoeffSeries<Real> operator+(const CoeffSeries<Real>& a, const CoeffSeries<Real>& b) {
  return CoeffSeries<Real>(detail::padded_sum(a.coeffs(), b.coeffs(), Real(1)));
}

template <typename Real>
CoeffSeries<Real> operator-(const CoeffSeries<Real>& a, const CoeffSeries<Real>& b) {
  return CoeffSeries<Real>(detail::padded_sum(a.coeffs(), b.coeffs(), Real(-1)));
}

template <typename Real>
CoeffSeries<Real> operator*(Complex<Real> s, const CoeffSeries<Real>& a) {
  return CoeffSeries<Real>(s * a.coeffs());
}

/// H^2 inner product <u, v> = sum u_k conj(v_k).
template <typename Real>
Complex<Real> h2_inner(const CoeffSeries<Real>& u, const CoeffSeries<Real>& v) {
  const Index m = std::min(u.size(), v.size());
  return v.coeffs().head(m).dot(u.coeffs().head(m));
}

/// A point of the open unit disk.
template <typename Real = double>
class DiskPoint {
 public:
  explicit DiskPoint(Complex<Real> z) : z_(z) {
    if (!(std::abs(z) < Real(1))) {
      throw std::invalid_argument("DiskPoint: |z| must be < 1");
    }
  }
  DiskPoint(Real x, Real y) : DiskPoint(Complex<Real>(x, y)) {}

  Complex<Real> value() const noexcept { return z_; }
  operator Complex<Real>() const noexcept { return z_; }

 private:
  Complex<Real> z_;
};

// ---------------------------------------------------------------------------
// Discrete Fourier analysis on the midpoint grid.
// ---------------------------------------------------------------------------

namespace detail {

template <typename Real>
ComplexVector<Real> fft_forward(const ComplexVector<Real>& x) {
  Eigen::FFT<Real> fft;
  std::vector<Complex<Real>> in(x.data(), x.data() + x.size());
  std::vector<Complex<Real>> out;
  fft.fwd(out, in);
  return Eigen::Map<ComplexVector<Real>>(out.data(), static_cast<Index>(out.size()));
}

/// Unscaled inverse: out_j = sum_k x_k e^{+2 pi i jk/n}.
template <typename Real>
ComplexVector<Real> fft_backward(const ComplexVector<Real>& x) {
  Eigen::FFT<Real> fft;
  fft.SetFlag(Eigen::FFT<Real>::Unscaled);
  std::vector<Complex<Real>> in(x.data(), x.data() + x.size());
  std::vector<Complex<Real>> out;
  fft.inv(out, in);
  return Eigen::Map<ComplexVector<Real>>(out.data(), static_cast<Index>(out.size()));
}

/// Signed frequency stored at FFT slot `slot` of a length-n transform.
inline Index signed_frequency(Index slot, Index n) { return slot < n / 2 ? slot : slot - n; }

template <typename Real>
Complex<Real> half_step_phase(Index frequency, Index n, Real sign) {
  return std::polar(Real(1), sign * std::numbers::pi_v<Real> * Real(frequency) / Real(n));
}

}  // namespace detail

/// Discrete Fourier coefficients (1/n) sum_j s_j e^{-ik t_j} for every
/// frequency k in [-n/2, n/2); frequency k is stored at slot k mod n.
template <typename Real>
ComplexVector<Real> fourier_coefficients(const BoundarySamples<Real>& samples) {
  const Index n = samples.size();
  ComplexVector<Real> c = detail::fft_forward<Real>(samples.values());
  for (Index slot = 0; slot < n; ++slot) {
    c(slot) *= detail::half_step_phase<Real>(detail::signed_frequency(slot, n), n, Real(-1)) / Real(n);
  }
  return c;
}

/// Inverse of fourier_coefficients.
template <typename Real>
BoundarySamples<Real> synthesize_frequencies(const ComplexVector<Real>& slots, const BoundaryGrid<Real>& grid) {
  const Index n = grid.size();
  if (slots.size() != n) throw std::invalid_argument("synthesize_frequencies: size mismatch");
  ComplexVector<Real> x(n);
  for (Index slot = 0; slot < n; ++slot) {
    x(slot) = slots(slot) * detail::half_step_phase<Real>(detail::signed_frequency(slot, n), n, Real(1));
  }
  return {grid, detail::fft_backward<Real>(x)};
}

/// P_+ : nonnegative-frequency coefficients c_0..c_{M-1}.
template <typename Real>
CoeffSeries<Real> project_plus(const BoundarySamples<Real>& samples, Index degree_bound) {
  const Index n = samples.size();
  if (degree_bound < 1 || degree_bound > n / 2) {
    throw std::invalid_argument("project_plus: degree_bound " + std::to_string(degree_bound) +
                                " outside [1, n_points/2 = " + std::to_string(n / 2) + "]");
  }
  return CoeffSeries<Real>(fourier_coefficients(samples).head(degree_bound));
}

/// Boundary values of a Taylor series with at most n_points/2 terms.
template <typename Real>
BoundarySamples<Real> synthesize(const CoeffSeries<Real>& series, const BoundaryGrid<Real>& grid) {
  const Index n = grid.size();
  if (series.size() > n / 2) {
    throw std::invalid_argument("synthesize: series longer than n_points/2 would alias");
  }
  ComplexVector<Real> slots = ComplexVector<Real>::Zero(n);
  slots.head(series.size()) = series.coeffs();
  return synthesize_frequencies(slots, grid);
}

/// P_- = I - P_+, returned as samples of the strictly negative frequencies.
template <typename Real>
BoundarySamples<Real> project_minus(const BoundarySamples<Real>& samples) {
  const Index n = samples.size();
  ComplexVector<Real> slots = fourier_coefficients(samples);
  slots.head(n / 2).setZero();
  return synthesize_frequencies(slots, samples.grid());
}

// ---------------------------------------------------------------------------
// Taylor series utilities.
// ---------------------------------------------------------------------------

/// Coefficients of (1 - z)^alpha, principal branch: c_k = (-1)^k C(alpha, k).
/// Evaluated from the Gamma-function closed form; nonnegative integers give
/// the exact finite binomial expansion.
template <typename Real = double>
CoeffSeries<Real> binomial_series(Real alpha, Index degree_bound) {
  if (degree_bound < 1) throw std::invalid_argument("binomial_series: degree bound must be >= 1");
  ComplexVector<Real> c = ComplexVector<Real>::Zero(degree_bound);
  c(0) = Real(1);
  const Real rounded = std::round(alpha);
  if (alpha >= Real(0) && std::abs(alpha - rounded) == Real(0)) {
    const auto n = static_cast<Index>(rounded);
    Real value = 1;
    for (Index k = 1; k <= std::min(n, degree_bound - 1); ++k) {
      value *= -(alpha - Real(k - 1)) / Real(k);
      c(k) = value;
    }
    return CoeffSeries<Real>(std::move(c));
  }
  // c_k = Gamma(k - alpha) / (Gamma(-alpha) Gamma(k + 1)).
  const Real log_g0 = std::lgamma(-alpha);
  const Real sign_g0 = std::tgamma(-alpha) < 0 ? Real(-1) : Real(1);
  for (Index k = 1; k < degree_bound; ++k) {
    const Real arg = Real(k) - alpha;
    const Real sign_gk = (arg > 0 || std::tgamma(arg) > 0) ? Real(1) : Real(-1);
    const Real log_mag = std::lgamma(arg) - log_g0 - std::lgamma(Real(k + 1));
    c(k) = sign_gk * sign_g0 * std::exp(log_mag);
  }
  return CoeffSeries<Real>(std::move(c));
}

/// Horner evaluation of sum c_k z^k.
template <typename Real>
Complex<Real> evaluate(const CoeffSeries<Real>& series, Complex<Real> z) {
  Complex<Real> acc(0);
  for (Index k = series.size() - 1; k >= 0; --k) acc = acc * z + series.coeffs()(k);
  return acc;
}

/// Coefficients of the order-th derivative.
template <typename Real>
CoeffSeries<Real> derivative(const CoeffSeries<Real>& series, Index order = 1) {
  const Index m = series.size();
  if (order >= m) return CoeffSeries<Real>::zero(1);
  ComplexVector<Real> d(m - order);
  for (Index j = 0; j < m - order; ++j) {
    Real falling = 1;
    for (Index i = 1; i <= order; ++i) falling *= Real(j + i);
    d(j) = falling * series.coeffs()(j + order);
  }
  return CoeffSeries<Real>(std::move(d));
}

template <typename Real>
Complex<Real> evaluate_derivative(const CoeffSeries<Real>& series, Complex<Real> z, Index order) {
  return evaluate(derivative(series, order), z);
}

/// Backward shift applied k times: drops the first k coefficients.
template <typename Real>
CoeffSeries<Real> shift_star(const CoeffSeries<Real>& series, Index k = 1) {
  if (k < 1) throw std::invalid_argument("shift_star: k must be >= 1");
  if (k >= series.size()) return CoeffSeries<Real>::zero(1);
  return CoeffSeries<Real>(series.coeffs().tail(series.size() - k).eval());
}

/// Forward shift S^k (multiplication by z^k), degree bound grows by k.
template <typename Real>
CoeffSeries<Real> shift(const CoeffSeries<Real>& series, Index k = 1) {
  ComplexVector<Real> c = ComplexVector<Real>::Zero(series.size() + k);
  c.tail(series.size()) = series.coeffs();
  return CoeffSeries<Real>(std::move(c));
}

namespace detail {

inline Index next_pow2(Index n) {
  Index p = 1;
  while (p < n) p <<= 1;
  return p;
}

template <typename Real>
ComplexVector<Real> convolve(const ComplexVector<Real>& a, const ComplexVector<Real>& b, Index out_len) {
  ComplexVector<Real> out = ComplexVector<Real>::Zero(out_len);
  const Index la = std::min(a.size(), out_len);
  const Index lb = std::min(b.size(), out_len);
  if (la == 0 || lb == 0) return out;
  if (std::min(la, lb) <= 64) {
    for (Index i = 0; i < la; ++i) {
      const Index jmax = std::min(lb, out_len - i);
      out.segment(i, jmax) += a(i) * b.head(jmax);
    }
    return out;
  }
  const Index n = next_pow2(la + lb - 1);
  ComplexVector<Real> fa = ComplexVector<Real>::Zero(n), fb = ComplexVector<Real>::Zero(n);
  fa.head(la) = a.head(la);
  fb.head(lb) = b.head(lb);
  ComplexVector<Real> prod = fft_forward<Real>(fa).cwiseProduct(fft_forward<Real>(fb));
  ComplexVector<Real> full = fft_backward<Real>(prod) / Real(n);
  const Index keep = std::min(out_len, la + lb - 1);
  out.head(keep) = full.head(keep);
  return out;
}

}  // namespace detail

/// First `degree_bound` coefficients of the product a*b.
template <typename Real>
CoeffSeries<Real> cauchy_product(const CoeffSeries<Real>& a, const CoeffSeries<Real>& b, Index degree_bound) {
  return CoeffSeries<Real>(detail::convolve<Real>(a.coeffs(), b.coeffs(), degree_bound));
}

/// First `degree_bound` coefficients of num/den; requires den(0) != 0.
template <typename Real>
CoeffSeries<Real> series_quotient(const CoeffSeries<Real>& num, const CoeffSeries<Real>& den, Index degree_bound) {
  const Complex<Real> d0 = den[0];
  if (d0 == Complex<Real>(0)) throw std::invalid_argument("series_quotient: denominator vanishes at 0");
  ComplexVector<Real> q = ComplexVector<Real>::Zero(degree_bound);
  for (Index k = 0; k < degree_bound; ++k) {
    Complex<Real> acc = num[k];
    const Index jmax = std::min(k, den.size() - 1);
    for (Index j = 1; j <= jmax; ++j) acc -= den.coeffs()(j) * q(k - j);
    q(k) = acc / d0;
  }
  return CoeffSeries<Real>(std::move(q));
}

// ---------------------------------------------------------------------------
// Principal powers of (1 - z).
// ---------------------------------------------------------------------------

template <typename Real>
Complex<Real> one_minus_z_pow(Complex<Real> z, Real gamma) {
  return std::pow(Complex<Real>(1) - z, gamma);
}

/// (1 - e^{it})^gamma for t in (0, 2 pi), evaluated without cancellation:
/// 1 - e^{it} = 2 sin(t/2) e^{i (t - pi)/2}.
template <typename Real>
Complex<Real> one_minus_boundary_pow(Real t, Real gamma) {
  const Real mod = std::pow(Real(2) * std::sin(t / 2), gamma);
  return std::polar(mod, gamma * (t - std::numbers::pi_v<Real>) / 2);
}

/// |1 - e^{it}| = 2 |sin(t/2)|.
template <typename Real>
Real chord_to_one(Real t) {
  return Real(2) * std::abs(std::sin(t / 2));
}

// ---------------------------------------------------------------------------
// Outer functions.
// ---------------------------------------------------------------------------

/// Outer function F with |F| = w on the circle, F(0) > 0:
///   F(z) = (1 - z)^beta exp{ (1/2pi) int (e^{it}+z)/(e^{it}-z) log(w / |1-e^{it}|^beta) dt }.
/// beta = `singular_exponent` splits off an algebraic zero/pole of w at t = 0
/// so the midpoint rule only sees the regular part.
template <typename Real = double>
class OuterFunction {
 public:
  explicit OuterFunction(const BoundarySamples<Real>& modulus, Real singular_exponent = Real(0))
      : grid_(modulus.grid()), beta_(singular_exponent), log_regular_(modulus.size()), modulus_(modulus.size()) {
    const Index n = modulus.size();
    for (Index j = 0; j < n; ++j) {
      const Complex<Real> v = modulus[j];
      if (!(v.real() > Real(0)) || std::abs(v.imag()) > Real(1e-12) * std::abs(v.real())) {
        throw std::invalid_argument("OuterFunction: modulus samples must be real and strictly positive (node " +
                                    std::to_string(j) + ")");
      }
      modulus_(j) = v.real();
      log_regular_(j) = std::log(v.real()) - beta_ * std::log(chord_to_one(grid_.node(j)));
    }
    if (!log_regular_.allFinite() || !std::isfinite(log_regular_.sum())) {
      throw NumericalError("OuterFunction: log-modulus is not integrable on this grid");
    }
    const ComplexVector<Real> slots =
        fourier_coefficients(BoundarySamples<Real>(grid_, log_regular_.template cast<Complex<Real>>()));
    ComplexVector<Real> h(n / 2);
    h(0) = slots(0).real();
    for (Index k = 1; k < n / 2; ++k) h(k) = Real(2) * slots(k);
    log_series_ = CoeffSeries<Real>(std::move(h));
  }

  const BoundaryGrid<Real>& grid() const noexcept { return grid_; }
  Real singular_exponent() const noexcept { return beta_; }

  /// Midpoint quadrature of the Herglotz integral, applied term by term to
  /// the kernel expansion 1 + 2 sum z^k e^{-ikt}. Stays accurate as |z| -> 1,
  /// where direct quadrature of the kernel would need ever finer grids.
  Complex<Real> operator()(Complex<Real> z) const {
    if (!(std::abs(z) < Real(1))) throw std::invalid_argument("OuterFunction: |z| must be < 1");
    const Complex<Real> log_value = evaluate(log_series_, z);
    if (!std::isfinite(log_value.real()) || !std::isfinite(log_value.imag())) {
      throw NumericalError("OuterFunction: divergent quadrature");
    }
    Complex<Real> value = std::exp(log_value);
    if (beta_ != Real(0)) value *= one_minus_z_pow(z, beta_);
    return value;
  }

  /// Taylor coefficients of log(F / (1-z)^beta): L_0 + 2 sum_{k>=1} L_k z^k.
  const CoeffSeries<Real>& log_taylor() const noexcept { return log_series_; }

  /// Taylor coefficients of F itself, first `degree_bound` terms.
  CoeffSeries<Real> taylor(Index degree_bound) const {
    const BoundarySamples<Real> analytic_log = synthesize(log_series_, grid_);
    BoundarySamples<Real> regular(grid_, analytic_log.values().array().exp().matrix());
    CoeffSeries<Real> out = project_plus(regular, std::min(degree_bound, grid_.size() / 2)).resized(degree_bound);
    if (beta_ != Real(0)) out = cauchy_product(binomial_series<Real>(beta_, degree_bound), out, degree_bound);
    return out;
  }

  /// Boundary trace w * exp(i * conjugate(log w)); the modulus is reproduced exactly.
  BoundarySamples<Real> boundary_trace() const {
    const BoundarySamples<Real> analytic_log = synthesize(log_series_, grid_);
    ComplexVector<Real> v(grid_.size());
    for (Index j = 0; j < grid_.size(); ++j) {
      Real phase = analytic_log[j].imag();
      if (beta_ != Real(0)) phase += beta_ * (grid_.node(j) - std::numbers::pi_v<Real>) / 2;
      v(j) = std::polar(modulus_(j), phase);
    }
    return {grid_, std::move(v)};
  }

 private:
  BoundaryGrid<Real> grid_;
  Real beta_;
  RealVector<Real> log_regular_;
  RealVector<Real> modulus_;
  CoeffSeries<Real> log_series_;
};

/// One-shot form of OuterFunction.
template <typename Real>
Complex<Real> outer_from_log_modulus(const BoundarySamples<Real>& w, DiskPoint<Real> z,
                                     Real singular_exponent = Real(0)) {
  return OuterFunction<Real>(w, singular_exponent)(z.value());
}

}  // namespace hblab
