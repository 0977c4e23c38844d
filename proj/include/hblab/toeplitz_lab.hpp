// Finite sections of Toeplitz operators and their singular-value diagnostics.
#pragma once

#include "hblab/disk_core.hpp"
#include "hblab/parallel.hpp"

#include <Eigen/SVD>

#include <functional>
#include <limits>
#include <memory>
#include <optional>
#include <ostream>
#include <vector>

namespace hblab {

/// A Toeplitz symbol, known through its Fourier coefficients. Sampled
/// symbols carry their grid and only resolve |k| < n_points/2.
template <typename Real = double>
class Symbol {
 public:
  using Coefficient = std::function<Complex<Real>(Index)>;

  Symbol(Coefficient c, std::optional<Index> max_frequency, std::string label)
      : coeff_(std::move(c)), max_frequency_(max_frequency), label_(std::move(label)) {}

  /// Discrete Fourier coefficients of midpoint samples.
  static Symbol from_samples(const BoundarySamples<Real>& samples) {
    const Index n = samples.size();
    auto slots = std::make_shared<const ComplexVector<Real>>(fourier_coefficients(samples));
    return Symbol([slots, n](Index k) { return (*slots)((k % n + n) % n); }, n / 2 - 1, "sampled");
  }

  /// Q^beta with Q(e^{it}) = (1-e^{it})/(1-e^{-it}) = e^{i(t - pi)}, t in (0, 2pi):
  /// exact coefficients sin(pi beta)/(pi (beta - k)).
  static Symbol q_power(Real beta) {
    const Real rounded = std::round(beta);
    if (beta == rounded) {
      const auto n = static_cast<Index>(rounded);
      const Real sign = (n % 2 == 0) ? Real(1) : Real(-1);
      return Symbol([n, sign](Index k) { return Complex<Real>(k == n ? sign : Real(0)); }, std::nullopt, "Q^n");
    }
    const Real s = std::sin(std::numbers::pi_v<Real> * beta) / std::numbers::pi_v<Real>;
    return Symbol([s, beta](Index k) { return Complex<Real>(s / (beta - Real(k))); }, std::nullopt, "Q^beta");
  }

  /// conj((1-z)^alpha)/(1-z)^alpha = Q^{-alpha}.
  static Symbol unimodular_quotient(Real alpha) { return q_power(-alpha); }

  /// Symbol with the given nonnegative-frequency coefficients.
  static Symbol analytic(const CoeffSeries<Real>& f) {
    return Symbol([f](Index k) { return k >= 0 ? f[k] : Complex<Real>(0); }, std::nullopt, "analytic");
  }

  /// conj(f) on the circle: coefficient -k is conj(f_k).
  static Symbol coanalytic(const CoeffSeries<Real>& f) {
    return Symbol([f](Index k) { return k <= 0 ? std::conj(f[-k]) : Complex<Real>(0); }, std::nullopt,
                  "coanalytic");
  }

  Complex<Real> coefficient(Index k) const { return coeff_(k); }
  std::optional<Index> max_frequency() const noexcept { return max_frequency_; }
  const std::string& label() const noexcept { return label_; }

 private:
  Coefficient coeff_;
  std::optional<Index> max_frequency_;
  std::string label_;
};

/// N x N section A[j][k] = symbol coefficient at j - k.
template <typename Real = double>
class FiniteToeplitz {
 public:
  explicit FiniteToeplitz(ComplexMatrix<Real> m) : m_(std::move(m)) {}

  Index dim() const noexcept { return m_.rows(); }
  const ComplexMatrix<Real>& matrix() const noexcept { return m_; }

 private:
  ComplexMatrix<Real> m_;
};

template <typename Real>
FiniteToeplitz<Real> toeplitz_section(const Symbol<Real>& symbol, Index n) {
  if (n < 1) throw std::invalid_argument("toeplitz_section: N must be positive");
  if (symbol.max_frequency() && n - 1 > *symbol.max_frequency()) {
    throw std::invalid_argument("toeplitz_section: N = " + std::to_string(n) +
                                " exceeds n_points/2 of the symbol grid");
  }
  ComplexVector<Real> diag(2 * n - 1);
  for (Index d = -(n - 1); d <= n - 1; ++d) diag(d + n - 1) = symbol.coefficient(d);
  ComplexMatrix<Real> m(n, n);
  for (Index k = 0; k < n; ++k) {
    for (Index j = 0; j < n; ++j) m(j, k) = diag(j - k + n - 1);
  }
  return FiniteToeplitz<Real>(std::move(m));
}

template <typename Real>
FiniteToeplitz<Real> toeplitz_section(const BoundarySamples<Real>& symbol, Index n) {
  return toeplitz_section(Symbol<Real>::from_samples(symbol), n);
}

/// Matrix-vector product; f is truncated or zero-padded to N.
template <typename Real>
CoeffSeries<Real> apply(const FiniteToeplitz<Real>& t, const CoeffSeries<Real>& f) {
  return CoeffSeries<Real>(t.matrix() * f.resized(t.dim()).coeffs());
}

/// The `count` smallest singular values, ascending.
template <typename Real>
RealVector<Real> smallest_singular_values(const FiniteToeplitz<Real>& t, Index count) {
  if (count < 1 || count > t.dim()) throw std::invalid_argument("smallest_singular_values: count outside [1, N]");
  Eigen::BDCSVD<ComplexMatrix<Real>> svd(t.matrix());
  const RealVector<Real>& s = svd.singularValues();  // descending
  return s.tail(count).reverse();
}

template <typename Real = double>
struct KernelEstimate {
  Index dimension = 0;
  Real sigma_max = 0;
  Real threshold = 0;           // rel_threshold * sigma_max
  Real next_sigma = 0;          // smallest singular value above the threshold
  Real gap_ratio = 0;           // next_sigma / threshold
  bool trusted = false;         // gap_ratio >= 10
  RealVector<Real> smallest;    // a few smallest singular values, ascending
};

/// Number of singular values below rel_threshold * sigma_max, with the gap
/// to the next one. The count is trusted only when that gap is at least 10x.
template <typename Real>
KernelEstimate<Real> kernel_dimension_estimate(const FiniteToeplitz<Real>& t, Real rel_threshold = Real(1e-6)) {
  if (!(rel_threshold > Real(0) && rel_threshold < Real(1))) {
    throw std::invalid_argument("kernel_dimension_estimate: rel_threshold must lie in (0, 1)");
  }
  Eigen::BDCSVD<ComplexMatrix<Real>> svd(t.matrix());
  const RealVector<Real>& s = svd.singularValues();
  KernelEstimate<Real> e;
  e.sigma_max = s(0);
  e.threshold = rel_threshold * e.sigma_max;
  const Index n = s.size();
  Index i = n - 1;
  while (i >= 0 && s(i) < e.threshold) --i;
  e.dimension = n - 1 - i;
  e.next_sigma = i >= 0 ? s(i) : Real(0);
  e.gap_ratio = e.threshold > 0 ? e.next_sigma / e.threshold : std::numeric_limits<Real>::infinity();
  e.trusted = e.gap_ratio >= Real(10);
  e.smallest = s.tail(std::min<Index>(n, 6)).reverse();
  return e;
}

/// ||T c|| / ||c||.
template <typename Real>
Real kernel_vector_residual(const FiniteToeplitz<Real>& t, const CoeffSeries<Real>& candidate) {
  const CoeffSeries<Real> c = candidate.resized(t.dim());
  const Real norm = c.l2_norm();
  if (norm == Real(0)) throw std::invalid_argument("kernel_vector_residual: zero candidate");
  return apply(t, c).l2_norm() / norm;
}

template <typename Real = double>
struct SigmaSweepRow {
  Index n = 0;
  Real sigma_min = 0;
  Real max_entry = 0;
};

/// sigma_min of the N-section for each N; sections are independent and are
/// computed in parallel.
template <typename Real>
std::vector<SigmaSweepRow<Real>> sigma_min_sweep(const Symbol<Real>& symbol, const std::vector<Index>& sizes) {
  std::vector<SigmaSweepRow<Real>> rows(sizes.size());
  parallel_for(sizes.size(), [&](std::size_t i) {
    const FiniteToeplitz<Real> t = toeplitz_section(symbol, sizes[i]);
    rows[i] = {sizes[i], smallest_singular_values(t, 1)(0), t.matrix().cwiseAbs().maxCoeff()};
  });
  return rows;
}

/// Row-major CSV, each entry written as two columns re,im.
template <typename Real>
void write_csv(std::ostream& os, const FiniteToeplitz<Real>& t) {
  const auto old_precision = os.precision(17);
  for (Index j = 0; j < t.dim(); ++j) {
    for (Index k = 0; k < t.dim(); ++k) {
      if (k > 0) os << ',';
      os << t.matrix()(j, k).real() << ',' << t.matrix()(j, k).imag();
    }
    os << "\r\n";
  }
  os.precision(old_precision);
}

}  // namespace hblab
