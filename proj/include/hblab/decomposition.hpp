// Structural splittings of H(b_alpha) elements: Taylor part at z = 1 plus a
// (1-z)^alpha multiple, the backward-shift splitting of M(conj((1-z)^alpha)),
// and the A_n correction at half-integer alpha.
#pragma once

#include "hblab/disk_core.hpp"
#include "hblab/hb_space.hpp"
#include "hblab/pythagorean_pairs.hpp"
#include "hblab/toeplitz_lab.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>

#include <stdexcept>
#include <string>
#include <vector>

namespace hblab {

/// The unique n with n - 1/2 < alpha <= n + 1/2.
template <typename Real>
Index alpha_order(Real alpha) {
  if (!(alpha > Real(0))) throw std::invalid_argument("alpha must be positive");
  return static_cast<Index>(std::ceil(alpha - Real(0.5)));
}

template <typename Real>
bool is_half_integer(Real alpha) {
  return std::abs(alpha - Real(alpha_order(alpha)) - Real(0.5)) < Real(1e-12);
}

/// Tail test for a truncated quotient: l2 mass of the last quarter exceeds
/// that of the first quarter.
template <typename Real>
bool tail_dominates(const CoeffSeries<Real>& q) {
  const Index m = q.size(), quarter = std::max<Index>(1, m / 4);
  return q.coeffs().tail(quarter).squaredNorm() > q.coeffs().head(quarter).squaredNorm();
}

/// f / (1-z)^alpha as f (1-z)^{n-alpha} followed by n running sums, with
/// n the nearest integer, so no convolution sees growing coefficients.
template <typename Real>
CoeffSeries<Real> divide_by_power(const CoeffSeries<Real>& f, Real alpha) {
  const Index m = f.size();
  const Real n = std::max(Real(0), std::round(alpha));
  ComplexVector<Real> q = cauchy_product(f, binomial_series(n - alpha, m), m).coeffs();
  for (Index pass = 0; pass < Index(n); ++pass)
    for (Index k = 1; k < m; ++k) q(k) += q(k - 1);
  return CoeffSeries<Real>(std::move(q));
}

template <typename Real = double>
struct DivisionDiagnostic {
  std::vector<std::pair<Index, Real>> norms_by_resolution;  // ||f_M / (1-z)^alpha||_2
  Real growth_exponent = 0;                                  // log-slope over the last refinement
  bool strictly_increasing = false;
  bool tail_flag = false;                                    // at the finest resolution
};

template <typename Real>
DivisionDiagnostic<Real> division_diagnostic(Real alpha, const SeriesGenerator<Real>& f,
                                             const std::vector<Index>& resolutions) {
  if (resolutions.size() < 2) throw std::invalid_argument("division_diagnostic: need at least 2 resolutions");
  DivisionDiagnostic<Real> d;
  d.strictly_increasing = true;
  for (Index m : resolutions) {
    const CoeffSeries<Real> q = divide_by_power(f(m), alpha);
    if (!d.norms_by_resolution.empty() && !(q.l2_norm() > d.norms_by_resolution.back().second)) {
      d.strictly_increasing = false;
    }
    d.norms_by_resolution.emplace_back(m, q.l2_norm());
    d.tail_flag = tail_dominates(q);
  }
  const auto& [m1, n1] = d.norms_by_resolution[d.norms_by_resolution.size() - 2];
  const auto& [m2, n2] = d.norms_by_resolution.back();
  d.growth_exponent = (n1 > 0 && n2 > 0) ? std::log(n2 / n1) / std::log(Real(m2) / Real(m1)) : Real(0);
  return d;
}

template <typename Real = double>
struct HbDecomposition {
  Real alpha = 0;
  Index n = 0;
  std::string kind;                  // "M(a)", "taylor+M(a)", "closure(M(a))", "A_n+closure(M(a))"
  bool poly_available = true;        // false at alpha = n + 1/2
  CoeffSeries<Real> poly_part;       // z-basis, degree bound n
  std::vector<Complex<Real>> taylor_at_one;  // f^{(k)}(1)/k!, k < n
  std::vector<bool> taylor_stable;
  CoeffSeries<Real> ma_factor;
  CoeffSeries<Real> an_part;
  std::vector<Complex<Real>> an_weights;     // q = sum w_k z^k, an_part = T_{conj (1-z)^alpha}((1-z)^{1/2} q)
  Real residual_norm = 0;
  bool division_unstable = false;
  MembershipReport<Real> membership;
};

template <typename Real = double>
struct DecomposeOptions {
  Real tol_dec = Real(1e-6);
  bool check_membership = true;
  Real tol_lim = Real(1e-4);
};

/// Exponent ladder of f^{(k)}(r) - f^{(k)}(1) when f = p + (1-z)^alpha h with
/// p of degree < n and h a polynomial.
template <typename Real>
std::vector<Real> taylor_exponents(Real alpha, Index n, Index k) {
  std::vector<Real> e;
  for (int m = 0; m < 8; ++m) e.push_back(alpha - Real(k) + Real(m));
  for (Index i = 1; i <= n - 1 - k; ++i) e.push_back(Real(i));
  std::sort(e.begin(), e.end());
  return e;
}

/// sum_k a_k (z - 1)^k in the monomial basis.
template <typename Real>
CoeffSeries<Real> from_taylor_at_one(const std::vector<Complex<Real>>& a, Index degree_bound) {
  ComplexVector<Real> c = ComplexVector<Real>::Zero(std::max<Index>(1, degree_bound));
  for (std::size_t k = 0; k < a.size(); ++k) {
    // (z - 1)^k = sum_i C(k, i) z^i (-1)^{k-i}
    Real binom = 1;
    for (Index i = 0; i <= Index(k); ++i) {
      if (i > 0) binom = binom * Real(Index(k) - i + 1) / Real(i);
      const Real sign = ((Index(k) - i) % 2 == 0) ? Real(1) : Real(-1);
      if (i < c.size()) c(i) += a[k] * binom * sign;
    }
  }
  return CoeffSeries<Real>(std::move(c));
}

template <typename Real>
CoeffSeries<Real> sqrt_factor_times(const CoeffSeries<Real>& q, Index degree_bound) {
  return cauchy_product(binomial_series(Real(0.5), degree_bound), q, degree_bound);
}

/// f = poly + (1-z)^alpha h (+ A_n part at half-integers). The working degree
/// bound is f.size(); membership is probed on f's truncations to M/4, M/2, M.
template <typename Real>
HbDecomposition<Real> decompose(Real alpha, const CoeffSeries<Real>& f, const DecomposeOptions<Real>& opt = {}) {
  HbDecomposition<Real> d;
  d.alpha = alpha;
  d.n = alpha_order(alpha);
  const Index m = f.size();
  if (opt.check_membership) {
    if (m < 32) throw std::invalid_argument("decompose: degree bound must be at least 32");
    d.membership = membership_test(alpha, f, {m / 4, m / 2, m});
    if (d.membership.verdict != Verdict::member) {
      throw std::domain_error("decompose: f is not a member of H(b_alpha) (verdict " +
                              to_string(d.membership.verdict) + ", growth exponent " +
                              std::to_string(d.membership.growth_exponent) + ")");
    }
  }
  const bool half = is_half_integer(alpha);
  CoeffSeries<Real> rest = f;

  if (half && d.n >= 1) {
    d.kind = "A_n+closure(M(a))";
    d.poly_available = false;
    d.poly_part = CoeffSeries<Real>::zero(d.n);
    const CoeffSeries<Real> g = coanalytic_toeplitz(binomial_series(-alpha, m), f, m);
    ComplexMatrix<Real> basis(m, d.n);
    const CoeffSeries<Real> root = binomial_series(Real(0.5), m);
    for (Index k = 0; k < d.n; ++k) basis.col(k) = shift(root, k).resized(m).coeffs();
    const ComplexVector<Real> w = basis.colPivHouseholderQr().solve(g.coeffs());
    const CoeffSeries<Real> q(w);
    for (Index k = 0; k < d.n; ++k) d.an_weights.push_back(w(k));
    d.an_part = coanalytic_toeplitz(binomial_series(alpha, m), sqrt_factor_times(q, m), m);
    rest = f - d.an_part;
  } else if (d.n >= 1) {
    d.kind = "taylor+M(a)";
    for (Index k = 0; k < d.n; ++k) {
      RadialLimitOptions<Real> ro;
      ro.exponents = taylor_exponents(alpha, d.n, k);
      ro.tol_lim = opt.tol_lim;
      const RadialLimit<Real> lim = radial_limit_at_one(f, k, ro);
      Real fact = 1;
      for (Index i = 2; i <= k; ++i) fact *= Real(i);
      d.taylor_at_one.push_back(lim.value / fact);
      d.taylor_stable.push_back(lim.stable);
    }
    d.poly_part = from_taylor_at_one(d.taylor_at_one, d.n);
    rest = f - d.poly_part.resized(m);
  } else {
    d.kind = half ? "closure(M(a))" : "M(a)";
    d.poly_part = CoeffSeries<Real>::zero(1);
  }
  if (d.an_part.size() < m) d.an_part = d.an_part.resized(m);

  d.ma_factor = divide_by_power(rest.resized(m), alpha);
  d.division_unstable = tail_dominates(d.ma_factor);
  const CoeffSeries<Real> rebuilt =
      d.poly_part.resized(m) + cauchy_product(binomial_series(alpha, m), d.ma_factor, m) + d.an_part;
  d.residual_norm = (rebuilt - f).l2_norm();
  return d;
}

/// S*^k (1-z)^alpha for k = 1..n.
template <typename Real>
std::vector<CoeffSeries<Real>> sstar_basis(Real alpha, Index n, Index degree_bound) {
  if (n < 1) throw std::invalid_argument("sstar_basis: n must be >= 1");
  const CoeffSeries<Real> psi = binomial_series(alpha, degree_bound + n);
  std::vector<CoeffSeries<Real>> out;
  for (Index k = 1; k <= n; ++k) out.push_back(shift_star(psi, k).resized(degree_bound));
  return out;
}

template <typename Real>
std::vector<CoeffSeries<Real>> sstar_basis(Real alpha, Index degree_bound = 64) {
  return sstar_basis(alpha, alpha_order(alpha), degree_bound);
}

template <typename Real = double>
struct MabarSplit {
  CoeffSeries<Real> f;             // T_{conj (1-z)^alpha} g
  CoeffSeries<Real> g0;
  CoeffSeries<Real> h;             // S*^n g0
  std::vector<Complex<Real>> c;    // c_k = <g0, z^{k-1}>, k = 1..n
  Real sigma_min = 0;
  Real residual = 0;               // over the first N/2 coefficients
};

/// f = T_{conj (1-z)^alpha} g split as (1-z)^alpha h + sum_k c_k S*^{n-k+1}(1-z)^alpha,
/// from the N-section solve of T_{Q^{alpha-n}} g0 = (-1)^n g. The section is
/// factored once and reused for every g.
template <typename Real = double>
class MabarSolver {
 public:
  MabarSolver(Real alpha, Index section) : alpha_(alpha), n_(alpha_order(alpha)), section_(section) {
    if (n_ < 1 || is_half_integer(alpha)) {
      throw std::invalid_argument("decompose_mabar: needs n - 1/2 < alpha < n + 1/2 with n >= 1");
    }
    const FiniteToeplitz<Real> t = toeplitz_section(Symbol<Real>::q_power(alpha - Real(n_)), section);
    svd_.compute(t.matrix(), Eigen::ComputeThinU | Eigen::ComputeThinV);
    sigma_min_ = svd_.singularValues()(section - 1);
    if (sigma_min_ < Real(1e-10)) {
      throw NumericalError("decompose_mabar: section of T_{Q^(alpha-n)} is numerically singular (sigma_min " +
                           std::to_string(sigma_min_) + ")");
    }
    psi_ = binomial_series(alpha, section + n_);
  }

  Index section() const noexcept { return section_; }
  Real sigma_min() const noexcept { return sigma_min_; }

  MabarSplit<Real> split(const CoeffSeries<Real>& g) const {
    if (g.size() > section_) throw std::invalid_argument("decompose_mabar: g longer than the section");
    MabarSplit<Real> out;
    out.sigma_min = sigma_min_;
    out.f = coanalytic_toeplitz(binomial_series(alpha_, g.size()), g, section_);
    const Real sign = (n_ % 2 == 0) ? Real(1) : Real(-1);
    out.g0 = CoeffSeries<Real>(svd_.solve((sign * g.resized(section_).coeffs()).eval()));
    out.h = shift_star(out.g0, n_);
    for (Index k = 0; k < n_; ++k) out.c.push_back(out.g0[k]);

    CoeffSeries<Real> rebuilt = cauchy_product(psi_, out.h, section_);
    for (Index k = 0; k < n_; ++k) rebuilt = rebuilt + out.c[k] * shift_star(psi_, n_ - k).resized(section_);
    out.residual = (rebuilt - out.f).coeffs().head(section_ / 2).norm();
    return out;
  }

 private:
  Real alpha_;
  Index n_;
  Index section_;
  Eigen::BDCSVD<ComplexMatrix<Real>> svd_;
  Real sigma_min_ = 0;
  CoeffSeries<Real> psi_;
};

template <typename Real>
MabarSplit<Real> decompose_mabar(Real alpha, const CoeffSeries<Real>& g, Index section) {
  return MabarSolver<Real>(alpha, section).split(g);
}

/// A_n basis at alpha = n + 1/2 from p = z^k, k < n:
///   p P_+(s) + P_+(p P_-(s)),  s = conj((1-z)^alpha) (1-z)^{1/2} on the grid.
template <typename Real>
std::vector<CoeffSeries<Real>> an_basis(Real alpha, const BoundaryGrid<Real>& grid, Index degree_bound) {
  if (!is_half_integer(alpha) || alpha < Real(1.5)) {
    throw std::invalid_argument("an_basis: alpha must be n + 1/2 with n >= 1");
  }
  const Index n = alpha_order(alpha);
  const auto s = sample(grid, [&](Real t) {
    return std::conj(one_minus_boundary_pow(t, alpha)) * one_minus_boundary_pow(t, Real(0.5));
  });
  const CoeffSeries<Real> plus = project_plus(s, degree_bound);
  const BoundarySamples<Real> minus = project_minus(s);
  std::vector<CoeffSeries<Real>> out;
  for (Index k = 0; k < n; ++k) {
    const auto zk = sample(grid, [&](Real t) { return std::polar(Real(1), Real(k) * t); });
    out.push_back(shift(plus, k).resized(degree_bound) + project_plus(zk * minus, degree_bound));
  }
  return out;
}

/// Same vectors as an_basis, computed directly as T_{conj (1-z)^alpha}((1-z)^{1/2} z^k)
/// from series of length `series_length`.
template <typename Real>
CoeffSeries<Real> an_vector_direct(Real alpha, Index k, Index degree_bound, Index series_length) {
  const CoeffSeries<Real> x = shift(binomial_series(Real(0.5), series_length), k).resized(series_length);
  return coanalytic_toeplitz(binomial_series(alpha, series_length), x, degree_bound);
}

}  // namespace hblab
