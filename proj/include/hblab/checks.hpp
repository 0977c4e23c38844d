// Property checks built on the H(b) machinery: inclusions between spaces,
// inner-factor invariance, the boundary regularity integral and a few
// measured quantities without closed-form targets.
#pragma once

#include "hblab/decomposition.hpp"
#include "hblab/hb_space.hpp"
#include "hblab/pythagorean_pairs.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/QR>

#include <vector>

namespace hblab {

template <typename Real = double>
struct InclusionReport {
  Real alpha = 0, beta = 0;
  MembershipReport<Real> in_alpha;
  MembershipReport<Real> in_beta;
  bool consistent = true;  // member of H(b_beta) implies member of H(b_alpha)
};

template <typename Real>
InclusionReport<Real> inclusion_check(Real alpha, Real beta, const SeriesGenerator<Real>& f,
                                      const std::vector<Index>& resolutions) {
  if (alpha > beta) throw std::invalid_argument("inclusion_check: needs alpha <= beta");
  InclusionReport<Real> r;
  r.alpha = alpha;
  r.beta = beta;
  r.in_beta = membership_test(beta, f, resolutions);
  r.in_alpha = alpha == beta ? r.in_beta : membership_test(alpha, f, resolutions);
  r.consistent = r.in_beta.verdict != Verdict::member || r.in_alpha.verdict == Verdict::member;
  return r;
}

template <typename Real = double>
struct BlaschkeReport {
  MembershipReport<Real> plain;     // H(b_alpha)
  MembershipReport<Real> with_u;    // H(u b_alpha)
  bool agree = false;
};

template <typename Real>
BlaschkeReport<Real> blaschke_equiv_check(Real alpha, const std::vector<DiskPoint<Real>>& zeros,
                                          const SeriesGenerator<Real>& f, const std::vector<Index>& resolutions) {
  const BlaschkeProduct<Real> u(zeros);
  const PairFactory<Real> plain = alpha_pair_factory(alpha);
  const PairFactory<Real> inner = [plain, u](Index m, Index n_points) {
    return with_inner_factor(plain(m, n_points), u);
  };
  BlaschkeReport<Real> r;
  r.plain = membership_test(plain, f, resolutions);
  r.with_u = membership_test(inner, f, resolutions);
  r.agree = r.plain.verdict == r.with_u.verdict;
  return r;
}

// ---------------------------------------------------------------------------
// Regularity integral int |log|b_alpha|| / |1 - e^{it}|^{2n} dt near t = 0.
// ---------------------------------------------------------------------------

/// Gauss-Legendre nodes and weights on [-1, 1] (Golub-Welsch).
template <typename Real>
std::pair<RealVector<Real>, RealVector<Real>> gauss_legendre(int points) {
  Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic> j = Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>::Zero(points, points);
  for (int k = 1; k < points; ++k) {
    const Real b = Real(k) / std::sqrt(Real(4 * k * k - 1));
    j(k, k - 1) = b;
    j(k - 1, k) = b;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<Real, Eigen::Dynamic, Eigen::Dynamic>> es(j);
  RealVector<Real> w = Real(2) * es.eigenvectors().row(0).transpose().array().square();
  return {es.eigenvalues(), w};
}

enum class RegularityVerdict { converges, diverges, inconclusive };

inline std::string to_string(RegularityVerdict v) {
  switch (v) {
    case RegularityVerdict::converges: return "converges";
    case RegularityVerdict::diverges: return "diverges";
    case RegularityVerdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

template <typename Real = double>
struct RegularityResult {
  Real alpha = 0;
  Index n = 0;
  std::vector<Real> cutoffs;
  std::vector<Real> values;       // integral over [eps, 2 pi - eps]
  std::vector<Real> increments;   // integral over the two slivers between successive cutoffs
  Real fitted_exponent = 0;       // estimate of 2 alpha + 1 - 2n
  RegularityVerdict verdict = RegularityVerdict::inconclusive;
};

namespace detail {

/// 2 int_{lo}^{hi} (1/2) log(1 + x^alpha) / x^n dt, x = 4 sin^2(t/2), with
/// t = e^s and composite Gauss-Legendre in s.
template <typename Real>
Real regularity_piece(Real alpha, Index n, Real lo, Real hi, const std::pair<RealVector<Real>, RealVector<Real>>& gl) {
  const Real s0 = std::log(lo), s1 = std::log(hi);
  const int panels = std::max(1, static_cast<int>(std::ceil((s1 - s0) / Real(0.25))));
  const Real width = (s1 - s0) / Real(panels);
  Real acc = 0;
  for (int p = 0; p < panels; ++p) {
    const Real a = s0 + width * Real(p);
    for (Index q = 0; q < gl.first.size(); ++q) {
      const Real s = a + width * (gl.first(q) + Real(1)) / Real(2);
      const Real t = std::exp(s);
      const Real sh = std::sin(t / 2);
      const Real x = Real(4) * sh * sh;
      const Real f = Real(0.5) * std::log1p(std::pow(x, alpha)) / std::pow(x, Real(n));
      acc += gl.second(q) * width / Real(2) * f * t;
    }
  }
  return Real(2) * acc;
}

}  // namespace detail

/// Cutoffs should shrink geometrically; the exponent is read off the last two
/// increments, which scale like eps^{2 alpha + 1 - 2n}.
template <typename Real>
RegularityResult<Real> regularity_integral(Real alpha, Index n, const std::vector<Real>& cutoffs,
                                           Real verdict_margin = Real(0.1)) {
  if (n < 1) throw std::invalid_argument("regularity_integral: n must be >= 1");
  if (!(alpha > Real(0))) throw std::invalid_argument("alpha must be positive");
  if (cutoffs.size() < 3) throw std::invalid_argument("regularity_integral: need at least 3 cutoffs");
  for (std::size_t i = 0; i < cutoffs.size(); ++i) {
    if (!(cutoffs[i] > Real(0) && cutoffs[i] < std::numbers::pi_v<Real>) ||
        (i > 0 && !(cutoffs[i] < cutoffs[i - 1]))) {
      throw std::invalid_argument("regularity_integral: cutoffs must decrease within (0, pi)");
    }
  }
  const auto gl = gauss_legendre<Real>(20);
  RegularityResult<Real> r;
  r.alpha = alpha;
  r.n = n;
  r.cutoffs = cutoffs;
  Real value = detail::regularity_piece(alpha, n, cutoffs[0], std::numbers::pi_v<Real>, gl);
  r.values.push_back(value);
  for (std::size_t i = 1; i < cutoffs.size(); ++i) {
    const Real inc = detail::regularity_piece(alpha, n, cutoffs[i], cutoffs[i - 1], gl);
    r.increments.push_back(inc);
    value += inc;
    r.values.push_back(value);
  }
  const std::size_t k = r.increments.size();
  const Real rho = cutoffs.back() / cutoffs[cutoffs.size() - 2];
  r.fitted_exponent = std::log(r.increments[k - 1] / r.increments[k - 2]) / std::log(rho);
  if (r.fitted_exponent >= verdict_margin) {
    r.verdict = RegularityVerdict::converges;
  } else if (r.fitted_exponent <= -verdict_margin) {
    r.verdict = RegularityVerdict::diverges;
  } else {
    r.verdict = RegularityVerdict::inconclusive;
  }
  return r;
}

/// eps_i = 10^{-i}, i = 1..8.
template <typename Real = double>
std::vector<Real> default_cutoffs() {
  std::vector<Real> c;
  for (int i = 1; i <= 8; ++i) c.push_back(std::pow(Real(10), Real(-i)));
  return c;
}

// ---------------------------------------------------------------------------
// Measured quantities.
// ---------------------------------------------------------------------------

/// For f = T_{conj a} g, ||f|| in M(conj a) is ||g|| and ||f|| in
/// M(conj (1-z)^alpha) is ||T_{conj b} g||, since a = (1-z)^alpha b. Returns
/// their ratio, which lies in [(1+4^alpha)^{-1/2}, 1].
template <typename Real>
Real mabar_norm_ratio(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& g) {
  const Real gn = g.l2_norm();
  if (gn == Real(0)) throw std::invalid_argument("mabar_norm_ratio: zero g");
  const Index m = std::max(pair.degree_bound, g.size());
  return coanalytic_toeplitz(pair.b_series, g, m).l2_norm() / gn;
}

template <typename Real = double>
struct DensityRow {
  Index degree = 0;
  Real distance = 0;  // min over p in P_degree of ||f - (1-z)^{1/2} p||_b
};

/// H(b)-distance from f to (1-z)^{1/2} P_k for each k, by least squares in
/// the norm ||u||_b^2 = ||u||^2 + ||T_{conj phi} u||^2.
template <typename Real>
std::vector<DensityRow<Real>> density_experiment(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& f,
                                                 const std::vector<Index>& degrees) {
  const Index m = pair.degree_bound;
  const CoeffSeries<Real> root = binomial_series(Real(0.5), m);
  ComplexVector<Real> target(2 * m);
  target << f.resized(m).coeffs(), t_phibar_apply(pair, f).coeffs();
  std::vector<DensityRow<Real>> rows;
  for (Index k : degrees) {
    ComplexMatrix<Real> a(2 * m, k);
    for (Index j = 0; j < k; ++j) {
      const CoeffSeries<Real> u = shift(root, j).resized(m);
      a.col(j) << u.coeffs(), t_phibar_apply(pair, u).coeffs();
    }
    const ComplexVector<Real> w = a.colPivHouseholderQr().solve(target);
    rows.push_back({k, (target - a * w).norm()});
  }
  return rows;
}

/// max |T_phi T_psi f - T_psi T_phi f| and against T_{conj(phi psi)} f, for
/// analytic psi (conjugated symbols throughout).
template <typename Real>
Real commutation_defect(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& psi, const CoeffSeries<Real>& f) {
  const Index m = pair.degree_bound;
  const CoeffSeries<Real> fm = f.resized(m);
  const CoeffSeries<Real> one = t_phibar_apply(pair, coanalytic_toeplitz(psi, fm, m));
  const CoeffSeries<Real> two = coanalytic_toeplitz(psi, t_phibar_apply(pair, fm), m);
  const CoeffSeries<Real> both = coanalytic_toeplitz(cauchy_product(pair.phi_series, psi, m), fm, m);
  return std::max((one - two).coeffs().cwiseAbs().maxCoeff(), (one - both).coeffs().cwiseAbs().maxCoeff());
}

}  // namespace hblab
