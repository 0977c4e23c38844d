// H(b) norms through ||f||_b^2 = ||f||_2^2 + ||T_{conj phi} f||_2^2, reproducing
// kernels and cross-resolution membership diagnostics.
#pragma once

#include "hblab/disk_core.hpp"
#include "hblab/parallel.hpp"
#include "hblab/pythagorean_pairs.hpp"

#include <functional>
#include <string>
#include <utility>
#include <vector>

namespace hblab {

/// P_+(conj(psi) f), first `degree_bound` coefficients, formed as a nodewise
/// product on a grid fine enough that nothing aliases.
template <typename Real>
CoeffSeries<Real> coanalytic_toeplitz(const CoeffSeries<Real>& psi, const CoeffSeries<Real>& f, Index degree_bound) {
  const Index lp = psi.size(), lf = f.size();
  const Index g = detail::next_pow2(std::max({lp + lf, 2 * lp, 2 * lf, 2 * degree_bound, Index(8)}));
  const BoundaryGrid<Real> grid(g);
  const BoundarySamples<Real> product = conj(synthesize(psi, grid)) * synthesize(f, grid);
  return project_plus(product, degree_bound);
}

/// T_{conj phi} f with phi's Taylor section from the pair; f is cut or padded
/// to the pair's degree bound.
template <typename Real>
CoeffSeries<Real> t_phibar_apply(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& f) {
  const Index m = pair.degree_bound;
  return coanalytic_toeplitz(pair.phi_series, f.resized(m), m);
}

template <typename Real>
Real hb_norm(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& f) {
  const Real f2 = f.resized(pair.degree_bound).l2_norm_squared();
  return std::sqrt(f2 + t_phibar_apply(pair, f).l2_norm_squared());
}

/// f together with its image under T_{conj phi}; the pair must outlive it.
template <typename Real = double>
class HbElement {
 public:
  HbElement(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& f)
      : pair_(&pair), f_(f.resized(pair.degree_bound)), tf_(t_phibar_apply(pair, f_)),
        norm_sq_(f_.l2_norm_squared() + tf_.l2_norm_squared()) {}

  const PythagoreanPair<Real>& pair() const noexcept { return *pair_; }
  const CoeffSeries<Real>& f() const noexcept { return f_; }
  const CoeffSeries<Real>& tphibar_f() const noexcept { return tf_; }
  Real hb_norm_sq() const noexcept { return norm_sq_; }
  Real hb_norm() const { return std::sqrt(norm_sq_); }

  /// <u, v>_b = <u, v>_2 + <T u, T v>_2.
  Complex<Real> inner(const HbElement& other) const {
    return h2_inner(f_, other.f_) + h2_inner(tf_, other.tf_);
  }

 private:
  const PythagoreanPair<Real>* pair_;
  CoeffSeries<Real> f_;
  CoeffSeries<Real> tf_;
  Real norm_sq_;
};

template <typename Real>
Complex<Real> hb_inner(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& u, const CoeffSeries<Real>& v) {
  return HbElement<Real>(pair, u).inner(HbElement<Real>(pair, v));
}

enum class Verdict { member, non_member, inconclusive };

inline std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::member: return "member";
    case Verdict::non_member: return "non-member";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

template <typename Real = double>
struct MembershipReport {
  std::vector<std::pair<Index, Real>> norms_by_resolution;  // (degree bound, ||f||_b)
  Verdict verdict = Verdict::inconclusive;
  Real growth_exponent = 0;
};

template <typename Real = double>
struct MembershipOptions {
  Real cauchy_tol = Real(1e-3);
  Real growth_threshold = Real(0.1);
  /// Grid points per Taylor coefficient when building a pair.
  Index oversampling = 4;
};

template <typename Real>
using PairFactory = std::function<PythagoreanPair<Real>(Index degree_bound, Index n_points)>;
template <typename Real>
using SeriesGenerator = std::function<CoeffSeries<Real>(Index degree_bound)>;

/// Norm sequence across degree bounds. growth_exponent is the log-slope of
/// the norm over the last refinement.
template <typename Real>
Verdict classify_norms(const std::vector<std::pair<Index, Real>>& norms, const MembershipOptions<Real>& opt,
                       Real& growth_exponent) {
  const auto& [m1, n1] = norms[norms.size() - 2];
  const auto& [m2, n2] = norms.back();
  if (n2 == Real(0) && n1 == Real(0)) {
    growth_exponent = 0;
    return Verdict::member;
  }
  growth_exponent = std::log(n2 / n1) / std::log(Real(m2) / Real(m1));
  if (std::abs(n2 - n1) <= opt.cauchy_tol * std::max(n1, n2)) return Verdict::member;
  if (growth_exponent >= opt.growth_threshold) return Verdict::non_member;
  return Verdict::inconclusive;
}

template <typename Real>
MembershipReport<Real> membership_test(const PairFactory<Real>& make_pair, const SeriesGenerator<Real>& f,
                                       const std::vector<Index>& resolutions, const MembershipOptions<Real>& opt = {}) {
  if (resolutions.size() < 3) throw std::invalid_argument("membership_test: need at least 3 resolutions");
  for (std::size_t i = 1; i < resolutions.size(); ++i) {
    if (resolutions[i] <= resolutions[i - 1]) {
      throw std::invalid_argument("membership_test: resolutions must be strictly increasing");
    }
  }
  MembershipReport<Real> report;
  report.norms_by_resolution.resize(resolutions.size());
  parallel_for(resolutions.size(), [&](std::size_t i) {
    const Index m = resolutions[i];
    const PythagoreanPair<Real> pair = make_pair(m, std::max<Index>(8, opt.oversampling * m));
    report.norms_by_resolution[i] = {m, hb_norm(pair, f(m))};
  });
  report.verdict = classify_norms(report.norms_by_resolution, opt, report.growth_exponent);
  return report;
}

template <typename Real>
PairFactory<Real> alpha_pair_factory(Real alpha) {
  if (!(alpha > Real(0))) throw std::invalid_argument("alpha must be positive");
  return [alpha](Index m, Index n_points) { return pair_alpha(alpha, BoundaryGrid<Real>(n_points), m); };
}

template <typename Real>
SeriesGenerator<Real> truncations_of(const CoeffSeries<Real>& f) {
  return [f](Index m) { return f.resized(m); };
}

template <typename Real>
MembershipReport<Real> membership_test(Real alpha, const SeriesGenerator<Real>& f, const std::vector<Index>& resolutions,
                                       const MembershipOptions<Real>& opt = {}) {
  return membership_test(alpha_pair_factory(alpha), f, resolutions, opt);
}

template <typename Real>
MembershipReport<Real> membership_test(Real alpha, const CoeffSeries<Real>& f, const std::vector<Index>& resolutions,
                                       const MembershipOptions<Real>& opt = {}) {
  return membership_test(alpha_pair_factory(alpha), truncations_of(f), resolutions, opt);
}

/// k_w^b(z) = (1 - conj(b(w)) b(z)) / (1 - conj(w) z).
template <typename Real>
Complex<Real> kernel_kwb(const PythagoreanPair<Real>& pair, DiskPoint<Real> w, DiskPoint<Real> z) {
  const Complex<Real> bw = pair.b(w), bz = pair.b(z);
  return (Real(1) - std::conj(bw) * bz) / (Real(1) - std::conj(w.value()) * z.value());
}

/// Taylor coefficients of k_w^b in z, consistent with the pair's b series.
template <typename Real>
CoeffSeries<Real> kernel_series(const PythagoreanPair<Real>& pair, DiskPoint<Real> w) {
  const Index m = pair.degree_bound;
  ComplexVector<Real> geo(m);
  Complex<Real> p(1);
  for (Index k = 0; k < m; ++k) {
    geo(k) = p;
    p *= std::conj(w.value());
  }
  const CoeffSeries<Real> g(geo);
  const Complex<Real> bw = evaluate(pair.b_series, w.value());
  return g - std::conj(bw) * cauchy_product(pair.b_series, g, m);
}

/// |<f, k_w^b>_b - f(w)|.
template <typename Real>
Real reproducing_check(const PythagoreanPair<Real>& pair, const CoeffSeries<Real>& f, DiskPoint<Real> w) {
  if (f.size() > 33) throw std::invalid_argument("reproducing_check: f must have degree <= 32");
  return std::abs(hb_inner(pair, f, kernel_series(pair, w)) - evaluate(f, w.value()));
}

}  // namespace hblab
