#include "hblab/checks.hpp"

#include <doctest.h>

#include <random>

using namespace hblab;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

CoeffSeries<double> random_series(std::mt19937_64& rng, Index length) {
  std::uniform_real_distribution<double> u(-1, 1);
  ComplexVector<double> c(length);
  for (auto& x : c) x = cd(u(rng), u(rng));
  return CoeffSeries<double>(c);
}

// (T_{conj psi} f)_j = sum_k conj(psi_k) f_{j+k}
CoeffSeries<double> coanalytic_by_loops(const CoeffSeries<double>& psi, const CoeffSeries<double>& f, Index m) {
  ComplexVector<double> out = ComplexVector<double>::Zero(m);
  for (Index j = 0; j < m; ++j)
    for (Index k = 0; k < psi.size(); ++k) out(j) += std::conj(psi[k]) * f[j + k];
  return CoeffSeries<double>(out);
}

double max_abs(const CoeffSeries<double>& a, const CoeffSeries<double>& b) {
  const Index n = std::max(a.size(), b.size());
  return (a.resized(n).coeffs() - b.resized(n).coeffs()).cwiseAbs().maxCoeff();
}

}  // namespace

TEST_CASE("coanalytic Toeplitz product") {
  std::mt19937_64 rng(1);
  for (auto [lp, lf, m] : {std::tuple{5, 40, 40}, std::tuple{70, 30, 64}, std::tuple{200, 300, 128}}) {
    const auto psi = random_series(rng, lp), f = random_series(rng, lf);
    CHECK(max_abs(coanalytic_toeplitz(psi, f, m), coanalytic_by_loops(psi, f, m)) < 1e-12);
  }
}

TEST_CASE("H(b) norm basics") {
  const auto p = pair_alpha(1.0, make_grid(2048), 512);
  const CoeffSeries<double> one{1.0};
  CHECK(max_abs(t_phibar_apply(p, one), CoeffSeries<double>::monomial(0, 512)) < 1e-13);
  CHECK(hb_norm(p, one) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));

  // phi = 1: T is the identity and ||f||_b = sqrt(2) ||f||.
  const auto g = make_grid(1024);
  const auto flat = pair_from_phi(sample(g, [](double) { return 1.0; }), CoeffSeries<double>{1.0}, 256);
  std::mt19937_64 rng(2);
  for (int i = 0; i < 5; ++i) {
    const auto f = random_series(rng, 50);
    CHECK(max_abs(t_phibar_apply(flat, f), f) < 1e-13);
    CHECK(hb_norm(flat, f) == doctest::Approx(std::sqrt(2.0) * f.l2_norm()).epsilon(1e-13));
  }

  // Dominance ||f||_b >= ||f||_2 and the inner product is Hermitian.
  for (double alpha : {0.3, 1.0, 1.7}) {
    const auto q = pair_alpha(alpha, make_grid(2048), 512);
    const auto u = random_series(rng, 20), v = random_series(rng, 20);
    CHECK(hb_norm(q, u) >= u.l2_norm());
    CHECK(std::abs(hb_inner(q, u, v) - std::conj(hb_inner(q, v, u))) < 1e-12);
    const HbElement<double> e(q, u);
    CHECK(e.inner(e).real() == doctest::Approx(e.hb_norm_sq()));
    CHECK(std::abs(e.inner(e).imag()) < 1e-13);
  }
}

TEST_CASE("T_{conj phi}(a p) through series and through the boundary") {
  // conj(phi) a = b conj(a)/a on the circle is bounded, so the grid product is
  // an independent route to P_+(conj(phi) a p). The series route drops the
  // tail sum over k > M of phi_k f_{j+k}, of size M^{-1} at alpha = 0.8.
  const double alpha = 0.8;
  const CoeffSeries<double> poly{cd(0.5), cd(-1, 0.25), cd(0, 2), cd(0.3)};
  std::vector<double> gaps;
  for (Index m : {512, 2048}) {
    const auto grid = make_grid(8 * m);
    const auto pair = pair_alpha(alpha, grid, m);
    const auto f = cauchy_product(pair.a_series, poly, m);
    const auto series_path = t_phibar_apply(pair, f);
    const auto boundary = conj(pair.phi_boundary) * pair.a_boundary *
                          sample(grid, [&](double t) { return evaluate(poly, std::polar(1.0, t)); });
    const auto boundary_path = project_plus(boundary, m);
    gaps.push_back((series_path.coeffs() - boundary_path.coeffs()).head(128).cwiseAbs().maxCoeff());
  }
  CHECK(gaps[0] < 2e-3);
  CHECK(gaps[1] < gaps[0] / 3);
}

TEST_CASE("membership verdicts") {
  const std::vector<Index> res{256, 512, 1024};
  const auto one = membership_test(1.0, CoeffSeries<double>{1.0}, res);
  CHECK(one.verdict == Verdict::member);
  CHECK(one.norms_by_resolution.back().second == doctest::Approx(std::sqrt(2.0)));
  CHECK(membership_test(0.25, CoeffSeries<double>{1.0}, res).verdict == Verdict::member);

  // (1-z)^{0.1} / (1-z)^1 is not in H^2, so the norms blow up.
  const SeriesGenerator<double> rough = [](Index k) { return binomial_series(0.1, k); };
  const auto bad = membership_test(1.0, rough, res);
  CHECK(bad.verdict == Verdict::non_member);
  CHECK(bad.growth_exponent > 0.1);
  for (std::size_t i = 1; i < bad.norms_by_resolution.size(); ++i)
    CHECK(bad.norms_by_resolution[i].second > bad.norms_by_resolution[i - 1].second);

  CHECK_THROWS_AS(membership_test(1.0, CoeffSeries<double>{1.0}, {256, 512}), std::invalid_argument);
  CHECK_THROWS_AS(membership_test(1.0, CoeffSeries<double>{1.0}, {256, 256, 512}), std::invalid_argument);
  CHECK_THROWS_AS(membership_test(-1.0, CoeffSeries<double>{1.0}, res), std::invalid_argument);
  CHECK(to_string(Verdict::non_member) == "non-member");
}

TEST_CASE("reproducing kernels") {
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto pair = pair_alpha(alpha, make_grid(4096), 1024);
    // Truncating T_{conj phi} costs about M^{-2 alpha - 1/2}.
    const double tol = alpha < 1 ? 2e-4 : 1e-8;
    for (cd wv : {cd(0), cd(0.3, -0.2), cd(-0.5, 0.4)}) {
      const DiskPoint<double> w(wv);
      const auto k = kernel_series(pair, w);
      for (cd z : {cd(0.1, 0.1), cd(-0.6, 0.0)}) {
        CHECK(std::abs(evaluate(k, z) - kernel_kwb(pair, w, DiskPoint<double>(z))) < 1e-8);
      }
      // ||k_w||_b^2 = k_w(w) = (1 - |b(w)|^2) / (1 - |w|^2)
      const double want = (1 - std::norm(pair.b(w))) / (1 - std::norm(wv));
      CHECK(HbElement<double>(pair, k).hb_norm_sq() == doctest::Approx(want).epsilon(tol));
    }
    std::mt19937_64 rng(9);
    for (int i = 0; i < 3; ++i) {
      const auto f = random_series(rng, 17);
      CHECK(reproducing_check(pair, f, DiskPoint<double>(0.2 * i, -0.1 * i)) < tol);
    }
  }
  const auto pair = pair_alpha(1.0, make_grid(256), 64);
  CHECK_THROWS_AS(reproducing_check(pair, CoeffSeries<double>::zero(40), DiskPoint<double>(0, 0)),
                  std::invalid_argument);
}

TEST_CASE("alpha_order and half-integers") {
  CHECK(alpha_order(0.25) == 0);
  CHECK(alpha_order(0.5) == 0);
  CHECK(alpha_order(0.51) == 1);
  CHECK(alpha_order(1.5) == 1);
  CHECK(alpha_order(2.0) == 2);
  CHECK(alpha_order(2.5) == 2);
  CHECK(is_half_integer(1.5));
  CHECK(!is_half_integer(1.3));
  CHECK_THROWS_AS(alpha_order(0.0), std::invalid_argument);
}

TEST_CASE("decompose on closed-form inputs") {
  const Index m = 256;
  SUBCASE("alpha = 1, f = z") {
    // z = 1 - (1 - z): poly 1, factor -1.
    const auto d = decompose(1.0, CoeffSeries<double>::monomial(1, m));
    CHECK(d.kind == "taylor+M(a)");
    CHECK(std::abs(d.poly_part[0] - 1.0) < 1e-6);
    CHECK(std::abs(d.ma_factor[0] + 1.0) < 1e-6);
    CHECK(d.ma_factor.coeffs().tail(m - 1).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(d.residual_norm < 1e-6);
    CHECK(d.taylor_stable[0]);
  }
  SUBCASE("alpha = 1/4, f = 1") {
    const auto d = decompose(0.25, CoeffSeries<double>::monomial(0, m));
    CHECK(d.kind == "M(a)");
    CHECK(max_abs(d.ma_factor, binomial_series(-0.25, m)) < 1e-14);
    CHECK(d.residual_norm < 1e-12);
    CHECK(d.membership.verdict == Verdict::member);
  }
  SUBCASE("alpha = 2, f = z^2") {
    // z^2 = (-1 + 2z) + (1 - z)^2
    const auto d = decompose(2.0, CoeffSeries<double>::monomial(2, m));
    CHECK(std::abs(d.poly_part[0] + 1.0) < 1e-6);
    CHECK(std::abs(d.poly_part[1] - 2.0) < 1e-6);
    CHECK(std::abs(d.ma_factor[0] - 1.0) < 1e-6);
    CHECK(d.ma_factor.coeffs().tail(m - 1).cwiseAbs().maxCoeff() < 1e-6);
    CHECK(!d.division_unstable);
  }
  SUBCASE("alpha = 3/2 uses the A_n branch") {
    const auto f = cauchy_product(binomial_series(1.5, m), CoeffSeries<double>{1.0, -0.5}, m);
    const auto d = decompose(1.5, f);
    CHECK(d.kind == "A_n+closure(M(a))");
    CHECK(!d.poly_available);
    CHECK(d.an_weights.size() == 1);
    CHECK(d.residual_norm < 1e-9);
  }
  SUBCASE("non-members are rejected") {
    CHECK_THROWS_AS(decompose(1.0, binomial_series(0.1, 1024)), std::domain_error);
    CHECK_THROWS_AS(decompose(1.0, CoeffSeries<double>::monomial(0, 16)), std::invalid_argument);
  }
}

TEST_CASE("Taylor data at 1 in the monomial basis") {
  // 2 - 3(z-1) + (z-1)^2 = 6 - 5z + z^2
  const auto p = from_taylor_at_one<double>({cd(2), cd(-3), cd(1)}, 3);
  CHECK(std::abs(p[0] - 6.0) < 1e-15);
  CHECK(std::abs(p[1] + 5.0) < 1e-15);
  CHECK(std::abs(p[2] - 1.0) < 1e-15);
  const auto e = taylor_exponents(1.3, 2, 0);
  CHECK(e.front() == doctest::Approx(1.0));
  CHECK(e[1] == doctest::Approx(1.3));
}

TEST_CASE("division diagnostics") {
  const std::vector<Index> res{256, 512, 1024, 2048};
  const auto smooth = division_diagnostic<double>(1.0, [](Index k) { return binomial_series(1.0, k); }, res);
  CHECK(smooth.norms_by_resolution.back().second == doctest::Approx(1.0));
  CHECK(std::abs(smooth.growth_exponent) < 1e-12);
  CHECK(!smooth.tail_flag);
  // 1/(1-z) has ||.||_{M} = sqrt(M).
  const auto one = division_diagnostic<double>(1.0, [](Index k) { return CoeffSeries<double>::monomial(0, k); }, res);
  CHECK(one.growth_exponent == doctest::Approx(0.5));
  CHECK(one.strictly_increasing);

  // Exact quotients survive long series. Forward error grows roughly like
  // eps M^{alpha - 1/2}: 2e-6 at alpha = 3.2, M = 2^14.
  const Index m = 1 << 14;
  const CoeffSeries<double> h{cd(0.3, -1), cd(2), cd(0, 0.5), cd(-1, 1)};
  for (auto [alpha, tol] : {std::pair{0.75, 1e-10}, std::pair{2.4, 1e-6}, std::pair{3.2, 1e-5}}) {
    const auto q = divide_by_power(cauchy_product(binomial_series(alpha, m), h, m), alpha);
    CHECK(max_abs(q, h) < tol);
    CHECK((cauchy_product(binomial_series(alpha, m), q, m) - cauchy_product(binomial_series(alpha, m), h, m)).l2_norm() < 1e-9);
  }
}

TEST_CASE("backward-shift basis") {
  const auto b1 = sstar_basis(1.0, 1, 8);
  CHECK(b1.size() == 1);
  CHECK(max_abs(b1[0], CoeffSeries<double>::monomial(0, 8, -1.0)) < 1e-15);
  // (1-z)^2 = 1 - 2z + z^2
  const auto b2 = sstar_basis(2.0, 2, 8);
  CHECK(max_abs(b2[0], CoeffSeries<double>{-2.0, 1.0}) < 1e-15);
  CHECK(max_abs(b2[1], CoeffSeries<double>{1.0}) < 1e-15);
  const auto b13 = sstar_basis(1.3);
  CHECK(b13.size() == 1);
  CHECK(b13[0][0].real() == doctest::Approx(-1.3));
  CHECK_THROWS_AS(sstar_basis(0.3, 0, 8), std::invalid_argument);
}

TEST_CASE("splitting of M(conj (1-z)^alpha)") {
  const auto zero = decompose_mabar(1.2, CoeffSeries<double>::zero(32), 64);
  CHECK(zero.h.l2_norm() == 0.0);
  CHECK(zero.residual == 0.0);

  // alpha = 1, g = 1: f = 1 = -c_1 S*(1-z) with c_1 = -1 and h = 0.
  const auto one = decompose_mabar(1.0, CoeffSeries<double>{1.0}, 64);
  CHECK(std::abs(one.f[0] - 1.0) < 1e-14);
  CHECK(one.c.size() == 1);
  CHECK(std::abs(one.c[0] + 1.0) < 1e-14);
  CHECK(one.h.l2_norm() < 1e-14);
  CHECK(one.residual < 1e-14);

  // Finite-section error leaks into the leading coefficients; measured at
  // N = 256 -> 1024: 2.6e-5 -> 3.2e-6 (0.8), 9.0e-6 -> 1.1e-6 (1.2), 5.1e-7 -> 1.6e-8 (2.3).
  std::mt19937_64 rng(4);
  for (double alpha : {0.8, 1.2, 2.3}) {
    const auto g = random_series(rng, 16);
    const auto s = decompose_mabar(alpha, g, 256);
    const auto fine = decompose_mabar(alpha, g, 1024);
    CHECK(s.sigma_min > 0.1);
    CHECK(s.c.size() == std::size_t(alpha_order(alpha)));
    CHECK(fine.residual < 1e-4 * g.l2_norm());
    CHECK(fine.residual < s.residual);
  }
  CHECK_THROWS_AS(decompose_mabar(1.5, CoeffSeries<double>{1.0}, 64), std::invalid_argument);
  CHECK_THROWS_AS(decompose_mabar(0.3, CoeffSeries<double>{1.0}, 64), std::invalid_argument);
}

TEST_CASE("A_n vectors at half-integers") {
  const Index m = 256;
  const auto grid = make_grid(16384);
  const auto basis = an_basis(1.5, grid, m);
  REQUIRE(basis.size() == 1);
  CHECK(max_abs(basis[0], an_vector_direct(1.5, 0, m, 16384)) < 1e-8);

  const auto b52 = an_basis(2.5, grid, m);
  REQUIRE(b52.size() == 2);
  for (Index k = 0; k < 2; ++k) CHECK(max_abs(b52[k], an_vector_direct(2.5, k, m, 16384)) < 1e-8);
  // Independent: the 2x2 Gram determinant is bounded away from 0.
  const cd g00 = h2_inner(b52[0], b52[0]), g11 = h2_inner(b52[1], b52[1]), g01 = h2_inner(b52[0], b52[1]);
  const double det = (g00 * g11 - g01 * std::conj(g01)).real();
  CHECK(det > 1e-3 * g00.real() * g11.real());

  CHECK_THROWS_AS(an_basis(1.3, grid, m), std::invalid_argument);
  CHECK_THROWS_AS(an_basis(0.5, grid, m), std::invalid_argument);
}

TEST_CASE("inclusions and inner factors") {
  const std::vector<Index> res{128, 256, 512};
  const SeriesGenerator<double> one = [](Index k) { return CoeffSeries<double>::monomial(0, k); };
  const auto r = inclusion_check(0.5, 1.5, one, res);
  CHECK(r.in_alpha.verdict == Verdict::member);
  CHECK(r.in_beta.verdict == Verdict::member);
  CHECK(r.consistent);
  CHECK_THROWS_AS(inclusion_check(1.5, 0.5, one, res), std::invalid_argument);

  const auto b = blaschke_equiv_check(1.0, {DiskPoint<double>(0.0, 0.0)}, one, res);
  CHECK(b.agree);
  CHECK(b.with_u.verdict == Verdict::member);
  const SeriesGenerator<double> rough = [](Index k) { return binomial_series(0.1, k); };
  const auto bad = blaschke_equiv_check(1.0, {DiskPoint<double>(0.3, 0.2)}, rough, {256, 512, 1024});
  CHECK(bad.plain.verdict == Verdict::non_member);
  CHECK(bad.agree);
}

TEST_CASE("Gauss-Legendre") {
  const auto [x, w] = gauss_legendre<double>(20);
  CHECK(w.sum() == doctest::Approx(2.0).epsilon(1e-14));
  double m38 = 0;
  for (Index i = 0; i < x.size(); ++i) m38 += w(i) * std::pow(x(i), 38);
  CHECK(m38 == doctest::Approx(2.0 / 39).epsilon(1e-12));
}

TEST_CASE("regularity integral exponents follow 2 alpha + 1 - 2n") {
  for (auto [alpha, n] : {std::pair{0.3, 1}, std::pair{0.7, 1}, std::pair{1.1, 2}, std::pair{1.9, 2}}) {
    const auto r = regularity_integral(alpha, Index(n), default_cutoffs<double>());
    CHECK(r.fitted_exponent == doctest::Approx(2 * alpha + 1 - 2 * n).epsilon(1e-3));
    CHECK(r.verdict == (2 * alpha + 1 - 2 * n > 0 ? RegularityVerdict::converges : RegularityVerdict::diverges));
    CHECK(r.values.size() == 8);
  }
  // Log divergence at alpha = n - 1/2 reads as inconclusive.
  CHECK(regularity_integral(1.5, Index(2), default_cutoffs<double>()).verdict == RegularityVerdict::inconclusive);

  // Oracle for alpha = 1, n = 1 on [0.1, pi]: the integrand reduces to
  // log(1 + x)/x with x = 4 sin^2(t/2); composite Simpson, 20000 intervals.
  const int intervals = 20000;
  double acc = 0;
  for (int i = 0; i <= intervals; ++i) {
    const double t = 0.1 + (pi - 0.1) * i / intervals;
    const double x = 4 * std::sin(t / 2) * std::sin(t / 2);
    acc += std::log1p(x) / x * (i == 0 || i == intervals ? 1 : (i % 2 ? 4 : 2));
  }
  const double oracle = acc * (pi - 0.1) / (3.0 * intervals);
  CHECK(regularity_integral(1.0, Index(1), default_cutoffs<double>()).values[0] == doctest::Approx(oracle).epsilon(1e-10));

  CHECK_THROWS_AS(regularity_integral(1.0, Index(0), default_cutoffs<double>()), std::invalid_argument);
  CHECK_THROWS_AS(regularity_integral(1.0, Index(1), {0.1, 0.2, 0.01}), std::invalid_argument);
}

TEST_CASE("measured quantities") {
  std::mt19937_64 rng(6);
  for (double alpha : {0.5, 1.0, 2.0}) {
    const auto pair = pair_alpha(alpha, make_grid(4096), 1024);
    for (int i = 0; i < 4; ++i) {
      const double r = mabar_norm_ratio(pair, random_series(rng, 64));
      CHECK(r <= 1.0 + 1e-12);
      CHECK(r >= 1 / std::sqrt(1 + std::pow(4.0, alpha)) - 1e-12);
    }
    CHECK(commutation_defect(pair, CoeffSeries<double>{1.0, 0.5, cd(0, -0.25)}, random_series(rng, 40)) < 1e-10);
  }
  const auto pair = pair_alpha(1.0, make_grid(4096), 1024);
  CHECK_THROWS_AS(mabar_norm_ratio(pair, CoeffSeries<double>::zero(4)), std::invalid_argument);

  // f in (1-z)^{1/2} P_2 is reached exactly once the degree allows it.
  const auto f = cauchy_product(binomial_series(0.5, 1024), CoeffSeries<double>{1.0, 2.0, -1.0}, 1024);
  const auto rows = density_experiment(pair, f, {1, 2, 3, 6});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].distance <= rows[i - 1].distance + 1e-12);
  CHECK(rows[0].distance > 1e-2);
  CHECK(rows[2].distance < 1e-10);
}
