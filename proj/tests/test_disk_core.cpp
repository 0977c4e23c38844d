#include "hblab/disk_core.hpp"

#include <doctest.h>

#include <random>

using namespace hblab;
using cd = std::complex<double>;
constexpr double pi = std::numbers::pi;

namespace {

// c_{k+1} = c_k (k - alpha)/(k + 1)
std::vector<double> ratio_recurrence(double alpha, int m) {
  std::vector<double> c(m);
  c[0] = 1;
  for (int k = 0; k + 1 < m; ++k) c[k + 1] = c[k] * (k - alpha) / (k + 1);
  return c;
}

}  // namespace

TEST_CASE("make_grid places midpoints") {
  const auto g = make_grid(8);
  for (Index j = 0; j < 8; ++j) CHECK(g.node(j) == doctest::Approx((2 * j + 1) * pi / 8));
  CHECK(make_grid(4096).spacing() == doctest::Approx(2 * pi / 4096));
  CHECK_THROWS_AS(make_grid(5), std::invalid_argument);

  const auto t = make_grid(64).nodes();
  CHECK(t(0) > 0);
  CHECK(t(63) < 2 * pi);
  for (Index j = 1; j < 64; ++j) CHECK(t(j) > t(j - 1));
}

TEST_CASE("project_plus on trigonometric samples") {
  const auto g = make_grid(64);
  const auto e1 = project_plus(sample(g, [](double t) { return std::polar(1.0, t); }), 8);
  CHECK(std::abs(e1[1] - 1.0) < 1e-14);
  CHECK((e1.coeffs() - CoeffSeries<double>::monomial(1, 8).coeffs()).norm() < 1e-14);

  const auto em1 = project_plus(sample(g, [](double t) { return std::polar(1.0, -t); }), 8);
  CHECK(em1.l2_norm() < 1e-14);

  const auto chord = project_plus(sample(g, [](double t) { return 2 - 2 * std::cos(t); }), 8);
  CHECK(std::abs(chord[0] - 2.0) < 1e-14);
  CHECK(std::abs(chord[1] + 1.0) < 1e-14);
  for (Index k = 2; k < 8; ++k) CHECK(std::abs(chord[k]) < 1e-14);

  CHECK_THROWS_AS(project_plus(sample(g, [](double) { return 1.0; }), 33), std::invalid_argument);
}

TEST_CASE("project_minus complements project_plus") {
  const auto g = make_grid(64);
  const auto em1 = sample(g, [](double t) { return std::polar(1.0, -t); });
  CHECK((project_minus(em1).values() - em1.values()).norm() < 1e-13);
  CHECK(project_minus(sample(g, [](double t) { return std::polar(1.0, t); })).max_abs() < 1e-13);
  CHECK(project_minus(sample(g, [](double) { return 1.0; })).max_abs() < 1e-13);

  const auto s = sample(g, [](double t) { return cd(std::exp(std::cos(t)), std::sin(3 * t)); });
  const auto sum = synthesize(project_plus(s, 32), g) + project_minus(s);
  CHECK((sum.values() - s.values()).norm() < 1e-12);
}

TEST_CASE("project_plus is idempotent through synthesize") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-1, 1);
  const auto g = make_grid(128);
  const auto s = sample(g, [&](double) { return cd(u(rng), u(rng)); });
  const auto p = project_plus(s, 64);
  const auto pp = project_plus(synthesize(p, g), 64);
  CHECK((p.coeffs() - pp.coeffs()).norm() < 1e-13);
}

TEST_CASE("polynomials are recovered exactly") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(-1, 1);
  ComplexVector<double> c(40);
  for (auto& x : c) x = cd(u(rng), u(rng));
  const CoeffSeries<double> p(c);
  const auto g = make_grid(160);
  const auto s = sample(g, [&](double t) { return evaluate(p, std::polar(1.0, t)); });
  CHECK((project_plus(s, 40).coeffs() - c).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("outer functions of simple moduli") {
  const auto g = make_grid(256);
  const OuterFunction<double> one(sample(g, [](double) { return 1.0; }));
  CHECK(std::abs(one(cd(0.3, -0.4)) - 1.0) < 1e-14);
  const OuterFunction<double> c(sample(g, [](double) { return 2.5; }));
  CHECK(std::abs(c(cd(0, 0)) - 2.5) < 1e-13);

  CHECK_THROWS_AS(OuterFunction<double>(sample(g, [](double t) { return t < 1 ? 0.0 : 1.0; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(OuterFunction<double>(sample(g, [](double t) { return t < 1 ? -1.0 : 1.0; })),
                  std::invalid_argument);
  CHECK_THROWS_AS(OuterFunction<double>(sample(g, [](double t) { return t < 1 ? 1e300 * 1e300 : 1.0; })),
                  NumericalError);
}

TEST_CASE("outer of |1 - e^{it}| at the origin") {
  // Oracle: (1/pi) int_0^pi log(2 sin(t/2)) dt with t = pi u^4 and composite
  // Simpson in u, which removes the endpoint singularity.
  const int intervals = 200000;
  double acc = 0;
  for (int i = 0; i <= intervals; ++i) {
    const double u = double(i) / intervals;
    const double t = pi * u * u * u * u;
    const double f = i == 0 ? 0.0 : std::log(2 * std::sin(t / 2)) * 4 * pi * u * u * u;
    acc += f * (i == 0 || i == intervals ? 1 : (i % 2 ? 4 : 2));
  }
  const double computed = acc / (3.0 * intervals) / pi;
  const double oracle = 0.0;  // frozen
  CHECK(std::abs(computed - oracle) < 1e-9);
  const auto g = make_grid(1 << 16);
  const auto w = sample(g, [](double t) { return chord_to_one(t); });
  const cd plain = outer_from_log_modulus(w, DiskPoint<double>(0, 0));
  CHECK(std::abs(plain.imag()) < 1e-14);
  CHECK(std::abs(plain.real() - std::exp(oracle)) < 1e-4);
  const cd split = outer_from_log_modulus(w, DiskPoint<double>(0, 0), 1.0);
  CHECK(std::abs(split - std::exp(oracle)) < 1e-13);
  // With the exponent split off, F(z) = 1 - z everywhere.
  const OuterFunction<double> f(w, 1.0);
  CHECK(std::abs(f(cd(0.4, 0.5)) - (1.0 - cd(0.4, 0.5))) < 1e-13);
}

TEST_CASE("outer value at 0 is real positive and outer is multiplicative") {
  const auto g = make_grid(1024);
  const auto w1 = sample(g, [](double t) { return 1.5 + std::cos(t); });
  const auto w2 = sample(g, [](double t) { return std::exp(std::sin(2 * t)) * (2 + std::sin(t)); });
  const OuterFunction<double> f1(w1), f2(w2), f12(w1 * w2);
  const cd at0 = f12(0.0);
  CHECK(at0.real() > 0);
  CHECK(std::abs(at0.imag()) < 1e-14);
  for (cd z : {cd(0.2, 0.1), cd(-0.7, 0.3), cd(0.0, 0.95)}) {
    CHECK(std::abs(f12(z) - f1(z) * f2(z)) < 1e-12 * std::abs(f12(z)));
  }
  // The boundary trace reproduces the modulus exactly.
  CHECK((f12.boundary_trace().values().cwiseAbs() - (w1 * w2).values().real()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("binomial_series") {
  const auto h = binomial_series(0.5, 4);
  const double want[] = {1, -0.5, -0.125, -0.0625};
  for (int k = 0; k < 4; ++k) CHECK(h[k].real() == doctest::Approx(want[k]).epsilon(1e-15));
  const auto one = binomial_series(1.0, 3);
  CHECK(one[0] == cd(1));
  CHECK(one[1] == cd(-1));
  CHECK(one[2] == cd(0));

  const int m = 4000;
  const auto c = binomial_series(2.5, m);
  const auto oracle = ratio_recurrence(2.5, m);
  double worst = 0;
  for (int k = 0; k < m; ++k) worst = std::max(worst, std::abs(c[k].real() - oracle[k]) / std::abs(oracle[k]));
  CHECK(worst < 1e-10);
  // |c_k| ~ k^{-alpha-1} / |Gamma(-alpha)|
  const double k = 3000;
  CHECK(std::abs(c[3000]) * std::pow(k, 3.5) * std::abs(std::tgamma(-2.5)) == doctest::Approx(1.0).epsilon(2e-3));
  CHECK(std::isfinite(c.l2_norm()));
  CHECK(c.coeffs().tail(m - 1000).norm() < 1e-6);

  for (double a : {-0.25, 0.75, 1.3, -1.5}) {
    const auto s = binomial_series(a, 500);
    const auto o = ratio_recurrence(a, 500);
    for (int j = 0; j < 500; ++j) CHECK(std::abs(s[j].real() - o[j]) <= 1e-11 * std::max(1.0, std::abs(o[j])));
  }
}

TEST_CASE("binomial series multiply like powers") {
  const Index m = 512;
  const auto prod = cauchy_product(binomial_series(0.3, m), binomial_series(1.45, m), m);
  const auto direct = binomial_series(1.75, m);
  CHECK((prod.coeffs() - direct.coeffs()).head(m / 2).cwiseAbs().maxCoeff() < 1e-10);
  // The FFT path and the direct path agree.
  const auto small = cauchy_product(binomial_series(0.3, 40), binomial_series(1.45, 40), 40);
  CHECK((small.coeffs() - direct.coeffs().head(40)).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("evaluate and shift_star") {
  const CoeffSeries<double> p{1.0, -1.0, 0.0};
  CHECK(std::abs(evaluate(p, cd(0.5)) - 0.5) < 1e-15);
  CHECK(evaluate(binomial_series(0.5, 64), cd(0)) == cd(1));
  CHECK(std::abs(evaluate(binomial_series(1.0, 64), cd(0.37)) - 0.63) < 1e-15);

  const CoeffSeries<double> c{1.0, 2.0, 3.0};
  const auto s = shift_star(c);
  CHECK(s.size() == 2);
  CHECK(s[0] == cd(2));
  CHECK(s[1] == cd(3));
  const auto one = shift_star(binomial_series(1.0, 8));
  CHECK(one[0] == cd(-1));
  CHECK(one.l2_norm() == doctest::Approx(1.0));
  CHECK(evaluate(shift_star(binomial_series(0.7, 32)), cd(0)).real() == doctest::Approx(-0.7));
  CHECK_THROWS_AS(shift_star(c, 0), std::invalid_argument);
}

TEST_CASE("series_quotient inverts cauchy_product") {
  const auto a = binomial_series(0.6, 100);
  const auto q = series_quotient(CoeffSeries<double>::monomial(0, 100), a, 100);
  CHECK((q.coeffs() - binomial_series(-0.6, 100).coeffs()).cwiseAbs().maxCoeff() < 1e-13);
}

TEST_CASE("DiskPoint rejects the boundary") {
  CHECK_THROWS_AS(DiskPoint<double>(1.0, 0.0), std::invalid_argument);
  CHECK_NOTHROW(DiskPoint<double>(0.999, 0.0));
}
