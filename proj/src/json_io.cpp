#include "hblab/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace hblab {

double round12(double x) {
  if (!std::isfinite(x) || x == 0.0) return x == 0.0 ? 0.0 : x;
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.11e", x);
  return std::strtod(buf, nullptr);
}

Json number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return round12(x);
}

Json complex_value(std::complex<double> z) { return Json::array({number(z.real()), number(z.imag())}); }

Json complex_array(const CoeffSeries<double>& s) {
  Json out = Json::array();
  for (Index k = 0; k < s.size(); ++k) out.push_back(complex_value(s.coeffs()(k)));
  return out;
}

PairDiagnostics diagnose_pair(const PythagoreanPair<double>& pair,
                              const std::vector<std::complex<double>>& sandwich_points) {
  PairDiagnostics d;
  d.pyth_residual = pair.pyth_residual();
  d.corona_min = pair.corona_min();
  if (pair.alpha) d.corona_bound = corona_bound(*pair.alpha);
  const RadialLimit<double> lim = radial_limit_at_one(pair, 0);
  d.b_at_one = lim.value;
  d.b_at_one_stable = lim.stable;
  if (pair.alpha) {
    for (const auto& z : sandwich_points) d.sandwich.emplace_back(z, sandwich_check(pair, DiskPoint<double>(z)));
  }
  return d;
}

Json to_json(const PythagoreanPair<double>& pair, const PairDiagnostics& diag) {
  Json j;
  j["alpha"] = pair.alpha ? number(*pair.alpha) : Json(nullptr);
  j["n_points"] = pair.grid.size();
  j["M"] = pair.degree_bound;
  j["a_coeffs"] = complex_array(pair.a_series);
  j["b_coeffs"] = complex_array(pair.b_series);
  Json d;
  d["pyth_residual"] = number(diag.pyth_residual);
  d["corona_min"] = number(diag.corona_min);
  d["b_at_one"] = number(diag.b_at_one.real());
  d["b_at_one_imag"] = number(diag.b_at_one.imag());
  d["b_at_one_stable"] = diag.b_at_one_stable;
  d["corona_bound"] = number(diag.corona_bound);
  Json sw = Json::array();
  for (const auto& [z, r] : diag.sandwich) {
    Json row;
    row["z"] = complex_value(z);
    row["lower"] = number(r.lower);
    row["value"] = number(r.value);
    row["upper"] = number(r.upper);
    row["holds"] = r.holds;
    sw.push_back(row);
  }
  d["sandwich"] = sw;
  j["diagnostics"] = d;
  return j;
}

Json to_json(const MembershipReport<double>& r) {
  Json j;
  Json rows = Json::array();
  for (const auto& [m, v] : r.norms_by_resolution) rows.push_back(Json::array({m, number(v)}));
  j["norms_by_resolution"] = rows;
  j["verdict"] = to_string(r.verdict);
  j["growth_exponent"] = number(r.growth_exponent);
  return j;
}

Json to_json(const HbDecomposition<double>& d) {
  Json j;
  j["alpha"] = number(d.alpha);
  j["n"] = d.n;
  j["kind"] = d.kind;
  j["poly_available"] = d.poly_available;
  j["poly_coeffs"] = d.poly_available ? complex_array(d.poly_part) : Json::array();
  j["ma_coeffs"] = complex_array(d.ma_factor);
  j["an_coeffs"] = complex_array(d.an_part);
  Json w = Json::array();
  for (const auto& x : d.an_weights) w.push_back(complex_value(x));
  j["an_weights"] = w;
  j["residual_norm"] = number(d.residual_norm);
  j["division_unstable"] = d.division_unstable;
  j["membership"] = to_json(d.membership);
  return j;
}

Json to_json(const DivisionDiagnostic<double>& d) {
  Json j;
  Json rows = Json::array();
  for (const auto& [m, v] : d.norms_by_resolution) rows.push_back(Json::array({m, number(v)}));
  j["norms_by_resolution"] = rows;
  j["growth_exponent"] = number(d.growth_exponent);
  j["strictly_increasing"] = d.strictly_increasing;
  j["tail_flag"] = d.tail_flag;
  return j;
}

Json to_json(const RegularityResult<double>& r) {
  Json j;
  j["alpha"] = number(r.alpha);
  j["n"] = r.n;
  Json c = Json::array(), v = Json::array();
  for (double x : r.cutoffs) c.push_back(number(x));
  for (double x : r.values) v.push_back(number(x));
  j["cutoffs"] = c;
  j["values"] = v;
  j["fitted_exponent"] = number(r.fitted_exponent);
  j["verdict"] = to_string(r.verdict);
  return j;
}

Json to_json(const KernelEstimate<double>& e) {
  Json j;
  j["dimension"] = e.dimension;
  j["sigma_max"] = number(e.sigma_max);
  j["next_sigma"] = number(e.next_sigma);
  j["gap_ratio"] = number(e.gap_ratio);
  j["trusted"] = e.trusted;
  Json s = Json::array();
  for (Index i = 0; i < e.smallest.size(); ++i) s.push_back(number(e.smallest(i)));
  j["smallest"] = s;
  return j;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace hblab
