// JSON documents for pairs, membership reports, decompositions and sweeps.
// Every float is rounded to 12 significant digits so output is reproducible
// byte for byte.
#pragma once

#include "hblab/checks.hpp"
#include "hblab/decomposition.hpp"
#include "hblab/hb_space.hpp"
#include "hblab/pythagorean_pairs.hpp"
#include "hblab/toeplitz_lab.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace hblab {

using Json = nlohmann::ordered_json;

double round12(double x);
Json number(double x);
Json complex_value(std::complex<double> z);
Json complex_array(const CoeffSeries<double>& s);

struct PairDiagnostics {
  double pyth_residual = 0;
  double corona_min = 0;
  double corona_bound = 0;
  std::complex<double> b_at_one;
  bool b_at_one_stable = false;
  std::vector<std::pair<std::complex<double>, SandwichReport<double>>> sandwich;
};

PairDiagnostics diagnose_pair(const PythagoreanPair<double>& pair, const std::vector<std::complex<double>>& sandwich_points);

Json to_json(const PythagoreanPair<double>& pair, const PairDiagnostics& diag);
Json to_json(const MembershipReport<double>& r);
Json to_json(const HbDecomposition<double>& d);
Json to_json(const DivisionDiagnostic<double>& d);
Json to_json(const RegularityResult<double>& r);
Json to_json(const KernelEstimate<double>& e);

/// Indented dump with a trailing newline.
std::string dump(const Json& j);

}  // namespace hblab
