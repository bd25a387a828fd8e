#pragma once
// ---------------------------------------------------------------------------
// The verification suite: each check exercises one identity, bound, or
// asymptotic claim about the adjoint operator, with every tolerance pinned
// in the implementation (overridable per check through VerifyConfig::tol).
//
// Checks (in run order):
//   series_closed_form  closed form of sum (k+1)(k+2) s^k vs direct sums,
//                       and its (1-s)^-3 blow-up near s = 1
//   adjoint_identity    integral form == series form of the adjoint on a
//                       randomized polynomial suite
//   ratio_bound         sup (1-|z|^2)^2 |(z^2 f')'| <= 4 ||f||_Bloch-semi
//                       across a fixed + randomized function suite
//   lower_witness       the logarithmic witness forces values near 2:
//                       Bloch norm 1, weighted sup of the truncated-kernel
//                       limit in [1.99, 2], closed truncation vs quadrature
//   growth              slope of log value(n) vs log n for the normalized
//                       family matches 2 + alpha within 0.15
//   duality             the pairing identity on three monomial cases
//   family_bloch        Bloch seminorms of the normalized family stay near 1
//                       (informational unless strict_family_bloch)
// ---------------------------------------------------------------------------

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "bergman/report.hpp"

namespace bergman {

struct VerifyConfig {
  double alpha = -1.0;  // weight exponent used by growth and duality; [-2, -1]
  std::uint64_t seed = 7;
  std::vector<std::string> only;      // empty = run every check
  std::map<std::string, double> tol;  // per-check primary tolerance override
  bool strict_family_bloch = false;   // gate family_bloch instead of reporting
};

// Names in canonical run order.
const std::vector<std::string>& check_names();

// The normalized-family growth curve: for each n (powers of two from n_min
// to n_max) the value (1/C_n) (1 - z_n^2)^{-alpha} z_n S_n(z_n^2) with
// z_n = 1 - 1/n. Requires 1 <= n_min <= n_max <= 100000 and alpha in [-2, -1].
struct GrowthPoint {
  long long n = 0;
  double value = 0.0;
};
std::vector<GrowthPoint> growth_values(double alpha, long long n_min, long long n_max);

// Least-squares slope of log(value) against log(n); needs >= 2 points.
double growth_slope(const std::vector<GrowthPoint>& points);

CheckReport check_series_closed_form(const VerifyConfig& cfg = {});
CheckReport check_adjoint_identity(const VerifyConfig& cfg = {});
CheckReport check_ratio_bound(const VerifyConfig& cfg = {});
CheckReport check_lower_witness(const VerifyConfig& cfg = {});
CheckReport check_growth(const VerifyConfig& cfg = {});
CheckReport check_duality(const VerifyConfig& cfg = {});
CheckReport check_family_bloch(const VerifyConfig& cfg = {});

// Runs one check by name; throws std::invalid_argument for unknown names.
CheckReport run_check(const std::string& name, const VerifyConfig& cfg = {});

// Runs the configured subset in canonical order.
std::vector<CheckReport> run_all(const VerifyConfig& cfg = {});

// True when every non-informational report passes.
bool aggregate_pass(const std::vector<CheckReport>& reports);

}  // namespace bergman
