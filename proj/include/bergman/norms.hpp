#pragma once
// ---------------------------------------------------------------------------
// Weighted boundary suprema and the norms built from them.
//
// The central primitive is
//     weighted_sup(h, beta) ~ sup_{|z|<1} (1 - |z|^2)^beta |h(z)|
// estimated on boundary-clustered rings: ring j has radius 1 - 2^-j
// (ring 0 is the single point z = 0) with an angular resolution that grows
// with j. Scanning stops once the running maximum is stable across two
// consecutive rings (never before min_levels), and the best grid point is
// polished by alternating golden-section line searches in radius and angle.
//
// On top of it:
//   bloch_seminorm(f)      = sup (1-|z|^2) |f'(z)|
//   bloch_norm(f)          = |f(0)| + bloch_seminorm(f)
//   extremal_functional(f) = sup (1-|z|^2)^2 |(z^2 f'(z))'|
//   extremal_ratio(f)      = extremal_functional(f) / bloch_seminorm(f)
//   besov_seminorm(f, p)   = [ int |f'|^p (1-|z|^2)^{p-2} dA_0 ]^{1/p},
//                            stabilized over the radii 0.99, 0.995, 0.999.
//
// All scans are deterministic: fixed grids, fixed iteration counts, strict
// improvement updates (ties keep the earlier point).
// ---------------------------------------------------------------------------

#include <functional>

#include "bergman/diskquad.hpp"
#include "bergman/funcspace.hpp"

namespace bergman {

struct SupEstimate {
  double value = 0.0;
  Complex argmax{0.0, 0.0};
  int grid_levels = 0;         // rings actually scanned
  double boundary_offset = 1.0;  // smallest 1 - |z| sampled
  double uncertainty = 0.0;    // larger of last grid increment / polish gain
};

struct SupScanParams {
  int max_levels = 20;         // rings at radii 1 - 2^-j, j = 0..max_levels
  int min_levels = 8;          // never stop before scanning this many rings
  int base_angular_log2 = 8;   // ring j samples 2^max(base, j + growth) angles
  int angular_growth = 4;
  double stability_rel = 1e-6; // two consecutive stable rings end the scan
  int polish_rounds = 2;       // golden-section rounds (radius, then angle)

  // Coarse profile used inside optimization loops: fewer rings, capped
  // angular resolution, one polish round. Final results should be rescored
  // with the default profile.
  static SupScanParams search_profile();
};

SupEstimate weighted_sup(const std::function<Complex(Complex)>& h, double beta,
                         const SupScanParams& params = {});

SupEstimate bloch_seminorm(const AnalyticFn& f, const SupScanParams& params = {});
double bloch_norm(const AnalyticFn& f, const SupScanParams& params = {});

// Requires p > 1 (the weight exponent p - 2 must exceed -2 and the limit
// must exist); throws std::invalid_argument otherwise.
double besov_seminorm(const AnalyticFn& f, double p, const QuadratureSpec& spec = {});

SupEstimate extremal_functional(const AnalyticFn& f, const SupScanParams& params = {});

// Throws std::domain_error when the Bloch seminorm vanishes (constants).
double extremal_ratio(const AnalyticFn& f, const SupScanParams& params = {});

// For fixed m in [0, 1), the profile phi(r) = (1 - r^2)(r^2 - m^2) on
// [m, 1) attains its maximum at r* = sqrt((1 + m^2)/2) with value
// (1 - m^2)^2 / 4. This is the radius choice behind the norm lower bound.
struct OptimalRadius {
  double r = 0.0;
  double phi_max = 0.0;
};
OptimalRadius optimal_radius(double mod_z);

}  // namespace bergman
