#pragma once
// ---------------------------------------------------------------------------
// Derivative-free search for functions with a large ratio
//
//     extremal_ratio(f) = sup (1-|z|^2)^2 |(z^2 f')'|  /  sup (1-|z|^2) |f'|.
//
// The known two-sided bound places the supremum of this ratio over
// non-constant Bloch functions in [2, 4]; the search explores two parametric
// families with restarted adaptive Nelder-Mead to tighten the lower end
// empirically.
//
// Parameter packing (real vector x, as consumed by `objective`):
//   polynomial family (degree d):
//     x = [Re c_1, Im c_1, ..., Re c_d, Im c_d],  f(z) = sum_k c_k z^k
//   mobius_combo family (m atoms):
//     x = [Re a_1, Im a_1, Re v_1, Im v_1, ...],  f = sum_i a_i phi_{l_i}
//     with l_i = v_i / sqrt(1 + |v_i|^2) (an unconstrained chart of the disk).
//
// Every objective evaluation asserts the ratio stays <= 4 + 1e-6 and throws
// std::logic_error otherwise; the search can only ever tighten the bracket
// from below.
// ---------------------------------------------------------------------------

#include <cstdint>
#include <vector>

#include "bergman/funcspace.hpp"

namespace bergman {

enum class SearchFamily { polynomial, mobius_combo };

struct SearchConfig {
  SearchFamily family = SearchFamily::polynomial;
  int degree = 21;    // polynomial family: highest power, in [1, 30]
  int atoms = 2;      // mobius_combo family: number of atoms, in [1, 8]
  int restarts = 20;  // random starts, run after the two deterministic ones
  int iterations = 2000;  // Nelder-Mead iteration cap per start
  double step_init = 0.25;
  double step_tol = 1e-8;  // simplex diameter termination
  std::uint64_t seed = 7;
  // Coarse sup scans inside the loop (see SupScanParams::search_profile);
  // the returned best candidate is always rescored on the default profile.
  bool light_objective = true;
  bool record_history = true;
};

struct HistoryRow {
  int start = 0;      // 0 = identity warm start, 1 = truncated-log warm start
  int iteration = 0;
  double value = 0.0;  // best ratio seen so far within this start
};

struct SearchResult {
  double best_value = 0.0;           // full-profile rescore of the best point
  std::vector<Complex> best_params;  // family packing, see header comment
  Complex witness_point{0.0, 0.0};   // argmax of the numerator sup
  int starts_run = 0;
  int best_start = -1;
  std::vector<HistoryRow> history;
};

// Number of real parameters for a family config.
int parameter_count(const SearchConfig& cfg);

// Builds the function a packed parameter vector describes.
AnalyticFn assemble(const std::vector<double>& x, const SearchConfig& cfg);

// extremal_ratio(assemble(x)) under the configured scan profile; returns 0
// for degenerate candidates (vanishing Bloch seminorm).
double objective(const std::vector<double>& x, const SearchConfig& cfg);

SearchResult search(const SearchConfig& cfg = {});

}  // namespace bergman
