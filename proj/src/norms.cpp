#include "bergman/norms.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bergman {

namespace {

constexpr double kTwoPi = 2.0 * M_PI;

void validate_params(const SupScanParams& p, double beta) {
  if (!(beta >= 0.0))
    throw std::invalid_argument("weighted_sup: beta must be >= 0");
  if (p.max_levels < 1 || p.max_levels > 24)
    throw std::invalid_argument("weighted_sup: max_levels must lie in [1, 24]");
  if (p.min_levels < 1)
    throw std::invalid_argument("weighted_sup: min_levels must be >= 1");
  if (p.base_angular_log2 < 2 || p.base_angular_log2 > 24)
    throw std::invalid_argument("weighted_sup: base_angular_log2 must lie in [2, 24]");
  if (!(p.stability_rel > 0.0))
    throw std::invalid_argument("weighted_sup: stability_rel must be positive");
  if (p.polish_rounds < 0 || p.polish_rounds > 8)
    throw std::invalid_argument("weighted_sup: polish_rounds must lie in [0, 8]");
}

struct ScanState {
  double best = -1.0;
  Complex argmax{0.0, 0.0};
  int best_level = 0;
  long long best_m = 1;
  double best_theta = 0.0;
  double max_radius = 0.0;
};

// Maximizes g on [lo, hi] by golden-section search; deterministic and
// derivative-free. Returns the located argument, writes the value.
template <typename G>
double golden_max(G&& g, double lo, double hi, double& value) {
  constexpr double invphi = 0.6180339887498949;
  double a = lo, b = hi;
  double c = b - invphi * (b - a);
  double d = a + invphi * (b - a);
  double fc = g(c), fd = g(d);
  for (int it = 0; it < 64 && (b - a) > 1e-14; ++it) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - invphi * (b - a);
      fc = g(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + invphi * (b - a);
      fd = g(d);
    }
  }
  if (fc > fd) {
    value = fc;
    return c;
  }
  value = fd;
  return d;
}

}  // namespace

SupScanParams SupScanParams::search_profile() {
  SupScanParams p;
  p.max_levels = 12;
  p.min_levels = 5;
  p.base_angular_log2 = 8;
  p.angular_growth = 0;
  p.stability_rel = 1e-5;
  p.polish_rounds = 1;
  return p;
}

SupEstimate weighted_sup(const std::function<Complex(Complex)>& h, double beta,
                         const SupScanParams& params) {
  validate_params(params, beta);

  ScanState st;
  const auto weighted = [&h, beta, &st](double r, double theta) {
    const Complex z = (r == 0.0) ? Complex{0.0, 0.0} : std::polar(r, theta);
    const Complex v = h(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      char buf[128];
      std::snprintf(buf, sizeof buf,
                    "weighted_sup: non-finite value at r=%.17g theta=%.17g", r,
                    theta);
      throw std::runtime_error(buf);
    }
    st.max_radius = std::max(st.max_radius, r);
    return std::pow(1.0 - r * r, beta) * std::abs(v);
  };

  double prev_best = -1.0;
  double last_delta = 0.0;
  int stable = 0;
  int last_level = 0;

  for (int j = 0; j <= params.max_levels; ++j) {
    const double r = (j == 0) ? 0.0 : 1.0 - std::ldexp(1.0, -j);
    const int mlog = (j == 0) ? 0
                              : std::min(24, std::max(params.base_angular_log2,
                                                      j + params.angular_growth));
    const long long m = 1LL << mlog;
    const double dt = kTwoPi / static_cast<double>(m);
    for (long long idx = 0; idx < m; ++idx) {
      const double theta = dt * static_cast<double>(idx);
      const double v = weighted(r, theta);
      if (v > st.best) {
        st.best = v;
        st.argmax = (r == 0.0) ? Complex{0.0, 0.0} : std::polar(r, theta);
        st.best_level = j;
        st.best_m = m;
        st.best_theta = theta;
      }
    }
    last_level = j;
    if (j >= 1 && prev_best >= 0.0) {
      last_delta = st.best - prev_best;
      if (last_delta <= params.stability_rel * std::max(st.best, 1e-300))
        ++stable;
      else
        stable = 0;
      if (j + 1 >= params.min_levels && stable >= 2) break;
    }
    prev_best = st.best;
  }

  // Never polish past one extra dyadic halving of the scanned boundary gap.
  const double r_limit = 1.0 - std::ldexp(1.0, -(last_level + 1));
  const double best_before_polish = st.best;

  if (params.polish_rounds > 0) {
    double r_cur = std::abs(st.argmax);
    double theta_cur = st.best_theta;
    double r_lo =
        (st.best_level <= 1) ? 0.0 : 1.0 - std::ldexp(1.0, -(st.best_level - 1));
    double r_hi = (st.best_level >= last_level)
                      ? r_limit
                      : 1.0 - std::ldexp(1.0, -(st.best_level + 1));
    double th_step = kTwoPi / static_cast<double>(st.best_m);

    for (int round = 0; round < params.polish_rounds; ++round) {
      double val = 0.0;
      const double theta_fixed = theta_cur;
      r_cur = golden_max(
          [&](double r) { return weighted(r, theta_fixed); }, r_lo, r_hi, val);
      if (val > st.best) {
        st.best = val;
        st.argmax = std::polar(r_cur, theta_fixed);
      }
      const double r_fixed = r_cur;
      theta_cur = golden_max(
          [&](double t) { return weighted(r_fixed, t); }, theta_cur - th_step,
          theta_cur + th_step, val);
      if (val > st.best) {
        st.best = val;
        st.argmax = std::polar(r_fixed, theta_cur);
      }
      const double width = r_hi - r_lo;
      r_lo = std::max(r_lo, r_cur - 0.25 * width);
      r_hi = std::min(r_hi, r_cur + 0.25 * width);
      th_step *= 0.25;
    }
  }

  SupEstimate out;
  out.value = st.best;
  out.argmax = st.argmax;
  out.grid_levels = last_level + 1;
  out.boundary_offset = 1.0 - st.max_radius;
  out.uncertainty = std::max(last_delta, st.best - best_before_polish);
  return out;
}

SupEstimate bloch_seminorm(const AnalyticFn& f, const SupScanParams& params) {
  return weighted_sup([f](Complex z) { return f.deriv(z); }, 1.0, params);
}

double bloch_norm(const AnalyticFn& f, const SupScanParams& params) {
  return std::abs(f.eval(Complex{0.0, 0.0})) + bloch_seminorm(f, params).value;
}

double besov_seminorm(const AnalyticFn& f, double p, const QuadratureSpec& spec) {
  if (!(p > 1.0))
    throw std::invalid_argument("besov_seminorm: p must be > 1");
  // Stabilize over an increasing ladder of truncation radii; the weight is
  // kept inside the integrand so any p > 1 is acceptable.
  const double radii[] = {0.99, 0.995, 0.999};
  double value = 0.0;
  for (const double R : radii) {
    QuadratureSpec s = spec;
    s.outer_radius = R;
    const auto integrand = [&f, p](Complex w) {
      const double density =
          std::pow(std::abs(f.deriv(w)), p) * std::pow(1.0 - std::norm(w), p - 2.0);
      return Complex{density, 0.0};
    };
    const IntegralResult res = integrate_disk(integrand, MeasureSpec{0.0}, s);
    if (!res.converged)
      throw std::runtime_error("besov_seminorm: quadrature did not converge");
    value = std::pow(res.value.real(), 1.0 / p);
  }
  return value;
}

SupEstimate extremal_functional(const AnalyticFn& f, const SupScanParams& params) {
  return weighted_sup([f](Complex z) { return f.pderiv(z); }, 2.0, params);
}

double extremal_ratio(const AnalyticFn& f, const SupScanParams& params) {
  const double num = extremal_functional(f, params).value;
  const double den = bloch_seminorm(f, params).value;
  if (den <= 1e-14 * std::max(1.0, num) || den == 0.0)
    throw std::domain_error("extremal_ratio: Bloch seminorm vanishes");
  return num / den;
}

OptimalRadius optimal_radius(double mod_z) {
  if (!(mod_z >= 0.0 && mod_z < 1.0))
    throw std::invalid_argument("optimal_radius: |z| must lie in [0, 1)");
  const double m2 = mod_z * mod_z;
  OptimalRadius out;
  out.r = std::sqrt(0.5 * (1.0 + m2));
  out.phi_max = 0.25 * (1.0 - m2) * (1.0 - m2);
  return out;
}

}  // namespace bergman
