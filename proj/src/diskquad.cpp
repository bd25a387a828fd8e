#include "bergman/diskquad.hpp"

#include <cmath>
#include <cstdio>
#include <map>
#include <mutex>

namespace bergman {

namespace {

std::pair<std::vector<double>, std::vector<double>> compute_gauss_legendre(int n) {
  std::vector<double> x(static_cast<std::size_t>(n));
  std::vector<double> w(static_cast<std::size_t>(n));
  // Newton iteration on P_n from the classical asymptotic initial guesses;
  // roots come in symmetric pairs, so only half are computed.
  const int half = (n + 1) / 2;
  for (int i = 0; i < half; ++i) {
    double root = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = root;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * root * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (root * p1 - p0) / (root * root - 1.0);
      const double dx = p1 / dp;
      root -= dx;
      if (std::abs(dx) < 1e-15) {
        // One final recurrence pass so dp matches the converged root.
        p0 = 1.0;
        p1 = root;
        for (int k = 2; k <= n; ++k) {
          const double p2 = ((2.0 * k - 1.0) * root * p1 - (k - 1.0) * p0) / k;
          p0 = p1;
          p1 = p2;
        }
        dp = n * (root * p1 - p0) / (root * root - 1.0);
        break;
      }
    }
    const double weight = 2.0 / ((1.0 - root * root) * dp * dp);
    x[static_cast<std::size_t>(i)] = -root;
    x[static_cast<std::size_t>(n - 1 - i)] = root;
    w[static_cast<std::size_t>(i)] = weight;
    w[static_cast<std::size_t>(n - 1 - i)] = weight;
  }
  if (n % 2 == 1) x[static_cast<std::size_t>(n / 2)] = 0.0;
  return {std::move(x), std::move(w)};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need n >= 1");
  static std::mutex mutex;
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  std::lock_guard<std::mutex> lock(mutex);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
  return it->second;
}

double monomial_moment(int p, int q, double R) {
  if (p < 0 || q < 0) throw std::invalid_argument("monomial_moment: powers must be >= 0");
  if (!(R > 0.0 && R <= 1.0))
    throw std::invalid_argument("monomial_moment: R must lie in (0, 1]");
  if (p != q) return 0.0;
  return std::pow(R, 2 * p + 2) / (p + 1);
}

void validate_quadrature(const MeasureSpec& mu, const QuadratureSpec& spec) {
  if (!(mu.alpha >= -2.0 && mu.alpha <= 0.0))
    throw std::invalid_argument("measure: alpha must lie in [-2, 0]");
  if (!(spec.outer_radius > 0.0 && spec.outer_radius <= 1.0))
    throw std::invalid_argument("quadrature: outer_radius must lie in (0, 1]");
  if (mu.alpha < 0.0 && spec.outer_radius >= 1.0)
    throw std::invalid_argument(
        "quadrature: weighted measures (alpha < 0) require outer_radius < 1");
  if (spec.radial_nodes < 2)
    throw std::invalid_argument("quadrature: need at least 2 radial nodes");
  if (spec.angular_nodes < 4)
    throw std::invalid_argument("quadrature: need at least 4 angular nodes");
  if (!(spec.rel_tol > 0.0) || !(spec.abs_tol > 0.0))
    throw std::invalid_argument("quadrature: tolerances must be positive");
  if (spec.max_refinements < 0 || spec.max_refinements > 12)
    throw std::invalid_argument("quadrature: max_refinements must lie in [0, 12]");
}

namespace detail {

void throw_non_finite(double rho, double theta) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "integrand is not finite at rho=%.17g theta=%.17g", rho, theta);
  throw std::runtime_error(buf);
}

}  // namespace detail

}  // namespace bergman
