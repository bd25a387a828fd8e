#pragma once
// ---------------------------------------------------------------------------
// Quadrature on centered disks against the weighted area measures
//
//     dA_alpha(z) = (1/pi) (1 - |z|^2)^alpha dx dy,   -2 <= alpha <= 0,
//
// normalized so the unweighted unit disk (alpha = 0) has total mass 1.
// The rule is a polar product: Gauss-Legendre nodes in the radius times a
// uniform trapezoid in the angle (exact for trigonometric polynomials up to
// the node count). `integrate_disk` doubles both node counts until two
// successive passes agree to tolerance, and reports the last inter-pass
// difference as the error estimate.
//
// Integration over the full unit disk (outer_radius = 1) is only permitted
// for alpha >= 0; weighted measures with alpha < 0 must integrate over a
// strictly smaller disk, mirroring how the operators are defined through
// limits of truncations.
//
// Summation order is fixed and sequential, so results are bitwise
// reproducible for a fixed spec.
// ---------------------------------------------------------------------------

#include <cmath>
#include <complex>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "bergman/funcspace.hpp"

namespace bergman {

struct MeasureSpec {
  double alpha = 0.0;  // weight exponent in (1 - |z|^2)^alpha
};

struct QuadratureSpec {
  int radial_nodes = 64;     // Gauss-Legendre nodes on [0, R]
  int angular_nodes = 128;   // equispaced angles per ring
  double outer_radius = 1.0; // integrate over outer_radius * (unit disk)
  double rel_tol = 1e-9;
  double abs_tol = 1e-12;
  int max_refinements = 6;   // node-doubling passes after the first
};

struct IntegralResult {
  Complex value{0.0, 0.0};
  double error_estimate = std::numeric_limits<double>::infinity();
  int refinements_used = 0;
  bool converged = false;
};

// Nodes and weights of the n-point Gauss-Legendre rule on [-1, 1],
// cached per n (thread-safe). Throws std::invalid_argument for n < 1.
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int n);

// int_{R D} conj(z)^p z^q dA_0(z) = R^{2p+2}/(p+1) when p == q, else 0.
double monomial_moment(int p, int q, double R);

// Throws std::invalid_argument if the measure/spec combination is outside
// the supported ranges (see file header).
void validate_quadrature(const MeasureSpec& mu, const QuadratureSpec& spec);

namespace detail {

[[noreturn]] void throw_non_finite(double rho, double theta);

template <typename F>
Complex polar_pass(F&& f, const MeasureSpec& mu, double R, int nr, int nt) {
  const auto& [xs, ws] = gauss_legendre(nr);
  // Unit circle samples reused by every ring.
  std::vector<Complex> unit(static_cast<std::size_t>(nt));
  const double dt = 2.0 * M_PI / static_cast<double>(nt);
  for (int j = 0; j < nt; ++j) unit[static_cast<std::size_t>(j)] = std::polar(1.0, dt * j);

  Complex total{0.0, 0.0};
  for (int i = 0; i < nr; ++i) {
    const double rho = 0.5 * R * (xs[static_cast<std::size_t>(i)] + 1.0);
    const double weight = 0.5 * R * ws[static_cast<std::size_t>(i)] * 2.0 * rho *
                          std::pow(1.0 - rho * rho, mu.alpha);
    Complex ring{0.0, 0.0};
    for (int j = 0; j < nt; ++j) {
      const Complex z = rho * unit[static_cast<std::size_t>(j)];
      const Complex v = f(z);
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
        throw_non_finite(rho, dt * j);
      ring += v;
    }
    total += weight * (ring / static_cast<double>(nt));
  }
  return total;
}

}  // namespace detail

template <typename F>
IntegralResult integrate_disk(F&& f, const MeasureSpec& mu = {},
                              const QuadratureSpec& spec = {}) {
  validate_quadrature(mu, spec);
  int nr = spec.radial_nodes;
  int nt = spec.angular_nodes;
  IntegralResult out;
  out.value = detail::polar_pass(f, mu, spec.outer_radius, nr, nt);
  for (int k = 1; k <= spec.max_refinements; ++k) {
    nr *= 2;
    nt *= 2;
    const Complex next = detail::polar_pass(f, mu, spec.outer_radius, nr, nt);
    const double diff = std::abs(next - out.value);
    out.value = next;
    out.error_estimate = diff;
    out.refinements_used = k;
    if (diff <= std::max(spec.abs_tol, spec.rel_tol * std::abs(next))) {
      out.converged = true;
      break;
    }
  }
  return out;
}

}  // namespace bergman
