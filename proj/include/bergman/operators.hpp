#pragma once
// ---------------------------------------------------------------------------
// The Bergman projection on truncated monomials, the adjoint operator in its
// integral and series forms, and the duality pairing connecting them.
//
// Projection:  P f(z) = int_{R D} f(w) / (1 - z conj(w))^2 dA_0(w)
// for f(w) = conj(w)^a w^b supported on the closed disk R D, with the closed
// form  P f(z) = (b - a + 1) z^{b-a} R^{2b+2} / (b + 1)  when b >= a, else 0.
//
// Adjoint (two equivalent forms for holomorphic g, 1 <= beta <= 2):
//   integral:  T g(z) = 2 (1-|z|^2)^beta z int_D g'(w) / (1 - z conj(w))^3 dA_0(w)
//   series:    T g(z) = (1-|z|^2)^beta (z^2 g'(z))'
//
// Pairing:  <f, g> = int f'(w) conj(g'(w)) dA_0(w), the derivative pairing
// under which P and T are adjoint to each other; `duality_check` verifies
//   int_{R D} f conj(T g) dA_alpha  =  int_D (P f)' conj(g') dA_0
// with both sides evaluated in closed form and by quadrature.
// ---------------------------------------------------------------------------

#include <complex>

#include "bergman/diskquad.hpp"
#include "bergman/funcspace.hpp"
#include "bergman/report.hpp"

namespace bergman {

// w -> conj(w)^a w^b restricted to the closed disk of radius `radius` < 1.
struct CompactMonomial {
  int a = 0;
  int b = 0;
  double radius = 0.5;
};

// P f(z) by quadrature over f.radius * D. spec.outer_radius is ignored;
// the support of f fixes the integration domain.
Complex project(const CompactMonomial& f, Complex z, const QuadratureSpec& spec = {});

// Closed form of the same projection.
Complex project_monomial_closed(int a, int b, double R, Complex z);

// P p(z) for an analytic polynomial p, by quadrature over R * D.
Complex project_polynomial(const AnalyticFn& p, Complex z, double R,
                           const QuadratureSpec& spec = {});

// Exact value of the same truncated projection: sum_l c_l R^{2l+2} z^l.
// At R = 1 this reproduces p exactly.
Complex project_polynomial_closed(const AnalyticFn& p, Complex z, double R);

// T g(z) through the integral form. The inner integral runs over
// spec.outer_radius * D with the unweighted measure (the weight enters only
// through the explicit prefactor), so outer_radius = 1 is allowed here.
Complex adjoint_quad(const AnalyticFn& g, double beta, Complex z,
                     const QuadratureSpec& spec = {});

// T g(z) through the series form (1-|z|^2)^beta (z^2 g'(z))'.
Complex adjoint_series(const AnalyticFn& g, double beta, Complex z);

// int_{r D} g'(u) / (1 - z conj(u))^3 dA_0(u) by quadrature: the truncated
// kernel integral whose r -> 1 limit defines the adjoint.
IntegralResult truncated_kernel_integral(const AnalyticFn& g, Complex z, double r,
                                         const QuadratureSpec& spec = {});

// The same truncated integral for g = (1/2) log((1+z)/(1-z)) in closed form:
// r^2 / (1 - r^4 z^2)^2.
Complex log_truncated_kernel_closed(Complex z, double r);

// Derivative pairing int_{(outer_radius) D} f'(w) conj(g'(w)) dA_0(w).
Complex besov_pairing(const AnalyticFn& f, const AnalyticFn& g,
                      const QuadratureSpec& spec = {});

// Verifies the adjoint relation for one truncated monomial f and one
// polynomial g, at weight exponent alpha in [-2, -1]. Metrics: the gap
// between the two closed-form sides, the two quadrature-vs-closed relative
// errors, and the explicitly weighted form of the left side (tolerance
// quad_tol on each quadrature comparison).
CheckReport duality_check(const CompactMonomial& f, const AnalyticFn& g, double alpha,
                          const QuadratureSpec& spec = {}, double quad_tol = 1e-5);

}  // namespace bergman
