#pragma once
// ---------------------------------------------------------------------------
// Analytic test functions on the unit disk.
//
// The toolkit works with a small closed universe of holomorphic functions:
// dense polynomials, disk automorphisms (Mobius atoms), the logarithmic
// extremal function (1/2) log((1+z)/(1-z)), the normalized geometric family
// used in the growth experiments, and finite linear combinations of all of
// these. Every function exposes value, first and second derivative, and the
// fused quantity (z^2 f'(z))' = 2 z f'(z) + z^2 f''(z) that the adjoint
// operator and the extremal functional are built from.
//
// Instances are immutable after construction and cheap to copy (shared
// internal state), so they can be captured by value in scan closures.
// ---------------------------------------------------------------------------

#include <complex>
#include <cstddef>
#include <memory>
#include <utility>
#include <vector>

namespace bergman {

using Complex = std::complex<double>;

// Hard cap on polynomial degree; guards against runaway allocations when
// specs arrive from config files.
inline constexpr int kMaxPolynomialDegree = 100000;

// C_n = 1 + sum_{k=1}^n (k/(k+1))^{k/2}. C_0 = 1, C_1 = 1 + sqrt(1/2),
// and C_n / n -> e^{-1/2} as n grows.
double gzn_constant(int n);

// S_n(s) = sum_{k=0}^n (k+1)(k+2) s^k for 0 <= s < 1 and n >= 0.
// The closed rational form
//   S_n(s) = [2 - s^{n+1}(2 + 2(n+1)(1-s) + (n+1)(n+2)(1-s)^2)] / (1-s)^3
// cancels catastrophically when y = -(n+1) log s is small, so evaluation
// switches on y: closed form (with expm1 splitting) for y >= 0.05, direct
// all-positive summation for smaller y when n <= 2e6, and an asymptotic
// expansion around the n -> infinity profile beyond that. Relative error
// stays below ~5e-13 everywhere.
double geom_partial_closed(long long n, double s);

enum class FnKind { polynomial, mobius, log_extremal, gzn, combo };

class AnalyticFn {
 public:
  // f(z) = sum_k coeffs[k] z^k (ascending powers). Degree is capped by
  // kMaxPolynomialDegree; throws std::invalid_argument beyond it.
  static AnalyticFn polynomial(std::vector<Complex> coeffs);

  // phi_lambda(z) = (lambda - z) / (1 - conj(lambda) z), |lambda| < 1.
  static AnalyticFn mobius(Complex lambda);

  // (1/2) log((1+z)/(1-z)), principal branch; derivative 1/(1-z^2).
  static AnalyticFn log_extremal();

  // g_{z0,n}(w) = (1/C_n) sum_{k=0}^{n} conj(z0)^k w^{k+1}, |z0| < 1, n >= 0.
  // Stored with its expanded coefficients; gzn(0, z0) equals the monomial w.
  static AnalyticFn gzn(int n, Complex base);

  // sum_i weights[i] * fns[i]; terms may themselves be combos.
  static AnalyticFn combo(std::vector<std::pair<Complex, AnalyticFn>> terms);

  FnKind kind() const;

  // All evaluators require |z| < 1 and throw std::domain_error otherwise.
  Complex eval(Complex z) const;
  Complex deriv(Complex z) const;
  Complex deriv2(Complex z) const;
  // (z^2 f'(z))' = 2 z f'(z) + z^2 f''(z), evaluated in one fused pass.
  Complex pderiv(Complex z) const;

  // Ascending power coefficients. Available for polynomial and gzn kinds
  // (gzn reports its expansion); throws std::logic_error for other kinds.
  const std::vector<Complex>& coefficients() const;

  // Polynomial degree for coefficient-backed kinds (highest stored power,
  // trailing zeros not trimmed); throws std::logic_error otherwise.
  int degree() const;

  // gzn parameters; throws std::logic_error for other kinds.
  int gzn_n() const;
  Complex gzn_base() const;

  Complex mobius_lambda() const;  // mobius kind only

  const std::vector<std::pair<Complex, AnalyticFn>>& combo_terms() const;

 private:
  struct Impl;
  explicit AnalyticFn(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

// Convenience free functions mirroring the factories used most often.
AnalyticFn gzn_build(int n, Complex base);

}  // namespace bergman
