#include "bergman/operators.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bergman {

namespace {

Complex ipow(Complex z, int k) {
  Complex acc{1.0, 0.0};
  Complex base = z;
  for (int e = k; e > 0; e >>= 1) {
    if (e & 1) acc *= base;
    base *= base;
  }
  return acc;
}

void require_monomial(const CompactMonomial& f) {
  if (f.a < 0 || f.b < 0)
    throw std::invalid_argument("monomial powers must be >= 0");
  if (!(f.radius > 0.0 && f.radius < 1.0))
    throw std::invalid_argument("monomial support radius must lie in (0, 1)");
}

void require_in_disk(Complex z, const char* who) {
  if (!(std::norm(z) < 1.0)) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%s: point must lie in the open unit disk", who);
    throw std::domain_error(buf);
  }
}

void require_beta(double beta) {
  if (!(beta >= 1.0 && beta <= 2.0))
    throw std::invalid_argument("adjoint: beta must lie in [1, 2]");
}

}  // namespace

Complex project(const CompactMonomial& f, Complex z, const QuadratureSpec& spec) {
  require_monomial(f);
  require_in_disk(z, "project");
  QuadratureSpec s = spec;
  s.outer_radius = f.radius;
  const int a = f.a, b = f.b;
  const auto integrand = [a, b, z](Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return ipow(std::conj(w), a) * ipow(w, b) / (d * d);
  };
  return integrate_disk(integrand, MeasureSpec{0.0}, s).value;
}

Complex project_monomial_closed(int a, int b, double R, Complex z) {
  if (a < 0 || b < 0) throw std::invalid_argument("monomial powers must be >= 0");
  if (!(R > 0.0 && R < 1.0))
    throw std::invalid_argument("monomial support radius must lie in (0, 1)");
  require_in_disk(z, "project_monomial_closed");
  if (b < a) return Complex{0.0, 0.0};
  const double scale =
      static_cast<double>(b - a + 1) * std::pow(R, 2 * b + 2) / (b + 1);
  return scale * ipow(z, b - a);
}

Complex project_polynomial(const AnalyticFn& p, Complex z, double R,
                           const QuadratureSpec& spec) {
  if (!(R > 0.0 && R < 1.0))
    throw std::invalid_argument("project_polynomial: R must lie in (0, 1)");
  require_in_disk(z, "project_polynomial");
  QuadratureSpec s = spec;
  s.outer_radius = R;
  const auto integrand = [&p, z](Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return p.eval(w) / (d * d);
  };
  return integrate_disk(integrand, MeasureSpec{0.0}, s).value;
}

Complex project_polynomial_closed(const AnalyticFn& p, Complex z, double R) {
  if (!(R > 0.0 && R <= 1.0))
    throw std::invalid_argument("project_polynomial_closed: R must lie in (0, 1]");
  require_in_disk(z, "project_polynomial_closed");
  const auto& c = p.coefficients();
  Complex acc{0.0, 0.0};
  const double r2 = R * R;
  // sum_l c_l R^{2l+2} z^l, evaluated as a Horner pass in (z) with damped
  // coefficients accumulated on the fly (descending powers).
  for (std::size_t l = c.size(); l-- > 0;) {
    acc = acc * z + c[l] * std::pow(r2, static_cast<double>(l + 1));
  }
  return acc;
}

Complex adjoint_quad(const AnalyticFn& g, double beta, Complex z,
                     const QuadratureSpec& spec) {
  require_beta(beta);
  require_in_disk(z, "adjoint_quad");
  const auto integrand = [&g, z](Complex w) {
    const Complex d = 1.0 - z * std::conj(w);
    return g.deriv(w) / (d * d * d);
  };
  const Complex inner = integrate_disk(integrand, MeasureSpec{0.0}, spec).value;
  return 2.0 * std::pow(1.0 - std::norm(z), beta) * z * inner;
}

Complex adjoint_series(const AnalyticFn& g, double beta, Complex z) {
  require_beta(beta);
  require_in_disk(z, "adjoint_series");
  return std::pow(1.0 - std::norm(z), beta) * g.pderiv(z);
}

IntegralResult truncated_kernel_integral(const AnalyticFn& g, Complex z, double r,
                                         const QuadratureSpec& spec) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("truncated_kernel_integral: r must lie in (0, 1)");
  require_in_disk(z, "truncated_kernel_integral");
  QuadratureSpec s = spec;
  s.outer_radius = r;
  const auto integrand = [&g, z](Complex u) {
    const Complex d = 1.0 - z * std::conj(u);
    return g.deriv(u) / (d * d * d);
  };
  return integrate_disk(integrand, MeasureSpec{0.0}, s);
}

Complex log_truncated_kernel_closed(Complex z, double r) {
  if (!(r > 0.0 && r < 1.0))
    throw std::invalid_argument("log_truncated_kernel_closed: r must lie in (0, 1)");
  require_in_disk(z, "log_truncated_kernel_closed");
  const Complex d = 1.0 - (r * r * r * r) * z * z;
  return (r * r) / (d * d);
}

Complex besov_pairing(const AnalyticFn& f, const AnalyticFn& g,
                      const QuadratureSpec& spec) {
  const auto integrand = [&f, &g](Complex w) {
    return f.deriv(w) * std::conj(g.deriv(w));
  };
  return integrate_disk(integrand, MeasureSpec{0.0}, spec).value;
}

CheckReport duality_check(const CompactMonomial& f, const AnalyticFn& g, double alpha,
                          const QuadratureSpec& spec, double quad_tol) {
  require_monomial(f);
  if (!(alpha >= -2.0 && alpha <= -1.0))
    throw std::invalid_argument("duality_check: alpha must lie in [-2, -1]");
  const auto& c = g.coefficients();  // throws for non-coefficient kinds
  const int a = f.a, b = f.b, k = b - a;
  const double R = f.radius;
  const double rpow = std::pow(R, 2 * b + 2);

  // Left side, closed: int_{RD} conj(w)^a w^b conj((w^2 g')') dA_0. Only the
  // w^k coefficient of (w^2 g')' = sum_j j (j+1) c_j w^j survives.
  Complex lhs_closed{0.0, 0.0};
  if (k >= 1 && k < static_cast<int>(c.size()))
    lhs_closed = static_cast<double>(k) * (k + 1.0) *
                 std::conj(c[static_cast<std::size_t>(k)]) * rpow / (b + 1.0);

  // Right side, closed: int_D (P f)' conj(g') dA_0 through exact moments.
  Complex rhs_closed{0.0, 0.0};
  if (k >= 0) {
    // P f = (k+1) R^{2b+2}/(b+1) w^k, so (P f)' has one coefficient at w^{k-1}.
    const double pf_coeff = (k + 1.0) * rpow / (b + 1);
    for (std::size_t j = 1; j < c.size(); ++j) {
      if (static_cast<int>(j) - 1 != k - 1 || k < 1) continue;
      const double deriv_coeff = pf_coeff * k;
      rhs_closed += deriv_coeff * std::conj(static_cast<double>(j) * c[j]) *
                    monomial_moment(k - 1, k - 1, 1.0);
    }
  }

  // Left side by quadrature (weights cancelled analytically).
  QuadratureSpec s = spec;
  s.outer_radius = R;
  const Complex lhs_quad =
      integrate_disk(
          [a, b, &g](Complex w) {
            return ipow(std::conj(w), a) * ipow(w, b) * std::conj(g.pderiv(w));
          },
          MeasureSpec{0.0}, s)
          .value;

  // Left side again with the weight kept explicit: f conj(T g) dA_alpha,
  // exercising the weighted measure path and the series form of T.
  const double beta = -alpha;
  const Complex lhs_weighted =
      integrate_disk(
          [a, b, &g, beta](Complex w) {
            return ipow(std::conj(w), a) * ipow(w, b) *
                   std::conj(adjoint_series(g, beta, w));
          },
          MeasureSpec{alpha}, s)
          .value;

  // Right side by quadrature: derivative pairing of P f against g.
  std::vector<Complex> pf_coeffs(static_cast<std::size_t>(std::max(k, 0)) + 1,
                                 Complex{0.0, 0.0});
  if (k >= 0) pf_coeffs[static_cast<std::size_t>(k)] = (k + 1.0) * rpow / (b + 1);
  const Complex rhs_quad =
      besov_pairing(AnalyticFn::polynomial(std::move(pf_coeffs)), g, spec);

  const double scale = std::max(1.0, std::abs(lhs_closed));
  CheckReport rep;
  char name[96];
  std::snprintf(name, sizeof name, "duality a=%d b=%d R=%.3g", a, b, R);
  rep.name = name;
  rep.anchor =
      "int_{RD} f conj(T g) dA_alpha = int_D (P f)' conj(g') dA_0 for "
      "f = conj(w)^a w^b on RD";
  const auto push = [&rep](const char* metric, double value, double tol) {
    rep.metrics.push_back({metric, value, 0.0, tol, value <= tol});
  };
  push("closed_sides_gap", std::abs(lhs_closed - rhs_closed), 1e-12 * scale);
  push("lhs_quad_rel", std::abs(lhs_quad - lhs_closed) / scale, quad_tol);
  push("lhs_weighted_rel", std::abs(lhs_weighted - lhs_closed) / scale, quad_tol);
  push("rhs_quad_rel", std::abs(rhs_quad - rhs_closed) / scale, quad_tol);
  rep.pass = true;
  for (const auto& m : rep.metrics) rep.pass = rep.pass && m.pass;
  return rep;
}

}  // namespace bergman
