#include "bergman/funcspace.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace bergman {

namespace {

[[noreturn]] void bad_point(Complex z) {
  char buf[128];
  std::snprintf(buf, sizeof buf,
                "evaluation point (%.17g, %.17g) must lie in the open unit disk",
                z.real(), z.imag());
  throw std::domain_error(buf);
}

void require_in_disk(Complex z) {
  if (!(std::norm(z) < 1.0)) bad_point(z);
}

// One fused Horner pass: f(z), f'(z), f''(z)/2.
void horner3(const std::vector<Complex>& c, Complex z, Complex& f, Complex& d1,
             Complex& d2_half) {
  Complex b{0.0, 0.0}, d{0.0, 0.0}, e{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) {
    e = e * z + d;
    d = d * z + b;
    b = b * z + c[k];
  }
  f = b;
  d1 = d;
  d2_half = e;
}

Complex horner1(const std::vector<Complex>& c, Complex z) {
  Complex b{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) b = b * z + c[k];
  return b;
}

Complex horner_deriv(const std::vector<Complex>& c, Complex z) {
  Complex b{0.0, 0.0}, d{0.0, 0.0};
  for (std::size_t k = c.size(); k-- > 0;) {
    d = d * z + b;
    b = b * z + c[k];
  }
  return d;
}

}  // namespace

double gzn_constant(int n) {
  if (n < 0) throw std::invalid_argument("gzn_constant: n must be >= 0");
  double sum = 1.0;
  for (int k = 1; k <= n; ++k)
    sum += std::pow(static_cast<double>(k) / (k + 1), 0.5 * k);
  return sum;
}

double geom_partial_closed(long long n, double s) {
  if (n < 0) throw std::invalid_argument("geom_partial_closed: n must be >= 0");
  if (!(s >= 0.0 && s < 1.0))
    throw std::invalid_argument("geom_partial_closed: s must satisfy 0 <= s < 1");

  if (n <= 2 || s == 0.0) {
    double acc = 0.0, sk = 1.0;
    for (long long k = 0; k <= n; ++k) {
      acc += static_cast<double>(k + 1) * static_cast<double>(k + 2) * sk;
      sk *= s;
    }
    return acc;
  }

  const double u = 1.0 - s;
  const double np1 = static_cast<double>(n + 1);
  // The closed form subtracts two quantities that agree through O(y^2) in
  // y = -(n+1) log s, so its precision degrades like eps / y^2; below
  // y = 0.05 it must be replaced by direct or asymptotic evaluation.
  const double y = -np1 * std::log1p(-u);

  if (y >= 0.05) {
    // numer = 2 (1 - s^{n+1}) - s^{n+1} (2(n+1)u + (n+1)(n+2)u^2), with the
    // first difference taken through expm1 at full relative precision.
    const double grow = -std::expm1(-y);           // 1 - s^{n+1}
    const double damp = std::exp(-y);              // s^{n+1}
    const double extra = 2.0 * np1 * u + np1 * (np1 + 1.0) * u * u;
    return (2.0 * grow - damp * extra) / (u * u * u);
  }

  if (n <= 2000000) {
    // Small y means the terms have not started to decay: the all-positive
    // direct sum is exact to rounding and affordable at this size.
    long double acc = 0.0L, sk = 1.0L;
    const long double sl = static_cast<long double>(s);
    for (long long k = 0; k <= n; ++k) {
      acc += static_cast<long double>(k + 1) * static_cast<long double>(k + 2) * sk;
      sk *= sl;
    }
    return static_cast<double>(acc);
  }

  // Huge n with y < 0.05: expand around the n -> infinity profile in t = y/N.
  //   S = (y/u)^3 [ sigma(y) + e^-y (1/N + 2/(3N^2) - 7y/(12N^2)) ] + O(N^-3)
  // where sigma(y) = sum_{m>=3} (-1)^{m+1} (m-1)(m-2) y^{m-3} / m!; at y = 0
  // this reduces exactly to sum (k+1)(k+2) = N(N+1)(N+2)/3 with N = n+1.
  double sigma = 0.0, ypow = 1.0, factorial = 6.0, sign = 1.0;
  for (int m = 3; m <= 40; ++m) {
    sigma += sign * (m - 1.0) * (m - 2.0) * ypow / factorial;
    ypow *= y;
    factorial *= static_cast<double>(m + 1);
    sign = -sign;
  }
  const double ratio = y / u;  // = N (1 + u/2 + ...), finite and well scaled
  const double correction =
      std::exp(-y) * (1.0 / np1 + 2.0 / (3.0 * np1 * np1) -
                      7.0 * y / (12.0 * np1 * np1));
  return ratio * ratio * ratio * (sigma + correction);
}

struct AnalyticFn::Impl {
  FnKind kind = FnKind::polynomial;
  std::vector<Complex> coeffs;  // polynomial / gzn expansion
  int n = 0;                    // gzn
  Complex base{0.0, 0.0};       // gzn
  Complex lambda{0.0, 0.0};     // mobius
  std::vector<std::pair<Complex, AnalyticFn>> terms;  // combo
};

AnalyticFn AnalyticFn::polynomial(std::vector<Complex> coeffs) {
  if (coeffs.empty())
    throw std::invalid_argument("polynomial: need at least one coefficient");
  if (coeffs.size() > static_cast<std::size_t>(kMaxPolynomialDegree) + 1)
    throw std::invalid_argument("polynomial: degree exceeds the supported cap");
  auto impl = std::make_shared<Impl>();
  impl->kind = FnKind::polynomial;
  impl->coeffs = std::move(coeffs);
  return AnalyticFn(std::move(impl));
}

AnalyticFn AnalyticFn::mobius(Complex lambda) {
  if (!(std::norm(lambda) < 1.0))
    throw std::invalid_argument("mobius: |lambda| must be < 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = FnKind::mobius;
  impl->lambda = lambda;
  return AnalyticFn(std::move(impl));
}

AnalyticFn AnalyticFn::log_extremal() {
  auto impl = std::make_shared<Impl>();
  impl->kind = FnKind::log_extremal;
  return AnalyticFn(std::move(impl));
}

AnalyticFn AnalyticFn::gzn(int n, Complex base) {
  if (n < 0) throw std::invalid_argument("gzn: n must be >= 0");
  if (n + 1 > kMaxPolynomialDegree)
    throw std::invalid_argument("gzn: n exceeds the supported cap");
  if (!(std::norm(base) < 1.0))
    throw std::invalid_argument("gzn: |base| must be < 1");
  auto impl = std::make_shared<Impl>();
  impl->kind = FnKind::gzn;
  impl->n = n;
  impl->base = base;
  const double inv_c = 1.0 / gzn_constant(n);
  impl->coeffs.assign(static_cast<std::size_t>(n) + 2, Complex{0.0, 0.0});
  Complex pow_conj{1.0, 0.0};
  const Complex cb = std::conj(base);
  for (int k = 0; k <= n; ++k) {
    impl->coeffs[static_cast<std::size_t>(k) + 1] = inv_c * pow_conj;
    pow_conj *= cb;
  }
  return AnalyticFn(std::move(impl));
}

AnalyticFn AnalyticFn::combo(std::vector<std::pair<Complex, AnalyticFn>> terms) {
  if (terms.empty()) throw std::invalid_argument("combo: need at least one term");
  auto impl = std::make_shared<Impl>();
  impl->kind = FnKind::combo;
  impl->terms = std::move(terms);
  return AnalyticFn(std::move(impl));
}

FnKind AnalyticFn::kind() const { return impl_->kind; }

Complex AnalyticFn::eval(Complex z) const {
  require_in_disk(z);
  switch (impl_->kind) {
    case FnKind::polynomial:
    case FnKind::gzn:
      return horner1(impl_->coeffs, z);
    case FnKind::mobius:
      return (impl_->lambda - z) / (1.0 - std::conj(impl_->lambda) * z);
    case FnKind::log_extremal:
      return 0.5 * (std::log(1.0 + z) - std::log(1.0 - z));
    case FnKind::combo: {
      Complex acc{0.0, 0.0};
      for (const auto& [w, fn] : impl_->terms) acc += w * fn.eval(z);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Complex AnalyticFn::deriv(Complex z) const {
  require_in_disk(z);
  switch (impl_->kind) {
    case FnKind::polynomial:
    case FnKind::gzn:
      return horner_deriv(impl_->coeffs, z);
    case FnKind::mobius: {
      const Complex d = 1.0 - std::conj(impl_->lambda) * z;
      return -(1.0 - std::norm(impl_->lambda)) / (d * d);
    }
    case FnKind::log_extremal:
      return 1.0 / (1.0 - z * z);
    case FnKind::combo: {
      Complex acc{0.0, 0.0};
      for (const auto& [w, fn] : impl_->terms) acc += w * fn.deriv(z);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Complex AnalyticFn::deriv2(Complex z) const {
  require_in_disk(z);
  switch (impl_->kind) {
    case FnKind::polynomial:
    case FnKind::gzn: {
      Complex f, d1, d2_half;
      horner3(impl_->coeffs, z, f, d1, d2_half);
      return 2.0 * d2_half;
    }
    case FnKind::mobius: {
      const Complex cl = std::conj(impl_->lambda);
      const Complex d = 1.0 - cl * z;
      return -2.0 * cl * (1.0 - std::norm(impl_->lambda)) / (d * d * d);
    }
    case FnKind::log_extremal: {
      const Complex d = 1.0 - z * z;
      return 2.0 * z / (d * d);
    }
    case FnKind::combo: {
      Complex acc{0.0, 0.0};
      for (const auto& [w, fn] : impl_->terms) acc += w * fn.deriv2(z);
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

Complex AnalyticFn::pderiv(Complex z) const {
  require_in_disk(z);
  switch (impl_->kind) {
    case FnKind::polynomial:
    case FnKind::gzn: {
      Complex f, d1, d2_half;
      horner3(impl_->coeffs, z, f, d1, d2_half);
      return 2.0 * z * d1 + z * z * (2.0 * d2_half);
    }
    case FnKind::combo: {
      Complex acc{0.0, 0.0};
      for (const auto& [w, fn] : impl_->terms) acc += w * fn.pderiv(z);
      return acc;
    }
    default:
      return 2.0 * z * deriv(z) + z * z * deriv2(z);
  }
}

const std::vector<Complex>& AnalyticFn::coefficients() const {
  if (impl_->kind != FnKind::polynomial && impl_->kind != FnKind::gzn)
    throw std::logic_error("coefficients: only available for coefficient-backed kinds");
  return impl_->coeffs;
}

int AnalyticFn::degree() const {
  return static_cast<int>(coefficients().size()) - 1;
}

int AnalyticFn::gzn_n() const {
  if (impl_->kind != FnKind::gzn) throw std::logic_error("gzn_n: not a gzn function");
  return impl_->n;
}

Complex AnalyticFn::gzn_base() const {
  if (impl_->kind != FnKind::gzn) throw std::logic_error("gzn_base: not a gzn function");
  return impl_->base;
}

Complex AnalyticFn::mobius_lambda() const {
  if (impl_->kind != FnKind::mobius)
    throw std::logic_error("mobius_lambda: not a mobius function");
  return impl_->lambda;
}

const std::vector<std::pair<Complex, AnalyticFn>>& AnalyticFn::combo_terms() const {
  if (impl_->kind != FnKind::combo)
    throw std::logic_error("combo_terms: not a combo function");
  return impl_->terms;
}

AnalyticFn gzn_build(int n, Complex base) { return AnalyticFn::gzn(n, base); }

}  // namespace bergman
