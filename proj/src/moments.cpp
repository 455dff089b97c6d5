#include "nhosc/moments.h"

#include <numbers>

#include "nhosc/errors.h"

namespace nhosc {

std::complex<double> PiRational::to_complex() const {
  return coefficient.to_complex() * std::numbers::pi;
}

ComplexRational moment_coefficient(int N, int M, const Rational& lambda, const ComplexRational& b) {
  if (N < 0 || M < 0) throw std::invalid_argument("moment indices must be non-negative");
  if ((N + M) % 2 != 0 || M > N) return {};
  const int j = (N - M) / 2;
  return (-b).pow(j) * ComplexRational(factorial(N) / (factorial(j) * lambda.pow(N + 1)));
}

PiRational moment(int N, int M, const ModelParams& params) {
  return {moment_coefficient(N, M, params.lambda(), params.quadratic_b())};
}

LaurentBiPoly weight_series(const ModelParams& params, int max_degree) {
  const auto& f = params.f_coefficients();
  if (!f.empty() && !f[0].is_zero()) {
    throw InvalidParams("the formal pairing needs F(0) = 0");
  }
  // u = −2(F − F₂z̄²); s = exp(u) obeys s′ = u′s, so m·s_m = Σ_j j·u_j·s_{m−j}.
  std::vector<ComplexRational> u(f.size());
  for (std::size_t j = 1; j < f.size(); ++j) {
    if (j != 2) u[j] = ComplexRational(-2) * f[j];
  }
  std::vector<ComplexRational> s(static_cast<std::size_t>(std::max(max_degree, 0)) + 1);
  s[0] = 1;
  for (int m = 1; m <= max_degree; ++m) {
    ComplexRational acc;
    for (int j = 1; j <= m && j < static_cast<int>(u.size()); ++j) {
      if (u[j].is_zero()) continue;
      acc += ComplexRational(j) * u[j] * s[m - j];
    }
    s[m] = acc / ComplexRational(m);
  }
  LaurentBiPoly out;
  for (int m = 0; m <= max_degree; ++m) out.add_term(0, m, s[m]);
  return out;
}

ComplexRational pairing_coefficient(const LaurentBiPoly& p, const LaurentBiPoly& q,
                                    const ModelParams& params, int extra_orders) {
  const LaurentBiPoly product = p * q;
  if (product.is_zero()) return {};
  if (product.has_negative_powers()) {
    throw NegativePower("pairing of polynomials with negative z̄-powers");
  }
  const int degree = *product.z_degree() + extra_orders;
  const LaurentBiPoly series = weight_series(params, degree);
  const ComplexRational b = params.quadratic_b();
  ComplexRational total;
  for (const auto& [e, c] : product.terms()) {
    for (const auto& [es, cs] : series.terms()) {
      const int M = e.zbar + es.zbar;
      if (M > e.z) break;
      const ComplexRational m = moment_coefficient(e.z, M, params.lambda(), b);
      if (!m.is_zero()) total += c * cs * m;
    }
  }
  return total;
}

PiRational pairing(const AnsatzFn& f, const AnsatzFn& g) {
  if (!(f.params() == g.params())) throw ParamMismatch("pairing of functions with different params");
  return {pairing_coefficient(f.poly(), g.poly(), f.params())};
}

bool pseudo_symmetry_check(const AnsatzFn& f, const AnsatzFn& g) {
  return pairing(apply_H(f), g) == pairing(f, apply_H(g));
}

namespace {

Rational rising_factorial(int start, int count) {
  Rational r(1);
  for (int i = 0; i < count; ++i) r *= Rational(start + i);
  return r;
}

}  // namespace

Rational printed_table_moment_even(int n, int k, const Rational& lambda, const Rational& b) {
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(2).pow(k) * factorial(2 * k + 1) * rising_factorial(2 * k + 1, 2 * n) *
         b.pow(k) * lambda.pow(-(2 * k + 2 * n + 1));
}

Rational printed_table_moment_odd(int n, int k, const Rational& lambda, const Rational& b) {
  const Rational sign = (k % 2 == 0) ? Rational(1) : Rational(-1);
  return sign * Rational(2).pow(k) * factorial(2 * k + 1) * rising_factorial(2 * k + 1, 2 * n + 1) *
         b.pow(k) * lambda.pow(-(2 * k + 2 * n + 2));
}

}  // namespace nhosc
