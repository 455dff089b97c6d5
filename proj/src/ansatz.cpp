#include "nhosc/ansatz.h"

#include "nhosc/errors.h"

namespace nhosc {

namespace {

void require_same_params(const AnsatzFn& a, const AnsatzFn& b) {
  if (!(a.params() == b.params())) throw ParamMismatch("ansatz functions carry different params");
}

ComplexRational half_lambda(const ModelParams& params) {
  return ComplexRational(params.lambda() / Rational(2));
}

}  // namespace

AnsatzFn::AnsatzFn(LaurentBiPoly poly, ModelParams params)
    : poly_(std::move(poly)), params_(std::move(params)) {
  if (poly_.has_negative_powers()) {
    throw NegativePower("ansatz polynomial has negative z̄-powers: " + poly_.str());
  }
}

AnsatzFn& AnsatzFn::operator+=(const AnsatzFn& o) {
  require_same_params(*this, o);
  poly_ += o.poly_;
  return *this;
}

AnsatzFn& AnsatzFn::operator-=(const AnsatzFn& o) {
  require_same_params(*this, o);
  poly_ -= o.poly_;
  return *this;
}

AnsatzFn& AnsatzFn::operator*=(const ComplexRational& c) {
  poly_ *= c;
  return *this;
}

// log W = −λ/2·zz̄ − F(z̄), so ∂z W = −(λ/2)z̄·W and ∂z̄ W = (−(λ/2)z − F′)·W.
LaurentBiPoly weighted_d_z(const LaurentBiPoly& p, const ModelParams& params) {
  return d_z(p) - half_lambda(params) * (LaurentBiPoly::zbar() * p);
}

LaurentBiPoly weighted_d_zbar(const LaurentBiPoly& p, const ModelParams& params) {
  return d_zbar(p) - half_lambda(params) * (LaurentBiPoly::z() * p) - params.f_prime() * p;
}

AnsatzFn apply_A_plus(const AnsatzFn& f) {
  const auto& params = f.params();
  LaurentBiPoly out =
      weighted_d_z(f.poly(), params) - half_lambda(params) * (LaurentBiPoly::zbar() * f.poly());
  return {std::move(out), params};
}

AnsatzFn apply_A_minus(const AnsatzFn& f) {
  const auto& params = f.params();
  LaurentBiPoly out =
      weighted_d_z(f.poly(), params) + half_lambda(params) * (LaurentBiPoly::zbar() * f.poly());
  return {std::move(out), params};
}

AnsatzFn apply_A_minus_power(AnsatzFn f, int times) {
  for (int i = 0; i < times; ++i) f = apply_A_minus(f);
  return f;
}

AnsatzFn apply_H(const AnsatzFn& f) {
  const auto& params = f.params();
  const ComplexRational lambda(params.lambda());
  const LaurentBiPoly& p = f.poly();
  LaurentBiPoly laplacian = weighted_d_z(weighted_d_zbar(p, params), params);
  LaurentBiPoly potential = (lambda * lambda) * (LaurentBiPoly::monomial(1, 1, 1) * p) +
                            (ComplexRational(2) * lambda) *
                                (LaurentBiPoly::zbar() * params.f_prime() * p);
  return {ComplexRational(-4) * laplacian + potential, params};
}

AnsatzFn apply_H_conjugated(const AnsatzFn& f, int n) {
  const auto& params = f.params();
  const ComplexRational lambda(params.lambda());
  const LaurentBiPoly& p = f.poly();
  const LaurentBiPoly pz = d_z(p);
  LaurentBiPoly inner = ComplexRational(-2) * d_z(d_zbar(p)) +
                        lambda * (LaurentBiPoly::zbar() * d_zbar(p)) +
                        lambda * (LaurentBiPoly::z() * pz) +
                        ComplexRational(2) * (params.f_prime() * pz) -
                        (lambda * ComplexRational(n)) * p;
  return {ComplexRational(2) * inner, params};
}

AnsatzFn conjugate(const AnsatzFn& f) {
  if (!f.params().is_real()) {
    throw RealityViolation("conjugation needs real F coefficients");
  }
  return {f.poly().swapped_variables().conj_coefficients(), f.params()};
}

}  // namespace nhosc
