#include <doctest.h>

#include "nhosc/ansatz.h"
#include "nhosc/errors.h"
#include "support.h"

using namespace nhosc;

namespace {

ModelParams sample_quartic() { return ModelParams::quartic(2, Rational(1, 2), Rational(1, 3)); }

AnsatzFn fn(const LaurentBiPoly& p, const ModelParams& params) { return AnsatzFn(p, params); }

}  // namespace

TEST_CASE("ansatz functions reject negative powers and mixed params") {
  const ModelParams params = sample_quartic();
  CHECK_THROWS_AS(fn(LaurentBiPoly::monomial(1, 0, -1), params), NegativePower);
  const AnsatzFn a = fn(LaurentBiPoly::z(), params);
  const AnsatzFn b = fn(LaurentBiPoly::z(), ModelParams::quartic(3, Rational(1, 2), Rational(1, 3)));
  CHECK_THROWS_AS(a + b, ParamMismatch);
}

TEST_CASE("weight derivatives on small examples") {
  const ModelParams params = sample_quartic();
  const LaurentBiPoly one = LaurentBiPoly::constant(1);
  // ∂z W = −(λ/2) z̄ W, ∂z̄ W = −(λ/2 z + b z̄ + 2ω z̄³) W
  CHECK(weighted_d_z(one, params) == LaurentBiPoly::monomial(-1, 0, 1));
  CHECK(weighted_d_zbar(one, params) ==
        LaurentBiPoly::monomial(-1, 1, 0) + LaurentBiPoly::monomial(Rational(-1, 2), 0, 1) +
            LaurentBiPoly::monomial(Rational(-2, 3), 0, 3));
}

TEST_CASE("ladder operators on the weight") {
  const ModelParams params = sample_quartic();
  const AnsatzFn w = fn(LaurentBiPoly::constant(1), params);
  CHECK(apply_A_minus(w).is_zero());
  CHECK(apply_A_plus(w).poly() == LaurentBiPoly::monomial(-2, 0, 1));
  CHECK(apply_H(w).poly() == LaurentBiPoly::constant(4));
  CHECK(apply_A_minus_power(fn(pow(LaurentBiPoly::z(), 3), params), 3).poly() == LaurentBiPoly::constant(6));
}

TEST_CASE("intertwining: H A± − A± H = ±2λ A± for general F") {
  testing::Gen gen(51);
  for (int t = 0; t < 50; ++t) {
    const ModelParams params = gen.general_params(6);
    const ComplexRational two_lambda(Rational(2) * params.lambda());
    const AnsatzFn f = gen.ansatz(params, 6);
    const AnsatzFn plus = apply_H(apply_A_plus(f)) - apply_A_plus(apply_H(f)) - two_lambda * apply_A_plus(f);
    const AnsatzFn minus = apply_H(apply_A_minus(f)) - apply_A_minus(apply_H(f)) + two_lambda * apply_A_minus(f);
    CHECK(plus.is_zero());
    CHECK(minus.is_zero());
  }
}

TEST_CASE("conjugated form agrees with the full product rule") {
  testing::Gen gen(53);
  for (int t = 0; t < 40; ++t) {
    const ModelParams params = gen.general_params(6);
    const AnsatzFn f = gen.ansatz(params, 5);
    const int n = gen.integer(0, 6);
    const ComplexRational energy(Rational(2) * params.lambda() * Rational(n + 1));
    CHECK(apply_H_conjugated(f, n) == apply_H(f) - energy * f);
  }
}

TEST_CASE("conjugation") {
  const ModelParams params = sample_quartic();
  const LaurentBiPoly p = LaurentBiPoly::monomial(ComplexRational(Rational(1), Rational(2)), 2, 1);
  const AnsatzFn c = conjugate(fn(p, params));
  CHECK(c.poly() == LaurentBiPoly::monomial(ComplexRational(Rational(1), Rational(-2)), 1, 2));
  CHECK(conjugate(c) == fn(p, params));
  const ModelParams complex_f = ModelParams::general(1, {0, 0, ComplexRational::i()});
  CHECK_THROWS_AS(conjugate(fn(p, complex_f)), RealityViolation);
}
