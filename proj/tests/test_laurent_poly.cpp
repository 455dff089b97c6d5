#include <doctest.h>

#include "nhosc/errors.h"
#include "nhosc/laurent_poly.h"
#include "support.h"

using namespace nhosc;

namespace {

LaurentBiPoly mono(Rational c, int zp, int zbp) { return LaurentBiPoly::monomial(c, zp, zbp); }

}  // namespace

TEST_CASE("addition, multiplication and cancellation") {
  const LaurentBiPoly z = LaurentBiPoly::z(), zb = LaurentBiPoly::zbar();
  const LaurentBiPoly sq = (z + zb) * (z - zb);
  CHECK(sq == mono(1, 2, 0) - mono(1, 0, 2));
  CHECK(sq.size() == 2);
  CHECK((sq - sq).is_zero());
  CHECK(pow(z + zb, 3).coeff(1, 2) == ComplexRational(3));
  CHECK(mono(2, 1, -1) * mono(Rational(1, 2), 0, 1) == z);
}

TEST_CASE("degrees and negative powers") {
  const LaurentBiPoly p = mono(1, 3, -2) + mono(4, 0, 5);
  CHECK(p.z_degree() == 3);
  CHECK(p.zbar_degree() == 5);
  CHECK(p.min_zbar_power() == -2);
  CHECK(p.has_negative_powers());
  CHECK_FALSE(LaurentBiPoly().z_degree().has_value());
  CHECK_THROWS_AS(mono(1, -1, 0), NegativePower);
  CHECK_THROWS_AS(LaurentBiPoly::z().shifted(-2, 0), NegativePower);
}

TEST_CASE("derivatives and the z-bar antiderivative") {
  const LaurentBiPoly p = mono(3, 2, 4) + mono(5, 0, -2) + mono(7, 1, 0);
  CHECK(d_z(p) == mono(6, 1, 4) + mono(7, 0, 0));
  CHECK(d_zbar(p) == mono(12, 2, 3) + mono(-10, 0, -3));
  CHECK(antiderivative_zbar(mono(6, 1, 2)) == mono(2, 1, 3));
  CHECK(antiderivative_zbar(mono(3, 0, -3)) == mono(Rational(-3, 2), 0, -2));
  try {
    antiderivative_zbar(mono(1, 0, 2) + mono(Rational(5, 7), 2, -1));
    FAIL("expected LogObstruction");
  } catch (const LogObstruction& e) {
    CHECK(e.coefficient().find("5/7") != std::string::npos);
  }
}

TEST_CASE("ring and derivation identities on random triples") {
  testing::Gen gen(2024);
  for (int t = 0; t < 200; ++t) {
    const LaurentBiPoly a = gen.poly(4, 3, 3, -2), b = gen.poly(4, 3, 3, -2), c = gen.poly(3, 2, 2, -1);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(d_z(a * b) == d_z(a) * b + a * d_z(b));
    CHECK(d_zbar(a * b) == d_zbar(a) * b + a * d_zbar(b));
    CHECK(d_z(d_zbar(a)) == d_zbar(d_z(a)));
    LaurentBiPoly safe;
    for (const auto& [e, coef] : a.terms()) {
      if (e.zbar != -1) safe.add_term(e.z, e.zbar, coef);
    }
    CHECK(d_zbar(antiderivative_zbar(safe)) == safe);
  }
}

TEST_CASE("evaluation is a ring homomorphism") {
  testing::Gen gen(7);
  for (int t = 0; t < 100; ++t) {
    const LaurentBiPoly a = gen.poly(5, 4, 4, -2), b = gen.poly(5, 4, 4, -2);
    const std::complex<double> z(0.3 + 0.01 * t, -0.7), zb(-0.4, 0.25 + 0.01 * t);
    const std::complex<double> ea = a.eval(z, zb), eb = b.eval(z, zb);
    const double scale = 1.0 + std::abs(ea) * std::abs(eb);
    CHECK(std::abs((a * b).eval(z, zb) - ea * eb) <= 1e-12 * scale);
    CHECK(std::abs((a + b).eval(z, zb) - (ea + eb)) <= 1e-12 * (1.0 + std::abs(ea) + std::abs(eb)));
  }
  CHECK_THROWS_AS(mono(1, 0, -1).eval(1.0, 0.0), DivisionByZero);
}

TEST_CASE("variable swap, conjugation and proportionality") {
  const LaurentBiPoly p = mono(2, 1, 3) + LaurentBiPoly::monomial(ComplexRational::i(), 0, 1);
  CHECK(p.swapped_variables() == mono(2, 3, 1) + LaurentBiPoly::monomial(ComplexRational::i(), 1, 0));
  CHECK(p.conj_coefficients().coeff(0, 1) == -ComplexRational::i());
  CHECK_FALSE(p.is_real());
  CHECK(proportionality_factor(p * Rational(-3, 5), p) == ComplexRational(Rational(-3, 5)));
  CHECK_FALSE(proportionality_factor(p + mono(1, 0, 0), p).has_value());
  CHECK(p.str() == "(0/1 + 1/1*i)*zb^1 + (2/1)*z^1*zb^3");
}
