#include <doctest.h>

#include "nhosc/errors.h"
#include "nhosc/moments.h"
#include "nhosc/states.h"
#include "support.h"

using namespace nhosc;

namespace {

// Oracle 1: expand exp(−b z̄²) termwise; the angular integral keeps only
// N = M + 2j, the radial one is ∫ r^{2N+1} e^{−λr²} dr = Γ(N+1)/(2λ^{N+1}).
ComplexRational series_oracle(int N, int M, const Rational& lambda, const Rational& b) {
  ComplexRational total;
  Rational b_power(1), j_factorial(1);
  for (int j = 0; M + 2 * j <= N; ++j) {
    if (j > 0) {
      b_power *= -b;
      j_factorial *= Rational(j);
    }
    if (M + 2 * j != N) continue;
    Rational gamma(1);
    for (int m = 2; m <= N; ++m) gamma *= Rational(m);
    const Rational radial = gamma / (Rational(2) * lambda.pow(N + 1));
    total += ComplexRational(Rational(2) * b_power / j_factorial * radial);  // 2π·radial / π
  }
  return total;
}

// Oracle 2: derivatives of the generating integral
// ∫ exp(−λzz̄ − bz̄² − cz²) d²x = π / √(λ² − 4bc) = (π/λ) Σ_m C(2m,m) (bc)^m / λ^{2m}.
// (−∂c)^p (−∂b)^q at c = 0 gives the (2p, 2q) moment; −∂λ adds a factor zz̄.
ComplexRational generating_oracle(int N, int M, const Rational& lambda, const Rational& b) {
  if ((N + M) % 2 != 0) return {};
  const bool odd = N % 2 == 1;
  const int p = (odd ? N - 1 : N) / 2;
  const int q = (odd ? M - 1 : M) / 2;
  if (q > p) return {};
  Rational binom(1);
  for (int i = 1; i <= p; ++i) binom = binom * Rational(p + i) / Rational(i);
  // coefficient of (bc)^p is binom/λ^{2p+1}; p! from ∂c^p, p!/(p−q)! b^{p−q} from ∂b^q
  Rational falling(1);
  for (int i = 0; i < q; ++i) falling *= Rational(p - i);
  const Rational sign = ((p + q) % 2 == 0) ? Rational(1) : Rational(-1);
  Rational value = sign * factorial(p) * falling * binom * b.pow(p - q);
  int lambda_power = 2 * p + 1;
  if (odd) {
    value *= Rational(lambda_power);  // −∂λ λ^{−k} = k λ^{−k−1}
    ++lambda_power;
  }
  return ComplexRational(value / lambda.pow(lambda_power));
}

}  // namespace

TEST_CASE("closed-form moments: small cases") {
  CHECK(moment_coefficient(0, 0, 2, Rational(1, 2)) == ComplexRational(Rational(1, 2)));
  CHECK(moment_coefficient(1, 1, 2, Rational(1, 2)) == ComplexRational(Rational(1, 4)));
  CHECK(moment_coefficient(2, 0, 2, Rational(1, 2)) == ComplexRational(Rational(-1, 8)));
  CHECK(moment_coefficient(0, 2, 2, Rational(1, 2)).is_zero());
  CHECK(moment_coefficient(3, 0, 2, Rational(1, 2)).is_zero());
}

TEST_CASE("closed-form moments agree with both oracles for N, M <= 10") {
  const std::vector<std::pair<Rational, Rational>> cases = {
      {2, Rational(1, 2)}, {Rational(3, 7), Rational(-5, 4)}, {1, 0}, {Rational(9, 2), 3}};
  for (const auto& [lambda, b] : cases) {
    for (int N = 0; N <= 10; ++N) {
      for (int M = 0; M <= 10; ++M) {
        const ComplexRational closed = moment_coefficient(N, M, lambda, b);
        CHECK(closed == series_oracle(N, M, lambda, b));
        CHECK(closed == generating_oracle(N, M, lambda, b));
      }
    }
  }
}

TEST_CASE("selection rules hold exhaustively") {
  for (int N = 0; N <= 10; ++N) {
    for (int M = 0; M <= 10; ++M) {
      if ((N + M) % 2 == 1 || M > N) CHECK(moment_coefficient(N, M, Rational(7, 3), Rational(2, 5)).is_zero());
    }
  }
}

TEST_CASE("weight series") {
  const ModelParams params = ModelParams::quartic(2, Rational(1, 2), Rational(1, 3));
  // exp(−ω z̄⁴) = 1 − ω z̄⁴ + ω²/2 z̄⁸
  const LaurentBiPoly s = weight_series(params, 9);
  CHECK(s == LaurentBiPoly::constant(1) + LaurentBiPoly::monomial(Rational(-1, 3), 0, 4) +
                 LaurentBiPoly::monomial(Rational(1, 18), 0, 8));
  CHECK_THROWS_AS(weight_series(ModelParams::general(1, {1, 0, 1}), 4), InvalidParams);
}

TEST_CASE("pairing is symmetric (random general F)") {
  testing::Gen gen(71);
  for (int t = 0; t < 100; ++t) {
    const ModelParams params = gen.general_params(4);
    const AnsatzFn f = gen.ansatz(params, 5, 5), g = gen.ansatz(params, 5, 5);
    CHECK(pairing(f, g) == pairing(g, f));
  }
}

TEST_CASE("extending the weight series past the cutoff changes nothing") {
  testing::Gen gen(72);
  for (int t = 0; t < 40; ++t) {
    const ModelParams params = gen.general_params(6);
    const LaurentBiPoly p = gen.poly(5, 5, 5), q = gen.poly(5, 5, 5);
    const ComplexRational base = pairing_coefficient(p, q, params);
    CHECK(pairing_coefficient(p, q, params, 1) == base);
    CHECK(pairing_coefficient(p, q, params, 4) == base);
  }
}

TEST_CASE("eigenstates are self-orthogonal except the ground state") {
  const ModelParams params = ModelParams::quartic(Rational(5, 2), Rational(1, 3), Rational(2, 7));
  const ComplexRational c(Rational(3, 4));
  for (int n = 0; n <= 6; ++n) {
    const Eigenstate s = eigenstate(params, n, c);
    const ComplexRational cn = ladder_constant(params, n, c);
    const PiRational expected = n == 0 ? PiRational{cn * cn / ComplexRational(params.lambda())} : PiRational{};
    CHECK(pairing(s.fn, s.fn) == expected);
  }
}

TEST_CASE("first-cell pairings") {
  testing::Gen gen(73);
  for (int t = 0; t < 20; ++t) {
    const ModelParams params = gen.quartic_params();
    const Rational lambda = params.lambda(), b = params.b();
    const Rational norm = gen.positive_rational(), alpha = gen.rational(), c3 = gen.rational();
    // N(z − (α/λ) z̄ + c₃ z̄³)
    const AnsatzFn psi11(LaurentBiPoly::monomial(norm, 1, 0) + LaurentBiPoly::monomial(-norm * alpha / lambda, 0, 1) +
                             LaurentBiPoly::monomial(norm * c3, 0, 3),
                         params);
    const AnsatzFn psi10(LaurentBiPoly::zbar(), params);
    CHECK(pairing(psi10, psi11) == PiRational{norm / (lambda * lambda)});
    CHECK(pairing(psi11, psi11) == PiRational{Rational(-2) * norm * norm * (b + alpha) / lambda.pow(3)});
  }
}

TEST_CASE("pairing rejects mismatched params") {
  const AnsatzFn f(LaurentBiPoly::z(), ModelParams::quartic(2, 1, 0));
  const AnsatzFn g(LaurentBiPoly::z(), ModelParams::quartic(2, 1, 1));
  CHECK_THROWS_AS(pairing(f, g), ParamMismatch);
}

TEST_CASE("pseudo-symmetry of H on random pairs") {
  testing::Gen gen(74);
  for (int t = 0; t < 50; ++t) {
    const ModelParams params = gen.general_params(4);
    CHECK(pseudo_symmetry_check(gen.ansatz(params, 4, 5), gen.ansatz(params, 4, 5)));
  }
}

TEST_CASE("the printed integral table disagrees with the closed form") {
  // I_{2,0} with b = 1/2, λ = 2: the closed form is −b/λ²·(2!/1!)/λ = −1/8.
  CHECK(printed_table_moment_even(0, 1, 2, Rational(1, 2)) != Rational(-1, 8));
  CHECK(moment_coefficient(2, 0, 2, Rational(1, 2)) == ComplexRational(Rational(-1, 8)));
}
