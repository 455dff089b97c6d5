#pragma once

#include <string>

#include "nhosc/ansatz.h"

namespace nhosc {

/// An exact multiple of π. The coefficient is complex-rational so that
/// pairings of arbitrary complex ansatz functions stay representable; every
/// pairing between chain functions of a real model is real.
struct PiRational {
  ComplexRational coefficient;

  bool is_zero() const { return coefficient.is_zero(); }
  std::complex<double> to_complex() const;
  /// "num/den" (real) with the unit left to the caller.
  std::string str() const { return coefficient.str(); }

  PiRational& operator+=(const PiRational& o) {
    coefficient += o.coefficient;
    return *this;
  }
  friend PiRational operator+(PiRational a, const PiRational& b) { return a += b; }
  friend PiRational operator-(PiRational a, const PiRational& b) {
    a.coefficient -= b.coefficient;
    return a;
  }
  friend PiRational operator*(const ComplexRational& s, PiRational a) {
    a.coefficient *= s;
    return a;
  }
  friend bool operator==(const PiRational&, const PiRational&) = default;
};

/// ∫ zᴺ z̄ᴹ exp(−(λzz̄ + b z̄²)) d²x / π:
/// zero if N+M is odd or M > N, otherwise (−b)^j·N! / (j!·λ^{N+1}) with j = (N−M)/2.
ComplexRational moment_coefficient(int N, int M, const Rational& lambda, const ComplexRational& b);

/// The moment with b taken from the model (twice the z̄² coefficient of F).
PiRational moment(int N, int M, const ModelParams& params);

/// Truncated power series of exp(−2(F(z̄) − F₂z̄²)), i.e. every part of the
/// squared weight beyond the b-Gaussian, as a polynomial in z̄ of degree ≤
/// max_degree. Throws InvalidParams if F(0) ≠ 0.
LaurentBiPoly weight_series(const ModelParams& params, int max_degree);

/// Formal pairing ∫ P·Q·W² d²x / π of two polynomial parts. The weight
/// series is expanded to the product's z-degree plus extra_orders; terms past
/// the z-degree vanish by the M > N selection rule.
ComplexRational pairing_coefficient(const LaurentBiPoly& p, const LaurentBiPoly& q,
                                    const ModelParams& params, int extra_orders = 0);

/// ⟨⟨f|g⟩⟩ = ∫ f·g d²x (bilinear, no complex conjugation). Throws
/// ParamMismatch when the params differ.
PiRational pairing(const AnsatzFn& f, const AnsatzFn& g);

/// pairing(Hf, g) == pairing(f, Hg), exactly.
bool pseudo_symmetry_check(const AnsatzFn& f, const AnsatzFn& g);

/// The I_{2(n+k),2n} and I_{2(n+k)+1,2n+1} entries exactly as the printed
/// integral table states them (with its "(2k+1)!" coefficient), divided by
/// π. Used only to report the table's disagreement with the closed form.
Rational printed_table_moment_even(int n, int k, const Rational& lambda, const Rational& b);
Rational printed_table_moment_odd(int n, int k, const Rational& lambda, const Rational& b);

}  // namespace nhosc
