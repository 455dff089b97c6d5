#pragma once

#include <vector>

#include "nhosc/laurent_poly.h"
#include "nhosc/rational.h"

namespace nhosc {

/// Couplings of H = −4∂z∂z̄ + λ²zz̄ + 2λz̄F′(z̄).
///
/// F is stored as a coefficient list indexed by z̄-power. The quartic model
/// F = b/2·z̄² + ω/2·z̄⁴ is recognised structurally: is_quartic() holds
/// whenever F has real coefficients supported on {z̄², z̄⁴} with ω ≥ 0,
/// however the params were constructed.
class ModelParams {
 public:
  /// Throws InvalidParams unless λ > 0 and ω ≥ 0. b = 0 is accepted here;
  /// consumers that divide by b reject it themselves.
  static ModelParams quartic(const Rational& lambda, const Rational& b, const Rational& omega);
  /// Throws InvalidParams unless λ > 0.
  static ModelParams general(const Rational& lambda, std::vector<ComplexRational> f_coefficients);

  const Rational& lambda() const { return lambda_; }
  const std::vector<ComplexRational>& f_coefficients() const { return f_; }

  LaurentBiPoly f_poly() const;
  LaurentBiPoly f_prime() const;

  bool is_quartic() const;
  bool is_real() const;
  /// Twice the z̄² coefficient of F, i.e. the b of F = b/2·z̄² + … .
  ComplexRational quadratic_b() const;
  /// Quartic couplings; throw InvalidParams when !is_quartic().
  Rational b() const;
  Rational omega() const;

  friend bool operator==(const ModelParams&, const ModelParams&) = default;

 private:
  ModelParams(Rational lambda, std::vector<ComplexRational> f);

  Rational lambda_;
  std::vector<ComplexRational> f_;
};

}  // namespace nhosc
