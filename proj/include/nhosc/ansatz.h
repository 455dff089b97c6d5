#pragma once

#include "nhosc/laurent_poly.h"
#include "nhosc/params.h"

namespace nhosc {

/// A function P(z, z̄)·W with the implicit weight W = exp(−λ/2·zz̄ − F(z̄)).
/// The weight is never materialised: every operator acts on P through its
/// conjugation by W.
class AnsatzFn {
 public:
  /// Throws NegativePower if poly carries a negative z̄-power.
  AnsatzFn(LaurentBiPoly poly, ModelParams params);

  const LaurentBiPoly& poly() const { return poly_; }
  const ModelParams& params() const { return params_; }
  bool is_zero() const { return poly_.is_zero(); }

  AnsatzFn& operator+=(const AnsatzFn& o);
  AnsatzFn& operator-=(const AnsatzFn& o);
  AnsatzFn& operator*=(const ComplexRational& c);

  friend AnsatzFn operator+(AnsatzFn a, const AnsatzFn& b) { return a += b; }
  friend AnsatzFn operator-(AnsatzFn a, const AnsatzFn& b) { return a -= b; }
  friend AnsatzFn operator*(AnsatzFn a, const ComplexRational& c) { return a *= c; }
  friend AnsatzFn operator*(const ComplexRational& c, AnsatzFn a) { return a *= c; }

  friend bool operator==(const AnsatzFn&, const AnsatzFn&) = default;

 private:
  LaurentBiPoly poly_;
  ModelParams params_;
};

/// Polynomial part of ∂z(P·W) / W.
LaurentBiPoly weighted_d_z(const LaurentBiPoly& p, const ModelParams& params);
/// Polynomial part of ∂z̄(P·W) / W.
LaurentBiPoly weighted_d_zbar(const LaurentBiPoly& p, const ModelParams& params);

/// A± = ∂z ∓ (λ/2)·z̄.
AnsatzFn apply_A_plus(const AnsatzFn& f);
AnsatzFn apply_A_minus(const AnsatzFn& f);
AnsatzFn apply_A_minus_power(AnsatzFn f, int times);

/// H f through the full product rule on P·W.
AnsatzFn apply_H(const AnsatzFn& f);

/// 2(−2∂z∂z̄ + λz̄∂z̄ + λz∂z + 2F′∂z − λn) applied to the polynomial part,
/// which equals (H − E_n) f with E_n = 2λ(n+1).
AnsatzFn apply_H_conjugated(const AnsatzFn& f, int n);

/// The dual function Ψ*: swaps z ↔ z̄ in the polynomial part and conjugates
/// its coefficients. Throws RealityViolation if F has non-real coefficients.
AnsatzFn conjugate(const AnsatzFn& f);

}  // namespace nhosc
