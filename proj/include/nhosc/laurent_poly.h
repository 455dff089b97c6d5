#pragma once

#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <string>

#include "nhosc/rational.h"

namespace nhosc {

/// Exponent pair of a monomial z^z · z̄^zbar. Ordered lexicographically.
struct Exponent {
  int z = 0;
  int zbar = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
};

/// Polynomial in z (non-negative powers) and z̄ (integer powers) with exact
/// complex-rational coefficients. z and z̄ are independent formal variables;
/// physical evaluation binds z̄ to conj(z) at the call site.
///
/// No zero coefficient is ever stored, so structural equality is value
/// equality.
class LaurentBiPoly {
 public:
  using Terms = std::map<Exponent, ComplexRational>;

  LaurentBiPoly() = default;

  static LaurentBiPoly constant(const ComplexRational& c);
  static LaurentBiPoly monomial(const ComplexRational& c, int z_pow, int zbar_pow);
  static LaurentBiPoly z() { return monomial(1, 1, 0); }
  static LaurentBiPoly zbar() { return monomial(1, 0, 1); }

  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  ComplexRational coeff(int z_pow, int zbar_pow) const;

  /// Accumulates c·z^z_pow·z̄^zbar_pow, dropping the term if it cancels.
  void add_term(int z_pow, int zbar_pow, const ComplexRational& c);

  std::optional<int> z_degree() const;
  std::optional<int> zbar_degree() const;
  std::optional<int> min_zbar_power() const;
  bool has_negative_powers() const;
  bool is_real() const;

  /// Coefficient of z^i as a polynomial in z̄ alone.
  LaurentBiPoly z_coefficient(int i) const;
  /// Multiplies by z^dz · z̄^dzbar. Throws NegativePower if a z-power drops below 0.
  LaurentBiPoly shifted(int dz, int dzbar) const;
  /// Exchanges the roles of z and z̄. Requires no negative powers.
  LaurentBiPoly swapped_variables() const;
  LaurentBiPoly conj_coefficients() const;

  /// Floating evaluation; the z̄ argument is independent of z.
  std::complex<double> eval(std::complex<double> z, std::complex<double> zbar) const;

  std::string str() const;

  LaurentBiPoly& operator+=(const LaurentBiPoly& o);
  LaurentBiPoly& operator-=(const LaurentBiPoly& o);
  LaurentBiPoly& operator*=(const ComplexRational& c);

  friend LaurentBiPoly operator+(LaurentBiPoly a, const LaurentBiPoly& b) { return a += b; }
  friend LaurentBiPoly operator-(LaurentBiPoly a, const LaurentBiPoly& b) { return a -= b; }
  friend LaurentBiPoly operator-(const LaurentBiPoly& a);
  friend LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b);
  friend LaurentBiPoly operator*(LaurentBiPoly a, const ComplexRational& c) { return a *= c; }
  friend LaurentBiPoly operator*(const ComplexRational& c, LaurentBiPoly a) { return a *= c; }

  friend bool operator==(const LaurentBiPoly&, const LaurentBiPoly&) = default;

 private:
  Terms terms_;
};

LaurentBiPoly d_z(const LaurentBiPoly& p);
LaurentBiPoly d_zbar(const LaurentBiPoly& p);

/// Termwise antiderivative in z̄ with zero integration constant. Throws
/// LogObstruction when a z̄⁻¹ term is present.
LaurentBiPoly antiderivative_zbar(const LaurentBiPoly& p);

LaurentBiPoly pow(const LaurentBiPoly& p, int exponent);

/// The constant c with a == c·b, if one exists. Both must be nonzero.
std::optional<ComplexRational> proportionality_factor(const LaurentBiPoly& a, const LaurentBiPoly& b);

}  // namespace nhosc
