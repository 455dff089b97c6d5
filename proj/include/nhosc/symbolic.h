#pragma once

#include <functional>
#include <map>
#include <string>
#include <utility>

#include "nhosc/laurent_poly.h"
#include "nhosc/params.h"

namespace nhosc {

using UnknownId = int;
using Assignment = std::map<UnknownId, ComplexRational>;

/// constant + Σ coeff_u · x_u
class LinearForm {
 public:
  LinearForm() = default;
  LinearForm(ComplexRational constant) : constant_(std::move(constant)) {}
  static LinearForm unknown(UnknownId id, const ComplexRational& coeff = 1);

  const ComplexRational& constant() const { return constant_; }
  const std::map<UnknownId, ComplexRational>& coeffs() const { return coeffs_; }
  ComplexRational coeff(UnknownId id) const;
  bool is_constant() const { return coeffs_.empty(); }
  bool is_zero() const { return coeffs_.empty() && constant_.is_zero(); }

  void add(UnknownId id, const ComplexRational& c);
  LinearForm substitute(const std::map<UnknownId, LinearForm>& subs) const;
  ComplexRational evaluate(const Assignment& values) const;
  std::string str(const std::function<std::string(UnknownId)>& name) const;

  LinearForm& operator+=(const LinearForm& o);
  LinearForm& operator*=(const ComplexRational& c);
  friend LinearForm operator+(LinearForm a, const LinearForm& b) { return a += b; }
  friend LinearForm operator-(LinearForm a, LinearForm b) { return a += (b *= ComplexRational(-1)); }
  friend LinearForm operator*(const ComplexRational& c, LinearForm a) { return a *= c; }

  friend bool operator==(const LinearForm&, const LinearForm&) = default;

 private:
  ComplexRational constant_;
  std::map<UnknownId, ComplexRational> coeffs_;
};

/// A polynomial that depends affinely on unknown constants:
/// constant + Σ part_u · x_u.
class AffinePoly {
 public:
  AffinePoly() = default;
  AffinePoly(LaurentBiPoly constant) : constant_(std::move(constant)) {}
  static AffinePoly unknown_times(UnknownId id, LaurentBiPoly part);

  const LaurentBiPoly& constant() const { return constant_; }
  const std::map<UnknownId, LaurentBiPoly>& parts() const { return parts_; }
  bool is_concrete() const { return parts_.empty(); }
  bool is_zero() const { return parts_.empty() && constant_.is_zero(); }

  /// Applies a linear map to every component.
  AffinePoly map(const std::function<LaurentBiPoly(const LaurentBiPoly&)>& op) const;

  LinearForm coefficient(int z_pow, int zbar_pow) const;
  AffinePoly without_term(int z_pow, int zbar_pow) const;
  AffinePoly z_coefficient(int i) const;

  AffinePoly substitute(const std::map<UnknownId, LinearForm>& subs) const;
  LaurentBiPoly evaluate(const Assignment& values) const;

  AffinePoly& operator+=(const AffinePoly& o);
  AffinePoly& operator-=(const AffinePoly& o);
  AffinePoly& operator*=(const ComplexRational& c);
  friend AffinePoly operator+(AffinePoly a, const AffinePoly& b) { return a += b; }
  friend AffinePoly operator-(AffinePoly a, const AffinePoly& b) { return a -= b; }
  friend AffinePoly operator*(const ComplexRational& c, AffinePoly a) { return a *= c; }
  friend AffinePoly operator*(const AffinePoly& a, const LaurentBiPoly& p);

 private:
  void normalize();

  LaurentBiPoly constant_;
  std::map<UnknownId, LaurentBiPoly> parts_;
};

/// constant + Σ linear_u x_u + Σ_{u ≤ v} quadratic_{uv} x_u x_v
struct QuadraticForm {
  ComplexRational constant;
  std::map<UnknownId, ComplexRational> linear;
  std::map<std::pair<UnknownId, UnknownId>, ComplexRational> quadratic;

  bool has_quadratic_part() const { return !quadratic.empty(); }
  LinearForm linear_part() const;
};

/// The formal pairing of two affine polynomials, bilinear in their unknowns.
QuadraticForm pairing_form(const AffinePoly& a, const AffinePoly& b, const ModelParams& params);

/// Incremental Gaussian elimination over the complex rationals. Keeps every
/// solved unknown expressed through the still-free ones.
class LinearEliminator {
 public:
  enum class Outcome { Solved, Redundant, Inconsistent };

  /// Adds the constraint form == 0, pivoting on the highest unknown id.
  Outcome add(const LinearForm& form, UnknownId* pivot = nullptr);

  const std::map<UnknownId, LinearForm>& substitutions() const { return subs_; }
  bool is_solved(UnknownId id) const { return subs_.count(id) != 0; }

 private:
  std::map<UnknownId, LinearForm> subs_;
};

}  // namespace nhosc
