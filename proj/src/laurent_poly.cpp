#include "nhosc/laurent_poly.h"

#include <cmath>
#include <iterator>
#include <limits>
#include <sstream>

#include "nhosc/errors.h"

namespace nhosc {

LaurentBiPoly LaurentBiPoly::constant(const ComplexRational& c) { return monomial(c, 0, 0); }

LaurentBiPoly LaurentBiPoly::monomial(const ComplexRational& c, int z_pow, int zbar_pow) {
  if (z_pow < 0) throw NegativePower("z-powers must be non-negative");
  LaurentBiPoly p;
  p.add_term(z_pow, zbar_pow, c);
  return p;
}

ComplexRational LaurentBiPoly::coeff(int z_pow, int zbar_pow) const {
  auto it = terms_.find({z_pow, zbar_pow});
  return it == terms_.end() ? ComplexRational() : it->second;
}

void LaurentBiPoly::add_term(int z_pow, int zbar_pow, const ComplexRational& c) {
  if (c.is_zero()) return;
  if (z_pow < 0) throw NegativePower("z-powers must be non-negative");
  auto [it, inserted] = terms_.try_emplace({z_pow, zbar_pow}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::optional<int> LaurentBiPoly::z_degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.rbegin()->first.z;
}

std::optional<int> LaurentBiPoly::zbar_degree() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    if (!d || e.zbar > *d) d = e.zbar;
  }
  return d;
}

std::optional<int> LaurentBiPoly::min_zbar_power() const {
  std::optional<int> d;
  for (const auto& [e, c] : terms_) {
    if (!d || e.zbar < *d) d = e.zbar;
  }
  return d;
}

bool LaurentBiPoly::has_negative_powers() const {
  auto m = min_zbar_power();
  return m && *m < 0;
}

bool LaurentBiPoly::is_real() const {
  for (const auto& [e, c] : terms_) {
    if (!c.is_real()) return false;
  }
  return true;
}

LaurentBiPoly LaurentBiPoly::z_coefficient(int i) const {
  LaurentBiPoly out;
  for (auto it = terms_.lower_bound({i, std::numeric_limits<int>::min()});
       it != terms_.end() && it->first.z == i; ++it) {
    out.terms_.emplace(Exponent{0, it->first.zbar}, it->second);
  }
  return out;
}

LaurentBiPoly LaurentBiPoly::shifted(int dz, int dzbar) const {
  LaurentBiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.z + dz < 0) throw NegativePower("shift drives a z-power negative");
    out.terms_.emplace(Exponent{e.z + dz, e.zbar + dzbar}, c);
  }
  return out;
}

LaurentBiPoly LaurentBiPoly::swapped_variables() const {
  LaurentBiPoly out;
  for (const auto& [e, c] : terms_) {
    if (e.zbar < 0) throw NegativePower("cannot swap variables with negative z̄-powers");
    out.terms_.emplace(Exponent{e.zbar, e.z}, c);
  }
  return out;
}

LaurentBiPoly LaurentBiPoly::conj_coefficients() const {
  LaurentBiPoly out;
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, c.conj());
  return out;
}

std::complex<double> LaurentBiPoly::eval(std::complex<double> z, std::complex<double> zbar) const {
  if (terms_.empty()) return 0.0;
  const int min_zbar = *min_zbar_power();
  if (min_zbar < 0 && zbar == 0.0) {
    throw DivisionByZero("negative z̄-power evaluated at z̄ = 0");
  }
  // Horner in z over the per-z-power Horner polynomials in z̄ (shifted by
  // the smallest z̄-power so all inner exponents are non-negative).
  auto inner = [&](int z_pow) {
    std::complex<double> acc = 0.0;
    int prev = -1;
    auto first = terms_.lower_bound({z_pow, std::numeric_limits<int>::min()});
    auto last = terms_.lower_bound({z_pow + 1, std::numeric_limits<int>::min()});
    for (auto it = std::make_reverse_iterator(last); it != std::make_reverse_iterator(first); ++it) {
      const int k = it->first.zbar - min_zbar;
      if (prev >= 0) acc *= std::pow(zbar, prev - k);
      acc += it->second.to_complex();
      prev = k;
    }
    if (prev > 0) acc *= std::pow(zbar, prev);
    return acc;
  };
  const int zdeg = *z_degree();
  std::complex<double> result = 0.0;
  for (int i = zdeg; i >= 0; --i) result = result * z + inner(i);
  if (min_zbar != 0) result *= std::pow(zbar, min_zbar);
  return result;
}

std::string LaurentBiPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    if (e.z != 0) os << "*z^" << e.z;
    if (e.zbar != 0) os << "*zb^" << e.zbar;
  }
  return os.str();
}

LaurentBiPoly& LaurentBiPoly::operator+=(const LaurentBiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.z, e.zbar, c);
  return *this;
}

LaurentBiPoly& LaurentBiPoly::operator-=(const LaurentBiPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.z, e.zbar, -c);
  return *this;
}

LaurentBiPoly& LaurentBiPoly::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentBiPoly operator-(const LaurentBiPoly& a) {
  LaurentBiPoly out = a;
  for (auto& [e, v] : out.terms_) v = -v;
  return out;
}

LaurentBiPoly operator*(const LaurentBiPoly& a, const LaurentBiPoly& b) {
  LaurentBiPoly out;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      out.add_term(ea.z + eb.z, ea.zbar + eb.zbar, ca * cb);
    }
  }
  return out;
}

LaurentBiPoly d_z(const LaurentBiPoly& p) {
  LaurentBiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.z == 0) continue;
    out.add_term(e.z - 1, e.zbar, c * ComplexRational(e.z));
  }
  return out;
}

LaurentBiPoly d_zbar(const LaurentBiPoly& p) {
  LaurentBiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.zbar == 0) continue;
    out.add_term(e.z, e.zbar - 1, c * ComplexRational(e.zbar));
  }
  return out;
}

LaurentBiPoly antiderivative_zbar(const LaurentBiPoly& p) {
  LaurentBiPoly out;
  for (const auto& [e, c] : p.terms()) {
    if (e.zbar == -1) throw LogObstruction(c.str());
    out.add_term(e.z, e.zbar + 1, c / ComplexRational(e.zbar + 1));
  }
  return out;
}

LaurentBiPoly pow(const LaurentBiPoly& p, int exponent) {
  if (exponent < 0) throw std::invalid_argument("negative polynomial power");
  LaurentBiPoly result = LaurentBiPoly::constant(1);
  for (int i = 0; i < exponent; ++i) result = result * p;
  return result;
}

}  // namespace nhosc

namespace nhosc {

std::optional<ComplexRational> proportionality_factor(const LaurentBiPoly& a, const LaurentBiPoly& b) {
  if (a.is_zero() || b.is_zero() || a.size() != b.size()) return std::nullopt;
  const auto& [e0, c0] = *b.terms().begin();
  const ComplexRational factor = a.coeff(e0.z, e0.zbar) / c0;
  if (factor.is_zero() || !(a == b * factor)) return std::nullopt;
  return factor;
}

}  // namespace nhosc
