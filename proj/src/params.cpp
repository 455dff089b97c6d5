#include "nhosc/params.h"

#include "nhosc/errors.h"

namespace nhosc {

ModelParams::ModelParams(Rational lambda, std::vector<ComplexRational> f)
    : lambda_(std::move(lambda)), f_(std::move(f)) {
  if (lambda_.sign() <= 0) throw InvalidParams("lambda must be positive, got " + lambda_.str());
  while (!f_.empty() && f_.back().is_zero()) f_.pop_back();
}

ModelParams ModelParams::quartic(const Rational& lambda, const Rational& b, const Rational& omega) {
  if (omega.sign() < 0) throw InvalidParams("omega must be non-negative, got " + omega.str());
  std::vector<ComplexRational> f(5);
  f[2] = b / Rational(2);
  f[4] = omega / Rational(2);
  return ModelParams(lambda, std::move(f));
}

ModelParams ModelParams::general(const Rational& lambda, std::vector<ComplexRational> f_coefficients) {
  return ModelParams(lambda, std::move(f_coefficients));
}

LaurentBiPoly ModelParams::f_poly() const {
  LaurentBiPoly p;
  for (std::size_t j = 0; j < f_.size(); ++j) p.add_term(0, static_cast<int>(j), f_[j]);
  return p;
}

LaurentBiPoly ModelParams::f_prime() const { return d_zbar(f_poly()); }

bool ModelParams::is_quartic() const {
  for (std::size_t j = 0; j < f_.size(); ++j) {
    if (f_[j].is_zero()) continue;
    if ((j != 2 && j != 4) || !f_[j].is_real()) return false;
  }
  return f_.size() <= 4 || f_[4].re().sign() >= 0;
}

bool ModelParams::is_real() const {
  for (const auto& c : f_) {
    if (!c.is_real()) return false;
  }
  return true;
}

ComplexRational ModelParams::quadratic_b() const {
  return f_.size() > 2 ? f_[2] * ComplexRational(2) : ComplexRational();
}

Rational ModelParams::b() const {
  if (!is_quartic()) throw InvalidParams("b is defined only for the quartic model");
  return quadratic_b().re();
}

Rational ModelParams::omega() const {
  if (!is_quartic()) throw InvalidParams("omega is defined only for the quartic model");
  return f_.size() > 4 ? f_[4].re() * Rational(2) : Rational(0);
}

}  // namespace nhosc
