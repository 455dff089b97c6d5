#include "nhosc/symbolic.h"

#include <sstream>

#include "nhosc/moments.h"

namespace nhosc {

LinearForm LinearForm::unknown(UnknownId id, const ComplexRational& coeff) {
  LinearForm f;
  f.add(id, coeff);
  return f;
}

ComplexRational LinearForm::coeff(UnknownId id) const {
  auto it = coeffs_.find(id);
  return it == coeffs_.end() ? ComplexRational() : it->second;
}

void LinearForm::add(UnknownId id, const ComplexRational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = coeffs_.try_emplace(id, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

LinearForm LinearForm::substitute(const std::map<UnknownId, LinearForm>& subs) const {
  LinearForm out(constant_);
  for (const auto& [id, c] : coeffs_) {
    auto it = subs.find(id);
    if (it == subs.end()) {
      out.add(id, c);
    } else {
      out += c * it->second;
    }
  }
  return out;
}

ComplexRational LinearForm::evaluate(const Assignment& values) const {
  ComplexRational total = constant_;
  for (const auto& [id, c] : coeffs_) {
    auto it = values.find(id);
    if (it == values.end()) {
      throw std::out_of_range("no value for unknown " + std::to_string(id));
    }
    total += c * it->second;
  }
  return total;
}

std::string LinearForm::str(const std::function<std::string(UnknownId)>& name) const {
  std::ostringstream os;
  os << "(" << constant_.str() << ")";
  for (const auto& [id, c] : coeffs_) os << " + (" << c.str() << ")*" << name(id);
  return os.str();
}

LinearForm& LinearForm::operator+=(const LinearForm& o) {
  constant_ += o.constant_;
  for (const auto& [id, c] : o.coeffs_) add(id, c);
  return *this;
}

LinearForm& LinearForm::operator*=(const ComplexRational& c) {
  if (c.is_zero()) {
    coeffs_.clear();
    constant_ = ComplexRational();
    return *this;
  }
  constant_ *= c;
  for (auto& [id, v] : coeffs_) v *= c;
  return *this;
}

AffinePoly AffinePoly::unknown_times(UnknownId id, LaurentBiPoly part) {
  AffinePoly p;
  if (!part.is_zero()) p.parts_.emplace(id, std::move(part));
  return p;
}

void AffinePoly::normalize() {
  for (auto it = parts_.begin(); it != parts_.end();) {
    it = it->second.is_zero() ? parts_.erase(it) : std::next(it);
  }
}

AffinePoly AffinePoly::map(const std::function<LaurentBiPoly(const LaurentBiPoly&)>& op) const {
  AffinePoly out(op(constant_));
  for (const auto& [id, p] : parts_) out.parts_.emplace(id, op(p));
  out.normalize();
  return out;
}

LinearForm AffinePoly::coefficient(int z_pow, int zbar_pow) const {
  LinearForm f(constant_.coeff(z_pow, zbar_pow));
  for (const auto& [id, p] : parts_) f.add(id, p.coeff(z_pow, zbar_pow));
  return f;
}

AffinePoly AffinePoly::without_term(int z_pow, int zbar_pow) const {
  return map([&](const LaurentBiPoly& p) {
    LaurentBiPoly q = p;
    q.add_term(z_pow, zbar_pow, -p.coeff(z_pow, zbar_pow));
    return q;
  });
}

AffinePoly AffinePoly::z_coefficient(int i) const {
  return map([i](const LaurentBiPoly& p) { return p.z_coefficient(i); });
}

AffinePoly AffinePoly::substitute(const std::map<UnknownId, LinearForm>& subs) const {
  AffinePoly out(constant_);
  for (const auto& [id, p] : parts_) {
    auto it = subs.find(id);
    if (it == subs.end()) {
      out += unknown_times(id, p);
      continue;
    }
    out.constant_ += it->second.constant() * p;
    for (const auto& [other, c] : it->second.coeffs()) out += unknown_times(other, c * p);
  }
  out.normalize();
  return out;
}

LaurentBiPoly AffinePoly::evaluate(const Assignment& values) const {
  LaurentBiPoly out = constant_;
  for (const auto& [id, p] : parts_) {
    auto it = values.find(id);
    if (it == values.end()) {
      throw std::out_of_range("no value for unknown " + std::to_string(id));
    }
    out += it->second * p;
  }
  return out;
}

AffinePoly& AffinePoly::operator+=(const AffinePoly& o) {
  constant_ += o.constant_;
  for (const auto& [id, p] : o.parts_) parts_[id] += p;
  normalize();
  return *this;
}

AffinePoly& AffinePoly::operator-=(const AffinePoly& o) {
  constant_ -= o.constant_;
  for (const auto& [id, p] : o.parts_) parts_[id] -= p;
  normalize();
  return *this;
}

AffinePoly& AffinePoly::operator*=(const ComplexRational& c) {
  constant_ *= c;
  for (auto& [id, p] : parts_) p *= c;
  normalize();
  return *this;
}

AffinePoly operator*(const AffinePoly& a, const LaurentBiPoly& p) {
  return a.map([&p](const LaurentBiPoly& q) { return q * p; });
}

LinearForm QuadraticForm::linear_part() const {
  LinearForm f(constant);
  for (const auto& [id, c] : linear) f.add(id, c);
  return f;
}

QuadraticForm pairing_form(const AffinePoly& a, const AffinePoly& b, const ModelParams& params) {
  QuadraticForm q;
  auto pair = [&](const LaurentBiPoly& x, const LaurentBiPoly& y) {
    return pairing_coefficient(x, y, params);
  };
  auto add = [](auto& map, const auto& key, const ComplexRational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = map.try_emplace(key, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) map.erase(it);
    }
  };
  q.constant = pair(a.constant(), b.constant());
  for (const auto& [id, p] : b.parts()) add(q.linear, id, pair(a.constant(), p));
  for (const auto& [id, p] : a.parts()) {
    add(q.linear, id, pair(p, b.constant()));
    for (const auto& [id2, p2] : b.parts()) {
      add(q.quadratic, std::minmax(id, id2), pair(p, p2));
    }
  }
  return q;
}

LinearEliminator::Outcome LinearEliminator::add(const LinearForm& form, UnknownId* pivot) {
  LinearForm reduced = form.substitute(subs_);
  if (reduced.is_constant()) {
    return reduced.constant().is_zero() ? Outcome::Redundant : Outcome::Inconsistent;
  }
  const auto& [p, c] = *reduced.coeffs().rbegin();
  const UnknownId chosen = p;
  const ComplexRational scale = ComplexRational(-1) / c;
  LinearForm rest = reduced;
  rest.add(chosen, -c);
  LinearForm solution = scale * rest;
  std::map<UnknownId, LinearForm> single{{chosen, solution}};
  for (auto& [id, f] : subs_) f = f.substitute(single);
  subs_.emplace(chosen, std::move(solution));
  if (pivot) *pivot = chosen;
  return Outcome::Solved;
}

}  // namespace nhosc
