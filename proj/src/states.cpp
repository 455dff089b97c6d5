#include "nhosc/states.h"

#include "nhosc/errors.h"

namespace nhosc {

EnergyLevel energy_level(const ModelParams& params, int n) {
  if (n < 0) throw std::invalid_argument("level index must be non-negative");
  return {n, Rational(2) * params.lambda() * Rational(n + 1)};
}

std::vector<EnergyLevel> spectrum(const ModelParams& params, int n_max) {
  std::vector<EnergyLevel> levels;
  for (int n = 0; n <= n_max; ++n) levels.push_back(energy_level(params, n));
  return levels;
}

ComplexRational ladder_constant(const ModelParams& params, int n, const ComplexRational& c0) {
  return ComplexRational(-params.lambda()).pow(n) * c0;
}

Eigenstate ground_state(const ModelParams& params, const ComplexRational& c0) {
  if (c0.is_zero()) throw ZeroConstant("ground state constant must be non-zero");
  return {energy_level(params, 0), AnsatzFn(LaurentBiPoly::constant(c0), params)};
}

Eigenstate eigenstate(const ModelParams& params, int n, const ComplexRational& c0) {
  if (c0.is_zero()) throw ZeroConstant("eigenstate constant must be non-zero");
  auto level = energy_level(params, n);
  return {level, AnsatzFn(LaurentBiPoly::monomial(ladder_constant(params, n, c0), 0, n), params)};
}

LevelWitness verify_no_extra_levels(const ModelParams& params, const Rational& candidate_energy) {
  LevelWitness w;
  const Rational step = Rational(2) * params.lambda();
  const Rational ground = energy_level(params, 0).energy;

  // A zero mode q(z̄) = Σ q_c z̄^c of A⁻ is an H-eigenfunction only if every
  // monomial shares the eigenvalue, so scanning monomials suffices.
  auto zero_mode_power = [&](const Rational& energy) -> std::optional<int> {
    for (int c = 0; Rational(2) * params.lambda() * Rational(c + 1) <= energy; ++c) {
      AnsatzFn mode(LaurentBiPoly::monomial(1, 0, c), params);
      AnsatzFn h = apply_H(mode);
      if (h.poly() == (mode * ComplexRational(energy)).poly()) return c;
    }
    return std::nullopt;
  };

  Rational energy = candidate_energy;
  for (int descent = 0; energy >= ground; ++descent, energy -= step) {
    w.descent.push_back(energy);
    if (auto c = zero_mode_power(energy)) {
      w.admissible = true;
      w.zero_mode_power = *c;
      w.level = descent + *c;
      w.reason = "descent of " + std::to_string(descent) + " step(s) ends in zero mode z̄^" +
                 std::to_string(*c) + " with energy " + energy.str();
      return w;
    }
  }
  w.descent.push_back(energy);
  w.reason = "descent passes below E0 = " + ground.str() +
             " without meeting a single-valued zero mode; the A⁻ series never terminates";
  return w;
}

}  // namespace nhosc
