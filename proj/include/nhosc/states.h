#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nhosc/ansatz.h"

namespace nhosc {

struct EnergyLevel {
  int n = 0;
  Rational energy;

  friend bool operator==(const EnergyLevel&, const EnergyLevel&) = default;
};

struct Eigenstate {
  EnergyLevel level;
  AnsatzFn fn;
};

/// E_n = 2λ(n+1).
EnergyLevel energy_level(const ModelParams& params, int n);
std::vector<EnergyLevel> spectrum(const ModelParams& params, int n_max);

/// Ladder constant relating Ψ_{n,0} = (A⁺)ⁿΨ_{0,0}: c_{n,0} = (−λ)ⁿ·c_{0,0}.
ComplexRational ladder_constant(const ModelParams& params, int n, const ComplexRational& c0);

/// Ψ_{0,0} = c0·W. Throws ZeroConstant for c0 = 0.
Eigenstate ground_state(const ModelParams& params, const ComplexRational& c0);
/// Ψ_{n,0} = c_{n,0}·z̄ⁿ·W.
Eigenstate eigenstate(const ModelParams& params, int n, const ComplexRational& c0);

/// Outcome of the A⁻-descent applied to a candidate energy.
struct LevelWitness {
  bool admissible = false;
  std::optional<int> level;          ///< n with E = E_n when admissible
  std::vector<Rational> descent;     ///< E, E − 2λ, … down past E₀
  std::optional<int> zero_mode_power;  ///< z̄-power of the terminating zero mode
  std::string reason;
};

/// Descends from a hypothetical level E by A⁻ (which lowers the z-degree of
/// the polynomial part by one and the energy by 2λ) until a zero mode
/// P(z̄) is reached. Zero modes are eigenfunctions of H only as monomials
/// z̄^c with energy 2λ(c+1), so E is admissible iff some descent energy
/// matches one of them.
LevelWitness verify_no_extra_levels(const ModelParams& params, const Rational& candidate_energy);

}  // namespace nhosc
