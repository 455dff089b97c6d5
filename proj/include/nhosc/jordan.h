#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "nhosc/ansatz.h"
#include "nhosc/report.h"
#include "nhosc/symbolic.h"

namespace nhosc {

/// Index (n, k, i) of an integration constant: level n, chain member k,
/// z-power i of the g-function it belongs to.
struct ConstantKey {
  int n = 0;
  int k = 0;
  int i = 0;

  friend auto operator<=>(const ConstantKey&, const ConstantKey&) = default;
};

/// Integration constant introduced while integrating g^{(i)}_{n,k}.
///
/// Alpha constants (i = k−1) enter as −T_k/(λ(k−1)!)·α·z̄^{n−k+1}; beta
/// constants (i ≤ k−2) enter as 2T_k/λ^{k−i}·β·z̄^{n−i}, where
/// T_k = a_{n,k}c_{n−k,0}. For (n, k, i) = (n, 2, 0) this is the β_{n,2} of
/// the second associated function.
struct UnknownInfo {
  enum class Kind { Alpha, Beta };
  Kind kind = Kind::Alpha;
  ConstantKey key;

  std::string name() const;
};

struct ConstantsRecord {
  std::map<std::pair<int, int>, Rational> a;      ///< a_{n,k}, (A⁻)ᵏΨ_{n,k} = a_{n,k}Ψ_{n−k,0}
  std::map<int, Rational> c_top;                  ///< c_{m,0} for m ≤ n
  std::map<ConstantKey, Rational> alpha;          ///< α^{(k−1)}_{n,k}
  std::map<ConstantKey, Rational> beta;           ///< β^{(i)}_{n,k}, i ≤ k−2
  std::map<std::pair<int, int>, Rational> norms;  ///< N_{n,k} = a_{n,k}c_{n−k,0}
  /// σ_n: the chain as stored is rational; √σ_n·Ψ_{n,k} is the chain whose
  /// anti-diagonal pairings equal π. Bilinear quantities scale by σ_n.
  std::map<int, Rational> gram_scale;

  friend bool operator==(const ConstantsRecord&, const ConstantsRecord&) = default;
};

/// Linear condition "form == 0" that keeps g^{(i)}_{n,k} free of log z̄.
struct LogConstraint {
  ConstantKey key;
  LinearForm form;
};

/// One Jordan cell with every integration constant still symbolic.
struct CellTemplate {
  ModelParams params;
  int n = 0;
  std::vector<UnknownInfo> unknowns;       ///< indexed by UnknownId
  std::vector<Rational> top;               ///< T_k for k = 0..n
  std::vector<Rational> a;                 ///< a_{n,k} for k = 0..n
  std::vector<AffinePoly> chain;           ///< polynomial parts of Ψ_{n,0..n}
  std::vector<LogConstraint> log_constraints;

  std::string unknown_name(UnknownId id) const;
};

struct JordanCell {
  int n = 0;
  Rational energy;
  int p = 1;
  std::vector<AnsatzFn> chain;
  ConstantsRecord constants;

  const ModelParams& params() const { return chain.front().params(); }
  const Rational& gram_scale() const { return constants.gram_scale.at(n); }
};

/// g^{(k−1)}_{n,k} from the top equation, with α as the unknown `alpha`.
/// top_k = T_k and top_prev = T_{k−1} must already satisfy
/// T_{k−1} = 4b·T_k; otherwise the z̄⁻¹ source survives and LogObstruction is
/// thrown.
AffinePoly solve_g_top(const ModelParams& params, int n, int k, const Rational& top_k,
                       const Rational& top_prev, UnknownId alpha);

struct GChainResult {
  AffinePoly g;
  LinearForm log_constraint;  ///< coefficient of z̄⁻¹ that must vanish
};

/// g^{(i)}_{n,k} for i ≤ k−2 from g^{(i+1)}_{n,k} and g^{(i)}_{n,k−1}.
GChainResult solve_g_chain(const ModelParams& params, int n, int k, int i, const Rational& top_k,
                           const AffinePoly& g_next, const AffinePoly& g_prev_level, UnknownId beta);

/// Runs the g-function cascade for level n. Requires the quartic model with
/// b ≠ 0 (UnsolvableConstraints otherwise) and n ≥ 0.
CellTemplate build_cell_template(const ModelParams& params, int n);

/// Fixes every constant of the template: log-avoidance constraints first,
/// then the pairings ⟨⟨Ψ_{n,j}|Ψ_{n,n}⟩⟩ = 0 for j = 1..n in ascending
/// order (the last one is the self-product of Ψ_{n,n} for j = n), then the
/// anti-diagonal normalisation. Throws UnsolvableConstraints or
/// NonlinearResidual.
JordanCell solve_cell(const CellTemplate& tmpl);

JordanCell build_cell(const ModelParams& params, int n);

/// Re-evaluates a template with the given constants (for example, after
/// perturbing one of them).
JordanCell instantiate_cell(const CellTemplate& tmpl, const ConstantsRecord& constants);

/// Closed form of the polynomial part of Ψ_{2,2} for the quartic model:
/// (λz + (b − 3ω/b)z̄ − 2ωz̄³)² + q·z̄² + 6ω/b, with q given explicitly so
/// that alternative z̄² coefficients can be compared.
LaurentBiPoly psi22_closed_form(const ModelParams& params, const Rational& zbar2_coefficient);

/// The z̄² coefficient that makes psi22_closed_form proportional to the
/// solver's Ψ_{2,2}: 18ω(1 − ω/b²).
Rational psi22_zbar2_coefficient(const ModelParams& params);

/// Exact checks of the chain, descent, degree, Gram and constant relations.
VerificationReport verify_cell(const JordanCell& cell);

}  // namespace nhosc
