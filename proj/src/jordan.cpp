#include "nhosc/jordan.h"

#include <sstream>

#include "nhosc/errors.h"
#include "nhosc/moments.h"
#include "nhosc/states.h"

namespace nhosc {

namespace {

std::string key_str(const ConstantKey& key) {
  return std::to_string(key.n) + "," + std::to_string(key.k) + "," + std::to_string(key.i);
}

Rational real_or_throw(const ComplexRational& c, const std::string& what) {
  if (!c.is_real()) throw UnsolvableConstraints(what + " is not real: " + c.str());
  return c.re();
}

// Source of the z^i equation,
//   2λ[z̄^{i−n} g_i]′ = source · z̄^{i−n−1},
// integrated for g_i. Returns z̄^{n−i}·∫(source·z̄^{i−n−1}/2λ) with zero
// constant; a surviving z̄⁻¹ term throws LogObstruction.
AffinePoly integrate_level(const ModelParams& params, int n, int i, const AffinePoly& rhs_times_2lambda) {
  const ComplexRational inv_two_lambda = ComplexRational(Rational(2) * params.lambda()).inverse();
  AffinePoly rhs = inv_two_lambda * rhs_times_2lambda.map(
                                        [&](const LaurentBiPoly& p) { return p.shifted(0, i - n - 1); });
  return rhs.map([&](const LaurentBiPoly& p) { return antiderivative_zbar(p).shifted(0, n - i); });
}

AffinePoly chain_source(const ModelParams& params, int i, const AffinePoly& g_next, const AffinePoly& g_prev_level) {
  const LaurentBiPoly f_prime = params.f_prime();
  AffinePoly twisted = g_next.map([&](const LaurentBiPoly& g) { return d_zbar(g) - f_prime * g; });
  return ComplexRational(4 * (i + 1)) * twisted + g_prev_level;
}

}  // namespace

std::string UnknownInfo::name() const {
  return std::string(kind == Kind::Alpha ? "alpha" : "beta") + "[" + key_str(key) + "]";
}

std::string CellTemplate::unknown_name(UnknownId id) const {
  return unknowns.at(static_cast<std::size_t>(id)).name();
}

AffinePoly solve_g_top(const ModelParams& params, int n, int k, const Rational& top_k,
                       const Rational& top_prev, UnknownId alpha) {
  if (k < 1 || k > n) throw std::invalid_argument("solve_g_top needs 1 <= k <= n");
  const int i = k - 1;
  const AffinePoly g_next(LaurentBiPoly::monomial(top_k / factorial(k), 0, n - k));
  const AffinePoly prev(LaurentBiPoly::monomial(top_prev / factorial(k - 1), 0, n - k + 1));
  AffinePoly g = integrate_level(params, n, i, chain_source(params, i, g_next, prev));
  const Rational unit = -top_k / (params.lambda() * factorial(k - 1));
  return g + AffinePoly::unknown_times(alpha, LaurentBiPoly::monomial(unit, 0, n - k + 1));
}

GChainResult solve_g_chain(const ModelParams& params, int n, int k, int i, const Rational& top_k,
                           const AffinePoly& g_next, const AffinePoly& g_prev_level, UnknownId beta) {
  if (i < 0 || i > k - 2) throw std::invalid_argument("solve_g_chain needs 0 <= i <= k-2");
  const AffinePoly source = chain_source(params, i, g_next, g_prev_level);
  // The z̄⁻¹ term of source·z̄^{i−n−1} comes from the z̄^{n−i} term of source.
  const ComplexRational inv_two_lambda = ComplexRational(Rational(2) * params.lambda()).inverse();
  LinearForm log_term = inv_two_lambda * source.coefficient(0, n - i);
  AffinePoly g = integrate_level(params, n, i, source.without_term(0, n - i));
  const Rational unit = Rational(2) * top_k / params.lambda().pow(k - i);
  g += AffinePoly::unknown_times(beta, LaurentBiPoly::monomial(unit, 0, n - i));
  return {std::move(g), std::move(log_term)};
}

CellTemplate build_cell_template(const ModelParams& params, int n) {
  if (n < 0) throw std::invalid_argument("cell level must be non-negative");
  if (!params.is_quartic()) {
    throw InvalidParams("associated functions are built for the quartic model only");
  }
  const Rational b = params.b();
  if (n > 0 && b.is_zero()) {
    throw UnsolvableConstraints(
        "b = 0 is singular: the log-avoidance relation a_{n,k-1}c_{n-k+1,0} = 4b a_{n,k}c_{n-k,0} "
        "has no solution");
  }

  CellTemplate t{params, n, {}, {}, {}, {}, {}};
  auto c_top = [&](int m) { return ladder_constant(params, m, 1).re(); };
  auto new_unknown = [&](UnknownInfo::Kind kind, int k, int i) {
    t.unknowns.push_back({kind, {n, k, i}});
    return static_cast<UnknownId>(t.unknowns.size() - 1);
  };

  t.top.push_back(c_top(n));
  t.a.push_back(Rational(1));
  t.chain.emplace_back(LaurentBiPoly::monomial(t.top[0], 0, n));

  for (int k = 1; k <= n; ++k) {
    // a_{n,k−1}c_{n−k+1,0} = 4b·a_{n,k}c_{n−k,0} removes the z̄⁻¹ source of
    // the top equation.
    const Rational top_k = t.top[k - 1] / (Rational(4) * b);
    t.top.push_back(top_k);
    t.a.push_back(top_k / c_top(n - k));

    std::vector<AffinePoly> g(static_cast<std::size_t>(k));
    g[k - 1] = solve_g_top(params, n, k, top_k, t.top[k - 1], new_unknown(UnknownInfo::Kind::Alpha, k, k - 1));
    for (int i = k - 2; i >= 0; --i) {
      const UnknownId beta = new_unknown(UnknownInfo::Kind::Beta, k, i);
      auto step = solve_g_chain(params, n, k, i, top_k, g[i + 1], t.chain[k - 1].z_coefficient(i), beta);
      g[i] = std::move(step.g);
      t.log_constraints.push_back({{n, k, i}, std::move(step.log_constraint)});
    }

    AffinePoly member(LaurentBiPoly::monomial(top_k / factorial(k), k, n - k));
    for (int i = 0; i < k; ++i) {
      member += g[i].map([i](const LaurentBiPoly& p) { return p.shifted(i, 0); });
    }
    t.chain.push_back(std::move(member));
  }
  return t;
}

JordanCell solve_cell(const CellTemplate& t) {
  const int n = t.n;
  auto name = [&](UnknownId id) { return t.unknown_name(id); };
  LinearEliminator elim;

  for (const auto& c : t.log_constraints) {
    if (elim.add(c.form) == LinearEliminator::Outcome::Inconsistent) {
      throw UnsolvableConstraints("log-avoidance constraint (" + key_str(c.key) +
                                  ") is inconsistent: " + c.form.str(name) + " = 0");
    }
  }

  // ⟨⟨Ψ_k|Ψ_l⟩⟩ depends only on k + l along a chain, so the conditions
  // h_{n+j} = ⟨⟨Ψ_j|Ψ_n⟩⟩ = 0, j = 1..n, cover the whole lower-right
  // triangle. Once h_{n+1..n+j−1} are fixed, h_{n+j} is linear in the rest.
  for (int j = 1; j <= n; ++j) {
    const auto& subs = elim.substitutions();
    QuadraticForm cond = pairing_form(t.chain[j].substitute(subs), t.chain[n].substitute(subs), t.params);
    if (cond.has_quadratic_part()) {
      std::ostringstream os;
      os << "pairing <<Psi_" << n << "," << j << "|Psi_" << n << "," << n
         << ">> is not linear in the remaining constants";
      throw NonlinearResidual(os.str());
    }
    const LinearForm form = cond.linear_part();
    if (elim.add(form) == LinearEliminator::Outcome::Inconsistent) {
      std::ostringstream os;
      os << "pairing <<Psi_" << n << "," << j << "|Psi_" << n << "," << n
         << ">> cannot vanish: " << form.str(name);
      throw UnsolvableConstraints(os.str());
    }
  }

  Assignment values;
  for (UnknownId id = 0; id < static_cast<UnknownId>(t.unknowns.size()); ++id) {
    auto it = elim.substitutions().find(id);
    if (it == elim.substitutions().end() || !it->second.is_constant()) {
      throw UnsolvableConstraints("constant " + name(id) + " is left undetermined (rank deficiency)");
    }
    values.emplace(id, it->second.constant());
  }

  ConstantsRecord rec;
  for (int k = 0; k <= n; ++k) {
    rec.a[{n, k}] = t.a[k];
    rec.norms[{n, k}] = t.top[k];
    rec.c_top[k] = ladder_constant(t.params, k, 1).re();
  }
  for (UnknownId id = 0; id < static_cast<UnknownId>(t.unknowns.size()); ++id) {
    const auto& info = t.unknowns[id];
    Rational v = real_or_throw(values.at(id), name(id));
    (info.kind == UnknownInfo::Kind::Alpha ? rec.alpha : rec.beta)[info.key] = std::move(v);
  }

  const LaurentBiPoly head = t.chain[0].evaluate(values);
  const LaurentBiPoly tail = t.chain[n].evaluate(values);
  const ComplexRational anti_diagonal = pairing_coefficient(head, tail, t.params);
  if (anti_diagonal.is_zero()) {
    throw UnsolvableConstraints("anti-diagonal pairing vanishes for n = " + std::to_string(n) +
                                "; the cell is not of dimension n + 1");
  }
  rec.gram_scale[n] = real_or_throw(anti_diagonal.inverse(), "Gram scale");
  return instantiate_cell(t, rec);
}

JordanCell build_cell(const ModelParams& params, int n) { return solve_cell(build_cell_template(params, n)); }

JordanCell instantiate_cell(const CellTemplate& t, const ConstantsRecord& constants) {
  Assignment values;
  for (UnknownId id = 0; id < static_cast<UnknownId>(t.unknowns.size()); ++id) {
    const auto& info = t.unknowns[id];
    const auto& table = info.kind == UnknownInfo::Kind::Alpha ? constants.alpha : constants.beta;
    auto it = table.find(info.key);
    if (it == table.end()) throw std::out_of_range("missing constant " + info.name());
    values.emplace(id, ComplexRational(it->second));
  }
  JordanCell cell;
  cell.n = t.n;
  cell.energy = energy_level(t.params, t.n).energy;
  cell.p = t.n + 1;
  for (const auto& member : t.chain) cell.chain.emplace_back(member.evaluate(values), t.params);
  cell.constants = constants;
  return cell;
}

VerificationReport verify_cell(const JordanCell& cell) {
  VerificationReport r;
  const int n = cell.n;
  const std::string cell_tag = "cell[" + std::to_string(n) + "]";
  if (cell.chain.empty()) {
    r.add(cell_tag + ".dimension", false, "empty chain");
    return r;
  }
  const ModelParams& params = cell.params();
  const auto& k_const = cell.constants;

  r.add(cell_tag + ".dimension", cell.p == n + 1 && static_cast<int>(cell.chain.size()) == cell.p,
        "p = " + std::to_string(cell.p) + ", chain length " + std::to_string(cell.chain.size()));
  r.add(cell_tag + ".energy", cell.energy == energy_level(params, n).energy, "E = " + cell.energy.str());

  const AnsatzFn& head = cell.chain[0];
  {
    AnsatzFn residual = apply_H(head) - head * ComplexRational(cell.energy);
    r.add(cell_tag + ".eigen", residual.is_zero(), residual.poly().str());
    AnsatzFn lowered = apply_A_minus(head);
    r.add(cell_tag + ".zero_mode", lowered.is_zero(), lowered.poly().str());
  }

  for (std::size_t k = 1; k < cell.chain.size(); ++k) {
    const std::string tag = cell_tag + ".chain[" + std::to_string(k) + "]";
    AnsatzFn residual =
        apply_H(cell.chain[k]) - cell.chain[k] * ComplexRational(cell.energy) - cell.chain[k - 1];
    r.add(tag, residual.is_zero(), residual.poly().str());
  }

  for (std::size_t k = 0; k < cell.chain.size(); ++k) {
    const int ki = static_cast<int>(k);
    const std::string tag = cell_tag + ".descent[" + std::to_string(k) + "]";
    auto a_it = k_const.a.find({n, ki});
    auto c_it = k_const.c_top.find(n - ki);
    if (a_it == k_const.a.end() || c_it == k_const.c_top.end()) {
      r.add(tag, false, "missing a or c constant");
      continue;
    }
    AnsatzFn lowered = apply_A_minus_power(cell.chain[k], ki);
    AnsatzFn expected(LaurentBiPoly::monomial(a_it->second * c_it->second, 0, n - ki), params);
    AnsatzFn residual = lowered - expected;
    r.add(tag, residual.is_zero(), residual.poly().str());
  }

  for (std::size_t k = 0; k < cell.chain.size(); ++k) {
    const auto& poly = cell.chain[k].poly();
    const int ki = static_cast<int>(k);
    const bool ok = poly.z_degree() == ki && poly.zbar_degree().value_or(0) <= n + 3 * ki;
    r.add(cell_tag + ".degree[" + std::to_string(k) + "]", ok,
          "z-degree " + std::to_string(poly.z_degree().value_or(-1)) + ", zbar-degree " +
              std::to_string(poly.zbar_degree().value_or(-1)));
  }

  if (params.is_quartic() && n >= 1) {
    const Rational b = params.b();
    bool ok = true;
    std::string detail;
    for (int k = 1; k <= n; ++k) {
      auto a_prev = k_const.a.find({n, k - 1});
      auto a_k = k_const.a.find({n, k});
      auto c_prev = k_const.c_top.find(n - k + 1);
      auto c_k = k_const.c_top.find(n - k);
      if (a_prev == k_const.a.end() || a_k == k_const.a.end() || c_prev == k_const.c_top.end() ||
          c_k == k_const.c_top.end()) {
        ok = false;
        detail = "missing constants for k = " + std::to_string(k);
        break;
      }
      if (!(a_prev->second * c_prev->second == Rational(4) * b * a_k->second * c_k->second)) {
        ok = false;
        detail = "relation fails at k = " + std::to_string(k);
      }
    }
    r.add(cell_tag + ".log_relation_top", ok, detail);
  }

  if (params.is_quartic() && n >= 2) {
    auto a21 = k_const.alpha.find({n, 1, 0});
    auto a22 = k_const.alpha.find({n, 2, 1});
    const bool present = a21 != k_const.alpha.end() && a22 != k_const.alpha.end();
    const bool ok = present && Rational(6) * params.omega() == params.b() * (a22->second - a21->second);
    r.add(cell_tag + ".log_relation_second", ok,
          present ? "6*omega = b*(alpha[n,2,1] - alpha[n,1,0])" : "missing alpha constants");
  }

  auto scale_it = k_const.gram_scale.find(n);
  if (scale_it == k_const.gram_scale.end()) {
    r.add(cell_tag + ".gram", false, "missing Gram scale");
    return r;
  }
  const ComplexRational scale(scale_it->second);
  for (std::size_t k = 0; k < cell.chain.size(); ++k) {
    for (std::size_t l = k; l < cell.chain.size(); ++l) {
      const ComplexRational value = scale * pairing(cell.chain[k], cell.chain[l]).coefficient;
      const ComplexRational expected = (static_cast<int>(k + l) == n) ? ComplexRational(1) : ComplexRational();
      r.add(cell_tag + ".gram[" + std::to_string(k) + "," + std::to_string(l) + "]", value == expected,
            "<<Psi_k|Psi_l>> = " + value.str() + " pi");
    }
  }
  return r;
}

}  // namespace nhosc

namespace nhosc {

LaurentBiPoly psi22_closed_form(const ModelParams& params, const Rational& zbar2_coefficient) {
  const Rational b = params.b();
  const Rational w = params.omega();
  if (b.is_zero()) throw UnsolvableConstraints("closed form of Ψ[2,2] needs b ≠ 0");
  const LaurentBiPoly base = LaurentBiPoly::monomial(params.lambda(), 1, 0) +
                             LaurentBiPoly::monomial(b - Rational(3) * w / b, 0, 1) +
                             LaurentBiPoly::monomial(Rational(-2) * w, 0, 3);
  return base * base + LaurentBiPoly::monomial(zbar2_coefficient, 0, 2) +
         LaurentBiPoly::constant(Rational(6) * w / b);
}

Rational psi22_zbar2_coefficient(const ModelParams& params) {
  const Rational b = params.b();
  const Rational w = params.omega();
  if (b.is_zero()) throw UnsolvableConstraints("closed form of Ψ[2,2] needs b ≠ 0");
  return Rational(18) * w * (Rational(1) - w / (b * b));
}

}  // namespace nhosc
