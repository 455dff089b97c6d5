#pragma once

#include <random>

#include "nhosc/ansatz.h"

namespace nhosc::testing {

/// Seeded generator for property tests; every test owns its own instance.
class Gen {
 public:
  explicit Gen(unsigned seed) : rng_(seed) {}

  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  bool coin() { return integer(0, 1) == 1; }

  Rational rational(int max_num = 9, int max_den = 6) {
    return Rational(integer(-max_num, max_num), integer(1, max_den));
  }
  Rational positive_rational(int max_num = 9, int max_den = 6) {
    return Rational(integer(1, max_num), integer(1, max_den));
  }
  ComplexRational complex(int max_num = 9, int max_den = 6) {
    return {rational(max_num, max_den), coin() ? rational(max_num, max_den) : Rational(0)};
  }

  /// Random polynomial with z-degree ≤ max_z and z̄-powers in [min_zbar, max_zbar].
  LaurentBiPoly poly(int terms, int max_z, int max_zbar, int min_zbar = 0, bool complex_coeffs = true) {
    LaurentBiPoly p;
    for (int t = 0; t < terms; ++t) {
      p.add_term(integer(0, max_z), integer(min_zbar, max_zbar), complex_coeffs ? complex() : ComplexRational(rational()));
    }
    return p;
  }

  /// General F of degree ≤ max_degree with F(0) = 0.
  ModelParams general_params(int max_degree = 6) {
    std::vector<ComplexRational> f(max_degree + 1);
    for (int d = 1; d <= max_degree; ++d) {
      if (coin()) f[d] = complex(5, 4);
    }
    return ModelParams::general(positive_rational(), f);
  }

  ModelParams quartic_params() {
    return ModelParams::quartic(positive_rational(), rational(), Rational(integer(0, 5), integer(1, 4)));
  }

  AnsatzFn ansatz(const ModelParams& params, int max_degree = 6, int terms = 6) {
    return AnsatzFn(poly(terms, max_degree, max_degree), params);
  }

 private:
  std::mt19937 rng_;
};

}  // namespace nhosc::testing
