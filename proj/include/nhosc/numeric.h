#pragma once

#include <complex>
#include <vector>

#include "nhosc/ansatz.h"

namespace nhosc {

/// Polar tensor quadrature: composite 20-point Gauss-Legendre panels in r on
/// [0, R], trapezoid rule in φ (spectrally accurate for periodic integrands).
struct QuadratureSpec {
  double radial_cutoff = 7.0;
  int radial_points = 560;  ///< rounded up to a multiple of 20
  int angular_points = 128;
  double tolerance = 1e-8;

  /// Smallest cutoff (in steps of 1/4) whose tail bound is below tolerance/10,
  /// with panels no wider than 1/4.
  static QuadratureSpec for_moment(int N, int M, double lambda, double b, double tolerance);
};

/// Bound on the integral of |zᴺz̄ᴹ e^{−(λzz̄+bz̄²)}| over |z| > R, using
/// |e^{−bz̄²}| ≤ e^{|b|r²}: π·Γ(s, aR²)/aˢ with a = λ − |b|, s = (N+M)/2 + 1.
double moment_tail_bound(int N, int M, double lambda, double b, double radial_cutoff);

/// ∫_{|z|≤R} zᴺz̄ᴹ e^{−(λzz̄+bz̄²)} d²x (ω is ignored). Requires λ > |b| and a
/// real b. Throws TailBoundViolated if the spec's tail bound exceeds
/// tolerance/10.
std::complex<double> quad_moment(int N, int M, const ModelParams& params, const QuadratureSpec& spec);

/// f(x₁, x₂) with z = x₁ + i x₂ and z̄ = conj(z).
std::complex<double> evaluate(const AnsatzFn& f, double x1, double x2);

struct SamplePoint {
  double x1 = 0.0;
  double x2 = 0.0;
};

/// Compares H f from the exact engine against −Δf + V f with a five-point
/// finite-difference Laplacian of step h. Returns max |difference| divided by
/// max |H f| over the sample points.
double pointwise_operator_check(const AnsatzFn& f, const std::vector<SamplePoint>& points, double h);

/// A fixed, deterministic set of sample points in the disc |z| ≤ 1.2.
std::vector<SamplePoint> default_sample_points();

}  // namespace nhosc
