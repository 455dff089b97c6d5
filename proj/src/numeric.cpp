#include "nhosc/numeric.h"

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <numbers>

#include "nhosc/errors.h"

namespace nhosc {

namespace {

using GaussRule = boost::math::quadrature::gauss<double, 20>;

double real_b(const ModelParams& params) {
  const ComplexRational b = params.quadratic_b();
  if (!b.is_real()) throw InvalidParams("quadrature needs a real b");
  return b.re().to_double();
}

}  // namespace

QuadratureSpec QuadratureSpec::for_moment(int N, int M, double lambda, double b, double tolerance) {
  QuadratureSpec spec;
  spec.tolerance = tolerance;
  double r = 1.0;
  while (moment_tail_bound(N, M, lambda, b, r) > tolerance / 10.0) r += 0.25;
  spec.radial_cutoff = r;
  spec.radial_points = 20 * static_cast<int>(std::ceil(r / 0.25));
  return spec;
}

double moment_tail_bound(int N, int M, double lambda, double b, double radial_cutoff) {
  const double a = lambda - std::abs(b);
  if (a <= 0.0) return std::numeric_limits<double>::infinity();
  const double s = 0.5 * (N + M) + 1.0;
  return std::numbers::pi * boost::math::tgamma(s, a * radial_cutoff * radial_cutoff) / std::pow(a, s);
}

std::complex<double> quad_moment(int N, int M, const ModelParams& params, const QuadratureSpec& spec) {
  const double lambda = params.lambda().to_double();
  const double b = real_b(params);
  if (!(lambda > std::abs(b))) throw InvalidParams("quadrature needs lambda > |b|");
  const double tail = moment_tail_bound(N, M, lambda, b, spec.radial_cutoff);
  if (!(tail <= spec.tolerance / 10.0)) {
    throw TailBoundViolated("tail bound " + std::to_string(tail) + " exceeds tolerance/10 at R = " +
                            std::to_string(spec.radial_cutoff));
  }

  const int panels = std::max(1, (spec.radial_points + 19) / 20);
  const double width = spec.radial_cutoff / panels;
  const auto& nodes = GaussRule::abscissa();
  const auto& weights = GaussRule::weights();
  const int n_phi = spec.angular_points;
  const double d_phi = 2.0 * std::numbers::pi / n_phi;

  // Angular factors e^{i(N−M)φ} and e^{−2iφ} are radius-independent.
  std::vector<std::complex<double>> phase(n_phi), rot2(n_phi);
  for (int j = 0; j < n_phi; ++j) {
    const double phi = j * d_phi;
    phase[j] = std::polar(1.0, (N - M) * phi);
    rot2[j] = std::polar(1.0, -2.0 * phi);
  }

  std::complex<double> total = 0.0;
  auto radial_sample = [&](double r, double w) {
    std::complex<double> angular = 0.0;
    const double r2 = r * r;
    for (int j = 0; j < n_phi; ++j) angular += phase[j] * std::exp(-b * r2 * rot2[j]);
    total += w * std::pow(r, N + M + 1) * std::exp(-lambda * r2) * angular * d_phi;
  };
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    const double half = 0.5 * width;
    for (std::size_t q = 0; q < nodes.size(); ++q) {
      radial_sample(mid + half * nodes[q], half * weights[q]);
      if (nodes[q] != 0.0) radial_sample(mid - half * nodes[q], half * weights[q]);
    }
  }
  return total;
}

std::complex<double> evaluate(const AnsatzFn& f, double x1, double x2) {
  const std::complex<double> z(x1, x2);
  const std::complex<double> zbar = std::conj(z);
  const double lambda = f.params().lambda().to_double();
  const std::complex<double> log_weight = -0.5 * lambda * z * zbar - f.params().f_poly().eval(z, zbar);
  return f.poly().eval(z, zbar) * std::exp(log_weight);
}

double pointwise_operator_check(const AnsatzFn& f, const std::vector<SamplePoint>& points, double h) {
  const AnsatzFn hf = apply_H(f);
  const double lambda = f.params().lambda().to_double();
  const LaurentBiPoly f_prime = f.params().f_prime();
  double max_diff = 0.0;
  double max_ref = 0.0;
  for (const auto& pt : points) {
    const std::complex<double> z(pt.x1, pt.x2);
    const std::complex<double> zbar = std::conj(z);
    const std::complex<double> center = evaluate(f, pt.x1, pt.x2);
    const std::complex<double> laplacian =
        (evaluate(f, pt.x1 + h, pt.x2) + evaluate(f, pt.x1 - h, pt.x2) + evaluate(f, pt.x1, pt.x2 + h) +
         evaluate(f, pt.x1, pt.x2 - h) - 4.0 * center) /
        (h * h);
    const std::complex<double> potential =
        lambda * lambda * z * zbar + 2.0 * lambda * zbar * f_prime.eval(z, zbar);
    const std::complex<double> numeric = -laplacian + potential * center;
    const std::complex<double> exact = evaluate(hf, pt.x1, pt.x2);
    max_diff = std::max(max_diff, std::abs(numeric - exact));
    max_ref = std::max(max_ref, std::abs(exact));
  }
  return max_ref > 0.0 ? max_diff / max_ref : max_diff;
}

std::vector<SamplePoint> default_sample_points() {
  std::vector<SamplePoint> pts;
  for (int ring = 1; ring <= 3; ++ring) {
    const double r = 0.4 * ring;
    for (int j = 0; j < 7; ++j) {
      const double phi = 2.0 * std::numbers::pi * (j + 0.3 * ring) / 7.0;
      pts.push_back({r * std::cos(phi), r * std::sin(phi)});
    }
  }
  return pts;
}

}  // namespace nhosc
