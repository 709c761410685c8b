#include "skewrg/curves.hpp"

#include "skewrg/cocycle.hpp"
#include "skewrg/rg.hpp"

#include <cmath>
#include <stdexcept>

namespace skewrg {

double ids_limit(double eps, const Potential& v) {
  if (v.kind == Potential::Kind::Cosine) {
    if (eps <= -2) return 0;
    if (eps >= 2) return 1;
    return std::acos(-eps / 2) / M_PI;
  }
  const int samples = 1 << 20;
  long count = 0;
  for (int i = 0; i < samples; ++i)
    if (v((i + 0.5) / samples) <= eps) ++count;
  return static_cast<double>(count) / samples;
}

double limit_rotation(double eps) {
  if (eps < -2 || eps > 2)
    throw std::domain_error("limit_rotation: eps outside [-2, 2]");
  return std::acos(-eps / 2) / (2 * M_PI);
}

namespace {

long fib_long(long k) { return fibonacci(k).convert_to<long>(); }

Rational measured_rot(double delta, double eps, long n_iters) {
  const SkewProduct g{kAlpha, FactorFunction::scaled_schrodinger(delta, eps)};
  return rotation_sign_count(g, n_iters);
}

}  // namespace

CurvePoint critical_curve(const GoldenNumber& rho, double delta, double tol,
                          const CurveOptions& opts) {
  const RotationClass rc = classify_rotation_number(rho);
  if (rc.tag != RotationClass::Tag::PositivePeriodic)
    throw std::domain_error("critical_curve: rho is not positive periodic");
  if (delta < 0) throw std::domain_error("critical_curve: delta must be >= 0");

  const long n_hi = opts.n_hi > 0 ? opts.n_hi : fib_long(26);
  const long n_lo = opts.n_lo > 0 ? opts.n_lo : fib_long(24);
  const double rho_d = to_double(rho);

  const double eps0 = -2.0 * std::cos(2 * M_PI * rho_d);
  const double half_bracket = opts.bracket > 0 ? opts.bracket : 2.5 * delta + 1e-3;
  double lo = eps0 - half_bracket, hi = eps0 + half_bracket;

  // Exact comparison of the measured staircase against rho: the sign count is
  // a rational and rho = w/v + (u/v) alpha is compared via golden sign.
  const auto rot_cmp = [&](double eps) {
    const Rational r = measured_rot(delta, eps, n_hi);
    return sign(GoldenNumber(r, Rational(0)) - rho);
  };

  const int c_lo = rot_cmp(lo), c_hi = rot_cmp(hi);
  if (!(c_lo < 0 && c_hi > 0))
    throw std::runtime_error("critical_curve: no crossing in bracket");

  // lower edge of the rot >= rho region
  double a = lo, b = hi;
  while (b - a > tol * 0.25) {
    const double mid = 0.5 * (a + b);
    if (rot_cmp(mid) < 0)
      a = mid;
    else
      b = mid;
  }
  const double edge_lo = 0.5 * (a + b);

  // upper edge of the rot <= rho region
  a = lo;
  b = hi;
  while (b - a > tol * 0.25) {
    const double mid = 0.5 * (a + b);
    if (rot_cmp(mid) <= 0)
      a = mid;
    else
      b = mid;
  }
  const double edge_hi = 0.5 * (a + b);

  CurvePoint out;
  out.delta = delta;
  out.rho_target = rho;
  out.epsilon = 0.5 * (edge_lo + edge_hi);
  out.plateau_width = std::max(0.0, edge_hi - edge_lo);
  out.bracket_lo = lo;
  out.bracket_hi = hi;

  // residual and a coarser-length consistency check
  const Rational r_hi = measured_rot(delta, out.epsilon, n_hi);
  const Rational r_lo = measured_rot(delta, out.epsilon, n_lo);
  const double rot_hi = r_hi.convert_to<double>();
  const double rot_lo = r_lo.convert_to<double>();
  out.residual = std::abs(rot_hi - rho_d);
  if (std::abs(rot_hi - rot_lo) > 64.0 / static_cast<double>(n_lo))
    throw std::runtime_error("critical_curve: sign-count lengths disagree");
  return out;
}

double stable_manifold_residual(double delta, double eps, const GoldenNumber& rho,
                                long k, long n) {
  PairH p = scaled_am_pair(delta, eps);
  RgOptions opts;
  opts.n = n;
  opts.l_choice = RgOptions::LChoice::SPowerWithSigma;
  opts.normalization = RgOptions::Normalization::NormScaling;
  for (long j = 0; j < k; ++j) p = r3n_series(p, opts);
  return ts_eval(p.A.a, to_double(rho));
}

}  // namespace skewrg
