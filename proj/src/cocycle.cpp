#include "skewrg/cocycle.hpp"

#include <cmath>
#include <stdexcept>

namespace skewrg {

namespace {

template <typename Scalar>
LogScaled<Scalar> product_impl(const SkewProduct& g, long q, Scalar x) {
  LogScaled<Scalar> acc = LogScaled<Scalar>::identity();
  if (q == 0) return acc;
  if (q > 0) {
    for (long j = 0; j < q; ++j) {
      const Mat2T<Scalar> f = g.plain(x + Scalar(j * g.frequency));
      acc = LogScaled<Scalar>::from(f) * acc;
    }
    return acc;
  }
  // negative q: factors A(. - f)^-1 applied |q| times
  for (long j = 0; j < -q; ++j) {
    const Mat2T<Scalar> f = g.plain(x - Scalar((j + 1) * g.frequency));
    const Scalar det = f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0);
    if (std::abs(det) == 0.0)
      throw std::domain_error("product: noninvertible factor");
    const Mat2T<Scalar> inv = quasi_inverse(f) / det;
    acc = LogScaled<Scalar>::from(inv) * acc;
  }
  return acc;
}

}  // namespace

LogScaledMat2 product(const SkewProduct& g, long q, double x) {
  return product_impl<double>(g, q, x);
}
LogScaledMat2c product(const SkewProduct& g, long q, std::complex<double> x) {
  return product_impl<std::complex<double>>(g, q, x);
}

LogScaledMat2 symmetric_product(const SkewProduct& g, long q, double x) {
  return product(g, q, x - 0.5 * static_cast<double>(q) * g.frequency);
}
LogScaledMat2c symmetric_product(const SkewProduct& g, long q, std::complex<double> x) {
  return product(g, q, x - std::complex<double>(0.5 * static_cast<double>(q) * g.frequency));
}

double lyapunov(const SkewProduct& g, long n, double x0) {
  if (n < 1) throw std::domain_error("lyapunov: N must be >= 1");
  return product(g, n, x0).log_scale / static_cast<double>(n);
}

double lyapunov_sampled(const SkewProduct& g, long n, int samples) {
  if (samples < 1) samples = 1;
  double acc = 0;
  for (int i = 0; i < samples; ++i)
    acc += lyapunov(g, n, static_cast<double>(i) / samples);
  return acc / samples;
}

double default_sign_count_start(const SkewProduct& g, long n) {
  return 0.5 * static_cast<double>(1 - n) * g.frequency;
}

Rational rotation_sign_count(const SkewProduct& g, long n, Vec2 y0) {
  return rotation_sign_count_from(g, n, default_sign_count_start(g, n), y0);
}

Rational rotation_sign_count_from(const SkewProduct& g, long n, double x0, Vec2 y0) {
  if (n < 1) throw std::domain_error("rotation_sign_count: N must be >= 1");
  if (!g.factor.supports_sign_count())
    throw std::domain_error("rotation_sign_count: factor kind has no sign-counting semantics");
  if (g.factor.kind == FactorFunction::Kind::Rank1Scalar &&
      (g.factor.rank1 * y0).isZero(0.0))
    throw std::domain_error("rotation_sign_count: seed vector is annihilated by the factor");

  // Track signs only; renormalize the running vector to dodge over/underflow.
  Vec2 y = y0;
  long changes = 0;
  int last_sign = 0;
  double u_final = 1.0;
  for (long k = 1; k <= n; ++k) {
    y = g.plain(x0 + (k - 1) * g.frequency) * y;
    const double norm = y.norm();
    if (norm == 0.0)
      throw std::domain_error("rotation_sign_count: orbit vector vanished");
    y /= norm;
    const double u = y[0];
    // Exact-zero comparison is deliberate; a threshold would bias the count.
    if (u != 0.0) {
      const int s = u > 0 ? 1 : -1;
      if (last_sign != 0 && s != last_sign) ++changes;
      last_sign = s;
    }
    if (k == n) u_final = u;
  }
  Rational rot(changes, 2);
  if (u_final == 0.0) rot += Rational(1, 2);
  return rot / n;
}

double rotation_lift(const SkewProduct& g, long n) {
  if (n < 1) throw std::domain_error("rotation_lift: N must be >= 1");
  const double x0 = default_sign_count_start(g, n);
  Vec2 y(1, 0);
  double theta = std::atan2(y[1], y[0]);
  double total = 0;  // accumulated lift, radians
  for (long k = 0; k < n; ++k) {
    const Mat2 f = g.plain(x0 + k * g.frequency);
    const double det = f(0, 0) * f(1, 1) - f(0, 1) * f(1, 0);
    if (det <= 0.0)
      throw std::domain_error("rotation_lift: factor determinant must be positive");
    y = f * y;
    const double norm = y.norm();
    if (norm == 0.0) throw std::domain_error("rotation_lift: zero vector on orbit");
    y /= norm;
    const double theta_new = std::atan2(y[1], y[0]);
    double step = theta_new - theta;
    // branch: per-step lift in [0, 2 pi)
    step -= 2 * M_PI * std::floor(step / (2 * M_PI));
    total += step;
    theta = theta_new;
  }
  const double revolutions = total / (2 * M_PI);
  const double value = revolutions / static_cast<double>(n);
  return value - std::floor(value);
}

double reversibility_defect(const SkewProduct& g, int grid) {
  const Mat2& s = reversor();
  double worst = 0;
  for (int i = 0; i < grid; ++i) {
    const double x = -0.5 + (i + 0.5) / grid;
    const Mat2 lhs = s * g.symmetric(x) * s;  // S^-1 = S
    const Mat2 rhs = quasi_inverse(g.symmetric(-x));
    worst = std::max(worst, (lhs - rhs).norm());
  }
  return worst;
}

bool is_reversible(const SkewProduct& g, int grid, double tol) {
  return reversibility_defect(g, grid) < tol;
}

}  // namespace skewrg
