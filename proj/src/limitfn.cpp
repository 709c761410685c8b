#include "skewrg/limitfn.hpp"

#include "skewrg/cocycle.hpp"
#include "skewrg/rg.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

namespace skewrg {

namespace {

double approx_golden(const GoldenNumber& g) {
  return numerator(g.a).convert_to<double>() / denominator(g.a).convert_to<double>() +
         kAlpha * numerator(g.b).convert_to<double>() /
             denominator(g.b).convert_to<double>();
}

// Product accumulation with the binary scale factored out periodically, so
// very long products neither overflow nor lose their exponent.
template <typename Scalar>
Scalar scaled_product(const std::vector<double>& zsq, Scalar xsq) {
  Scalar acc = Scalar(1);
  long e2 = 0;
  int count = 0;
  for (double z2 : zsq) {
    acc *= Scalar(1) - xsq / Scalar(z2);
    if (++count == 512) {
      count = 0;
      const double m = std::abs(acc);
      if (m > 1e100 || (m > 0 && m < 1e-100)) {
        int e;
        std::frexp(m, &e);
        acc = acc * Scalar(std::ldexp(1.0, -e));
        e2 += e;
      }
    }
  }
  return acc * Scalar(std::ldexp(1.0, static_cast<int>(e2)));
}

}  // namespace

const GoldenNumber& LimitProduct::smallest_zero() const {
  if (zeros.empty()) throw std::domain_error("limit product has no zeros");
  return zeros.front();
}

double evaluate(const LimitProduct& f, double x) {
  return scaled_product<double>(f.zeros_sq, x * x) * std::exp(f.log_prefactor) *
         static_cast<double>(f.sign);
}

std::complex<double> evaluate(const LimitProduct& f, std::complex<double> x) {
  return scaled_product<std::complex<double>>(f.zeros_sq, x * x) *
         std::exp(f.log_prefactor) * static_cast<double>(f.sign);
}

double tail_log_bound(const LimitProduct& f, double r) {
  // at most one zero per unit length per side beyond the cutoff
  double s = 0;
  for (double z = std::max(f.cutoff, r + 1.0);; z += 1.0) {
    const double t = r * r / (z * z - r * r);
    s += 2 * t;
    if (t < 1e-18 * (s + 1)) break;
  }
  return s;
}

double log_max_modulus(const LimitProduct& f, double r) {
  double s = 0;
  for (double z2 : f.zeros_sq) s += std::log1p(r * r / z2);
  return s + f.log_prefactor;
}

namespace {

LimitProduct assemble_product(const ZeroSet& zs, double cutoff, int sign0) {
  double extent = 0;
  std::vector<std::pair<double, GoldenNumber>> keep;
  keep.reserve(zs.points.size());
  for (const auto& g : zs.points) {
    const double xd = std::abs(approx_golden(g));
    extent = std::max(extent, xd);
    if (xd <= cutoff) keep.emplace_back(xd, abs(g));
  }
  if (cutoff > extent + 2.0 && !zs.points.empty())
    throw std::invalid_argument("build_limit: cutoff exceeds available window");

  std::sort(keep.begin(), keep.end(),
            [](const auto& p, const auto& q) { return p.first < q.first; });

  LimitProduct out;
  out.cutoff = cutoff;
  out.sign = sign0;
  out.zeros.reserve(keep.size());
  out.zeros_sq.reserve(keep.size());
  for (size_t i = 0; i < keep.size(); ++i) {
    if (sign(keep[i].second) == 0)
      throw std::runtime_error("build_limit: zero at the origin");
    if (i > 0 && std::abs(keep[i].first - keep[i - 1].first) < 1e-6 &&
        keep[i].second == keep[i - 1].second)
      throw std::runtime_error("build_limit: zeros not simple");
    out.zeros.push_back(std::move(keep[i].second));
    out.zeros_sq.push_back(keep[i].first * keep[i].first);
  }
  return out;
}

}  // namespace

BuiltLimit build_limit(const ZeroPair& zeros, double cutoff) {
  if (cutoff <= 0) throw std::invalid_argument("build_limit: cutoff must be positive");
  BuiltLimit out;
  out.b = assemble_product(zeros.B, cutoff, +1);  // b(0) > 0
  out.a = assemble_product(zeros.A, cutoff, -1);  // a(0) < 0
  return out;
}

double scalar_renorm_eval(const ScalarPair& p, long n, bool want_b, double x) {
  if (n < 1) throw std::invalid_argument("scalar_renorm_eval: n must be >= 1");
  std::vector<double> shifts(n);
  const double a2h = (1 - kAlpha) / 2;
  double a3j = 1.0;
  for (long j = 0; j < n; ++j) {
    shifts[j] = a3j * a2h;
    a3j *= kAlpha * kAlpha * kAlpha;
  }
  std::function<double(long, bool, double)> ev = [&](long stage, bool wb,
                                                     double z) -> double {
    if (stage == 0) return wb ? p.b(z) : p.a(z);
    const double d = shifts[stage - 1];
    if (wb)
      return ev(stage - 1, false, z - d) * ev(stage - 1, true, z) *
             ev(stage - 1, false, z + d);
    return ev(stage - 1, false, z + 2 * d) * ev(stage - 1, true, z + d) *
           ev(stage - 1, false, z) * ev(stage - 1, true, z - d) *
           ev(stage - 1, false, z - 2 * d);
  };
  return ev(n, want_b, a3j * x);
}

FixedPointPair fix_normalization(const BuiltLimit& p, long n) {
  if (n < 1) throw std::invalid_argument("fix_normalization: n must be >= 1");
  const ScalarPair base{[&](double x) { return evaluate(p.b, x); },
                        [&](double x) { return evaluate(p.a, x); }};
  const double b0 = p.b.value_at_zero();
  const double a0 = p.a.value_at_zero();
  const double bt = scalar_renorm_eval(base, n, true, 0.0);
  const double at = scalar_renorm_eval(base, n, false, 0.0);
  if (!(bt / b0 > 0) || !(at / a0 > 0))
    throw std::runtime_error("fix_normalization: renormalization flipped a sign");
  const double vt = std::log(bt / b0);
  const double ut = std::log(at / a0);

  // U^{3n} for U = [[0,1],[1,1]]
  long long m11 = 1, m12 = 0, m21 = 0, m22 = 1;
  for (long i = 0; i < 3 * n; ++i) {
    const long long n11 = m21, n12 = m22;
    const long long n21 = m11 + m21, n22 = m12 + m22;
    m11 = n11;
    m12 = n12;
    m21 = n21;
    m22 = n22;
  }
  Eigen::Matrix2d sys;
  sys << 1.0 - m11, -static_cast<double>(m12), -static_cast<double>(m21),
      1.0 - m22;
  const Eigen::Vector2d rhs(vt, ut);
  const Eigen::Vector2d vu = sys.fullPivLu().solve(rhs);

  FixedPointPair fp;
  fp.b = p.b;
  fp.a = p.a;
  fp.n = n;
  fp.b.log_prefactor += vu[0];
  fp.a.log_prefactor += vu[1];
  return fp;
}

ScalingReport verify_scaling_limit(const SkewProduct& g, const FixedPointPair& fp,
                                   long k_max, double window, int grid) {
  ScalingReport rep;
  rep.n = fp.n;
  rep.lyapunov_ref = lyapunov(g, 46368, 0.1234);

  const SkewProduct f{1.0, FactorFunction::constant(Mat2::Identity())};
  const Mat2 carrier_a = fp.matrix;                    // [[1,0],[0,0]]
  const Mat2 carrier_b = quasi_inverse(fp.matrix);     // [[0,0],[0,1]]

  for (long k = 2; k <= k_max; k += 2) {
    const long m = 3 * fp.n * k;
    rep.ks.push_back(k);
    rep.p3nk.push_back(fibonacci(m).convert_to<double>());
    rep.q3nk.push_back(fibonacci(m + 1).convert_to<double>());

    const LogScaledMat2 b_at0 =
        direct_factor(f, g, fp.n, k, 0.0, PairComponent::B, RgOptions::LChoice::SPower);
    const LogScaledMat2 a_at0 =
        direct_factor(f, g, fp.n, k, 0.0, PairComponent::A, RgOptions::LChoice::SPower);

    const double bhat0 = b_at0.mat(1, 1);
    const double ahat0 = a_at0.mat(0, 0);
    if (bhat0 == 0.0 || ahat0 == 0.0)
      throw std::runtime_error("verify_scaling_limit: vanishing matching entry");

    // signed scales in log form: M_k * product == b at x = 0 by construction
    const double log_m = std::log(std::abs(fp.b0() / bhat0)) - b_at0.log_scale;
    const double log_w = std::log(std::abs(fp.a0() / ahat0)) - a_at0.log_scale;
    const double sgn_m = (fp.b0() / bhat0) > 0 ? 1.0 : -1.0;
    const double sgn_w = (fp.a0() / ahat0) > 0 ? 1.0 : -1.0;
    rep.log_m.push_back(log_m);
    rep.log_w.push_back(log_w);

    Eigen::JacobiSVD<Mat2> svd(a_at0.mat);
    rep.sv_ratio.push_back(svd.singularValues()(1) / svd.singularValues()(0));

    double err_b = 0, err_a = 0;
    for (int i = 0; i < grid; ++i) {
      const double x = -window + 2.0 * window * i / (grid - 1);
      const LogScaledMat2 bx =
          direct_factor(f, g, fp.n, k, x, PairComponent::B, RgOptions::LChoice::SPower);
      const LogScaledMat2 ax =
          direct_factor(f, g, fp.n, k, x, PairComponent::A, RgOptions::LChoice::SPower);
      const Mat2 bv = sgn_m * std::exp(log_m + bx.log_scale) * bx.mat;
      const Mat2 av = sgn_w * std::exp(log_w + ax.log_scale) * ax.mat;
      err_b = std::max(err_b, (bv - evaluate(fp.b, x) * carrier_b).norm());
      err_a = std::max(err_a, (av - evaluate(fp.a, x) * carrier_a).norm());
    }
    rep.err_b.push_back(err_b);
    rep.err_a.push_back(err_a);
  }

  // least-squares slopes of the measured log scales against the product lengths
  const auto fit_slope = [](const std::vector<double>& xs, const std::vector<double>& ys) {
    const size_t n = xs.size();
    if (n < 2) return 0.0;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
      sx += xs[i];
      sy += ys[i];
      sxx += xs[i] * xs[i];
      sxy += xs[i] * ys[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
  };
  rep.slope_m = fit_slope(rep.p3nk, rep.log_m);
  rep.slope_w = fit_slope(rep.q3nk, rep.log_w);
  return rep;
}

}  // namespace skewrg
