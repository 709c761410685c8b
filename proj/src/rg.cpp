#include "skewrg/rg.hpp"

#include <cmath>
#include <stdexcept>

namespace skewrg {

GoldenNumber alpha_power(long m) {
  GoldenNumber acc = GoldenNumber::one();
  const GoldenNumber a = GoldenNumber::alpha();
  for (long i = 0; i < m; ++i) acc *= a;
  return acc;
}

FreqPairSeries c3(const FreqPairSeries& p) {
  const GoldenNumber half(Rational(1, 2), Rational(0));
  const GoldenNumber d_exact = (p.freq_f - p.freq_g) * half;
  const double d = to_double(d_exact);
  const double r_b_in = p.B.radius();
  const double r_a_in = p.A.radius();

  // new F word: A(x - d) B(x)' A(x + d)
  const double r_b = std::min(r_a_in - std::abs(d), r_b_in);
  // new G word: A(x + 2d)' B(x + d) A(x)' B(x - d) A(x - 2d)'
  const double r_a = std::min(r_a_in - 2 * std::abs(d), r_b_in - std::abs(d));
  if (r_b <= 0 || r_a <= 0)
    throw std::domain_error("c3: argument disk escapes domain");

  const auto shift_a = [&](double s, double r) {
    return ms_affine_compose(p.A, 1.0, s, r);
  };
  const auto shift_b = [&](double s, double r) {
    return ms_affine_compose(p.B, 1.0, s, r);
  };

  FreqPairSeries out;
  out.freq_f = GoldenNumber(Rational(2), Rational(0)) * p.freq_g - p.freq_f;
  out.freq_g = GoldenNumber(Rational(2), Rational(0)) * p.freq_f -
               GoldenNumber(Rational(3), Rational(0)) * p.freq_g;

  out.B = ms_multiply(ms_multiply(shift_a(-d, r_b), ms_quasi_inverse(shift_b(0.0, r_b))),
                      shift_a(d, r_b));
  out.A = ms_multiply(
      ms_multiply(ms_multiply(ms_multiply(ms_quasi_inverse(shift_a(2 * d, r_a)),
                                          shift_b(d, r_a)),
                              ms_quasi_inverse(shift_a(0.0, r_a))),
                  shift_b(-d, r_a)),
      ms_quasi_inverse(shift_a(-2 * d, r_a)));
  return out;
}

double sigma_solve(const PairH& p) {
  const double x0 = -kAlpha / 2;
  const Mat2 m = ms_eval(p.A, x0);
  const double a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  // c-entry of e^{-sS} M e^{sS}: g(s) = c cosh^2 s - b sinh^2 s + (d-a) cosh s sinh s
  const auto g = [&](double s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    return c * ch * ch - b * sh * sh + (d - a) * ch * sh;
  };
  const auto dg = [&](double s) {
    const double ch = std::cosh(s), sh = std::sinh(s);
    return 2 * (c - b) * ch * sh + (d - a) * (ch * ch + sh * sh);
  };

  double s = 0.0;
  for (int it = 0; it < 100; ++it) {
    const double f = g(s);
    if (std::abs(f) < 1e-14) return s;
    const double fp = dg(s);
    if (fp == 0.0) break;
    double next = s - f / fp;
    if (std::abs(next) > 1.0) break;
    s = next;
  }
  if (std::abs(g(s)) < 1e-14 && std::abs(s) <= 1.0) return s;

  // bisection fallback on [-1, 1]
  double lo = -1.0, hi = 1.0;
  double glo = g(lo), ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo < 0) == (ghi < 0))
    throw std::runtime_error("sigma normalization failed");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (std::abs(gm) < 1e-14 || hi - lo < 1e-15) return mid;
    if ((gm < 0) == (glo < 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

PairH normalize(const PairH& p, const RgOptions& opts, RenormScales* info) {
  RenormScales local;
  RenormScales& sc = info ? *info : local;
  switch (opts.normalization) {
    case RgOptions::Normalization::None:
      sc.b_scale = sc.a_scale = 1.0;
      return p;
    case RgOptions::Normalization::NormScaling: {
      const double nb = ms_norm(p.B), na = ms_norm(p.A);
      if (nb == 0.0 || na == 0.0)
        throw std::domain_error("normalize: zero norm");
      sc.b_scale = 1.0 / nb;
      sc.a_scale = 1.0 / na;
      return PairH(ms_scale(p.B, sc.b_scale), ms_scale(p.A, sc.a_scale), false);
    }
    case RgOptions::Normalization::TraceScaling: {
      if (opts.target_b0 == 0.0)
        throw std::invalid_argument("normalize: TraceScaling requires target_b0 != 0");
      const double tr = ms_eval(p.B, 0.0).trace();
      if (tr == 0.0) throw std::domain_error("normalize: zero trace at 0");
      sc.b_scale = opts.target_b0 / tr;
      sc.a_scale = 1.0;
      return PairH(ms_scale(p.B, sc.b_scale), p.A, false);
    }
  }
  throw std::logic_error("normalize: unknown normalization");
}

PairH r3n_series(const PairH& p, const RgOptions& opts, RenormScales* info) {
  if (opts.n < 1) throw std::invalid_argument("r3n_series: n must be >= 1");
  RenormScales local;
  RenormScales& sc = info ? *info : local;

  FreqPairSeries cur = FreqPairSeries::from_pair(p);
  for (long j = 0; j < opts.n; ++j) cur = c3(cur);

  const double scale = to_double(alpha_power(3 * opts.n));
  MatrixSeries b_out = ms_affine_compose(cur.B, scale, 0.0, p.rB());
  MatrixSeries a_out = ms_affine_compose(cur.A, scale, 0.0, p.rA());

  if (opts.l_choice != RgOptions::LChoice::Identity && (opts.n % 2) == 1) {
    b_out = ms_conjugate(b_out, reversor());
    a_out = ms_conjugate(a_out, reversor());
  }
  if (opts.l_choice == RgOptions::LChoice::SPowerWithSigma) {
    PairH pre(b_out, a_out, false);
    const double s = sigma_solve(pre);
    sc.sigma = s;
    if (s != 0.0) {
      const Mat2 l = exp_sigma_s(s);
      b_out = ms_conjugate(b_out, l);
      a_out = ms_conjugate(a_out, l);
    }
  }

  PairH out(std::move(b_out), std::move(a_out));
  out = normalize(out, opts, &sc);

  if (opts.track_logdet) {
    // per composition step: det_B' = det_A^2 det_B, det_A' = det_A^3 det_B^2
    double lb = opts.logdet_b0, la = opts.logdet_a0;
    for (long j = 0; j < opts.n; ++j) {
      const double nb = 2 * la + lb;
      const double na = 3 * la + 2 * lb;
      lb = nb;
      la = na;
    }
    sc.logdet_b = lb + 2 * std::log(std::abs(sc.b_scale));
    sc.logdet_a = la + 2 * std::log(std::abs(sc.a_scale));
  }
  return out;
}

double ratio_variance(const MatrixSeries& a_part) {
  const double x0 = -kAlpha / 2;
  const int samples = 101;
  std::vector<double> r(samples);
  for (int i = 0; i < samples; ++i) {
    const double x = x0 - 0.2 + 0.4 * i / (samples - 1);
    const Mat2 m = ms_eval(a_part, x);
    r[i] = m(1, 0) / m(0, 0);
  }
  double mean = 0;
  for (double v : r) mean += v;
  mean /= samples;
  double var = 0;
  for (double v : r) var += (v - mean) * (v - mean);
  return var / samples;
}

RgTrajectory iterate_rg(const PairH& p0, int steps, const RgOptions& opts) {
  RgTrajectory traj;
  PairH cur = p0;
  RgOptions stage = opts;
  const double x0 = -kAlpha / 2;

  for (int k = 1; k <= steps; ++k) {
    RenormScales sc;
    PairH next = r3n_series(cur, stage, &sc);

    RgStepRecord rec;
    rec.step = k;
    rec.pair_norm = pair_norm(next);
    rec.b_scale = sc.b_scale;
    rec.a_scale = sc.a_scale;
    rec.sigma = sc.sigma;
    if (k > 1) rec.distance_prev = pair_distance(next, cur);
    double max_det = 0;
    for (int i = 0; i <= 40; ++i) {
      const double x = x0 - 0.2 + 0.4 * i / 40;
      const Mat2 m = ms_eval(next.A, x);
      max_det = std::max(max_det, std::abs(m.determinant()));
    }
    rec.max_abs_det = max_det;
    rec.ratio_variance = ratio_variance(next.A);
    rec.tail_fraction = std::max(ms_tail_fraction(next.B, next.B.degree() / 2),
                                 ms_tail_fraction(next.A, next.A.degree() / 2));
    if (stage.track_logdet) {
      rec.logdet_b = sc.logdet_b;
      rec.logdet_a = sc.logdet_a;
      stage.logdet_b0 = sc.logdet_b;
      stage.logdet_a0 = sc.logdet_a;
    }
    traj.steps.push_back(rec);
    cur = std::move(next);
  }
  traj.final = std::move(cur);
  return traj;
}

namespace {

template <typename Scalar>
LogScaled<Scalar> direct_eval(const SkewProduct& f, const SkewProduct& g,
                              const std::vector<double>& shifts, long stage,
                              bool want_b, Scalar z) {
  if (stage == 0) {
    const Mat2T<Scalar> m = want_b ? Mat2T<Scalar>(f.symmetric(z)) : Mat2T<Scalar>(g.symmetric(z));
    return LogScaled<Scalar>::from(m);
  }
  const long j = stage - 1;
  const Scalar d(shifts[j]);
  const auto A = [&](Scalar w) { return direct_eval(f, g, shifts, j, false, w); };
  const auto B = [&](Scalar w) { return direct_eval(f, g, shifts, j, true, w); };
  if (want_b) return A(z - d) * B(z).quasi_inverse() * A(z + d);
  return A(z + Scalar(2.0) * d).quasi_inverse() * B(z + d) *
         A(z).quasi_inverse() * B(z - d) * A(z - Scalar(2.0) * d).quasi_inverse();
}

template <typename Scalar>
LogScaled<Scalar> direct_factor_impl(const SkewProduct& f, const SkewProduct& g,
                                     long n, long k, Scalar x, PairComponent which,
                                     RgOptions::LChoice l_choice, double sigma_total) {
  if (n < 1 || k < 0) throw std::invalid_argument("direct_factor: bad n or k");
  const long stages = n * k;
  std::vector<double> shifts(stages);
  const double a2_half = (1 - kAlpha) / 2;
  double a3j = 1.0;
  for (long j = 0; j < stages; ++j) {
    shifts[j] = a3j * a2_half;
    a3j *= kAlpha * kAlpha * kAlpha;
  }
  const Scalar z = Scalar(a3j) * x;  // a3j = alpha^{3 * stages} after the loop
  LogScaled<Scalar> out =
      direct_eval<Scalar>(f, g, shifts, stages, which == PairComponent::B, z);

  Mat2 l = Mat2::Identity();
  if (l_choice != RgOptions::LChoice::Identity && ((n * k) % 2) == 1)
    l = reversor() * l;
  if (l_choice == RgOptions::LChoice::SPowerWithSigma && sigma_total != 0.0)
    l = l * exp_sigma_s(sigma_total);
  if (!l.isIdentity(0.0)) {
    const Mat2T<Scalar> ls = l.cast<Scalar>();
    const Mat2T<Scalar> li = l.inverse().cast<Scalar>();
    out = LogScaled<Scalar>::from((li * out.mat * ls).eval()).shifted(out.log_scale);
  }
  return out;
}

}  // namespace

LogScaledMat2c direct_factor(const SkewProduct& f, const SkewProduct& g, long n,
                             long k, std::complex<double> x, PairComponent which,
                             RgOptions::LChoice l_choice, double sigma_total) {
  return direct_factor_impl<std::complex<double>>(f, g, n, k, x, which, l_choice,
                                                  sigma_total);
}
LogScaledMat2 direct_factor(const SkewProduct& f, const SkewProduct& g, long n,
                            long k, double x, PairComponent which,
                            RgOptions::LChoice l_choice, double sigma_total) {
  return direct_factor_impl<double>(f, g, n, k, x, which, l_choice, sigma_total);
}

double unstable_eigenvalue(const std::function<PairH(double)>& family, double eps0,
                           double h, long k, double rho_x, const RgOptions& opts) {
  if (h <= 0) throw std::invalid_argument("unstable_eigenvalue: h must be positive");
  const auto residual = [&](double eps, long steps) {
    PairH p = family(eps);
    for (long j = 0; j < steps; ++j) p = r3n_series(p, opts);
    return ts_eval(p.A.a, rho_x);
  };
  const double d_k =
      (residual(eps0 + h, k) - residual(eps0 - h, k)) / (2 * h);
  const double d_k1 =
      (residual(eps0 + h, k + 1) - residual(eps0 - h, k + 1)) / (2 * h);
  if (std::abs(d_k) < 1e-300)
    throw std::runtime_error("unstable_eigenvalue: non-transversal family");
  return d_k1 / d_k;
}

}  // namespace skewrg
