#include "skewrg/taylor.hpp"

#include <algorithm>
#include <cmath>

namespace skewrg {

TaylorSeries TaylorSeries::shifted_cosine(double r, double c, int degree) {
  TaylorSeries f = zero(r, degree);
  f.coeffs[0] = c - 2.0;
  const double w = 2.0 * M_PI;
  double term = -2.0;  // -2 (2pi)^{2m} / (2m)!, m = 0
  for (int m = 1; 2 * m <= degree; ++m) {
    term *= -w * w / ((2 * m - 1) * (2 * m));
    f.coeffs[2 * m] = term;
  }
  return f;
}

double ts_norm(const TaylorSeries& f) {
  double s = 0, rk = 1;
  for (int k = 0; k <= f.degree(); ++k) {
    s += std::abs(f.coeffs[k]) * rk;
    rk *= f.radius;
  }
  return s;
}

double ts_tail_fraction(const TaylorSeries& f, int from) {
  double tail = 0, total = 0, rk = 1;
  for (int k = 0; k <= f.degree(); ++k) {
    const double t = std::abs(f.coeffs[k]) * rk;
    total += t;
    if (k >= from) tail += t;
    rk *= f.radius;
  }
  return total > 0 ? tail / total : 0.0;
}

namespace {
void require_same_radius(const TaylorSeries& f, const TaylorSeries& g) {
  if (f.radius != g.radius)
    throw std::invalid_argument("taylor: radius mismatch");
}
}  // namespace

TaylorSeries ts_add(const TaylorSeries& f, const TaylorSeries& g) {
  require_same_radius(f, g);
  const int n = std::max(f.degree(), g.degree());
  TaylorSeries out = TaylorSeries::zero(f.radius, n);
  out.coeffs.head(f.coeffs.size()) = f.coeffs;
  out.coeffs.head(g.coeffs.size()) += g.coeffs;
  return out;
}

TaylorSeries ts_sub(const TaylorSeries& f, const TaylorSeries& g) {
  return ts_add(f, ts_scale(g, -1.0));
}

TaylorSeries ts_scale(const TaylorSeries& f, double s) {
  return {f.radius, (s * f.coeffs).eval()};
}

TaylorSeries ts_multiply(const TaylorSeries& f, const TaylorSeries& g) {
  require_same_radius(f, g);
  const int n = std::max(f.degree(), g.degree());
  TaylorSeries out = TaylorSeries::zero(f.radius, n);
  for (int i = 0; i <= std::min(n, f.degree()); ++i) {
    const double fi = f.coeffs[i];
    if (fi == 0.0) continue;
    const int jmax = std::min(n - i, g.degree());
    out.coeffs.segment(i, jmax + 1) += fi * g.coeffs.head(jmax + 1);
  }
  return out;
}

TaylorSeries ts_affine_compose(const TaylorSeries& f, double scale, double shift,
                               double out_radius) {
  if (out_radius <= 0)
    throw std::invalid_argument("ts_affine_compose: output radius must be positive");
  const double reach = std::abs(scale) * out_radius + std::abs(shift);
  if (reach > f.radius * (1.0 + 1e-12))
    throw std::domain_error("ts_affine_compose: argument disk escapes domain");

  const int n = f.degree();
  TaylorSeries out = TaylorSeries::zero(out_radius, n);
  // g_j = sum_{k>=j} c_k C(k,j) shift^{k-j} scale^j
  double scale_j = 1.0;
  for (int j = 0; j <= n; ++j) {
    double acc = 0.0;
    double binom = 1.0;      // C(j, j)
    double shift_pow = 1.0;  // shift^{k-j}
    for (int k = j; k <= n; ++k) {
      acc += f.coeffs[k] * binom * shift_pow;
      binom *= static_cast<double>(k + 1) / static_cast<double>(k + 1 - j);
      shift_pow *= shift;
    }
    out.coeffs[j] = acc * scale_j;
    scale_j *= scale;
  }
  return out;
}

double ts_eval(const TaylorSeries& f, double x) {
  double acc = 0;
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f.coeffs[k];
  return acc;
}

std::complex<double> ts_eval(const TaylorSeries& f, std::complex<double> x) {
  std::complex<double> acc = 0;
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f.coeffs[k];
  return acc;
}

TaylorSeries ts_even_part(const TaylorSeries& f) {
  TaylorSeries out = f;
  for (int k = 1; k <= out.degree(); k += 2) out.coeffs[k] = 0;
  return out;
}

MatrixSeries::MatrixSeries(TaylorSeries a0, TaylorSeries b0, TaylorSeries c0,
                           TaylorSeries d0)
    : a(std::move(a0)), b(std::move(b0)), c(std::move(c0)), d(std::move(d0)) {
  if (a.radius != b.radius || a.radius != c.radius || a.radius != d.radius)
    throw std::invalid_argument("matrix series: entries must share one radius");
}

MatrixSeries MatrixSeries::constant(double r, const Mat2& m0, int degree) {
  MatrixSeries m = zero(r, degree);
  m.a.coeffs[0] = m0(0, 0);
  m.b.coeffs[0] = m0(0, 1);
  m.c.coeffs[0] = m0(1, 0);
  m.d.coeffs[0] = m0(1, 1);
  return m;
}

double ms_norm(const MatrixSeries& m) {
  return ts_norm(m.a) + ts_norm(m.b) + ts_norm(m.c) + ts_norm(m.d);
}

double ms_tail_fraction(const MatrixSeries& m, int from) {
  const double tails[] = {ts_tail_fraction(m.a, from), ts_tail_fraction(m.b, from),
                          ts_tail_fraction(m.c, from), ts_tail_fraction(m.d, from)};
  return *std::max_element(std::begin(tails), std::end(tails));
}

MatrixSeries ms_add(const MatrixSeries& x, const MatrixSeries& y) {
  return {ts_add(x.a, y.a), ts_add(x.b, y.b), ts_add(x.c, y.c), ts_add(x.d, y.d)};
}

MatrixSeries ms_scale(const MatrixSeries& x, double s) {
  return {ts_scale(x.a, s), ts_scale(x.b, s), ts_scale(x.c, s), ts_scale(x.d, s)};
}

MatrixSeries ms_multiply(const MatrixSeries& x, const MatrixSeries& y) {
  return {ts_add(ts_multiply(x.a, y.a), ts_multiply(x.b, y.c)),
          ts_add(ts_multiply(x.a, y.b), ts_multiply(x.b, y.d)),
          ts_add(ts_multiply(x.c, y.a), ts_multiply(x.d, y.c)),
          ts_add(ts_multiply(x.c, y.b), ts_multiply(x.d, y.d))};
}

MatrixSeries ms_quasi_inverse(const MatrixSeries& x) {
  return {x.d, ts_scale(x.b, -1.0), ts_scale(x.c, -1.0), x.a};
}

MatrixSeries ms_affine_compose(const MatrixSeries& x, double scale, double shift,
                               double out_radius) {
  return {ts_affine_compose(x.a, scale, shift, out_radius),
          ts_affine_compose(x.b, scale, shift, out_radius),
          ts_affine_compose(x.c, scale, shift, out_radius),
          ts_affine_compose(x.d, scale, shift, out_radius)};
}

MatrixSeries ms_conjugate(const MatrixSeries& x, const Mat2& l) {
  const Mat2 linv = l.inverse();
  const TaylorSeries* in[2][2] = {{&x.a, &x.b}, {&x.c, &x.d}};
  Eigen::Index len = 0;
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q) len = std::max(len, (*in[p][q]).coeffs.size());

  MatrixSeries out = MatrixSeries::zero(x.radius(), static_cast<int>(len) - 1);
  TaylorSeries* res[2][2] = {{&out.a, &out.b}, {&out.c, &out.d}};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Eigen::VectorXd acc = Eigen::VectorXd::Zero(len);
      for (int p = 0; p < 2; ++p)
        for (int q = 0; q < 2; ++q)
          acc.head((*in[p][q]).coeffs.size()) += linv(i, p) * l(q, j) * (*in[p][q]).coeffs;
      (*res[i][j]).coeffs = acc;
    }
  return out;
}

Mat2 ms_eval(const MatrixSeries& m, double x) {
  Mat2 out;
  out << ts_eval(m.a, x), ts_eval(m.b, x), ts_eval(m.c, x), ts_eval(m.d, x);
  return out;
}

Mat2c ms_eval(const MatrixSeries& m, std::complex<double> x) {
  Mat2c out;
  out << ts_eval(m.a, x), ts_eval(m.b, x), ts_eval(m.c, x), ts_eval(m.d, x);
  return out;
}

double reversibility_defect(const MatrixSeries& m) {
  double defect = 0;
  double rk = 1;
  for (int k = 0; k <= m.degree(); ++k) {
    if (k % 2 == 1) defect += (std::abs(m.a.coeffs[k]) + std::abs(m.d.coeffs[k])) * rk;
    const double parity = (k % 2 == 0) ? 1.0 : -1.0;
    defect += std::abs(m.b.coeffs[k] + parity * m.c.coeffs[k]) * rk;
    rk *= m.radius();
  }
  return defect;
}

MatrixSeries reversible_project(const MatrixSeries& m) {
  MatrixSeries out = m;
  out.a = ts_even_part(m.a);
  out.d = ts_even_part(m.d);
  for (int k = 0; k <= m.degree(); ++k) {
    const double parity = (k % 2 == 0) ? 1.0 : -1.0;
    const double bk = m.b.coeffs[k], ck = m.c.coeffs[k];
    out.b.coeffs[k] = (bk - parity * ck) / 2;
    out.c.coeffs[k] = (ck - parity * bk) / 2;
  }
  return out;
}

void validate_pair_radii(double r_b, double r_a) {
  const double a3 = kAlpha * kAlpha * kAlpha;
  const bool ok = r_b > kAlpha / 2 && r_a > 0.5 &&
                  a3 * r_a + kAlpha * kAlpha / 2 < r_b &&
                  r_b < r_a / a3 - 1 / (2 * kAlpha);
  if (!ok)
    throw std::invalid_argument("pair radii violate the renormalization domain condition");
}

PairH::PairH(MatrixSeries b, MatrixSeries a, bool validate)
    : B(std::move(b)), A(std::move(a)) {
  if (validate) validate_pair_radii(B.radius(), A.radius());
}

double pair_norm(const PairH& p) { return ms_norm(p.B) + ms_norm(p.A); }

double pair_distance(const PairH& p, const PairH& q) {
  const auto diff = [](const MatrixSeries& x, const MatrixSeries& y) {
    return ms_norm(ms_add(x, ms_scale(y, -1.0)));
  };
  return diff(p.B, q.B) + diff(p.A, q.A);
}

PairH scaled_am_pair(double delta, double epsilon, double r_b, double r_a, int degree) {
  MatrixSeries b = MatrixSeries::identity(r_b, degree);
  MatrixSeries a = MatrixSeries::zero(r_a, degree);
  a.a = TaylorSeries::shifted_cosine(r_a, -epsilon, degree);
  a.b = TaylorSeries::constant(r_a, -delta, degree);
  a.c = TaylorSeries::constant(r_a, delta, degree);
  return PairH(std::move(b), std::move(a));
}

}  // namespace skewrg
