// Truncated Taylor series at 0 with the majorant norm sum_k |c_k| r^k,
// matrix-valued series, affine-argument recomposition, and the reversible
// projection.  This is the state space the renormalization acts on.
#pragma once

#include "skewrg/golden.hpp"
#include "skewrg/matrix2.hpp"

#include <Eigen/Core>

#include <complex>
#include <stdexcept>

namespace skewrg {

inline constexpr int kDefaultDegree = 64;

struct TaylorSeries {
  double radius = 1.0;
  Eigen::VectorXd coeffs;  // c_0 .. c_N

  TaylorSeries() = default;
  TaylorSeries(double r, Eigen::VectorXd c) : radius(r), coeffs(std::move(c)) {
    if (r <= 0) throw std::invalid_argument("taylor: radius must be positive");
  }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }

  static TaylorSeries zero(double r, int degree = kDefaultDegree) {
    return {r, Eigen::VectorXd::Zero(degree + 1)};
  }
  static TaylorSeries constant(double r, double value, int degree = kDefaultDegree) {
    TaylorSeries f = zero(r, degree);
    f.coeffs[0] = value;
    return f;
  }
  static TaylorSeries monomial(double r, int power, double value = 1.0,
                               int degree = kDefaultDegree) {
    TaylorSeries f = zero(r, std::max(degree, power));
    f.coeffs[power] = value;
    return f;
  }
  /// c - 2 cos(2 pi x), truncated.
  static TaylorSeries shifted_cosine(double r, double c, int degree = kDefaultDegree);
};

/// Majorant norm sum_k |c_k| r^k.
double ts_norm(const TaylorSeries& f);

/// Fraction of the majorant norm carried by degrees above `from`; the
/// truncation-quality diagnostic.
double ts_tail_fraction(const TaylorSeries& f, int from);

TaylorSeries ts_add(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries ts_sub(const TaylorSeries& f, const TaylorSeries& g);
TaylorSeries ts_scale(const TaylorSeries& f, double s);

/// Cauchy product truncated at the larger input degree; requires equal radii.
TaylorSeries ts_multiply(const TaylorSeries& f, const TaylorSeries& g);

/// Taylor series of x -> f(scale*x + shift) on |x| <= out_radius, by exact
/// binomial re-expansion.  Requires |scale|*out_radius + |shift| <= f.radius;
/// otherwise throws "argument disk escapes domain".
TaylorSeries ts_affine_compose(const TaylorSeries& f, double scale, double shift,
                               double out_radius);

double ts_eval(const TaylorSeries& f, double x);
std::complex<double> ts_eval(const TaylorSeries& f, std::complex<double> x);

/// Even and odd parts.
TaylorSeries ts_even_part(const TaylorSeries& f);

struct MatrixSeries {
  TaylorSeries a, b, c, d;  // row-major entries, one shared radius

  MatrixSeries() = default;
  MatrixSeries(TaylorSeries a0, TaylorSeries b0, TaylorSeries c0, TaylorSeries d0);

  double radius() const { return a.radius; }
  int degree() const { return a.degree(); }

  static MatrixSeries zero(double r, int degree = kDefaultDegree) {
    return {TaylorSeries::zero(r, degree), TaylorSeries::zero(r, degree),
            TaylorSeries::zero(r, degree), TaylorSeries::zero(r, degree)};
  }
  static MatrixSeries identity(double r, int degree = kDefaultDegree) {
    MatrixSeries m = zero(r, degree);
    m.a.coeffs[0] = 1;
    m.d.coeffs[0] = 1;
    return m;
  }
  static MatrixSeries constant(double r, const Mat2& m0, int degree = kDefaultDegree);
};

/// Entrywise norm sum ||a|| + ||b|| + ||c|| + ||d||.
double ms_norm(const MatrixSeries& m);
double ms_tail_fraction(const MatrixSeries& m, int from);

MatrixSeries ms_add(const MatrixSeries& x, const MatrixSeries& y);
MatrixSeries ms_scale(const MatrixSeries& x, double s);
MatrixSeries ms_multiply(const MatrixSeries& x, const MatrixSeries& y);
MatrixSeries ms_quasi_inverse(const MatrixSeries& x);
MatrixSeries ms_affine_compose(const MatrixSeries& x, double scale, double shift,
                               double out_radius);
/// Constant-matrix conjugation L^-1 X L.
MatrixSeries ms_conjugate(const MatrixSeries& x, const Mat2& l);

Mat2 ms_eval(const MatrixSeries& m, double x);
Mat2c ms_eval(const MatrixSeries& m, std::complex<double> x);
inline Mat2 eval(const MatrixSeries& m, double x) { return ms_eval(m, x); }
inline Mat2c eval(const MatrixSeries& m, std::complex<double> x) { return ms_eval(m, x); }

/// Reversible means a and d even while b(x) = -c(-x); on coefficients the odd
/// a,d coefficients vanish and b_k = -(-1)^k c_k.
double reversibility_defect(const MatrixSeries& m);
MatrixSeries reversible_project(const MatrixSeries& m);

/// Renormalization state: a pair of matrix series on radii (r_B, r_A)
/// satisfying the domain condition
///   r_B > alpha/2,  r_A > 1/2,
///   alpha^3 r_A + alpha^2/2 < r_B < alpha^-3 r_A - alpha^-1/2  (strict).
struct PairH {
  MatrixSeries B, A;

  PairH() = default;
  PairH(MatrixSeries b, MatrixSeries a, bool validate = true);

  double rB() const { return B.radius(); }
  double rA() const { return A.radius(); }
};

/// Throws std::invalid_argument when (r_B, r_A) violates the domain condition.
void validate_pair_radii(double r_b, double r_a);

double pair_norm(const PairH& p);
double pair_distance(const PairH& p, const PairH& q);

inline constexpr double kDefaultRadiusB = 0.4;
inline constexpr double kDefaultRadiusA = 0.6;

/// The scaled almost Mathieu pair: B = identity, A = [[-eps-2cos(2pi x), -delta],
/// [delta, 0]] as symmetric factors at the default radii.
PairH scaled_am_pair(double delta, double epsilon, double r_b = kDefaultRadiusB,
                     double r_a = kDefaultRadiusA, int degree = kDefaultDegree);

}  // namespace skewrg
