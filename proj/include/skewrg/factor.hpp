// Matrix-valued factor functions over the circle and the skew-product maps
// they generate.
#pragma once

#include "skewrg/golden.hpp"
#include "skewrg/matrix2.hpp"

#include <complex>
#include <functional>
#include <memory>
#include <string>

namespace skewrg {

struct MatrixSeries;  // taylor.hpp

/// 1-periodic real-analytic potential.  The cosine kind extends to complex
/// arguments; custom potentials are real-line only.
struct Potential {
  enum class Kind { Cosine, Custom };
  Kind kind = Kind::Cosine;
  std::function<double(double)> custom;

  double operator()(double x) const {
    return kind == Kind::Cosine ? -2.0 * std::cos(2.0 * M_PI * x) : custom(x);
  }
  std::complex<double> operator()(std::complex<double> x) const;

  static Potential cosine() { return {}; }
  static Potential make(std::function<double(double)> f) {
    Potential p;
    p.kind = Kind::Custom;
    p.custom = std::move(f);
    return p;
  }
};

/// Evaluatable 2x2-matrix-valued function of the circle coordinate.
///
/// Kinds:
///   Schrodinger        [[lambda v(t+x) - E, -1], [1, 0]],  det = 1
///   ScaledSchrodinger  [[v(t+x) - eps, -delta], [delta, 0]],  det = delta^2
///   Rank1Scalar        f(x) * A0 for a fixed constant matrix A0
///   TaylorMatrix       evaluation of a stored matrix Taylor series
struct FactorFunction {
  enum class Kind { Schrodinger, ScaledSchrodinger, Rank1Scalar, TaylorMatrix };
  Kind kind = Kind::Schrodinger;

  // Schrodinger / ScaledSchrodinger
  double lambda = 0, energy = 0, phase = 0;  // lambda, E, t
  double delta = 0, epsilon = 0;
  Potential potential = Potential::cosine();

  // Rank1Scalar: scalar may be evaluated at complex arguments when
  // scalar_complex is set.
  std::function<double(double)> scalar;
  std::function<std::complex<double>(std::complex<double>)> scalar_complex;
  Mat2 rank1 = Mat2::Zero();

  // TaylorMatrix
  std::shared_ptr<const MatrixSeries> series;

  Mat2 operator()(double x) const;
  Mat2c operator()(std::complex<double> x) const;

  double det_value() const;  // constant determinant of the kind
  bool supports_sign_count() const {
    return kind == Kind::Schrodinger || kind == Kind::ScaledSchrodinger ||
           kind == Kind::Rank1Scalar;
  }

  static FactorFunction almost_mathieu(double lambda, double energy,
                                       double phase = kAlpha / 2);
  static FactorFunction schrodinger(double lambda, double energy, double phase,
                                    Potential v);
  static FactorFunction scaled_schrodinger(double delta, double epsilon,
                                           double phase = kAlpha / 2,
                                           Potential v = Potential::cosine());
  static FactorFunction rank1(std::function<double(double)> plain, Mat2 a0);
  /// Constant matrix factor (scalar 1 times m0); complex-capable.
  static FactorFunction constant(Mat2 m0);
  /// Limit family a_sym(x) = -eps - 2 cos(2 pi x) times [[1,0],[0,0]],
  /// stored as a plain factor for frequency alpha.
  static FactorFunction limit_rank1(double epsilon);
  static FactorFunction taylor(std::shared_ptr<const MatrixSeries> s);
};

/// Skew-product map G = (frequency, A): (x, y) -> (x + frequency, A(x) y).
struct SkewProduct {
  double frequency = kAlpha;
  FactorFunction factor;

  Mat2 plain(double x) const { return factor(x); }
  Mat2c plain(std::complex<double> x) const { return factor(x); }
  /// Symmetric factor A0(x) = A(x - frequency/2).
  Mat2 symmetric(double x) const { return factor(x - frequency / 2); }
  Mat2c symmetric(std::complex<double> x) const {
    return factor(x - std::complex<double>(frequency / 2));
  }
};

}  // namespace skewrg
