// 2x2 matrix primitives: quasi-inverse, the reversibility matrix S, and
// log-scaled products that stay bounded for arbitrarily long cocycles.
#pragma once

#include <Eigen/Core>

#include <cmath>
#include <complex>

namespace skewrg {

using Mat2 = Eigen::Matrix2d;
using Mat2c = Eigen::Matrix2cd;
using Vec2 = Eigen::Vector2d;

template <typename Scalar>
using Mat2T = Eigen::Matrix<Scalar, 2, 2>;

/// Quasi-inverse (adjugate): M† = [[d,-b],[-c,a]], so M† M = det(M) * I.
template <typename Derived>
Mat2T<typename Derived::Scalar> quasi_inverse(const Eigen::MatrixBase<Derived>& m) {
  Mat2T<typename Derived::Scalar> out;
  out << m(1, 1), -m(0, 1), -m(1, 0), m(0, 0);
  return out;
}

/// S = [[0,1],[1,0]]; S^-1 M S swaps both index pairs.
inline const Mat2& reversor() {
  static const Mat2 s = (Mat2() << 0, 1, 1, 0).finished();
  return s;
}

/// exp(s S) = cosh(s) I + sinh(s) S; commutes with S, determinant 1.
inline Mat2 exp_sigma_s(double s) {
  Mat2 m;
  const double c = std::cosh(s), h = std::sinh(s);
  m << c, h, h, c;
  return m;
}

/// A 2x2 matrix kept at unit Frobenius norm together with the log of the
/// factored-out scale.  Products of thousands of factors neither overflow nor
/// underflow; the true matrix is exp(log_scale) * mat.
template <typename Scalar>
struct LogScaled {
  Mat2T<Scalar> mat = Mat2T<Scalar>::Identity();
  double log_scale = 0.0;

  static LogScaled identity() { return {Mat2T<Scalar>::Identity() / std::sqrt(2.0), std::log(std::sqrt(2.0))}; }

  static LogScaled from(const Mat2T<Scalar>& m) {
    LogScaled out;
    const double n = m.norm();
    if (n == 0.0) {
      out.mat = Mat2T<Scalar>::Zero();
      out.log_scale = -std::numeric_limits<double>::infinity();
      return out;
    }
    out.mat = m / n;
    out.log_scale = std::log(n);
    return out;
  }

  LogScaled quasi_inverse() const { return {skewrg::quasi_inverse(mat), log_scale}; }

  friend LogScaled operator*(const LogScaled& x, const LogScaled& y) {
    return LogScaled::from((x.mat * y.mat).eval()).shifted(x.log_scale + y.log_scale);
  }

  LogScaled shifted(double dlog) const { return {mat, log_scale + dlog}; }

  /// Materializes the matrix; only safe when |log_scale| is moderate.
  Mat2T<Scalar> value() const { return std::exp(log_scale) * mat; }
};

using LogScaledMat2 = LogScaled<double>;
using LogScaledMat2c = LogScaled<std::complex<double>>;

}  // namespace skewrg
