// Universal limit functions as truncated infinite products over exact zero
// sets, the constant normalization that makes the pair an honest fixed point,
// and empirical verification of the scaling limits.
#pragma once

#include "skewrg/factor.hpp"
#include "skewrg/golden.hpp"
#include "skewrg/zeros.hpp"

#include <complex>
#include <functional>
#include <vector>

namespace skewrg {

/// Even entire function sign * e^{log_prefactor} * prod_j (1 - x^2 / z_j^2)
/// truncated to the zeros with |z| <= cutoff.  Zeros are stored as positive
/// representatives, ascending, all simple (exact arithmetic).
struct LimitProduct {
  std::vector<GoldenNumber> zeros;
  std::vector<double> zeros_sq;  // cached z^2 for evaluation
  double cutoff = 0.0;
  double log_prefactor = 0.0;
  int sign = 1;

  double value_at_zero() const { return sign * std::exp(log_prefactor); }
  /// Smallest positive zero, the kappa diagnostic; throws when empty.
  const GoldenNumber& smallest_zero() const;
};

double evaluate(const LimitProduct& f, double x);
std::complex<double> evaluate(const LimitProduct& f, std::complex<double> x);

/// Bound on |log prod_tail| for evaluation at |x| <= r, from the unit gap
/// lower bound past the cutoff.
double tail_log_bound(const LimitProduct& f, double r);

struct BuiltLimit {
  LimitProduct b, a;
};

/// Assembles both products from the harvested zero pair; signs fixed so
/// b(0) > 0 and a(0) < 0, prefactors zero.  Verifies simplicity (distinct
/// magnitudes) exactly; throws when the cutoff exceeds the harvested extent.
BuiltLimit build_limit(const ZeroPair& zeros, double cutoff);

struct FixedPointPair {
  LimitProduct b, a;
  long n = 0;
  Mat2 matrix = (Mat2() << 1, 0, 0, 0).finished();  // the rank-one carrier

  double b0() const { return b.value_at_zero(); }
  double a0() const { return a.value_at_zero(); }
};

/// Direct scalar renormalization: n composition steps then the argument
/// scaling, evaluated pointwise through the callables (no truncation).
struct ScalarPair {
  std::function<double(double)> b, a;
};
double scalar_renorm_eval(const ScalarPair& p, long n, bool want_b, double x);

/// Measures the multiplicative defect of one scalar renormalization at x = 0
/// and solves the 2x2 constant system (I - U^{3n}) [v,u]^T = [v~,u~]^T,
/// U = [[0,1],[1,1]], so that the corrected pair is a genuine fixed point.
/// The system is never singular: U^{3n} has eigenvalues alpha^{-3n}, (-alpha)^{3n}.
FixedPointPair fix_normalization(const BuiltLimit& p, long n);

/// log |f(iR)|, the maximum modulus on |x| = R; for the order-1/2 growth
/// diagnostic.
double log_max_modulus(const LimitProduct& f, double r);

struct ScalingReport {
  long n = 0;
  double lyapunov_ref = 0;            // L of the driving map
  std::vector<long> ks;               // even k values
  std::vector<double> p3nk, q3nk;     // Fibonacci product lengths
  std::vector<double> err_b, err_a;   // sup-norm errors over the window
  std::vector<double> log_m, log_w;   // measured scale sequences
  std::vector<double> sv_ratio;       // smallest/largest singular value at 0
  double slope_m = 0, slope_w = 0;    // fitted slope of log M_k against p_{3nk}
};

/// Empirical scaling-limit check: for even k <= k_max, matches the direct
/// log-scaled products of length p_{3nk} and q_{3nk} against b and a on
/// |x| <= window, scales fixed by matching at x = 0.  Errors are reported as
/// found, including non-decreasing ones.
ScalingReport verify_scaling_limit(const SkewProduct& g, const FixedPointPair& fp,
                                   long k_max, double window, int grid = 13);

}  // namespace skewrg
