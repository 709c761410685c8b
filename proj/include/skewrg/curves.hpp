// The small-coupling limit family, the density-of-states relation k = 2 rot,
// and the critical-curve finder pinning the rotation number to a periodic
// value.
#pragma once

#include "skewrg/factor.hpp"
#include "skewrg/golden.hpp"
#include "skewrg/taylor.hpp"

namespace skewrg {

struct CurvePoint {
  double delta = 0;
  double epsilon = 0;
  GoldenNumber rho_target;
  double residual = 0;       // |measured rotation - rho| at acceptance
  double bracket_lo = 0, bracket_hi = 0;
  double plateau_width = 0;  // width of the measured rot == rho plateau
};

/// Lebesgue measure of {x in T : v(x) <= eps}; closed form 2 rho for the
/// cosine potential, sampled otherwise.
double ids_limit(double eps, const Potential& v = Potential::cosine());

/// rho = arccos(-eps/2) / (2 pi) in [0, 1/2]; requires eps in [-2, 2].
double limit_rotation(double eps);

struct CurveOptions {
  long n_hi = 0;      // sign-count length, 0 = Fibonacci default p_26
  long n_lo = 0;      // consistency check length, 0 = p_24
  double bracket = 0; // half-width of the eps bracket, 0 = 2.5 delta + 1e-3
};

/// Finds eps with the measured rotation number of the scaled Schrodinger
/// family pinned at rho, by bisection on the exact sign-count predicate,
/// seeded at the limit value -2 cos(2 pi rho).  The measured rotation is a
/// staircase, so both plateau edges are located and the midpoint returned
/// with the plateau width.  Throws "no crossing in bracket" when the bracket
/// does not straddle the target.
CurvePoint critical_curve(const GoldenNumber& rho, double delta, double tol,
                          const CurveOptions& opts = {});

/// The a-entry of the k-times renormalized A-part at rho: a signed
/// distance-to-manifold proxy.  Norm scaling and the sigma conjugacy are used
/// throughout.
double stable_manifold_residual(double delta, double eps, const GoldenNumber& rho,
                                long k, long n);

}  // namespace skewrg
