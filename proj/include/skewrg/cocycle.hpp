// Transfer-matrix products along circle orbits, Lyapunov exponents, and
// rotation numbers by sign counting and by continuous angle lift.
#pragma once

#include "skewrg/factor.hpp"
#include "skewrg/golden.hpp"
#include "skewrg/matrix2.hpp"

#include <complex>

namespace skewrg {

/// Ordered product A(x+(q-1)f) ... A(x+f) A(x) for q > 0; for q < 0 the
/// factors are A(.-f)^-1.  Kept at unit Frobenius norm with the scale in log
/// space.  Throws "noninvertible factor" for q < 0 with det = 0.
LogScaledMat2 product(const SkewProduct& g, long q, double x);
LogScaledMat2c product(const SkewProduct& g, long q, std::complex<double> x);

/// Symmetric product: the plain product recentred at x - (q/2) * frequency.
LogScaledMat2 symmetric_product(const SkewProduct& g, long q, double x);
LogScaledMat2c symmetric_product(const SkewProduct& g, long q, std::complex<double> x);

/// (1/N) log ||A^{*N}(x0)||_F.
double lyapunov(const SkewProduct& g, long n, double x0);
/// Average over an equispaced grid of starting points.
double lyapunov_sampled(const SkewProduct& g, long n, int samples);

/// Default orbit start (1-N)/2 * frequency, aligning the product with the
/// symmetric recentring.
double default_sign_count_start(const SkewProduct& g, long n);

/// Rot_N(G)/N: Rot_N is half the number of sign changes of the first
/// component of A^{*k}(x0) y0 over k = 1..N, plus 1/2 when the final first
/// component is exactly zero.  Exact rational.  Rejects factor kinds without
/// sign-counting semantics and A y0 = 0 seeds.
Rational rotation_sign_count(const SkewProduct& g, long n, Vec2 y0 = Vec2(1, 0));
Rational rotation_sign_count_from(const SkewProduct& g, long n, double x0,
                                  Vec2 y0 = Vec2(1, 0));

/// Continuous-angle rotation number Sigma_N(G)/N reported mod 1 in [0, 1).
/// The per-step lift is taken in [0, 2 pi).  Requires det > 0 along the
/// orbit; throws on a zero vector.
double rotation_lift(const SkewProduct& g, long n);

/// max over the grid of || S^-1 A0(x) S - A0(-x)^dagger || < tol.
bool is_reversible(const SkewProduct& g, int grid, double tol);
double reversibility_defect(const SkewProduct& g, int grid);

}  // namespace skewrg
