// Exact dynamics of zero sets under renormalization, windowing, gap
// diagnostics, periodicity detection, and construction of the limit zero
// sets.  All set logic is exact in Q[alpha]; floats only prefilter.
#pragma once

#include "skewrg/golden.hpp"

#include <vector>

namespace skewrg {

/// Finite set of exact points, sorted strictly increasing.
struct ZeroSet {
  std::vector<GoldenNumber> points;

  ZeroSet() = default;
  /// Sorts and merges duplicates.
  static ZeroSet from_points(std::vector<GoldenNumber> pts);

  size_t size() const { return points.size(); }
  bool empty() const { return points.empty(); }
  bool contains(const GoldenNumber& x) const;
  bool includes(const ZeroSet& sub) const;
  /// Closed under t -> -t.
  bool is_symmetric() const;

  friend bool operator==(const ZeroSet& x, const ZeroSet& y) {
    return x.points == y.points;
  }
};

struct ZeroPair {
  ZeroSet B, A;
  long step_count = 0;
};

/// One zero-propagation step, exact:
///   B~ = alpha^-3 ( B  u  (A - s)  u  (A + s) )
///   A~ = alpha^-3 ( (B - s) u (B + s) u (A - 2s) u A u (A + 2s) )
/// with s = alpha^2 / 2.  Duplicates merged.
ZeroPair zero_step(const ZeroPair& p);

/// Exact intersection with the closed interval [-r, r].
ZeroSet window(const ZeroSet& z, const GoldenNumber& r);

/// Consecutive differences; requires at least 2 points.
std::vector<GoldenNumber> gaps(const ZeroSet& z);

struct PeriodicOrbit {
  long n = 0;                       // fundamental period of the windowed states
  std::vector<ZeroSet> orbitA;      // windowed A sets, steps 0..detection end
  std::vector<ZeroSet> orbitB;      // windowed B sets
};

/// Iterates zero_step from B = {}, A = {rho}, tracking the window [-1/2, 1/2]
/// of both sets, and returns the least n > 0 with state(k + n) = state(k)
/// verified over the whole recorded orbit.  Points are pruned outside
/// [-prune_window, prune_window]; the default is far beyond the re-entry
/// threshold of the affine maps.  Requires rho positive periodic; throws
/// "period not found" if no period shows up within max_steps.
PeriodicOrbit run_until_periodic(const GoldenNumber& rho, long max_steps,
                                 double prune_window = 0.0);

/// Truncation of the invariant limit sets: runs the zero dynamics in blocks
/// of n steps, harvesting the window [-W, W] at every block, where W is the
/// user radius capped by the exact safe radius alpha^{-3nt} (1/2 - rho) inside
/// which the finite orbit agrees with the periodized one.  Verifies monotone
/// inclusion of consecutive harvests ("monotonicity failed" otherwise).
/// Returns the final harvested pair; step_count = n * t_max.
ZeroPair limit_zero_sets(const GoldenNumber& rho, long n, long t_max,
                         const GoldenNumber& window_radius);

}  // namespace skewrg
