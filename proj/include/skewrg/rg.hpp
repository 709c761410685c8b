// The renormalization transformations on pairs of skew-product maps: the
// triple composition step, the n-block operator with matrix scaling and
// sigma conjugacy, normalizations, iteration drivers with diagnostics, and
// direct product-form evaluation that bypasses series truncation.
#pragma once

#include "skewrg/cocycle.hpp"
#include "skewrg/factor.hpp"
#include "skewrg/golden.hpp"
#include "skewrg/taylor.hpp"

#include <complex>
#include <functional>
#include <optional>
#include <vector>

namespace skewrg {

struct RgOptions {
  long n = 1;  // period multiplier: one application composes 3n basic steps
  enum class LChoice { Identity, SPower, SPowerWithSigma };
  LChoice l_choice = LChoice::SPower;
  enum class Normalization { None, NormScaling, TraceScaling };
  Normalization normalization = Normalization::NormScaling;
  double target_b0 = 0.0;  // required nonzero for TraceScaling

  // optional exact log-determinant tracking for constant-determinant input
  bool track_logdet = false;
  double logdet_b0 = 0.0, logdet_a0 = 0.0;
};

/// Pair of symmetric-factor series with explicit frequencies; the composition
/// step changes frequencies (f, g) -> (2g - f, 2f - 3g), the golden-mean
/// self-similarity (1, alpha) -> alpha^3 (1, alpha).
struct FreqPairSeries {
  GoldenNumber freq_f, freq_g;
  MatrixSeries B, A;

  static FreqPairSeries from_pair(const PairH& p) {
    return {GoldenNumber::one(), GoldenNumber::alpha(), p.B, p.A};
  }
};

/// One composition step (F, G) -> (G F' G, G' F G' F G') with ' the
/// quasi-inverse; preserves reversibility (both words are palindromic).
FreqPairSeries c3(const FreqPairSeries& p);

/// Multipliers applied by normalize(): out = scale * component.
struct RenormScales {
  double b_scale = 1.0, a_scale = 1.0;
  double sigma = 0.0;
  double logdet_b = 0.0, logdet_a = 0.0;
};

/// n composition steps, then one argument scaling x -> alpha^{3n} x back onto
/// the input radii, the matrix conjugacy selected by l_choice, and the
/// normalization.  Scales and sigma are reported through `info`.
PairH r3n_series(const PairH& p, const RgOptions& opts, RenormScales* info = nullptr);

/// sigma with the c-entry of e^{-sigma S} A(x0) e^{sigma S} vanishing at
/// x0 = -alpha/2; safeguarded Newton from 0 in |sigma| <= 1, tolerance 1e-14.
/// Throws "sigma normalization failed" when no root lies in the bracket.
double sigma_solve(const PairH& p);

/// Applies the selected normalization; returns the scaled pair and fills the
/// applied multipliers.  TraceScaling follows M tr(B(0)) = target_b0 and
/// leaves A unscaled.
PairH normalize(const PairH& p, const RgOptions& opts, RenormScales* info = nullptr);

struct RgStepRecord {
  int step = 0;
  double pair_norm = 0;          // after normalization
  double b_scale = 1, a_scale = 1, sigma = 0;
  double distance_prev = -1;     // pair distance between successive normalized iterates
  double max_abs_det = 0;        // max |det A(x)| over the diagnostics window, from series
  double ratio_variance = 0;     // variance of c/a over the window centred at -alpha/2
  double tail_fraction = 0;      // worst entry tail fraction above degree N/2
  double logdet_a = 0, logdet_b = 0;  // exact track (valid when track_logdet)
};

struct RgTrajectory {
  std::vector<RgStepRecord> steps;
  PairH final;
};

/// Repeated r3n_series + diagnostics.  The diagnostics window is
/// |x - x0| <= 0.2 with 101 samples, x0 = -alpha/2.
RgTrajectory iterate_rg(const PairH& p0, int steps, const RgOptions& opts);

double ratio_variance(const MatrixSeries& a_part);

enum class PairComponent { B, A };

/// Direct evaluation of the symmetric factor of the k-times renormalized
/// pair at x, as the log-scaled product of the original factors; no series
/// truncation is involved.  F and G must commute (1-periodic factor for F's
/// unit translation).  The matrix conjugacy uses S^{nk} e^{sigma_total S}
/// when l_choice selects it.
LogScaledMat2c direct_factor(const SkewProduct& f, const SkewProduct& g, long n,
                             long k, std::complex<double> x,
                             PairComponent which = PairComponent::A,
                             RgOptions::LChoice l_choice = RgOptions::LChoice::SPower,
                             double sigma_total = 0.0);
LogScaledMat2 direct_factor(const SkewProduct& f, const SkewProduct& g, long n,
                            long k, double x,
                            PairComponent which = PairComponent::A,
                            RgOptions::LChoice l_choice = RgOptions::LChoice::SPower,
                            double sigma_total = 0.0);

/// Finite-difference estimate of the expansion rate of the transformation
/// across one application: ratio of d/d eps of the A-part a-entry at rho
/// between k+1 and k applications.  Throws "non-transversal family" when the
/// base derivative vanishes.
double unstable_eigenvalue(const std::function<PairH(double)>& family, double eps0,
                           double h, long k, double rho_x, const RgOptions& opts);

/// Exact power alpha^m as a GoldenNumber (m >= 0).
GoldenNumber alpha_power(long m);

}  // namespace skewrg
