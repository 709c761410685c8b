#include "skewrg/zeros.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace skewrg {

namespace {

// Working point: exact value plus a running double approximation used only
// to prefilter sorts and window tests.
struct Pt {
  GoldenNumber g;
  double x;
};

double approx(const GoldenNumber& g) {
  return numerator(g.a).convert_to<double>() / denominator(g.a).convert_to<double>() +
         kAlpha * numerator(g.b).convert_to<double>() /
             denominator(g.b).convert_to<double>();
}

const GoldenNumber& inv_a3() {
  static const GoldenNumber v = GoldenNumber::inv_alpha_cubed();
  return v;
}
// s = alpha^2 / 2 = (1 - alpha) / 2
const GoldenNumber& half_shift() {
  static const GoldenNumber v{Rational(1, 2), Rational(-1, 2)};
  return v;
}
const GoldenNumber& full_shift() {
  static const GoldenNumber v{Rational(1), Rational(-1)};  // alpha^2
  return v;
}

// Sort by the double key, then repair ordering and merge duplicates exactly.
// Distinct points in these sets are separated far beyond double noise, so the
// exact comparator only ever runs on near-ties.
std::vector<Pt> sort_merge(std::vector<Pt> v) {
  std::sort(v.begin(), v.end(), [](const Pt& p, const Pt& q) { return p.x < q.x; });
  std::vector<Pt> out;
  out.reserve(v.size());
  for (auto& p : v) {
    if (!out.empty() && std::abs(out.back().x - p.x) < 1e-6) {
      const int c = compare(out.back().g, p.g);
      if (c == 0) continue;  // duplicate
      if (c > 0) std::swap(out.back(), p);  // repair a float mis-order
    }
    out.push_back(std::move(p));
  }
  return out;
}

std::vector<Pt> to_pts(const ZeroSet& z) {
  std::vector<Pt> v;
  v.reserve(z.points.size());
  for (const auto& g : z.points) v.push_back({g, approx(g)});
  return v;
}

ZeroSet to_set(std::vector<Pt> v) {
  ZeroSet z;
  z.points.reserve(v.size());
  for (auto& p : v) z.points.push_back(std::move(p.g));
  return z;
}

// One exact step on working vectors, with optional pruning to |x| <= w_keep
// (double prefilter with a unit of slack; retention is always safe).
void step_pts(std::vector<Pt>& bs, std::vector<Pt>& as, double w_keep) {
  const GoldenNumber& scale = inv_a3();
  const GoldenNumber& s = half_shift();
  const GoldenNumber& s2 = full_shift();
  const double keep = w_keep > 0 ? w_keep + 1.0 : 0.0;

  std::vector<Pt> nb, na;
  nb.reserve(bs.size() + 2 * as.size());
  na.reserve(2 * bs.size() + 3 * as.size());
  auto emit = [&](std::vector<Pt>& dst, const GoldenNumber& g) {
    const double x = approx(g);
    if (keep > 0 && std::abs(x) > keep) return;
    dst.push_back({g, x});
  };

  for (const auto& p : bs) {
    emit(nb, scale * p.g);
    emit(na, scale * (p.g - s));
    emit(na, scale * (p.g + s));
  }
  for (const auto& p : as) {
    emit(nb, scale * (p.g - s));
    emit(nb, scale * (p.g + s));
    emit(na, scale * (p.g - s2));
    emit(na, scale * p.g);
    emit(na, scale * (p.g + s2));
  }
  bs = sort_merge(std::move(nb));
  as = sort_merge(std::move(na));
}

// Closed-interval window with an exact test on the boundary band.
std::vector<Pt> window_pts(const std::vector<Pt>& v, const GoldenNumber& r,
                           double r_approx) {
  std::vector<Pt> out;
  for (const auto& p : v) {
    if (std::abs(p.x) > r_approx + 1e-9) continue;
    if (std::abs(p.x) > r_approx - 1e-9) {
      if (sign(p.g - r) > 0 || sign(p.g + r) < 0) continue;
    }
    out.push_back(p);
  }
  return out;
}

// Plain double window, used for intermediate harvests whose radius is not a
// contract boundary.
std::vector<Pt> window_pts(const std::vector<Pt>& v, double r) {
  std::vector<Pt> out;
  for (const auto& p : v)
    if (std::abs(p.x) <= r) out.push_back(p);
  return out;
}

}  // namespace

ZeroSet ZeroSet::from_points(std::vector<GoldenNumber> pts) {
  std::vector<Pt> v;
  v.reserve(pts.size());
  for (auto& g : pts) {
    const double x = approx(g);
    v.push_back({std::move(g), x});
  }
  return to_set(sort_merge(std::move(v)));
}

bool ZeroSet::contains(const GoldenNumber& x) const {
  const double xd = approx(x);
  auto it = std::lower_bound(points.begin(), points.end(), xd - 1e-6,
                             [](const GoldenNumber& g, double v) { return approx(g) < v; });
  for (; it != points.end() && approx(*it) < xd + 1e-6; ++it)
    if (*it == x) return true;
  return false;
}

bool ZeroSet::includes(const ZeroSet& sub) const {
  // merge walk on cached double keys; exact equality resolves near-ties
  size_t i = 0;
  std::vector<double> mine(points.size());
  for (size_t k = 0; k < points.size(); ++k) mine[k] = approx(points[k]);
  for (const auto& g : sub.points) {
    const double xd = approx(g);
    while (i < points.size() && mine[i] < xd - 1e-6) ++i;
    bool found = false;
    for (size_t j = i; j < points.size() && mine[j] < xd + 1e-6; ++j)
      if (points[j] == g) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

bool ZeroSet::is_symmetric() const {
  for (const auto& g : points)
    if (!contains(-g)) return false;
  return true;
}

ZeroPair zero_step(const ZeroPair& p) {
  auto bs = to_pts(p.B);
  auto as = to_pts(p.A);
  step_pts(bs, as, 0.0);
  return {to_set(std::move(bs)), to_set(std::move(as)), p.step_count + 1};
}

ZeroSet window(const ZeroSet& z, const GoldenNumber& r) {
  if (sign(r) <= 0) throw std::domain_error("window: radius must be positive");
  return to_set(window_pts(to_pts(z), r, approx(r)));
}

std::vector<GoldenNumber> gaps(const ZeroSet& z) {
  if (z.points.size() < 2)
    throw std::domain_error("gaps: need at least two points");
  std::vector<GoldenNumber> out;
  out.reserve(z.points.size() - 1);
  for (size_t i = 1; i < z.points.size(); ++i)
    out.push_back(z.points[i] - z.points[i - 1]);
  return out;
}

PeriodicOrbit run_until_periodic(const GoldenNumber& rho, long max_steps,
                                 double prune_window) {
  const RotationClass rc = classify_rotation_number(rho);
  if (rc.tag != RotationClass::Tag::PositivePeriodic)
    throw std::domain_error("run_until_periodic: rho is not positive periodic");
  if (prune_window <= 0)
    prune_window = 0.5 / (kAlpha * kAlpha * kAlpha) + 2.0;

  const GoldenNumber half(Rational(1, 2), Rational(0));
  std::vector<Pt> bs, as{{rho, approx(rho)}};

  PeriodicOrbit orbit;
  auto record = [&] {
    orbit.orbitB.push_back(to_set(window_pts(bs, half, 0.5)));
    orbit.orbitA.push_back(to_set(window_pts(as, half, 0.5)));
  };
  record();

  long n_found = 0;
  for (long k = 1; k <= max_steps; ++k) {
    step_pts(bs, as, prune_window);
    record();
    if (orbit.orbitA[k] == orbit.orbitA[0] && orbit.orbitB[k] == orbit.orbitB[0]) {
      n_found = k;
      break;
    }
  }
  if (n_found == 0)
    throw std::runtime_error("run_until_periodic: period not found");

  // Verify one more full period to rule out a spurious return.
  for (long k = 1; k <= n_found; ++k) {
    step_pts(bs, as, prune_window);
    record();
    const size_t i = orbit.orbitA.size() - 1;
    if (!(orbit.orbitA[i] == orbit.orbitA[i - n_found] &&
          orbit.orbitB[i] == orbit.orbitB[i - n_found]))
      throw std::runtime_error("run_until_periodic: period not found");
  }
  orbit.n = n_found;
  return orbit;
}

ZeroPair limit_zero_sets(const GoldenNumber& rho, long n, long t_max,
                         const GoldenNumber& window_radius) {
  const RotationClass rc = classify_rotation_number(rho);
  if (rc.tag != RotationClass::Tag::PositivePeriodic)
    throw std::domain_error("limit_zero_sets: rho is not positive periodic");
  if (n < 1 || t_max < 0) throw std::domain_error("limit_zero_sets: bad n or t_max");

  const double w_user = approx(window_radius);
  const double a3 = kAlpha * kAlpha * kAlpha;
  const double safe_factor = 0.5 - approx(rho);

  if (t_max > 0) {
    const double safe_final = safe_factor * std::pow(1.0 / a3, static_cast<double>(n * t_max));
    if (w_user > safe_final * (1 - 1e-9))
      throw std::invalid_argument(
          "limit_zero_sets: window exceeds the safe radius at t_max blocks");
  }

  std::vector<Pt> bs, as{{rho, approx(rho)}};
  ZeroPair harvest;
  harvest.A = to_set(window_pts(as, window_radius, w_user));

  for (long t = 1; t <= t_max; ++t) {
    // Points beyond 1/2 + w alpha^{3m} cannot reach the final window in the
    // m steps that remain after this block.
    const long steps_left = n * (t_max - t);
    const double keep =
        std::max(0.5 + w_user * std::pow(a3, static_cast<double>(steps_left)), 2.0);
    for (long j = 0; j < n; ++j) step_pts(bs, as, keep);

    const double safe_t = safe_factor * std::pow(1.0 / a3, static_cast<double>(n * t));
    ZeroPair cur;
    if (w_user <= safe_t * (1 - 1e-9)) {
      cur.B = to_set(window_pts(bs, window_radius, w_user));
      cur.A = to_set(window_pts(as, window_radius, w_user));
    } else {
      const double wt = safe_t * (1 - 1e-9);
      cur.B = to_set(window_pts(bs, wt));
      cur.A = to_set(window_pts(as, wt));
    }
    if (!(cur.A.includes(harvest.A) && cur.B.includes(harvest.B)))
      throw std::runtime_error("limit_zero_sets: monotonicity failed");
    harvest = std::move(cur);
    harvest.step_count = n * t;
  }
  return harvest;
}

}  // namespace skewrg
