// Exact arithmetic in Q[alpha] for the inverse golden mean, Fibonacci and
// Pisano number theory, and classification of rotation numbers.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace skewrg {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// alpha = (sqrt(5)-1)/2 as a double, for numeric code.
inline constexpr double kAlpha = 0.61803398874989484820458683436563811772;

/// Element a + b*alpha of Q[alpha].  Products reduce with alpha^2 = 1 - alpha,
/// so the (a, b) representation is closed and unique.
struct GoldenNumber {
  Rational a;  // coefficient of 1
  Rational b;  // coefficient of alpha

  GoldenNumber() = default;
  GoldenNumber(Rational a0, Rational b0) : a(std::move(a0)), b(std::move(b0)) {}
  explicit GoldenNumber(long n) : a(n), b(0) {}

  static GoldenNumber alpha() { return {Rational(0), Rational(1)}; }
  static GoldenNumber one() { return {Rational(1), Rational(0)}; }
  static GoldenNumber zero() { return {Rational(0), Rational(0)}; }
  /// alpha^-1 = 1 + alpha.
  static GoldenNumber inv_alpha() { return {Rational(1), Rational(1)}; }
  /// alpha^-3 = 3 + 2*alpha, the scale of one zero-propagation step.
  static GoldenNumber inv_alpha_cubed() { return {Rational(3), Rational(2)}; }

  bool is_zero() const { return a == 0 && b == 0; }

  friend GoldenNumber operator+(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a + y.a, x.b + y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a - y.a, x.b - y.b};
  }
  friend GoldenNumber operator-(const GoldenNumber& x) { return {-x.a, -x.b}; }
  // (a1 + b1 t)(a2 + b2 t) mod t^2 = 1 - t.
  friend GoldenNumber operator*(const GoldenNumber& x, const GoldenNumber& y) {
    return {x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a - x.b * y.b};
  }
  GoldenNumber& operator+=(const GoldenNumber& y) { a += y.a; b += y.b; return *this; }
  GoldenNumber& operator-=(const GoldenNumber& y) { a -= y.a; b -= y.b; return *this; }
  GoldenNumber& operator*=(const GoldenNumber& y) { *this = *this * y; return *this; }

  friend bool operator==(const GoldenNumber& x, const GoldenNumber& y) {
    return x.a == y.a && x.b == y.b;
  }
  friend bool operator!=(const GoldenNumber& x, const GoldenNumber& y) {
    return !(x == y);
  }
};

/// Exact sign of a + b*alpha.  Mixed-sign coefficients are resolved by
/// comparing (2a-b)^2 against 5 b^2, using 2*alpha = sqrt(5) - 1; no floating
/// point is involved.
int sign(const GoldenNumber& x);

/// sign(x - y); total order on Q[alpha].
inline int compare(const GoldenNumber& x, const GoldenNumber& y) { return sign(x - y); }
inline bool operator<(const GoldenNumber& x, const GoldenNumber& y) { return compare(x, y) < 0; }
inline bool operator<=(const GoldenNumber& x, const GoldenNumber& y) { return compare(x, y) <= 0; }
inline bool operator>(const GoldenNumber& x, const GoldenNumber& y) { return compare(x, y) > 0; }
inline bool operator>=(const GoldenNumber& x, const GoldenNumber& y) { return compare(x, y) >= 0; }

inline GoldenNumber abs(const GoldenNumber& x) { return sign(x) < 0 ? -x : x; }

/// Round to double through a 50-digit intermediate, so the result is the
/// correctly rounded value of a + b*(sqrt(5)-1)/2 to well within 2 ulp.
double to_double(const GoldenNumber& x);

/// k-th Fibonacci number p_k, with p_1 = p_2 = 1.  Companion q_k = p_{k+1}.
/// Unbounded integers; no overflow is possible.
BigInt fibonacci(long k);

/// Period of the Fibonacci sequence modulo v (v >= 2).
long pisano_period(long v);

struct RotationClass {
  enum class Tag { PositivePeriodic, NegativePeriodic, SpecialGap, Other };
  Tag tag = Tag::Other;
  // Canonical representation rho = w/v + (u/v) alpha with gcd(u,v,w) = 1,
  // filled for the periodic tags (for NegativePeriodic it describes rho + 1/2).
  BigInt u = 0, v = 0, w = 0;
};

/// Classification of a rotation number in [-1/2, 1/2]:
///   - PositivePeriodic: rho = w/v + (u/v) alpha, v > 2, gcd(u,v,w) = 1 and
///     |u/v - (w/v) alpha| <= 1/2;
///   - NegativePeriodic: rho in [-1/2, 0) with rho + 1/2 positive periodic;
///   - SpecialGap: rho in {0, alpha/2, 1/2}, excluded from the periodic class
///     by the v > 2 requirement;
///   - Other: everything else.
/// Throws std::domain_error outside [-1/2, 1/2].
RotationClass classify_rotation_number(const GoldenNumber& rho);

/// Canonical (u, v, w) with rho = w/v + (u/v) alpha, v >= 1, gcd(u,v,w) = 1.
void canonical_uvw(const GoldenNumber& rho, BigInt& u, BigInt& v, BigInt& w);

/// Parses "w/v+u/v*a" style exact input: terms are rationals, optionally
/// multiplied by the formal unit "a" (the inverse golden mean).
/// Examples: "1/4", "a/2", "-1/2+a", "3/4-1/2*a".
GoldenNumber parse_golden(const std::string& text);

/// "p/q" with the sign on the numerator; q always printed.
std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& text);

std::string to_string(const GoldenNumber& x);

}  // namespace skewrg
