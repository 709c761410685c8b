#include "skewrg/golden.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <cctype>

namespace skewrg {

namespace {
using Float50 = boost::multiprecision::cpp_bin_float_50;

int sign_rational(const Rational& r) {
  if (r == 0) return 0;
  return r > 0 ? 1 : -1;
}
}  // namespace

int sign(const GoldenNumber& x) {
  const int sa = sign_rational(x.a);
  const int sb = sign_rational(x.b);
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // 2x = (2a - b) + b*sqrt(5); compare (2a-b)^2 against 5 b^2.
  const Rational u = 2 * x.a - x.b;
  const Rational w = x.b;
  const int su = sign_rational(u);
  const int sw = sign_rational(w);
  if (su == 0) return sw;
  if (su == sw) return su;
  const Rational lhs = u * u;
  const Rational rhs = 5 * w * w;
  if (lhs == rhs)
    throw std::logic_error("golden sign: sqrt(5) cannot be rational");
  const int big = lhs > rhs ? su : sw;
  return big;
}

double to_double(const GoldenNumber& x) {
  static const Float50 alpha50 = (sqrt(Float50(5)) - 1) / 2;
  const Float50 v = Float50(x.a) + Float50(x.b) * alpha50;
  return v.convert_to<double>();
}

BigInt fibonacci(long k) {
  if (k < 1) throw std::domain_error("fibonacci: k must be >= 1");
  BigInt p = 1, q = 1;  // p_1, p_2
  for (long i = 1; i < k; ++i) {
    BigInt next = p + q;
    p = q;
    q = next;
  }
  return p;
}

long pisano_period(long v) {
  if (v < 2) throw std::domain_error("pisano_period: v must be >= 2");
  long a = 1 % v, b = 1 % v;  // p_1, p_2 mod v
  long period = 0;
  do {
    long next = (a + b) % v;
    a = b;
    b = next;
    ++period;
  } while (!(a == 1 % v && b == 1 % v));
  return period;
}

void canonical_uvw(const GoldenNumber& rho, BigInt& u, BigInt& v, BigInt& w) {
  const BigInt da = denominator(rho.a);
  const BigInt db = denominator(rho.b);
  v = lcm(da, db);
  w = numerator(rho.a) * (v / da);
  u = numerator(rho.b) * (v / db);
  BigInt g = gcd(gcd(abs(u), abs(w)), v);
  if (g > 1) {
    u /= g;
    v /= g;
    w /= g;
  }
}

RotationClass classify_rotation_number(const GoldenNumber& rho) {
  const GoldenNumber half(Rational(1, 2), Rational(0));
  if (sign(rho + half) < 0 || sign(rho - half) > 0)
    throw std::domain_error("classify_rotation_number: rho outside [-1/2, 1/2]");

  RotationClass out;
  const GoldenNumber half_alpha(Rational(0), Rational(1, 2));
  if (rho.is_zero() || rho == half_alpha || rho == half) {
    out.tag = RotationClass::Tag::SpecialGap;
    return out;
  }

  auto positive_test = [](const GoldenNumber& r, RotationClass& rc) {
    if (sign(r) < 0) return false;
    BigInt u, v, w;
    canonical_uvw(r, u, v, w);
    if (v <= 2) return false;
    // |u/v - (w/v) alpha| <= 1/2, exactly.
    const GoldenNumber t(Rational(u, v), Rational(-w, v));
    const GoldenNumber half(Rational(1, 2), Rational(0));
    if (sign(t + half) < 0 || sign(t - half) > 0) return false;
    rc.u = u;
    rc.v = v;
    rc.w = w;
    return true;
  };

  if (sign(rho) > 0) {
    if (positive_test(rho, out)) out.tag = RotationClass::Tag::PositivePeriodic;
    return out;
  }
  if (positive_test(rho + half, out)) out.tag = RotationClass::Tag::NegativePeriodic;
  return out;
}

std::string format_rational(const Rational& r) {
  return numerator(r).str() + "/" + denominator(r).str();
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rational(BigInt(text));
    const BigInt num(text.substr(0, slash));
    const BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("parse_rational: bad input '" + text + "'");
  }
}

GoldenNumber parse_golden(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw std::invalid_argument("parse_golden: empty input");

  GoldenNumber out;
  size_t pos = 0;
  while (pos < s.size()) {
    int sgn = 1;
    if (s[pos] == '+' || s[pos] == '-') {
      sgn = s[pos] == '-' ? -1 : 1;
      ++pos;
    }
    size_t end = pos;
    while (end < s.size() && s[end] != '+' && s[end] != '-') ++end;
    std::string term = s.substr(pos, end - pos);
    if (term.empty()) throw std::invalid_argument("parse_golden: empty term in '" + text + "'");
    pos = end;

    bool is_alpha = false;
    // accept "a", "r*a", "a/q" (1/q times alpha)
    if (term == "a") {
      is_alpha = true;
      term = "1";
    } else if (term.size() > 2 && term.compare(term.size() - 2, 2, "*a") == 0) {
      is_alpha = true;
      term = term.substr(0, term.size() - 2);
    } else if (term.size() > 2 && term.compare(0, 2, "a/") == 0) {
      is_alpha = true;
      term = "1/" + term.substr(2);
    }
    Rational r = parse_rational(term);
    if (sgn < 0) r = -r;
    if (is_alpha)
      out.b += r;
    else
      out.a += r;
  }
  return out;
}

std::string to_string(const GoldenNumber& x) {
  return format_rational(x.a) + (sign_rational(x.b) < 0 ? "" : "+") +
         format_rational(x.b) + "*a";
}

}  // namespace skewrg
