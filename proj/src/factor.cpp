#include "skewrg/factor.hpp"

#include "skewrg/taylor.hpp"

#include <stdexcept>

namespace skewrg {

std::complex<double> Potential::operator()(std::complex<double> x) const {
  if (kind != Kind::Cosine)
    throw std::domain_error("potential: complex evaluation needs the cosine kind");
  return -2.0 * std::cos(2.0 * M_PI * x);
}

namespace {
template <typename Scalar>
Mat2T<Scalar> eval_factor(const FactorFunction& f, Scalar x) {
  Mat2T<Scalar> m;
  switch (f.kind) {
    case FactorFunction::Kind::Schrodinger: {
      const Scalar v = f.potential(Scalar(f.phase) + x);
      m << Scalar(f.lambda) * v - Scalar(f.energy), Scalar(-1), Scalar(1), Scalar(0);
      return m;
    }
    case FactorFunction::Kind::ScaledSchrodinger: {
      const Scalar v = f.potential(Scalar(f.phase) + x);
      m << v - Scalar(f.epsilon), Scalar(-f.delta), Scalar(f.delta), Scalar(0);
      return m;
    }
    case FactorFunction::Kind::Rank1Scalar: {
      Scalar s;
      if constexpr (std::is_same_v<Scalar, double>) {
        s = f.scalar(x);
      } else {
        if (!f.scalar_complex)
          throw std::domain_error("rank1 factor: no complex evaluator");
        s = f.scalar_complex(x);
      }
      return s * f.rank1.cast<Scalar>();
    }
    case FactorFunction::Kind::TaylorMatrix: {
      if (!f.series) throw std::logic_error("taylor factor: empty series");
      return eval(*f.series, x);
    }
  }
  throw std::logic_error("factor: unknown kind");
}
}  // namespace

Mat2 FactorFunction::operator()(double x) const { return eval_factor<double>(*this, x); }
Mat2c FactorFunction::operator()(std::complex<double> x) const {
  return eval_factor<std::complex<double>>(*this, x);
}

double FactorFunction::det_value() const {
  switch (kind) {
    case Kind::Schrodinger: return 1.0;
    case Kind::ScaledSchrodinger: return delta * delta;
    default:
      throw std::domain_error("det_value: not constant for this factor kind");
  }
}

FactorFunction FactorFunction::almost_mathieu(double lambda, double energy, double phase) {
  FactorFunction f;
  f.kind = Kind::Schrodinger;
  f.lambda = lambda;
  f.energy = energy;
  f.phase = phase;
  return f;
}

FactorFunction FactorFunction::schrodinger(double lambda, double energy, double phase,
                                           Potential v) {
  FactorFunction f = almost_mathieu(lambda, energy, phase);
  f.potential = std::move(v);
  return f;
}

FactorFunction FactorFunction::scaled_schrodinger(double delta, double epsilon,
                                                  double phase, Potential v) {
  FactorFunction f;
  f.kind = Kind::ScaledSchrodinger;
  f.delta = delta;
  f.epsilon = epsilon;
  f.phase = phase;
  f.potential = std::move(v);
  return f;
}

FactorFunction FactorFunction::rank1(std::function<double(double)> plain, Mat2 a0) {
  FactorFunction f;
  f.kind = Kind::Rank1Scalar;
  f.scalar = std::move(plain);
  f.rank1 = a0;
  return f;
}

FactorFunction FactorFunction::constant(Mat2 m0) {
  FactorFunction f;
  f.kind = Kind::Rank1Scalar;
  f.scalar = [](double) { return 1.0; };
  f.scalar_complex = [](std::complex<double>) { return std::complex<double>(1.0); };
  f.rank1 = m0;
  return f;
}

FactorFunction FactorFunction::limit_rank1(double epsilon) {
  FactorFunction f;
  f.kind = Kind::Rank1Scalar;
  const double shift = kAlpha / 2;
  f.scalar = [epsilon, shift](double x) {
    return -epsilon - 2.0 * std::cos(2.0 * M_PI * (x + shift));
  };
  f.scalar_complex = [epsilon, shift](std::complex<double> x) {
    return -epsilon - 2.0 * std::cos(2.0 * M_PI * (x + shift));
  };
  f.rank1 = (Mat2() << 1, 0, 0, 0).finished();
  return f;
}

FactorFunction FactorFunction::taylor(std::shared_ptr<const MatrixSeries> s) {
  FactorFunction f;
  f.kind = Kind::TaylorMatrix;
  f.series = std::move(s);
  return f;
}

}  // namespace skewrg
