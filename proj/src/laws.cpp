#include "ncprob/laws.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

#include <cmath>
#include <sstream>

#include "ncprob/cumulants.hpp"
#include "ncprob/errors.hpp"

namespace ncprob {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rat rat_from_double(double x) {
  if (!std::isfinite(x)) throw InvalidInputError("rat_from_double: non-finite value");
  int exp = 0;
  double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
  long long scaled = static_cast<long long>(std::ldexp(mant, 53));
  Rat r(scaled);
  int e = exp - 53;
  if (e > 0) r *= rat_pow(Rat(2), e);
  if (e < 0) r /= rat_pow(Rat(2), -e);
  return r;
}

// square root with nonnegative imaginary part (the branch that keeps
// G ~ 1/z and Im G < 0 on the upper half-plane)
std::complex<double> sqrt_upper(std::complex<double> w) {
  std::complex<double> r = std::sqrt(w);
  return r.imag() < 0 ? -r : r;
}

void require_domain(std::complex<double> z) {
  if (z.imag() < 1.0) throw DomainError("cauchy_eval: needs Im z >= 1");
}

}  // namespace

double integrate_adaptive(const std::function<double(double)>& f, double lo, double hi,
                          double absolute_tolerance) {
  // split at an interior 0 so densities with a kink at the origin keep the
  // non-smooth point at a panel endpoint
  double error = 0.0, value = 0.0;
  auto one_panel = [&](double a, double b) {
    double e = 0.0;
    double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, 15, absolute_tolerance * 1e-2, &e);
    if (e > absolute_tolerance / 2) {
      // Gauss-Kronrod error estimates stall on algebraic endpoint
      // singularities (square-root density edges); tanh-sinh handles those
      boost::math::quadrature::tanh_sinh<double> ts;
      double e2 = 0.0, l1 = 0.0;
      double v2 = ts.integrate(f, a, b, 1e-12, &e2, &l1);
      if (e2 * l1 < e) {  // tanh_sinh reports relative error
        v = v2;
        e = e2 * l1;
      }
    }
    error += e;
    value += v;
  };
  if (lo < 0.0 && 0.0 < hi) {
    one_panel(lo, 0.0);
    one_panel(0.0, hi);
  } else {
    one_panel(lo, hi);
  }
  if (error > absolute_tolerance) {
    std::ostringstream os;
    os << "quadrature error estimate " << error << " above the requested " << absolute_tolerance;
    throw AccuracyError(os.str(), error);
  }
  return value;
}

LawDescriptor LawDescriptor::atomic(AtomicMeasure mu) {
  LawDescriptor law;
  law.kind_ = Kind::Atomic;
  law.name_ = "atomic";
  law.measure_ = std::make_shared<AtomicMeasure>(std::move(mu));
  law.support_lo_ = law.measure_->atoms().front().to_double();
  law.support_hi_ = law.measure_->atoms().back().to_double();
  return law;
}

LawDescriptor LawDescriptor::semicircle(double mean, double variance) {
  if (variance <= 0) throw InvalidInputError("semicircle: variance must be positive");
  LawDescriptor law;
  law.kind_ = Kind::Semicircle;
  law.name_ = "semicircle";
  law.mean_ = mean;
  law.variance_ = variance;
  double s = std::sqrt(variance);
  law.support_lo_ = mean - 2 * s;
  law.support_hi_ = mean + 2 * s;
  return law;
}

LawDescriptor LawDescriptor::arcsine(double mean, double variance) {
  if (variance <= 0) throw InvalidInputError("arcsine: variance must be positive");
  LawDescriptor law;
  law.kind_ = Kind::Arcsine;
  law.name_ = "arcsine";
  law.mean_ = mean;
  law.variance_ = variance;
  double s = std::sqrt(variance);
  law.support_lo_ = mean - std::sqrt(2.0) * s;
  law.support_hi_ = mean + std::sqrt(2.0) * s;
  return law;
}

LawDescriptor LawDescriptor::bernoulli_sym() {
  LawDescriptor law;
  law.kind_ = Kind::BernoulliSym;
  law.name_ = "bernoulli";
  law.support_lo_ = -1.0;
  law.support_hi_ = 1.0;
  return law;
}

LawDescriptor LawDescriptor::normal(double mean, double variance) {
  if (variance <= 0) throw InvalidInputError("normal: variance must be positive");
  LawDescriptor law;
  law.kind_ = Kind::Normal;
  law.name_ = "normal";
  law.mean_ = mean;
  law.variance_ = variance;
  // tail beyond 12 standard deviations is ~1e-32, far below quadrature tolerance
  double s = std::sqrt(variance);
  law.support_lo_ = mean - 12 * s;
  law.support_hi_ = mean + 12 * s;
  return law;
}

LawDescriptor LawDescriptor::density(std::function<double(double)> pdf, double lo, double hi,
                                     std::string name) {
  if (!(lo < hi)) throw InvalidInputError("density: empty support interval");
  LawDescriptor law;
  law.kind_ = Kind::Density;
  law.name_ = std::move(name);
  law.pdf_ = std::move(pdf);
  law.support_lo_ = lo;
  law.support_hi_ = hi;
  double mass = integrate_adaptive(law.pdf_, lo, hi, 1e-10);
  if (std::abs(mass - 1.0) > 1e-10)
    throw InvalidInputError("density \"" + law.name_ + "\" integrates to " +
                            std::to_string(mass) + ", not 1");
  return law;
}

LawDescriptor LawDescriptor::from_moments(const MomentSeq& m) {
  if (m.order() < 1) throw InvalidInputError("from_moments: empty moment sequence");
  LawDescriptor law;
  law.kind_ = Kind::MomentsOnly;
  law.name_ = "moments";
  int M = m.order();
  int nb = (M + 1) / 2;
  int ng = M / 2;
  if (nb < 1) nb = 1;
  law.jacobi_ = std::make_shared<JacobiParams>(jacobi_from_moments(m, nb, ng));
  law.moments_ = std::make_shared<MomentSeq>(m);
  return law;
}

LawDescriptor LawDescriptor::tetilla() {
  // supported on |t| <= sqrt((11+5*sqrt(5))/2); value 1/pi at t = 0
  double T = std::sqrt((11.0 + 5.0 * std::sqrt(5.0)) / 2.0);
  auto pdf = [](double t) {
    if (t == 0.0) return 1.0 / kPi;
    double t2 = t * t;
    double inner = t2 * (1.0 + 11.0 * t2 - t2 * t2) / 27.0;
    if (inner < 0) inner = 0;  // support boundary rounding
    double h = std::cbrt((18.0 * t2 + 1.0) / 27.0 + std::sqrt(inner));
    double v = std::sqrt(3.0) / (2.0 * kPi * std::abs(t)) * (h - (3.0 * t2 + 1.0) / (9.0 * h));
    return v > 0 ? v : 0.0;
  };
  return density(pdf, -T, T, "tetilla");
}

const AtomicMeasure& LawDescriptor::atomic_measure() const {
  if (!measure_) throw InvalidInputError("law has no atomic data");
  return *measure_;
}

const MomentSeq& LawDescriptor::moment_data() const {
  if (!moments_) throw InvalidInputError("law has no moment data");
  return *moments_;
}

const JacobiParams& LawDescriptor::jacobi_data() const {
  if (!jacobi_) throw InvalidInputError("law has no Jacobi data");
  return *jacobi_;
}

bool LawDescriptor::has_density() const {
  switch (kind_) {
    case Kind::Semicircle:
    case Kind::Arcsine:
    case Kind::Normal:
    case Kind::Density:
      return true;
    default:
      return false;
  }
}

double LawDescriptor::density_at(double x) const {
  double s = std::sqrt(variance_);
  double u = (x - mean_) / s;
  switch (kind_) {
    case Kind::Semicircle: {
      double arg = 4.0 - u * u;
      return arg <= 0 ? 0.0 : std::sqrt(arg) / (2.0 * kPi * s);
    }
    case Kind::Arcsine: {
      double arg = 2.0 - u * u;
      return arg <= 0 ? 0.0 : 1.0 / (kPi * std::sqrt(arg) * s);
    }
    case Kind::Normal:
      return std::exp(-u * u / 2.0) / (std::sqrt(2.0 * kPi) * s);
    case Kind::Density:
      return (x < support_lo_ || x > support_hi_) ? 0.0 : pdf_(x);
    default:
      throw InvalidInputError("law \"" + name_ + "\" has no density");
  }
}

std::complex<double> cauchy_eval(const LawDescriptor& law, std::complex<double> z) {
  require_domain(z);
  using Kind = LawDescriptor::Kind;
  switch (law.kind()) {
    case Kind::Atomic:
      return law.atomic_measure().cauchy().eval(z);
    case Kind::Semicircle: {
      double s = std::sqrt(law.variance());
      std::complex<double> u = (z - law.mean()) / s;
      return (u - sqrt_upper(u * u - 4.0)) / (2.0 * s);
    }
    case Kind::Arcsine: {
      double s = std::sqrt(law.variance());
      std::complex<double> u = (z - law.mean()) / s;
      return 1.0 / (sqrt_upper(u * u - 2.0) * s);
    }
    case Kind::BernoulliSym:
      return z / (z * z - 1.0);
    case Kind::Normal:
    case Kind::Density: {
      double a = z.real(), b = z.imag();
      auto re = [&](double x) {
        double dx = a - x;
        return law.density_at(x) * dx / (dx * dx + b * b);
      };
      auto im = [&](double x) {
        double dx = a - x;
        return law.density_at(x) / (dx * dx + b * b);
      };
      double re_val = integrate_adaptive(re, law.support_lo(), law.support_hi(), 1e-11);
      double im_val = integrate_adaptive(im, law.support_lo(), law.support_hi(), 1e-11);
      return {re_val, -b * im_val};
    }
    case Kind::MomentsOnly: {
      const JacobiParams& J = law.jacobi_data();
      if (J.gamma.size() == J.beta.size())
        return cauchy_cf_eval(J, z, 1.0 / z);  // point-mass tail engages the last gamma
      return cauchy_cf_eval(J, z);
    }
  }
  throw InvalidInputError("cauchy_eval: unknown law kind");
}

double weak_distance(const LawDescriptor& a, const LawDescriptor& b, const GridSpec& grid) {
  if (grid.points < 2) throw InvalidInputError("weak_distance: grid needs at least 2 points");
  if (!(grid.half_width > 0)) throw InvalidInputError("weak_distance: grid half-width must be positive");
  double best = 0.0;
  for (int j = 0; j < grid.points; ++j) {
    double x = -grid.half_width + 2.0 * grid.half_width * j / (grid.points - 1);
    std::complex<double> z(x, 1.0);
    double d = std::abs(cauchy_eval(a, z) - cauchy_eval(b, z));
    if (d > best) best = d;
  }
  return best;
}

std::vector<double> quadrature_moments(const LawDescriptor& law, int order,
                                       double absolute_tolerance) {
  if (order < 1) throw InvalidInputError("quadrature_moments: order must be >= 1");
  if (!law.has_density())
    throw InvalidInputError("quadrature_moments: law \"" + law.name() + "\" has no density");
  std::vector<double> out;
  out.reserve(order);
  for (int n = 1; n <= order; ++n) {
    auto f = [&](double x) { return std::pow(x, n) * law.density_at(x); };
    out.push_back(integrate_adaptive(f, law.support_lo(), law.support_hi(), absolute_tolerance));
  }
  return out;
}

MomentSeq exact_moment_sequence(const LawDescriptor& law, int order) {
  using Kind = LawDescriptor::Kind;
  auto gaussian_moments = [&](Flavor flavor) {
    std::vector<Rat> c(order, Rat(0));
    c[0] = rat_from_double(law.mean());
    if (order >= 2) c[1] = rat_from_double(law.variance());
    return moments_from_cumulants(CumulantSeq(flavor, std::move(c)), order);
  };
  switch (law.kind()) {
    case Kind::Atomic:
      return law.atomic_measure().moments(order);
    case Kind::Semicircle:
      return gaussian_moments(Flavor::Free);
    case Kind::Arcsine:
      return gaussian_moments(Flavor::Monotone);
    case Kind::Normal:
      return gaussian_moments(Flavor::Classical);
    case Kind::BernoulliSym: {
      std::vector<Rat> c(order, Rat(0));
      if (order >= 2) c[1] = Rat(1);
      return moments_from_cumulants(CumulantSeq(Flavor::Boolean, std::move(c)), order);
    }
    case Kind::MomentsOnly:
      return law.moment_data().truncated(order);
    case Kind::Density:
      break;
  }
  throw InvalidInputError("exact_moment_sequence: law \"" + law.name() +
                          "\" has no exact moments");
}

}  // namespace ncprob
