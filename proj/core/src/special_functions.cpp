#include "betaorder/special_functions.hpp"

#include <math.h>  // lgamma_r

#include <cmath>
#include <limits>
#include <string>

#include "betaorder/errors.hpp"

namespace betaorder::special {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;
// Continued fractions and series stop once a step changes the result by less than this.
constexpr double kWorkingPrecision = 2.0 * kEps;

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(what) + " must be a positive finite number");
  }
}

void require_unit(double v, const char* what) {
  if (!(v >= 0.0 && v <= 1.0)) throw DomainError(std::string(what) + " must lie in [0, 1]");
}

[[noreturn]] void fail_convergence(const char* routine, double residual, double lo = 0.0,
                                   double hi = 0.0) {
  throw ConvergenceError(std::string(routine) + " did not converge (residual " +
                             std::to_string(residual) + ")",
                         residual, lo, hi);
}

// Modified Lentz evaluation of the incomplete beta continued fraction.
double beta_continued_fraction(double a, double b, double x, const Accuracy& acc) {
  const double qab = a + b;
  const double qap = a + 1.0;
  const double qam = a - 1.0;
  double c = 1.0;
  double d = 1.0 - qab * x / qap;
  if (std::fabs(d) < kTiny) d = kTiny;
  d = 1.0 / d;
  double h = d;
  double residual = 1.0;
  for (int m = 1; m <= acc.max_iter; ++m) {
    const double m2 = 2.0 * m;
    double aa = m * (b - m) * x / ((qam + m2) * (a + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    h *= d * c;
    aa = -(a + m) * (qab + m) * x / ((a + m2) * (qap + m2));
    d = 1.0 + aa * d;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = 1.0 + aa / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    residual = std::fabs(del - 1.0);
    if (residual <= kWorkingPrecision) return h;
  }
  if (residual <= acc.rel_tol) return h;
  fail_convergence("reg_inc_beta continued fraction", residual);
}

// Series for P(a, x), valid for x < a + 1; returns the sum without the prefactor.
double gamma_series(double a, double x, const Accuracy& acc) {
  double ap = a;
  double del = 1.0 / a;
  double sum = del;
  for (int n = 1; n <= acc.max_iter; ++n) {
    ap += 1.0;
    del *= x / ap;
    sum += del;
    if (std::fabs(del) <= std::fabs(sum) * kWorkingPrecision) return sum;
  }
  const double residual = std::fabs(del / sum);
  if (residual <= acc.rel_tol) return sum;
  fail_convergence("reg_inc_gamma series", residual);
}

// Continued fraction for Q(a, x), valid for x >= a + 1; without the prefactor.
double gamma_continued_fraction(double a, double x, const Accuracy& acc) {
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  double residual = 1.0;
  for (int i = 1; i <= acc.max_iter; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::fabs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    residual = std::fabs(del - 1.0);
    if (residual <= kWorkingPrecision) return h;
  }
  if (residual <= acc.rel_tol) return h;
  fail_convergence("reg_inc_gamma continued fraction", residual);
}

double beta_log_density(double x, double a, double b, double log_b) {
  return (a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - log_b;
}

// Safeguarded Newton iteration for an increasing function phi on [lo, hi] with
// phi(lo) <= 0 <= phi(hi). `eval` returns {phi(t), phi'(t)}.
template <class Eval>
double bracketed_newton(Eval&& eval, double lo, double hi, double t, const Accuracy& acc,
                        const char* routine) {
  if (!(t > lo && t < hi)) t = 0.5 * (lo + hi);
  for (int it = 0; it < acc.max_iter; ++it) {
    const auto [phi, dphi] = eval(t);
    if (phi == 0.0) return t;
    if (phi < 0.0) {
      lo = t;
    } else {
      hi = t;
    }
    double next = t - phi / dphi;
    if (!std::isfinite(next) || !(next > lo && next < hi)) next = 0.5 * (lo + hi);
    const double step = std::fabs(next - t);
    t = next;
    if (step <= 4.0 * kEps * std::max(1.0, std::fabs(t)) || hi - lo <= 4.0 * kEps * std::max(1.0, std::fabs(t))) {
      return t;
    }
  }
  fail_convergence(routine, hi - lo, lo, hi);
}

// x with I_x(a, b) = u for 0 < u <= 1/2, solved in t = log x so that the
// power-law behaviour near zero becomes linear.
double beta_lower_quantile(double u, double a, double b, const Accuracy& acc) {
  const double log_b = log_beta(a, b);
  const double log_u = std::log(u);
  auto eval = [&](double t) {
    const double x = std::exp(t);
    const Tails tails = reg_inc_beta_tails(x, a, b, acc);
    const double lower = tails.lower;
    if (!(lower > 0.0)) return std::pair{-std::numeric_limits<double>::infinity(), 1.0};
    const double phi = std::log(lower) - log_u;
    const double dphi = std::exp(std::log(x) + beta_log_density(x, a, b, log_b)) / lower;
    return std::pair{phi, dphi};
  };

  // Leading-order behaviour I_x ~ x^a / (a B(a, b)).
  double t0 = (log_u + std::log(a) + log_b) / a;
  if (!std::isfinite(t0) || t0 >= 0.0) t0 = std::log(0.5);

  double hi = 0.0;
  double lo = t0;
  double step = 1.0;
  // Walk down until the lower end brackets the root.
  while (eval(lo).first > 0.0) {
    hi = lo;
    lo -= step;
    step *= 2.0;
    if (lo < std::log(std::numeric_limits<double>::denorm_min())) return 0.0;
  }
  return std::exp(bracketed_newton(eval, lo, hi, t0, acc, "inv_reg_inc_beta"));
}

double gamma_log_density(double x, double shape) {
  return (shape - 1.0) * std::log(x) - x - log_gamma(shape);
}

// x with P(shape, x) = u for 0 < u <= 1/2, solved in t = log x.
double gamma_lower_quantile(double u, double shape, const Accuracy& acc) {
  const double log_u = std::log(u);
  auto eval = [&](double t) {
    const double x = std::exp(t);
    const Tails tails = reg_inc_gamma_tails(x, shape, acc);
    if (!(tails.lower > 0.0)) return std::pair{-std::numeric_limits<double>::infinity(), 1.0};
    const double phi = std::log(tails.lower) - log_u;
    const double dphi = std::exp(t + gamma_log_density(x, shape)) / tails.lower;
    return std::pair{phi, dphi};
  };

  // Leading-order behaviour P(s, x) ~ x^s / Gamma(s + 1).
  double t0 = (log_u + log_gamma(shape + 1.0)) / shape;
  if (!std::isfinite(t0)) t0 = std::log(shape);

  double lo = t0;
  double hi = t0;
  double step = 1.0;
  while (eval(hi).first < 0.0) {
    lo = hi;
    hi += step;
    step *= 2.0;
  }
  step = 1.0;
  while (eval(lo).first > 0.0) {
    hi = lo;
    lo -= step;
    step *= 2.0;
    if (lo < std::log(std::numeric_limits<double>::denorm_min())) return 0.0;
  }
  return std::exp(bracketed_newton(eval, lo, hi, t0, acc, "inv_reg_inc_gamma"));
}

// x with Q(shape, x) = s for 0 < s <= 1/2, solved directly in x where the
// upper tail decays exponentially.
double gamma_upper_quantile(double s, double shape, const Accuracy& acc) {
  const double log_s = std::log(s);
  // phi increasing in x: log s - log Q(shape, x).
  auto eval = [&](double x) {
    const Tails tails = reg_inc_gamma_tails(x, shape, acc);
    if (!(tails.upper > 0.0)) return std::pair{std::numeric_limits<double>::infinity(), 1.0};
    const double phi = log_s - std::log(tails.upper);
    const double dphi = std::exp(gamma_log_density(x, shape)) / tails.upper;
    return std::pair{phi, dphi};
  };

  double lo = 0.0;
  double hi = std::max(1.0, shape);
  while (eval(hi).first < 0.0) {
    lo = hi;
    hi *= 2.0;
    if (!std::isfinite(hi)) fail_convergence("inv_reg_inc_gamma_upper bracket", s);
  }
  const double x0 = std::max(shape - log_s, 0.5 * (lo + hi));
  return bracketed_newton(eval, lo, hi, x0, acc, "inv_reg_inc_gamma_upper");
}

}  // namespace

void Accuracy::validate() const {
  if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iter < 1) {
    throw DomainError("Accuracy requires abs_tol > 0, rel_tol > 0 and max_iter >= 1");
  }
}

double log_gamma(double x) {
  require_positive(x, "log_gamma argument");
  int sign = 0;
  return ::lgamma_r(x, &sign);
}

double log_beta(double a, double b) {
  require_positive(a, "log_beta a");
  require_positive(b, "log_beta b");
  return log_gamma(a) + log_gamma(b) - log_gamma(a + b);
}

Tails reg_inc_beta_tails(double x, double a, double b, const Accuracy& acc) {
  acc.validate();
  require_positive(a, "reg_inc_beta a");
  require_positive(b, "reg_inc_beta b");
  require_unit(x, "reg_inc_beta x");
  if (x == 0.0) return {0.0, 1.0};
  if (x == 1.0) return {1.0, 0.0};

  const double log_front = a * std::log(x) + b * std::log1p(-x) - log_beta(a, b);
  const double front = std::exp(log_front);
  if (x < (a + 1.0) / (a + b + 2.0)) {
    const double lower = front * beta_continued_fraction(a, b, x, acc) / a;
    return {lower, 1.0 - lower};
  }
  const double upper = front * beta_continued_fraction(b, a, 1.0 - x, acc) / b;
  return {1.0 - upper, upper};
}

double reg_inc_beta(double x, double a, double b, const Accuracy& acc) {
  return reg_inc_beta_tails(x, a, b, acc).lower;
}

double reg_inc_beta_upper(double x, double a, double b, const Accuracy& acc) {
  return reg_inc_beta_tails(x, a, b, acc).upper;
}

double inv_reg_inc_beta(double u, double a, double b, const Accuracy& acc) {
  acc.validate();
  require_positive(a, "inv_reg_inc_beta a");
  require_positive(b, "inv_reg_inc_beta b");
  require_unit(u, "inv_reg_inc_beta u");
  if (u == 0.0) return 0.0;
  if (u == 1.0) return 1.0;
  if (u <= 0.5) return beta_lower_quantile(u, a, b, acc);
  return 1.0 - beta_lower_quantile(1.0 - u, b, a, acc);
}

double inv_reg_inc_beta_upper(double s, double a, double b, const Accuracy& acc) {
  acc.validate();
  require_positive(a, "inv_reg_inc_beta_upper a");
  require_positive(b, "inv_reg_inc_beta_upper b");
  require_unit(s, "inv_reg_inc_beta_upper s");
  if (s == 0.0) return 1.0;
  if (s == 1.0) return 0.0;
  if (s <= 0.5) return 1.0 - beta_lower_quantile(s, b, a, acc);
  return beta_lower_quantile(1.0 - s, a, b, acc);
}

Tails reg_inc_gamma_tails(double x, double shape, const Accuracy& acc) {
  acc.validate();
  require_positive(shape, "reg_inc_gamma shape");
  if (!(x >= 0.0)) throw DomainError("reg_inc_gamma x must be nonnegative");
  if (x == 0.0) return {0.0, 1.0};
  if (std::isinf(x)) return {1.0, 0.0};

  const double front = std::exp(-x + shape * std::log(x) - log_gamma(shape));
  if (x < shape + 1.0) {
    const double lower = front * gamma_series(shape, x, acc);
    return {lower, 1.0 - lower};
  }
  const double upper = front * gamma_continued_fraction(shape, x, acc);
  return {1.0 - upper, upper};
}

double reg_inc_gamma(double x, double shape, const Accuracy& acc) {
  return reg_inc_gamma_tails(x, shape, acc).lower;
}

double reg_inc_gamma_upper(double x, double shape, const Accuracy& acc) {
  return reg_inc_gamma_tails(x, shape, acc).upper;
}

double inv_reg_inc_gamma(double u, double shape, const Accuracy& acc) {
  acc.validate();
  require_positive(shape, "inv_reg_inc_gamma shape");
  if (!(u >= 0.0 && u < 1.0)) {
    throw DomainError("inv_reg_inc_gamma requires 0 <= u < 1 (the quantile at 1 is infinite)");
  }
  if (u == 0.0) return 0.0;
  if (u <= 0.5) return gamma_lower_quantile(u, shape, acc);
  return gamma_upper_quantile(1.0 - u, shape, acc);
}

double inv_reg_inc_gamma_upper(double s, double shape, const Accuracy& acc) {
  acc.validate();
  require_positive(shape, "inv_reg_inc_gamma_upper shape");
  if (!(s > 0.0 && s <= 1.0)) {
    throw DomainError("inv_reg_inc_gamma_upper requires 0 < s <= 1");
  }
  if (s == 1.0) return 0.0;
  if (s <= 0.5) return gamma_upper_quantile(s, shape, acc);
  return gamma_lower_quantile(1.0 - s, shape, acc);
}

}  // namespace betaorder::special
