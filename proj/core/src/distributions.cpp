#include "betaorder/distributions.hpp"

#include <cmath>
#include <limits>
#include <locale>
#include <sstream>
#include <string>

#include "betaorder/errors.hpp"

namespace betaorder {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool positive_finite(double v) { return v > 0.0 && std::isfinite(v); }

std::string fmt_num(double v) {
  std::ostringstream os;
  os.imbue(std::locale::classic());
  os << v;
  return os.str();
}

// Neumaier compensated accumulator.
class CompensatedSum {
 public:
  void add(double v) {
    const double t = sum_ + v;
    if (std::fabs(sum_) >= std::fabs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  double value() const { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

void require_open_unit(double x) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("Beta density requires 0 < x < 1, got " + fmt_num(x));
}

}  // namespace

BetaParams::BetaParams(double a, double b) : a_(a), b_(b) {
  if (!positive_finite(a) || !positive_finite(b)) {
    throw DomainError("Beta parameters must be positive, got (" + fmt_num(a) + ", " + fmt_num(b) + ")");
  }
}

GammaParams::GammaParams(double shape, double scale) : shape_(shape), scale_(scale) {
  if (!positive_finite(shape) || !positive_finite(scale)) {
    throw DomainError("Gamma parameters must be positive");
  }
}

BinomialParams::BinomialParams(int n, double p) : n_(n), p_(p) {
  if (n < 1) throw DomainError("Binomial n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Binomial p must lie in [0, 1]");
}

std::string to_string(ShapeKind kind) {
  switch (kind) {
    case ShapeKind::unimodal: return "unimodal";
    case ShapeKind::uniantimodal: return "uniantimodal";
    case ShapeKind::monotone_density: return "monotone-density";
    case ShapeKind::uniform: return "uniform";
  }
  return "unknown";
}

std::string to_string(Skew skew) {
  switch (skew) {
    case Skew::positive: return "positive";
    case Skew::negative: return "negative";
    case Skew::symmetric: return "symmetric";
  }
  return "unknown";
}

double beta_pdf(const BetaParams& p, double x) {
  require_open_unit(x);
  const double a = p.a();
  const double b = p.b();
  return std::exp((a - 1.0) * std::log(x) + (b - 1.0) * std::log1p(-x) - special::log_beta(a, b));
}

double beta_cdf(const BetaParams& p, double x) {
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return special::reg_inc_beta(x, p.a(), p.b());
}

double beta_sf(const BetaParams& p, double x) {
  if (x <= 0.0) return 1.0;
  if (x >= 1.0) return 0.0;
  return special::reg_inc_beta_upper(x, p.a(), p.b());
}

double beta_quantile(const BetaParams& p, double u) {
  return special::inv_reg_inc_beta(u, p.a(), p.b());
}

double beta_isf(const BetaParams& p, double s) {
  return special::inv_reg_inc_beta_upper(s, p.a(), p.b());
}

double beta_mean(const BetaParams& p) { return p.a() / (p.a() + p.b()); }

double beta_median(const BetaParams& p) { return beta_quantile(p, 0.5); }

ShapeClass beta_mode_or_antimode(const BetaParams& p) {
  const double a = p.a();
  const double b = p.b();
  if (a == 1.0 && b == 1.0) return {ShapeKind::uniform, std::nullopt};
  const double location = (a - 1.0) / (a + b - 2.0);
  if (a > 1.0 && b > 1.0) return {ShapeKind::unimodal, location};
  if (a < 1.0 && b < 1.0) return {ShapeKind::uniantimodal, location};
  return {ShapeKind::monotone_density, std::nullopt};
}

double beta_mode(const BetaParams& p) {
  const ShapeClass shape = beta_mode_or_antimode(p);
  if (shape.kind != ShapeKind::unimodal) {
    throw ShapeClassError("Beta(" + fmt_num(p.a()) + ", " + fmt_num(p.b()) + ") has no interior mode (" +
                          to_string(shape.kind) + ")");
  }
  return *shape.location;
}

double beta_antimode(const BetaParams& p) {
  const ShapeClass shape = beta_mode_or_antimode(p);
  if (shape.kind != ShapeKind::uniantimodal) {
    throw ShapeClassError("Beta(" + fmt_num(p.a()) + ", " + fmt_num(p.b()) + ") has no interior anti-mode (" +
                          to_string(shape.kind) + ")");
  }
  return *shape.location;
}

Skew skew_class(const BetaParams& p) {
  if (p.a() < p.b()) return Skew::positive;
  if (p.a() > p.b()) return Skew::negative;
  return Skew::symmetric;
}

double hazard_rate(const BetaParams& p, double x) {
  const double sf = beta_sf(p, x);
  if (!(sf > 0.0)) return kInf;
  return beta_pdf(p, x) / sf;
}

double avg_hazard_rate(const BetaParams& p, double x) {
  require_open_unit(x);
  const double sf = beta_sf(p, x);
  if (!(sf > 0.0)) return kInf;
  return -std::log(sf) / x;
}

double gamma_pdf(const GammaParams& p, double x) {
  if (!(x > 0.0)) throw DomainError("Gamma density requires x > 0");
  const double k = p.shape();
  const double z = x / p.scale();
  return std::exp((k - 1.0) * std::log(z) - z - special::log_gamma(k)) / p.scale();
}

double gamma_cdf(const GammaParams& p, double x) {
  if (x <= 0.0) return 0.0;
  return special::reg_inc_gamma(x / p.scale(), p.shape());
}

double gamma_sf(const GammaParams& p, double x) {
  if (x <= 0.0) return 1.0;
  return special::reg_inc_gamma_upper(x / p.scale(), p.shape());
}

double gamma_quantile(const GammaParams& p, double u) {
  return p.scale() * special::inv_reg_inc_gamma(u, p.shape());
}

double gamma_isf(const GammaParams& p, double s) {
  if (s == 0.0) return kInf;
  return p.scale() * special::inv_reg_inc_gamma_upper(s, p.shape());
}

double binomial_pmf(const BinomialParams& params, int k) {
  const int n = params.n();
  const double p = params.p();
  if (k < 0 || k > n) throw DomainError("binomial k must lie in [0, n]");
  if (p == 0.0) return k == 0 ? 1.0 : 0.0;
  if (p == 1.0) return k == n ? 1.0 : 0.0;
  const double log_choose = special::log_gamma(n + 1.0) - special::log_gamma(k + 1.0) -
                            special::log_gamma(n - k + 1.0);
  return std::exp(log_choose + k * std::log(p) + (n - k) * std::log1p(-p));
}

double binomial_cdf(const BinomialParams& params, int k) {
  if (k < 0 || k > params.n()) throw DomainError("binomial k must lie in [0, n]");
  CompensatedSum sum;
  for (int j = 0; j <= k; ++j) sum.add(binomial_pmf(params, j));
  return std::min(1.0, sum.value());
}

double binomial_tail(const BinomialParams& params, int k) {
  if (k < 0 || k > params.n()) throw DomainError("binomial k must lie in [0, n]");
  CompensatedSum sum;
  for (int j = params.n(); j >= k; --j) sum.add(binomial_pmf(params, j));
  return std::min(1.0, sum.value());
}

Law beta_law(const BetaParams& p) {
  Law law;
  law.name = "Beta(" + fmt_num(p.a()) + ", " + fmt_num(p.b()) + ")";
  law.lo = 0.0;
  law.hi = 1.0;
  law.cdf = [p](double x) { return beta_cdf(p, x); };
  law.sf = [p](double x) { return beta_sf(p, x); };
  law.quantile = [p](double u) { return beta_quantile(p, u); };
  law.isf = [p](double s) { return beta_isf(p, s); };
  return law;
}

Law gamma_law(const GammaParams& p) {
  Law law;
  law.name = "Gamma(" + fmt_num(p.shape()) + ", " + fmt_num(p.scale()) + ")";
  law.lo = 0.0;
  law.hi = kInf;
  law.cdf = [p](double x) { return gamma_cdf(p, x); };
  law.sf = [p](double x) { return gamma_sf(p, x); };
  law.quantile = [p](double u) { return gamma_quantile(p, u); };
  law.isf = [p](double s) { return gamma_isf(p, s); };
  return law;
}

}  // namespace betaorder
