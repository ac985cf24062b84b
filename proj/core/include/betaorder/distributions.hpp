#pragma once

#include <functional>
#include <optional>
#include <string>

#include "betaorder/special_functions.hpp"

namespace betaorder {

class BetaParams {
 public:
  // Throws DomainError unless a > 0 and b > 0.
  BetaParams(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }

  // Beta(b, a), the law of 1 - X.
  BetaParams reflected() const { return {b_, a_}; }

  friend bool operator==(const BetaParams&, const BetaParams&) = default;

 private:
  double a_;
  double b_;
};

class GammaParams {
 public:
  GammaParams(double shape, double scale);

  double shape() const noexcept { return shape_; }
  double scale() const noexcept { return scale_; }

  friend bool operator==(const GammaParams&, const GammaParams&) = default;

 private:
  double shape_;
  double scale_;
};

class BinomialParams {
 public:
  BinomialParams(int n, double p);

  int n() const noexcept { return n_; }
  double p() const noexcept { return p_; }

 private:
  int n_;
  double p_;
};

enum class ShapeKind { unimodal, uniantimodal, monotone_density, uniform };

struct ShapeClass {
  ShapeKind kind;
  // (a - 1) / (a + b - 2), present for unimodal and uniantimodal densities.
  std::optional<double> location;
};

enum class Skew { positive, negative, symmetric };

std::string to_string(ShapeKind kind);
std::string to_string(Skew skew);

// Beta family. x outside (0, 1) is a DomainError for the density.
double beta_pdf(const BetaParams& p, double x);
double beta_cdf(const BetaParams& p, double x);
double beta_sf(const BetaParams& p, double x);
double beta_quantile(const BetaParams& p, double u);
// Inverse of the survival function; accurate for x close to 1.
double beta_isf(const BetaParams& p, double s);
double beta_mean(const BetaParams& p);
double beta_median(const BetaParams& p);
ShapeClass beta_mode_or_antimode(const BetaParams& p);
// Throw ShapeClassError unless the density is unimodal (resp. uniantimodal).
double beta_mode(const BetaParams& p);
double beta_antimode(const BetaParams& p);
Skew skew_class(const BetaParams& p);

// r(x) = f(x) / (1 - F(x)); +infinity once the survival function vanishes.
double hazard_rate(const BetaParams& p, double x);
// -log(1 - F(x)) / x; +infinity once the survival function vanishes.
double avg_hazard_rate(const BetaParams& p, double x);

// Gamma family with density x^(shape-1) e^(-x/scale) / (scale^shape Gamma(shape)).
double gamma_pdf(const GammaParams& p, double x);
double gamma_cdf(const GammaParams& p, double x);
double gamma_sf(const GammaParams& p, double x);
double gamma_quantile(const GammaParams& p, double u);
double gamma_isf(const GammaParams& p, double s);

double binomial_pmf(const BinomialParams& p, int k);
// P(B <= k), summed upward from 0 with compensation.
double binomial_cdf(const BinomialParams& p, int k);
// P(B >= k), summed downward from n with compensation.
double binomial_tail(const BinomialParams& p, int k);

/// A continuous law on an interval, described by its distribution function
/// and quantile function on both tails. Used by the generic order checkers.
struct Law {
  std::string name;
  double lo = 0.0;
  double hi = 1.0;
  std::function<double(double)> cdf;
  std::function<double(double)> sf;
  std::function<double(double)> quantile;
  std::function<double(double)> isf;
};

Law beta_law(const BetaParams& p);
Law gamma_law(const GammaParams& p);

}  // namespace betaorder
