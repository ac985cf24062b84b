#pragma once

namespace betaorder::special {

// Requested accuracy for iterative evaluations. Continued fractions and series
// always run to working precision; max_iter bounds the work and rel_tol is
// the level below which stopping early is reported as a ConvergenceError.
struct Accuracy {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_iter = 300;

  void validate() const;
};

// Lower and upper tails of a regularized incomplete function, each computed
// without cancellation on its own side.
struct Tails {
  double lower;
  double upper;
};

double log_gamma(double x);
double log_beta(double a, double b);

// I_x(a, b), the Beta(a, b) distribution function.
double reg_inc_beta(double x, double a, double b, const Accuracy& acc = {});
// 1 - I_x(a, b) = I_{1-x}(b, a), accurate when it is small.
double reg_inc_beta_upper(double x, double a, double b, const Accuracy& acc = {});
Tails reg_inc_beta_tails(double x, double a, double b, const Accuracy& acc = {});

// x with I_x(a, b) = u.
double inv_reg_inc_beta(double u, double a, double b, const Accuracy& acc = {});
// x with 1 - I_x(a, b) = s.
double inv_reg_inc_beta_upper(double s, double a, double b, const Accuracy& acc = {});

// Lower regularized incomplete gamma P(shape, x).
double reg_inc_gamma(double x, double shape, const Accuracy& acc = {});
// Upper Q(shape, x) = 1 - P(shape, x).
double reg_inc_gamma_upper(double x, double shape, const Accuracy& acc = {});
Tails reg_inc_gamma_tails(double x, double shape, const Accuracy& acc = {});

// x with P(shape, x) = u, for 0 <= u < 1.
double inv_reg_inc_gamma(double u, double shape, const Accuracy& acc = {});
// x with Q(shape, x) = s, for 0 < s <= 1.
double inv_reg_inc_gamma_upper(double s, double shape, const Accuracy& acc = {});

}  // namespace betaorder::special
