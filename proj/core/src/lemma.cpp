#include "betaorder/lemma.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "betaorder/errors.hpp"
#include "betaorder/special_functions.hpp"

namespace betaorder {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double eval_cubic(double c3, double c2, double c1, double c0, double x) {
  return ((c3 * x + c2) * x + c1) * x + c0;
}

// Horner rounding bound; values below it are indistinguishable from zero.
double rounding_bound(double c3, double c2, double c1, double c0, double x) {
  const double ax = std::fabs(x);
  return 8.0 * kEps * (((std::fabs(c3) * ax + std::fabs(c2)) * ax + std::fabs(c1)) * ax + std::fabs(c0));
}

Sign cubic_sign(double c3, double c2, double c1, double c0, double x) {
  return sign_of(eval_cubic(c3, c2, c1, c0, x), rounding_bound(c3, c2, c1, c0, x));
}

// Real roots of A x^2 + B x + C (A may vanish), without cancellation.
std::vector<double> quadratic_roots(double a, double b, double c) {
  std::vector<double> roots;
  if (a == 0.0) {
    if (b != 0.0) roots.push_back(-c / b);
    return roots;
  }
  const double disc = b * b - 4.0 * a * c;
  if (disc < 0.0) return roots;
  const double q = -0.5 * (b + std::copysign(std::sqrt(disc), b));
  if (q != 0.0) {
    roots.push_back(q / a);
    roots.push_back(c / q);
  } else {
    roots.push_back(0.0);  // b == 0 and c == 0
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

// Breakpoints lo < x_1 < ... < hi that split (lo, hi) into pieces on which
// the cubic is monotone: the endpoints and the critical points between them.
std::vector<double> monotone_breakpoints(double c3, double c2, double c1, double lo, double hi) {
  std::vector<double> pts{lo};
  for (double r : quadratic_roots(3.0 * c3, 2.0 * c2, c1)) {
    if (r > lo && r < hi) pts.push_back(r);
  }
  pts.push_back(hi);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Root of a monotone cubic piece with a strict sign change on [u, v]:
// bisection to bracket width ~ulp, then one Newton polish kept in the bracket.
double polish_root(double c3, double c2, double c1, double c0, double u, double v) {
  const Sign su = cubic_sign(c3, c2, c1, c0, u);
  for (int i = 0; i < 200 && v - u > 2.0 * kEps * std::max(std::fabs(u), std::fabs(v)); ++i) {
    const double m = 0.5 * (u + v);
    const Sign sm = cubic_sign(c3, c2, c1, c0, m);
    if (sm == Sign::zero) return m;
    if (sm == su) {
      u = m;
    } else {
      v = m;
    }
  }
  double x = 0.5 * (u + v);
  const double dp = (3.0 * c3 * x + 2.0 * c2) * x + c1;
  if (dp != 0.0) {
    const double next = x - eval_cubic(c3, c2, c1, c0, x) / dp;
    if (next >= u && next <= v) x = next;
  }
  return x;
}

double require_in_interval(const LemmaCubic& cubic, double x) {
  if (!(x > cubic.lo && x < cubic.hi)) {
    throw DomainError("lemma stage functions are defined on the open interval I only");
  }
  return x;
}

// Stage value together with the sum of the magnitudes of its terms, which
// bounds the cancellation error of the sum.
struct StageValue {
  double value;
  double magnitude;
};

StageValue stage_terms(LemmaStage stage, const BetaParams& p, const BetaParams& q, const AffineMap& line,
                       const LemmaCubic& cubic, double x) {
  const double a = p.a();
  const double b = p.b();
  const double a2 = q.a();
  const double b2 = q.b();
  const double c = line.c;
  const double l = line(x);

  switch (stage) {
    case LemmaStage::p1: {
      const double f = beta_pdf(p, x);
      const double g = c * beta_pdf(q, l);
      return {f - g, f + g};
    }
    case LemmaStage::p2: {
      const std::array<double, 5> t{(a - 1.0) * std::log(x), (b - 1.0) * std::log1p(-x), -(a2 - 1.0) * std::log(l),
                                    -(b2 - 1.0) * std::log1p(-l), cubic.log_constant};
      return {((t[0] + t[2]) + (t[1] + t[3])) + t[4],
              std::fabs(t[0]) + std::fabs(t[1]) + std::fabs(t[2]) + std::fabs(t[3]) + std::fabs(t[4])};
    }
    case LemmaStage::p3: {
      const std::array<double, 4> t{(a - 1.0) / x, -(b - 1.0) / (1.0 - x), -c * (a2 - 1.0) / l,
                                    c * (b2 - 1.0) / (1.0 - l)};
      return {(t[0] + t[2]) + (t[1] + t[3]), std::fabs(t[0]) + std::fabs(t[1]) + std::fabs(t[2]) + std::fabs(t[3])};
    }
    case LemmaStage::p4: {
      const double ax = std::fabs(x);
      return {cubic(x), ((std::fabs(cubic.c3) * ax + std::fabs(cubic.c2)) * ax + std::fabs(cubic.c1)) * ax +
                            std::fabs(cubic.c0)};
    }
  }
  return {0.0, 0.0};
}

double stage_value(LemmaStage stage, const BetaParams& p, const BetaParams& q, const AffineMap& line,
                   const LemmaCubic& cubic, double x) {
  return stage_terms(stage, p, q, line, cubic, x).value;
}

}  // namespace

LemmaCubic lemma_cubic(const BetaParams& p, const BetaParams& q, const AffineMap& line) {
  const double c = line.c;
  const double d = line.d;
  if (!(c > 0.0)) throw DomainError("lemma requires a line with positive slope");
  if (!(d < 1.0)) throw DomainError("lemma requires a line with intercept below 1");
  if (!(c + d > 0.0)) throw DomainError("lemma interval I is empty (c + d <= 0)");

  const double a = p.a();
  const double b = p.b();
  const double a2 = q.a();
  const double b2 = q.b();

  LemmaCubic out;
  out.c3 = (a - a2 + b - b2) * c * c;
  out.c2 = -(a - a2 + 1.0 - b2) * c * c - (a - a2 + b - 1.0) * c * (1.0 - d) - (b2 - b + 1.0 - a) * c * d;
  out.c1 = (a - a2) * c * (1.0 - d) - (a - b2) * c * d - (a + b - 2.0) * (1.0 - d) * d;
  out.c0 = -(a - 1.0) * (d - 1.0) * d;
  out.sigma1 = sign_of(-d);
  if (d == 0.0 && a2 != a) {
    out.sigma2 = sign_of(a2 - a);
  } else if (d > 0.0 && a != 1.0) {
    out.sigma2 = sign_of(1.0 - a);
  } else if (d < 0.0 && a2 != 1.0) {
    out.sigma2 = sign_of(a2 - 1.0);
  }
  out.log_constant = special::log_beta(a2, b2) - std::log(c) - special::log_beta(a, b);
  out.lo = std::max(0.0, -d / c);
  out.hi = std::min(1.0, (1.0 - d) / c);
  return out;
}

double lemma_stage_eval(LemmaStage stage, const BetaParams& p, const BetaParams& q, const AffineMap& line,
                        double x) {
  const LemmaCubic cubic = lemma_cubic(p, q, line);
  require_in_interval(cubic, x);
  return stage_value(stage, p, q, line, cubic, x);
}

std::vector<double> cubic_roots_in(double c3, double c2, double c1, double c0, double lo, double hi) {
  std::vector<double> roots;
  if (!(lo < hi)) return roots;
  const auto pts = monotone_breakpoints(c3, c2, c1, lo, hi);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const double u = pts[i];
    const double v = pts[i + 1];
    const Sign su = cubic_sign(c3, c2, c1, c0, u);
    const Sign sv = cubic_sign(c3, c2, c1, c0, v);
    if (su == Sign::zero && u > lo) roots.push_back(u);
    if (su != Sign::zero && sv != Sign::zero && su != sv) roots.push_back(polish_root(c3, c2, c1, c0, u, v));
  }
  // A zero at hi itself lies outside the open interval.
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

SignPattern cubic_sign_pattern(double c3, double c2, double c1, double c0, double lo, double hi) {
  if (!(lo < hi)) return {};
  // On each monotone piece the pattern is determined by the end values, and a
  // zero end value contributes nothing.
  const auto pts = monotone_breakpoints(c3, c2, c1, lo, hi);
  std::vector<Sign> signs;
  signs.reserve(pts.size());
  for (double x : pts) signs.push_back(cubic_sign(c3, c2, c1, c0, x));
  return SignPattern::reduce(signs);
}

SignPattern cubic_sign_pattern(const LemmaCubic& cubic) {
  return cubic_sign_pattern(cubic.c3, cubic.c2, cubic.c1, cubic.c0, cubic.lo, cubic.hi);
}

LemmaChainReport lemma_chain_report(const BetaParams& p, const BetaParams& q, const AffineMap& line,
                                    const GridPolicy& grid, double zero_tol) {
  const LemmaCubic cubic = lemma_cubic(p, q, line);

  LemmaChainReport report;
  report.difference =
      pattern_of_function([&](double x) { return beta_cdf(p, x) - beta_cdf(q, line(x)); }, 0.0, 1.0, grid,
                          zero_tol)
          .pattern;

  auto stage_pattern = [&](LemmaStage stage) {
    // Values within zero_tol of the term magnitudes are cancellation noise.
    auto f = [&](double x) {
      const StageValue v = stage_terms(stage, p, q, line, cubic, x);
      return std::fabs(v.value) <= zero_tol * v.magnitude ? 0.0 : v.value;
    };
    return pattern_of_function(f, cubic.lo, cubic.hi, grid, zero_tol).pattern;
  };

  const SignPattern sigma1(cubic.sigma1);
  report.stage1 = sigma1 * stage_pattern(LemmaStage::p1);
  report.stage2 = sigma1 * stage_pattern(LemmaStage::p2);
  const SignPattern raw3 = stage_pattern(LemmaStage::p3);
  const SignPattern raw4 = cubic_sign_pattern(cubic);

  std::vector<Sign> candidates;
  if (cubic.sigma2) {
    candidates.push_back(*cubic.sigma2);
  } else {
    candidates = {Sign::zero, Sign::negative, Sign::positive};
  }

  const bool head = leq(report.difference, report.stage1) && leq(report.stage1, report.stage2);
  for (Sign s2 : candidates) {
    const SignPattern prefix = sigma1 * SignPattern(s2);
    const SignPattern stage3 = prefix * raw3;
    const SignPattern stage4 = prefix * raw4;
    const bool tail = leq(report.stage2, stage3) && leq(stage3, stage4);
    if (s2 == candidates.front() || (head && tail)) {
      report.stage3 = stage3;
      report.stage4 = stage4;
      report.sigma2_used = s2;
    }
    if (head && tail) {
      report.holds = true;
      break;
    }
  }
  return report;
}

bool verify_lemma_chain(const BetaParams& p, const BetaParams& q, const AffineMap& line, const GridPolicy& grid,
                        double zero_tol) {
  return lemma_chain_report(p, q, line, grid, zero_tol).holds;
}

}  // namespace betaorder
