#pragma once

#include <optional>
#include <string>
#include <vector>

#include "betaorder/distributions.hpp"
#include "betaorder/orders.hpp"
#include "betaorder/sign_pattern.hpp"

namespace betaorder {

/// Reduction of S(F - G o l) for F = Beta(a, b), G = Beta(a', b') and the line
/// l(x) = c x + d (c > 0, d < 1) to the sign pattern of a cubic on
///   I = (max(0, -d/c), min(1, (1-d)/c)).
struct LemmaCubic {
  double c3 = 0.0;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;
  Sign sigma1 = Sign::zero;
  // Leading sign of the log-density difference; nullopt when it can be any
  // of {0, -, +} (no parameter distinguishes it).
  std::optional<Sign> sigma2;
  double log_constant = 0.0;  // C = log(B(a', b') / (c B(a, b)))
  double lo = 0.0;
  double hi = 1.0;

  double operator()(double x) const noexcept { return ((c3 * x + c2) * x + c1) * x + c0; }
};

enum class LemmaStage { p1, p2, p3, p4 };

// Throws DomainError unless c > 0, d < 1 and I is nonempty.
LemmaCubic lemma_cubic(const BetaParams& p, const BetaParams& q, const AffineMap& line);

/// Stage functions on I:
///   p1 = f(x) - c g(l(x))                       (derivative of F - G o l)
///   p2 = log f(x) - log(c g(l(x)))              (written out with C)
///   p3 = p2'(x)
///   p4 = p3(x) x (1-x) l(x) (1-l(x))            (the cubic)
/// Throws DomainError for x outside I.
double lemma_stage_eval(LemmaStage stage, const BetaParams& p, const BetaParams& q, const AffineMap& line,
                        double x);

struct LemmaChainReport {
  bool holds = false;
  SignPattern difference;  // S(F - G o l) on (0, 1), sampled
  SignPattern stage1;      // sigma1 * S(p1), sampled on I
  SignPattern stage2;      // sigma1 * S(p2), sampled on I
  SignPattern stage3;      // sigma1 * sigma2 * S(p3), sampled on I
  SignPattern stage4;      // sigma1 * sigma2 * S(p4), exact
  std::optional<Sign> sigma2_used;
};

LemmaChainReport lemma_chain_report(const BetaParams& p, const BetaParams& q, const AffineMap& line,
                                    const GridPolicy& grid = {}, double zero_tol = 1e-9);

bool verify_lemma_chain(const BetaParams& p, const BetaParams& q, const AffineMap& line,
                        const GridPolicy& grid = {}, double zero_tol = 1e-9);

// Real roots of c3 x^3 + c2 x^2 + c1 x + c0 in the open interval (lo, hi),
// ascending. Roots of even multiplicity are included once.
std::vector<double> cubic_roots_in(double c3, double c2, double c1, double c0, double lo, double hi);

// Exact sign pattern of the cubic on the open interval (lo, hi).
SignPattern cubic_sign_pattern(double c3, double c2, double c1, double c0, double lo, double hi);
SignPattern cubic_sign_pattern(const LemmaCubic& cubic);

}  // namespace betaorder
