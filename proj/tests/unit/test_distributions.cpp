#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "betaorder/distributions.hpp"
#include "betaorder/errors.hpp"
#include "betaorder/orders.hpp"

namespace betaorder {
namespace {

TEST(Params, Validation) {
  EXPECT_THROW(BetaParams(0.0, 1.0), DomainError);
  EXPECT_THROW(BetaParams(1.0, -2.0), DomainError);
  EXPECT_THROW(BetaParams(std::nan(""), 1.0), DomainError);
  EXPECT_THROW(GammaParams(1.0, 0.0), DomainError);
  EXPECT_THROW(BinomialParams(0, 0.5), DomainError);
  EXPECT_THROW(BinomialParams(3, 1.5), DomainError);
  EXPECT_EQ(BetaParams(2, 5).reflected(), BetaParams(5, 2));
}

TEST(BetaPdf, Examples) {
  EXPECT_NEAR(beta_pdf({1, 1}, 0.3), 1.0, 1e-15);
  EXPECT_NEAR(beta_pdf({2, 2}, 0.5), 1.5, 1e-14);
  EXPECT_NEAR(beta_pdf({2, 1}, 0.5), 1.0, 1e-14);
  EXPECT_THROW(beta_pdf({2, 2}, 0.0), DomainError);
  EXPECT_THROW(beta_pdf({2, 2}, 1.0), DomainError);
}

TEST(BetaPdf, IntegratesToOne) {
  // Midpoint rule in the variable t with x = t^2 (3 - 2t), which tames the
  // endpoint singularities for a, b >= 0.5.
  for (const BetaParams p : {BetaParams(0.5, 0.5), BetaParams(2, 5), BetaParams(7, 1.5)}) {
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const double t = (i + 0.5) / n;
      const double x = t * t * (3 - 2 * t);
      sum += beta_pdf(p, x) * 6 * t * (1 - t) / n;
    }
    EXPECT_NEAR(sum, 1.0, 1e-6);
  }
}

TEST(BetaCdf, ClosedFormsAndQuantile) {
  for (double b : {0.5, 1.0, 2.0, 5.0}) {
    for (double x : {0.1, 0.5, 0.9}) {
      EXPECT_NEAR(beta_cdf({1, b}, x), 1 - std::pow(1 - x, b), 1e-14);
      EXPECT_NEAR(beta_cdf({b, 1}, x), std::pow(x, b), 1e-14);
    }
  }
  EXPECT_NEAR(beta_quantile({1, 1}, 0.25), 0.25, 1e-14);
  EXPECT_EQ(beta_cdf({2, 3}, -1.0), 0.0);
  EXPECT_EQ(beta_cdf({2, 3}, 2.0), 1.0);
  EXPECT_EQ(beta_sf({2, 3}, 2.0), 0.0);
}

TEST(BetaCdf, QuantileIdentityAndReflection) {
  for (double a : {0.3, 1.0, 5.0}) {
    for (double b : {0.7, 2.5}) {
      const BetaParams p(a, b);
      for (int i = 1; i < 100; ++i) {
        const double u = i / 100.0;
        EXPECT_NEAR(beta_cdf(p, beta_quantile(p, u)), u, 1e-10);
        EXPECT_NEAR(beta_sf(p, beta_isf(p, u)), u, 1e-10);
        EXPECT_NEAR(beta_cdf(p, u), 1.0 - beta_cdf(p.reflected(), 1.0 - u), 1e-12);
      }
    }
  }
}

TEST(BetaMoments, MeanModeMedian) {
  const BetaParams p(2, 5);
  EXPECT_NEAR(beta_mean(p), 2.0 / 7.0, 1e-15);
  EXPECT_NEAR(beta_mode(p), 0.2, 1e-15);
  EXPECT_NEAR(beta_median({1, 1}), 0.5, 1e-14);
  const int n = 9;
  for (int k = 1; k <= n - 2; ++k) {
    const BetaParams q(k + 1.0, n - k);
    EXPECT_NEAR(beta_mean(q), (k + 1.0) / (n + 1.0), 1e-15);
    EXPECT_NEAR(beta_mode(q), static_cast<double>(k) / (n - 1), 1e-15);
  }
}

TEST(BetaMoments, ShapeClasses) {
  EXPECT_EQ(beta_mode_or_antimode({1, 1}).kind, ShapeKind::uniform);
  EXPECT_EQ(beta_mode_or_antimode({2, 3}).kind, ShapeKind::unimodal);
  EXPECT_EQ(beta_mode_or_antimode({0.5, 0.3}).kind, ShapeKind::uniantimodal);
  EXPECT_EQ(beta_mode_or_antimode({1, 3}).kind, ShapeKind::monotone_density);
  EXPECT_EQ(beta_mode_or_antimode({3, 1}).kind, ShapeKind::monotone_density);
  EXPECT_EQ(beta_mode_or_antimode({0.5, 2}).kind, ShapeKind::monotone_density);
  EXPECT_FALSE(beta_mode_or_antimode({1, 3}).location);
  EXPECT_THROW(beta_mode({1, 3}), ShapeClassError);
  EXPECT_THROW(beta_mode({0.5, 0.5}), ShapeClassError);
  EXPECT_THROW(beta_antimode({2, 2}), ShapeClassError);
  EXPECT_NEAR(beta_antimode({0.5, 0.8}), 0.5 / 0.7, 1e-15);
}

TEST(BetaMoments, ModeAndAntimodeMatchGridExtremes) {
  const int n = 4097;
  for (const BetaParams p : {BetaParams(2, 5), BetaParams(3.3, 1.7), BetaParams(0.5, 0.8), BetaParams(0.2, 0.9)}) {
    const bool uni = p.a() > 1;
    double best_x = 0.0;
    double best = uni ? -1.0 : 1e300;
    for (int i = 1; i < n - 1; ++i) {
      const double x = static_cast<double>(i) / (n - 1);
      const double v = beta_pdf(p, x);
      if (uni ? v > best : v < best) {
        best = v;
        best_x = x;
      }
    }
    const double loc = uni ? beta_mode(p) : beta_antimode(p);
    EXPECT_NEAR(best_x, loc, 1.0 / (n - 1));
  }
}

TEST(Skew, Classes) {
  EXPECT_EQ(skew_class({2, 5}), Skew::positive);
  EXPECT_EQ(skew_class({5, 2}), Skew::negative);
  EXPECT_EQ(skew_class({3, 3}), Skew::symmetric);
}

TEST(Hazard, ClosedForms) {
  for (double x : {0.1, 0.5, 0.9}) {
    EXPECT_NEAR(hazard_rate({1, 1}, x), 1 / (1 - x), 1e-10);
    EXPECT_NEAR(hazard_rate({1, 3}, x), 3 / (1 - x), 1e-10);
  }
  EXPECT_NEAR(avg_hazard_rate({1, 1}, 0.5), 2 * std::log(2.0), 1e-14);
  EXPECT_TRUE(std::isinf(hazard_rate({2, 2}, 1.0)));
}

TEST(Hazard, StarOrderQuantileRatio) {
  // (3, 2) <=* (2, 3): G^-1(u) / F^-1(u) nondecreasing in u.
  const BetaParams f(3, 2), g(2, 3);
  ASSERT_EQ(decide_beta_order(OrderKind::star_shaped, f, g).result, Relation::less_than);
  double prev = 0.0;
  for (int i = 1; i < 1000; ++i) {
    const double u = i / 1000.0;
    const double r = beta_quantile(g, u) / beta_quantile(f, u);
    ASSERT_GE(r, prev - 1e-12);
    prev = r;
  }
}

TEST(Gamma, ExponentialAndScale) {
  EXPECT_NEAR(gamma_cdf({1, 1}, 1), 1 - std::exp(-1.0), 1e-15);
  EXPECT_NEAR(gamma_cdf({2.5, 7}, 10), gamma_cdf({2.5, 1}, 10.0 / 7), 1e-15);
  EXPECT_EQ(gamma_quantile({2, 3}, 0.0), 0.0);
  EXPECT_NEAR(gamma_quantile({1, 2}, 0.5), 2 * std::log(2.0), 1e-13);
  EXPECT_NEAR(gamma_pdf({1, 2}, 1.0), 0.5 * std::exp(-0.5), 1e-15);
  EXPECT_TRUE(std::isinf(gamma_isf({2, 1}, 0.0)));
}

TEST(Binomial, Examples) {
  EXPECT_NEAR(binomial_pmf({2, 0.5}, 1), 0.5, 1e-15);
  EXPECT_NEAR(binomial_cdf({2, 0.5}, 1), 0.75, 1e-15);
  EXPECT_EQ(binomial_cdf({4, 0.0}, 0), 1.0);
  EXPECT_EQ(binomial_pmf({4, 1.0}, 4), 1.0);
  EXPECT_THROW(binomial_pmf({4, 0.3}, 5), DomainError);
  EXPECT_NEAR(binomial_pmf({30, 0.37}, 12), 0.13916584776093188949, 1e-14);
  EXPECT_NEAR(binomial_tail({50, 0.3}, 20), 0.084802598553825625086, 1e-13);
  EXPECT_NEAR(binomial_cdf({50, 0.3}, 19) + binomial_tail({50, 0.3}, 20), 1.0, 1e-13);
}

TEST(Laws, BetaAndGammaCallables) {
  const Law f = beta_law({2, 3});
  EXPECT_EQ(f.name, "Beta(2, 3)");
  EXPECT_NEAR(f.cdf(0.4) + f.sf(0.4), 1.0, 1e-15);
  EXPECT_NEAR(f.quantile(f.cdf(0.4)), 0.4, 1e-12);
  const Law g = gamma_law({2, 7});
  EXPECT_TRUE(std::isinf(g.hi));
  EXPECT_NEAR(g.isf(g.sf(30.0)), 30.0, 1e-9);
}

}  // namespace
}  // namespace betaorder
