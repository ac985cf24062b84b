#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "betaorder/sign_pattern.hpp"

namespace betaorder {
namespace {

SignPattern P(const char* s) { return SignPattern::parse(s); }

// Independent model: words are strings over "+-0", reduced by dropping zeros
// and collapsing runs.
std::string collapse(const std::string& w) {
  std::string out;
  for (char ch : w) {
    if (ch == '0') continue;
    if (out.empty() || out.back() != ch) out += ch;
  }
  return out;
}

std::vector<std::string> all_words(std::size_t max_len, const std::string& alphabet) {
  std::vector<std::string> words{""};
  std::vector<std::string> frontier{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::vector<std::string> next;
    for (const auto& w : frontier) {
      for (char ch : alphabet) next.push_back(w + ch);
    }
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return words;
}

std::vector<std::string> reduced_words(std::size_t max_len) {
  std::vector<std::string> out{""};
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (char first : {'+', '-'}) {
      std::string w;
      for (std::size_t i = 0; i < len; ++i) w += (i % 2 == 0) == (first == '+') ? '+' : '-';
      out.push_back(w);
    }
  }
  return out;
}

// q = pi p pi' for some reduced pi, pi' no longer than q.
bool brute_leq(const std::string& p, const std::string& q) {
  const auto factors = reduced_words(q.size());
  for (const auto& pi : factors) {
    for (const auto& pi2 : factors) {
      if (collapse(pi + p + pi2) == q) return true;
    }
  }
  return false;
}

SignPattern from_word(const std::string& w) {
  std::vector<Sign> signs;
  for (char ch : w) signs.push_back(ch == '+' ? Sign::positive : ch == '-' ? Sign::negative : Sign::zero);
  return SignPattern::reduce(signs);
}

TEST(SignPattern, ParseAndPrint) {
  EXPECT_EQ(P("+-+").to_string(), "+-+");
  EXPECT_EQ(P("0").to_string(), "0");
  EXPECT_TRUE(P("").empty());
  EXPECT_EQ(P("-").front(), Sign::negative);
  EXPECT_EQ(P("+-").back(), Sign::negative);
  EXPECT_EQ(P("++-"), P("+-"));
  EXPECT_THROW(P("+ -"), std::exception);
}

TEST(SignPattern, ConcatExamples) {
  EXPECT_EQ(P("+") * P("+"), P("+"));
  EXPECT_EQ(P("0") * P("+-"), P("+-"));
  EXPECT_EQ(P("+-") * P("-+"), P("+-+"));
  EXPECT_EQ(P("+-") * P("+-"), P("+-+-"));
}

TEST(SignPattern, ReverseAndFlipExamples) {
  EXPECT_EQ(reverse(P("+-")), P("-+"));
  EXPECT_EQ(reverse(P("0")), P("0"));
  EXPECT_EQ(reverse(P("-+-")), P("-+-"));
  EXPECT_EQ(flip(P("+-+")), P("-+-"));
  EXPECT_EQ(flip(P("0")), P("0"));
  EXPECT_EQ(flip(P("-")), P("+"));
}

TEST(SignPattern, LeqExamples) {
  EXPECT_TRUE(leq(P("+-"), P("+-+")));
  EXPECT_FALSE(leq(P("+"), P("-")));
  EXPECT_FALSE(leq(P("+-"), P("-+")));
  EXPECT_TRUE(leq(P("0"), P("-")));
  EXPECT_TRUE(leq(P("-+"), P("+-+")));
}

TEST(SignPattern, ReduceMatchesStringModel) {
  for (const auto& w : all_words(6, "+-0")) {
    EXPECT_EQ(from_word(w).to_string(), collapse(w).empty() ? "0" : collapse(w)) << w;
  }
}

TEST(SignPattern, MonoidLawsExhaustive) {
  const auto words = all_words(6, "+-");
  for (const auto& u : words) {
    const SignPattern pu = from_word(u);
    EXPECT_EQ(pu * SignPattern{}, pu);
    EXPECT_EQ(SignPattern{} * pu, pu);
    for (const auto& v : words) {
      const SignPattern pv = from_word(v);
      // Reduction is a homomorphism from raw words.
      ASSERT_EQ(pu * pv, from_word(u + v)) << u << " " << v;
      ASSERT_EQ(reverse(pu * pv), reverse(pv) * reverse(pu));
      ASSERT_EQ(flip(pu * pv), flip(pu) * flip(pv));
    }
    EXPECT_EQ(reverse(reverse(pu)), pu);
    EXPECT_EQ(flip(flip(pu)), pu);
  }
  const auto reduced = reduced_words(6);
  for (const auto& a : reduced) {
    for (const auto& b : reduced) {
      for (const auto& c : reduced) {
        ASSERT_EQ((P(a.c_str()) * P(b.c_str())) * P(c.c_str()), P(a.c_str()) * (P(b.c_str()) * P(c.c_str())));
      }
    }
  }
  EXPECT_EQ(P("+") * P("+"), P("+"));
  EXPECT_EQ(P("-") * P("-"), P("-"));
}

TEST(SignPattern, LeqAgreesWithBruteForce) {
  const auto reduced = reduced_words(6);
  for (const auto& p : reduced) {
    for (const auto& q : reduced) {
      ASSERT_EQ(leq(P(p.c_str()), P(q.c_str())), brute_leq(p, q)) << p << " vs " << q;
    }
  }
}

TEST(SignPattern, LeqIsPartialOrderCompatibleWithProduct) {
  const auto reduced = reduced_words(4);
  for (const auto& p : reduced) {
    for (const auto& q : reduced) {
      const bool pq = leq(P(p.c_str()), P(q.c_str()));
      if (pq && leq(P(q.c_str()), P(p.c_str()))) EXPECT_EQ(p, q);
      if (!pq) continue;
      for (const auto& pi : reduced) {
        for (const auto& pi2 : reduced) {
          ASSERT_TRUE(leq(P(pi.c_str()) * P(p.c_str()) * P(pi2.c_str()), P(pi.c_str()) * P(q.c_str()) * P(pi2.c_str())));
        }
      }
    }
  }
}

TEST(SignPattern, PatternOfSamples) {
  const std::vector<double> a{1.0, -2.0, 3.0};
  EXPECT_EQ(pattern_of_samples(a), P("+-+"));
  const std::vector<double> b{1.0, 0.0, 2.0};
  EXPECT_EQ(pattern_of_samples(b), P("+"));
  const std::vector<double> c{-1e-12, 5.0};
  EXPECT_EQ(pattern_of_samples(c, 1e-9), P("+"));
  EXPECT_TRUE(pattern_of_samples(std::vector<double>{}).empty());
}

TEST(SignPattern, SubsequencePatternIsBelow) {
  const std::vector<double> full{0.3, -1.0, 0.0, 2.0, -0.5, -0.1, 4.0, 1.0};
  for (unsigned mask = 0; mask < (1u << full.size()); ++mask) {
    std::vector<double> sub;
    for (std::size_t i = 0; i < full.size(); ++i) {
      if (mask & (1u << i)) sub.push_back(full[i]);
    }
    ASSERT_TRUE(leq(pattern_of_samples(sub), pattern_of_samples(full)));
  }
}

TEST(ChebyshevGrid, ShapeAndNesting) {
  const auto g = chebyshev_grid(0.0, 1.0);
  ASSERT_EQ(g.size(), 2049u);
  EXPECT_NEAR(g.front(), 1e-8, 1e-15);
  EXPECT_NEAR(g.back(), 1.0 - 1e-8, 1e-15);
  for (std::size_t i = 1; i < g.size(); ++i) ASSERT_LT(g[i - 1], g[i]);
  const auto coarse = chebyshev_grid(0.0, 1.0, {1025, 1e-8});
  for (std::size_t i = 0; i < coarse.size(); ++i) EXPECT_DOUBLE_EQ(coarse[i], g[2 * i]);
  EXPECT_THROW(chebyshev_grid(1.0, 0.0), std::exception);
}

TEST(PatternOfFunction, Examples) {
  EXPECT_EQ(pattern_of_function([](double x) { return x - 0.5; }, 0.0, 1.0).pattern, P("-+"));
  EXPECT_EQ(pattern_of_function([](double) { return 1.0; }, 0.0, 1.0).pattern, P("+"));
  EXPECT_EQ(pattern_of_function([](double x) { return (x - 0.25) * (x - 0.75); }, 0.0, 1.0).pattern, P("+-+"));
}

TEST(PatternOfFunction, FailuresCountAsZero) {
  const auto r = pattern_of_function(
      [](double x) {
        if (x > 0.4 && x < 0.6) throw std::runtime_error("hole");
        return x < 0.5 ? -1.0 : std::nan("");
      },
      0.0, 1.0, {65, 1e-8});
  EXPECT_EQ(r.pattern, P("-"));
  EXPECT_FALSE(r.failures.empty());
  EXPECT_EQ(r.evaluated, 65u);
}

TEST(PatternOfFunction, RefinementIsMonotone) {
  auto f = [](double x) { return std::sin(40.0 * x * x); };
  SignPattern prev;
  for (std::size_t pts : {9u, 17u, 33u, 65u, 129u, 257u}) {
    const SignPattern cur = pattern_of_function(f, 0.0, 1.0, {pts, 1e-8}, 0.0).pattern;
    EXPECT_TRUE(leq(prev, cur)) << pts;
    prev = cur;
  }
}

std::vector<std::pair<double, double>> tabulate(double lo, double hi, double (*f)(double)) {
  std::vector<std::pair<double, double>> out;
  for (double x : chebyshev_grid(lo, hi, {257, 1e-8})) out.emplace_back(x, f(x));
  return out;
}

TEST(DerivativeBound, Examples) {
  const double pi = std::numbers::pi;
  EXPECT_TRUE(check_derivative_bound(tabulate(-1, 1, [](double x) { return x * x; }),
                                     tabulate(-1, 1, [](double x) { return 2 * x; })));
  EXPECT_TRUE(check_derivative_bound(tabulate(-1, 1, [](double x) { return x; }),
                                     tabulate(-1, 1, [](double) { return 1.0; })));
  const auto s = tabulate(0, 3 * pi, [](double x) { return std::sin(x); });
  const auto c = tabulate(0, 3 * pi, [](double x) { return std::cos(x); });
  std::vector<double> cv;
  for (const auto& [x, y] : c) cv.push_back(y);
  std::vector<double> sv;
  for (const auto& [x, y] : s) sv.push_back(y);
  EXPECT_EQ(pattern_of_samples(sv), P("+-+"));
  // cos on (0, 3 pi) changes sign at pi/2, 3pi/2 and 5pi/2 only.
  EXPECT_EQ(pattern_of_samples(cv), P("+-+-"));
  EXPECT_TRUE(check_derivative_bound(s, c));
}

TEST(DerivativeBound, DetectsViolation) {
  // A function with three sign changes paired with a monotone "derivative".
  EXPECT_FALSE(check_derivative_bound(tabulate(0, 1, [](double x) { return std::sin(20 * x); }),
                                      tabulate(0, 1, [](double) { return 1.0; })));
}

TEST(DerivativeBound, BoundarySignsAtZeroEndpoints) {
  // f vanishes at both ends of [0, 1]: f starts with the sign of f' and ends
  // with the opposite of the last sign of f'.
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> root(-0.5, 1.5);
  for (int i = 0; i < 200; ++i) {
    const double r1 = root(rng), r2 = root(rng), r3 = root(rng);
    const double sign = i % 2 == 0 ? 1.0 : -1.0;
    const auto q = [&](double x) { return sign * (x - r1) * (x - r2) * (x - r3); };
    const auto dq = [&](double x) {
      return sign * ((x - r2) * (x - r3) + (x - r1) * (x - r3) + (x - r1) * (x - r2));
    };
    const auto f = [&](double x) { return x * (1 - x) * q(x); };
    const auto df = [&](double x) { return (1 - 2 * x) * q(x) + x * (1 - x) * dq(x); };
    const SignPattern sf = pattern_of_function(f, 0, 1, {}, 0.0).pattern;
    const SignPattern sdf = pattern_of_function(df, 0, 1, {}, 0.0).pattern;
    ASSERT_FALSE(sf.empty());
    EXPECT_EQ(sf.front(), sdf.front()) << r1 << " " << r2 << " " << r3;
    EXPECT_EQ(sf.back(), negate(sdf.back())) << r1 << " " << r2 << " " << r3;
  }
}

}  // namespace
}  // namespace betaorder
