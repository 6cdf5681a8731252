#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace nichols;
using testing_support::P;

TEST(Permutation, ComposeWithIdentity) {
  auto p = P("(1 2 3)(4 5)", 6);
  EXPECT_EQ(p * Permutation::identity(6), p);
  EXPECT_EQ(Permutation::identity(6) * p, p);
}

TEST(Permutation, ComposeAppliesRightFactorFirst) {
  auto p = P("(1 2)", 3), q = P("(2 3)", 3);
  EXPECT_EQ((p * q)(2), 3);
  EXPECT_EQ(to_cycle_string(p * q), "(123)");
}

TEST(Permutation, ConjugationExamples) {
  auto pi = P("(12)(34)(56)", 6);
  EXPECT_EQ(conjugate(P("(45)", 6), pi), P("(12)(35)(46)", 6));
  EXPECT_EQ(conjugate(P("(46)", 6), pi), P("(12)(36)(45)", 6));
  EXPECT_EQ(conjugate(Permutation::identity(6), pi), pi);
}

TEST(Permutation, CycleTypeExamples) {
  EXPECT_EQ(cycle_type(P("(12)(34)(56)", 6)), CycleType::uniform(2, 3));
  EXPECT_EQ(cycle_type(Permutation::identity(4)), CycleType::uniform(1, 4));
  EXPECT_EQ(cycle_type(P("(1 2 3 4)(5 6 7 8)", 8)), CycleType::uniform(4, 2));
  EXPECT_EQ(CycleType::uniform(2, 3).to_string(), "(2^3)");
}

TEST(Permutation, CycleStringRoundTrip) {
  std::mt19937 rng(7);
  for (int t = 0; t < 50; ++t) {
    auto p = testing_support::random_permutation(12, rng);
    std::string s;
    for (const auto& c : p.cycles()) {
      s += "(";
      for (std::size_t i = 0; i < c.size(); ++i) s += (i ? " " : "") + std::to_string(c[i]);
      s += ")";
    }
    EXPECT_EQ(parse_cycles(s, 12), p);
  }
  EXPECT_THROW(parse_cycles("(12)", 10), std::invalid_argument);
  EXPECT_EQ(parse_cycles("(1 10)", 10)(10), 1);
}

TEST(Permutation, ClassSizes) {
  EXPECT_EQ(conjugacy_class(CycleType::uniform(2, 3), 6).size(), 15u);
  EXPECT_EQ(conjugacy_class(CycleType::uniform(2, 2), 4).size(), 3u);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 4}, {3, 2}, {4, 2}, {3, 3}, {5, 1}, {2, 5}}) {
    auto cls = conjugacy_class(CycleType::uniform(k, n), static_cast<std::size_t>(k * n));
    EXPECT_EQ(mpz_class(static_cast<unsigned long>(cls.size())), class_size(k, n)) << k << "^" << n;
    std::set<Permutation> distinct(cls.begin(), cls.end());
    EXPECT_EQ(distinct.size(), cls.size());
  }
}

TEST(Permutation, ConjugationPreservesCycleType) {
  std::mt19937 rng(11);
  for (int t = 0; t < 200; ++t) {
    auto g = testing_support::random_permutation(9, rng), h = testing_support::random_permutation(9, rng);
    EXPECT_EQ(cycle_type(conjugate(g, h)), cycle_type(h));
  }
}

TEST(Unmixed, CentralizerGenerators) {
  UnmixedClass c3(2, 3);
  auto g = c3.centralizer_generators();
  ASSERT_EQ(g.size(), 5u);
  EXPECT_EQ(g[0], P("(12)", 6));
  EXPECT_EQ(g[1], P("(34)", 6));
  EXPECT_EQ(g[2], P("(56)", 6));
  EXPECT_EQ(g[3], P("(13)(24)", 6));
  EXPECT_EQ(g[4], P("(35)(46)", 6));
  for (const auto& x : g) EXPECT_TRUE(commute(x, c3.basepoint()));
  EXPECT_EQ(UnmixedClass(2, 4).block_swap(3), P("(57)(68)", 8));
}

TEST(Unmixed, GeneratedGroupOrder) {
  for (auto [k, n, order] : std::vector<std::tuple<int, int, std::size_t>>{{2, 3, 48}, {3, 2, 18}, {4, 2, 32}}) {
    UnmixedClass c(k, n);
    std::set<Permutation> seen{Permutation::identity(c.degree())};
    std::vector<Permutation> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
      std::vector<Permutation> next;
      for (const auto& x : frontier)
        for (const auto& s : c.centralizer_generators())
          if (seen.insert(x * s).second) next.push_back(x * s);
      frontier = std::move(next);
    }
    EXPECT_EQ(seen.size(), order);
  }
}

TEST(Unmixed, NormalFormExamples) {
  for (int n = 2; n <= 5; ++n) {
    UnmixedClass c(2, n);
    auto f = c.normal_form(c.basepoint() * c.block_swap(n - 1));
    EXPECT_EQ(f.d, std::vector<int>(n, 1));
    EXPECT_EQ(f.b, Permutation::from_cycles(n, {{n - 1, n}}));
  }
  UnmixedClass c(2, 3);
  EXPECT_TRUE(c.normal_form(Permutation::identity(6)).is_identity());
  auto a2 = c.normal_form(c.cycle_generator(2));
  EXPECT_EQ(a2.d, (std::vector<int>{0, 1, 0}));
  EXPECT_TRUE(a2.b.is_identity());
  EXPECT_THROW(c.normal_form(P("(23)", 6)), std::invalid_argument);
}

TEST(Unmixed, NormalFormRoundTripOnWholeCentralizer) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {4, 2}}) {
    UnmixedClass c(k, n);
    std::set<Permutation> images;
    for (const auto& f : c.centralizer_elements()) {
      auto g = c.assemble(f);
      EXPECT_TRUE(commute(g, c.basepoint()));
      EXPECT_EQ(c.normal_form(g), f);
      images.insert(g);
    }
    std::size_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= i;
    std::size_t expected = fact;
    for (int j = 0; j < n; ++j) expected *= k;
    EXPECT_EQ(images.size(), expected);
  }
}

TEST(Unmixed, NormalFormMultiplication) {
  std::mt19937 rng(3);
  UnmixedClass c(4, 3);
  for (int t = 0; t < 100; ++t) {
    auto x = testing_support::random_normal_form(c, rng), y = testing_support::random_normal_form(c, rng);
    EXPECT_EQ(c.assemble(c.multiply(x, y)), c.assemble(x) * c.assemble(y));
  }
}

TEST(Unmixed, BlockTranspositionActsAsTransposition) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {3, 4}, {4, 3}}) {
    UnmixedClass c(k, n);
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j) {
        auto f = c.normal_form(c.block_transposition(i, j));
        EXPECT_EQ(f.b, Permutation::from_cycles(n, {{i, j}}));
        EXPECT_EQ(f.d, std::vector<int>(n, 0));
      }
  }
}

TEST(Unmixed, ExchangeIdentities) {
  for (int n = 3; n <= 5; ++n) {
    UnmixedClass c(2, n);
    const auto& pi = c.basepoint();
    const int N = 2 * n;
    auto alpha = conjugate(Permutation::from_cycles(N, {{N - 2, N - 1}}), pi);
    auto beta = conjugate(Permutation::from_cycles(N, {{N - 2, N}}), pi);
    auto An1 = c.cycle_generator(n - 1), An = c.cycle_generator(n);
    EXPECT_EQ(beta, pi * c.block_swap(n - 1));
    EXPECT_EQ(alpha, pi * An1 * An * c.block_swap(n - 1));
    EXPECT_EQ(alpha, beta * An1 * An);
  }
}

TEST(Unmixed, CanonicalPairIdentities) {
  for (int n : {4, 6}) {
    UnmixedClass c(2, n);
    auto T = canonical_subrack(c);
    for (int l = 1; l <= n / 2; ++l) {
      const auto& alpha = T.elements[2 * l - 1];
      const auto& beta = T.elements[2 * l];
      auto prod = c.cycle_generator(2 * l - 1) * c.cycle_generator(2 * l);
      EXPECT_EQ(alpha * beta, prod);
      EXPECT_EQ(beta * alpha, prod);
      EXPECT_EQ(alpha * alpha, Permutation::identity(c.degree()));
    }
  }
}

TEST(Unmixed, CanonicalSubrackClosedUnderItsInvolutions) {
  for (int n : {4, 5}) {
    UnmixedClass c(2, n);
    auto T = canonical_subrack(c);
    std::set<Permutation> members(T.elements.begin(), T.elements.end());
    for (int l = 1; l <= n / 2; ++l)
      for (int e : {4 * l - 1, 4 * l}) {
        auto s = Permutation::from_cycles(c.degree(), {{4 * l - 2, e}});
        for (const auto& t : T.elements) EXPECT_TRUE(members.count(s * t * s)) << to_cycle_string(t);
      }
  }
}

TEST(Unmixed, TransporterExamples) {
  UnmixedClass c(2, 3);
  EXPECT_TRUE(c.transporter(c.basepoint()).is_identity());
  auto alpha = P("(12)(35)(46)", 6);
  auto g = c.transporter(alpha);
  EXPECT_EQ(conjugate(g, c.basepoint()), alpha);
  EXPECT_EQ(conjugate(P("(45)", 6), c.basepoint()), alpha);
  EXPECT_THROW(c.transporter(P("(123)", 6)), std::invalid_argument);
}

TEST(Unmixed, TransporterOnRandomElements) {
  std::mt19937 rng(5);
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 5}, {3, 3}, {4, 3}, {6, 2}}) {
    UnmixedClass c(k, n);
    for (int t = 0; t < 50; ++t) {
      auto x = testing_support::random_class_element(c, rng);
      auto tr = c.transporter_checked(x);
      EXPECT_EQ(conjugate(tr.g, c.basepoint()), x);
      if (k == 2) {
        EXPECT_TRUE(tr.involution_found);
        EXPECT_LE(tr.g.order(), 2u);
      }
    }
  }
}

TEST(Unmixed, CanonicalInvolutionFormula) {
  UnmixedClass c(4, 2);
  EXPECT_EQ(c.canonical_involutions(1, 2).swap, P("(2 6)(4 8)", 8));
}

TEST(Unmixed, CanonicalInvolutionsConjugateCorrectly) {
  for (int r : {1, 2, 3, 4})
    for (int n : {2, 3, 4}) {
      if (2 * r * n > 16) continue;
      UnmixedClass c(2 * r, n);
      const auto& pi = c.basepoint();
      const auto id = Permutation::identity(c.degree());
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
          auto inv = c.canonical_involutions(i, j);
          const auto pij = pi * c.block_transposition(i, j);
          EXPECT_EQ(conjugate(inv.inverter, pi), pi.inverse());
          EXPECT_EQ(conjugate(inv.swap, pi), pij);
          EXPECT_EQ(conjugate(inv.swap_inverter, pi), pij.inverse()) << "r=" << r << " n=" << n << " (" << i << "," << j << ")";
          EXPECT_EQ(inv.inverter * inv.inverter, id);
          EXPECT_EQ(inv.swap * inv.swap, id);
          EXPECT_EQ(inv.swap_inverter * inv.swap_inverter, id);
        }
    }
  EXPECT_THROW(UnmixedClass(3, 2).canonical_involutions(1, 2), std::invalid_argument);
}
