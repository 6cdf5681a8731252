#include <gtest/gtest.h>

#include <map>
#include <set>

#include "oracles.hpp"
#include "support.hpp"

using namespace nichols;
using namespace testing_support;

namespace {

Subrack prefix(const Subrack& T, std::size_t m) {
  Subrack out;
  for (std::size_t i = 0; i < m; ++i) out.add(T.elements[i], T.transporters[i]);
  return out;
}

// Canonical string of one connected diagram component, minimized over vertex orderings.
std::string component_form(const DynkinDiagram& G, const std::vector<std::size_t>& comp) {
  std::vector<std::size_t> order = comp;
  std::string best;
  auto encode = [&] {
    std::string s;
    for (auto a : order) s += G.vertices[a].reduced().to_string() + ";";
    for (std::size_t x = 0; x < order.size(); ++x)
      for (std::size_t y = x + 1; y < order.size(); ++y) {
        auto e = G.edge_label(order[x], order[y]);
        s += e ? e->reduced().to_string() : "-";
        s += ",";
      }
    return s;
  };
  if (comp.size() > 8) {
    std::multiset<std::string> parts;
    for (auto a : comp) {
      std::string s = G.vertices[a].reduced().to_string() + ":";
      std::multiset<std::string> nb;
      for (auto b : comp)
        if (auto e = G.edge_label(a, b); e && a != b) nb.insert(e->reduced().to_string());
      for (const auto& x : nb) s += x;
      parts.insert(s);
    }
    std::string s;
    for (const auto& p : parts) s += p + "|";
    return s;
  }
  std::sort(order.begin(), order.end());
  do {
    auto s = encode();
    if (best.empty() || s < best) best = s;
  } while (std::next_permutation(order.begin(), order.end()));
  return best;
}

std::multiset<std::string> diagram_classes(const DynkinDiagram& G) {
  std::multiset<std::string> out;
  for (const auto& c : G.components()) out.insert(component_form(G, c));
  return out;
}

}  // namespace

TEST(Gamma, BasepointAndSmallExamples) {
  UnmixedClass c(2, 3);
  Subrack T;
  T.add(c.basepoint(), Permutation::identity(6));
  const Permutation g = P("(4 5)", 6);
  T.add(conjugate(g, c.basepoint()), g);
  EXPECT_EQ(c.assemble(gamma(c, T, 0, 0)), c.basepoint());
  EXPECT_EQ(c.assemble(gamma(c, T, 1, 1)), c.basepoint());
  const NormalForm g01 = gamma(c, T, 0, 1), g10 = gamma(c, T, 1, 0);
  EXPECT_EQ(g01, g10);
  EXPECT_EQ(g10.d, (std::vector<int>{1, 0, 0}));
  EXPECT_EQ(g10.b, P("(2 3)", 3));
  EXPECT_EQ(c.assemble(g10), P("(1 2)(3 5)(4 6)", 6));
}

TEST(Gamma, InvolutionTransporterGivesSymmetricGamma) {
  std::mt19937 rng(11);
  for (int n : {2, 3, 4}) {
    UnmixedClass c(2, n);
    auto nb = basepoint_neighborhood(c);
    for (std::size_t x = 1; x < nb.size(); ++x) {
      Subrack T = make_subrack(c, nb, {0, x});
      ASSERT_LE(T.transporters[1].order(), 2u);
      EXPECT_EQ(c.assemble(gamma(c, T, 1, 0)), T.elements[1]);
      EXPECT_EQ(c.assemble(gamma(c, T, 0, 1)), T.elements[1]);
    }
  }
}

TEST(Gamma, NonCommutingThrows) {
  UnmixedClass c(2, 3);
  auto L = enumerate_class(c, 1000);
  std::size_t x = 1;
  while (commute(L.elements[x], c.basepoint())) ++x;
  Subrack T = make_subrack(c, L.elements, {0, x});
  ASSERT_FALSE(T.is_abelian());
  EXPECT_THROW(gamma(c, T, 0, 1), NotCommuting);
}

TEST(CommutingGraph, SmallClasses) {
  UnmixedClass c22(2, 2);
  auto L = enumerate_class(c22, 1000);
  ASSERT_EQ(L.size(), 3u);
  auto adj = commuting_graph(L.elements);
  for (const auto& a : adj) EXPECT_EQ(a.size(), 2u);

  UnmixedClass c23(2, 3);
  auto L3 = enumerate_class(c23, 1000);
  ASSERT_EQ(L3.size(), 15u);
  auto adj3 = commuting_graph(L3.elements);
  auto tri = last_pair_triple(c23);
  for (std::size_t i = 1; i < 3; ++i) {
    auto it = std::find(L3.elements.begin(), L3.elements.end(), tri.elements[i]);
    ASSERT_NE(it, L3.elements.end());
    const std::size_t idx = it - L3.elements.begin();
    EXPECT_NE(std::find(adj3[0].begin(), adj3[0].end(), idx), adj3[0].end());
  }
  EXPECT_TRUE(L3.transporters.size() == 15 && L3.non_involutions == 0);
  for (std::size_t i = 0; i < L3.size(); ++i) EXPECT_EQ(conjugate(L3.transporters[i], c23.basepoint()), L3.elements[i]);
}

TEST(CommutingGraph, DegreesInvariantUnderConjugation) {
  std::mt19937 rng(5);
  for (auto [k, n] : {std::pair{2, 3}, {3, 2}, {2, 4}, {4, 2}}) {
    UnmixedClass c(k, n);
    auto L = enumerate_class(c, 10000);
    auto adj = commuting_graph(L.elements);
    std::map<Permutation, std::size_t> pos;
    for (std::size_t i = 0; i < L.size(); ++i) pos[L.elements[i]] = i;
    for (int rep = 0; rep < 3; ++rep) {
      const Permutation h = random_permutation(c.degree(), rng);
      for (std::size_t i = 0; i < L.size(); ++i) {
        const std::size_t j = pos.at(conjugate(h, L.elements[i]));
        EXPECT_EQ(adj[i].size(), adj[j].size());
      }
    }
  }
}

TEST(MaximalSubracks, SingleCycle) {
  for (int k : {3, 4, 5, 6}) {
    UnmixedClass c(k, 1);
    auto inv = maximal_abelian_subracks(c, SubrackCaps{}, true);
    ASSERT_EQ(inv.orbits.size(), 1u) << k;
    const auto& o = inv.orbits[0];
    std::set<Permutation> got, want;
    for (auto x : o.representative) got.insert(inv.elements[x]);
    for (int j = 1; j < k; ++j)
      if (std::gcd(j, k) == 1) want.insert(power(c.basepoint(), j));
    EXPECT_EQ(got, want) << k;
    EXPECT_EQ(o.clique_size, want.size());
    EXPECT_EQ(o.class_orbit_size * o.clique_size, class_size(k, 1));
  }
}

TEST(MaximalSubracks, TwoTranspositions) {
  UnmixedClass c(2, 2);
  for (bool reduce : {true, false}) {
    auto inv = maximal_abelian_subracks(c, SubrackCaps{}, reduce);
    ASSERT_EQ(inv.orbits.size(), 1u);
    EXPECT_EQ(inv.orbits[0].clique_size, 3u);
    EXPECT_EQ(inv.orbits[0].class_orbit_size, 1);
  }
}

TEST(MaximalSubracks, BruteForceOracleS6) {
  for (int n : {2, 3}) {
    UnmixedClass c(2, n);
    const auto want = brute_force_distribution(c);
    for (bool reduce : {true, false}) EXPECT_EQ(maximal_abelian_subracks(c, SubrackCaps{}, reduce).distribution(), want) << n;
  }
}

TEST(MaximalSubracks, ReducedMatchesUnreduced) {
  for (auto [k, n] : {std::pair{3, 2}, {4, 2}, {2, 4}, {3, 3}, {2, 5}}) {
    UnmixedClass c(k, n);
    auto a = maximal_abelian_subracks(c, SubrackCaps{}, true);
    auto b = maximal_abelian_subracks(c, SubrackCaps{}, false);
    EXPECT_EQ(a.distribution(), b.distribution()) << k << "," << n;
    for (const auto& o : a.orbits) {
      std::vector<Permutation> els;
      for (auto x : o.representative) els.push_back(a.elements[x]);
      EXPECT_NE(std::find(els.begin(), els.end(), c.basepoint()), els.end());
      for (std::size_t i = 0; i < els.size(); ++i)
        for (std::size_t j = i + 1; j < els.size(); ++j) EXPECT_TRUE(commute(els[i], els[j]));
    }
  }
}

TEST(ExplicitSubracks, CanonicalForThreeCycles) {
  UnmixedClass c(2, 3);
  auto T = canonical_subrack(c);
  ASSERT_EQ(T.size(), 3u);
  EXPECT_EQ(T.elements[0], c.basepoint());
  EXPECT_EQ(T.elements[1], conjugate(P("(2 3)", 6), c.basepoint()));
  EXPECT_EQ(T.elements[2], conjugate(P("(2 4)", 6), c.basepoint()));
  EXPECT_TRUE(T.transporters_valid(c.basepoint()));
  auto tri = last_pair_triple(c);
  EXPECT_TRUE(tri.is_abelian());
  EXPECT_TRUE(tri.transporters_valid(c.basepoint()));
  // the two triples are conjugate by a block permutation fixing π
  const Permutation h = c.block_permutation(P("(1 3)", 3));
  std::set<Permutation> a(T.elements.begin(), T.elements.end()), b;
  for (const auto& t : tri.elements) b.insert(conjugate(h, t));
  EXPECT_EQ(a, b);
}

TEST(ExplicitSubracks, CanonicalForFiveCycles) {
  UnmixedClass c(2, 5);
  auto T = canonical_subrack(c);
  ASSERT_EQ(T.size(), 9u);
  auto A = [&](int j) { return c.cycle_generator(j); };
  auto B = [&](int i) { return c.block_swap(i); };
  const Permutation pi = c.basepoint();
  std::vector<Permutation> want = {
      pi,
      B(1) * A(3) * A(4) * A(5),
      pi * B(1),
      A(1) * A(2) * B(3) * A(5),
      pi * B(3),
      B(1) * B(3) * A(5),
      B(1) * A(3) * A(4) * B(3) * A(5),
      A(1) * A(2) * B(1) * B(3) * A(5),
      A(1) * A(2) * B(1) * A(3) * A(4) * B(3) * A(5),
  };
  for (std::size_t i = 0; i < 9; ++i) EXPECT_EQ(T.elements[i], want[i]) << i;
  EXPECT_TRUE(T.is_abelian());
  EXPECT_TRUE(T.transporters_valid(pi));
  for (const auto& g : T.transporters) EXPECT_LE(g.order(), 2u);
}

TEST(ExplicitSubracks, QuadrupleRelations) {
  // t_a g_b = g_b t_{f(a,b)}, indices 1-based.
  const int f[4][4] = {{1, 2, 3, 4}, {2, 1, 4, 3}, {3, 4, 1, 2}, {4, 3, 2, 1}};
  for (auto [k, n, i, j] : {std::tuple{4, 2, 1, 2}, {6, 2, 1, 2}, {8, 2, 1, 2}, {4, 3, 1, 2}, {4, 3, 1, 3}, {4, 3, 2, 3},
                            {6, 3, 2, 3}, {4, 4, 2, 4}}) {
    UnmixedClass c(k, n);
    auto T = quadruple_subrack(c, i, j);
    ASSERT_EQ(T.size(), 4u);
    std::set<Permutation> distinct(T.elements.begin(), T.elements.end());
    EXPECT_EQ(distinct.size(), 4u);
    EXPECT_EQ(T.elements[1], T.elements[0].inverse());
    EXPECT_EQ(T.elements[3], T.elements[2].inverse());
    EXPECT_EQ(T.elements[2], c.basepoint() * c.block_transposition(i, j));
    for (const auto& g : T.transporters) EXPECT_LE(g.order(), 2u);
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        EXPECT_EQ(T.elements[a] * T.transporters[b], T.transporters[b] * T.elements[f[a][b] - 1])
            << k << " " << n << " " << a << " " << b;
  }
}

TEST(ExplicitSubracks, InversionQuadruple) {
  for (auto [k, n] : {std::pair{4, 2}, {6, 2}, {4, 3}, {8, 2}}) {
    UnmixedClass c(k, n);
    auto T = inversion_quadruple(c);
    EXPECT_TRUE(T.is_abelian());
    EXPECT_TRUE(T.transporters_valid(c.basepoint()));
    EXPECT_EQ(T.elements[1], c.basepoint().inverse());
  }
}

TEST(DiagonalSubspace, BasepointOnlyDegreeOne) {
  auto lab = parse_rep_spec("chi=(1,1);mu=trivial", 3, 2);
  UnmixedClass c(3, 2);
  YDModule yd(c, build_rep(lab));
  auto D = diagonal_subspace(yd, make_subrack(c, {c.basepoint()}, {0}));
  ASSERT_EQ(D.size(), 1u);
  EXPECT_EQ(Cyclotomic::root(D.q(0, 0)), yd.rho.pi_scalar());
  EXPECT_TRUE(verify_diagonal(yd, D));
}

TEST(DiagonalSubspace, ThetaMinusOnTripleIsAffineCycle) {
  UnmixedClass c(2, 3);
  YDModule yd(c, build_rep(parse_rep_spec("chi=(1,1,1);mu=standard", 2, 3)));
  auto D = diagonal_subspace(yd, last_pair_triple(c));
  ASSERT_EQ(D.size(), 6u);
  EXPECT_TRUE(verify_diagonal(yd, D));
  auto G = dynkin_diagram(D);
  EXPECT_EQ(G.components().size(), 1u);
  EXPECT_EQ(G.edges.size(), 6u);
  for (const auto& a : G.adjacency()) EXPECT_EQ(a.size(), 2u);
  auto C = cartan_type(D.matrix());
  ASSERT_TRUE(std::holds_alternative<CartanData>(C));
  auto ft = finite_type(std::get<CartanData>(C));
  EXPECT_FALSE(ft.finite);
  EXPECT_EQ(ft.names, std::vector<std::string>{"A_5^(1)"});
}

TEST(DiagonalSubspace, SignStandardOnFiveCycles) {
  UnmixedClass c(2, 5);
  YDModule yd(c, build_rep(parse_rep_spec("chi=(1,1,1,1,1);mu=standard", 2, 5)));
  const Subrack T = prefix(canonical_subrack(c), 3);
  auto D = diagonal_subspace(yd, T);
  ASSERT_EQ(D.size(), 12u);
  EXPECT_TRUE(verify_diagonal(yd, D));

  const RootOfUnity m(2, 1), p(1, 0);
  const std::vector<std::pair<std::size_t, std::vector<RootOfUnity>>> w = {
      {0, {m, p, p}}, {0, {m, m, m}}, {1, {p, m, p}}, {1, {m, m, m}}, {2, {p, p, m}}, {2, {m, m, m}}};
  const int expected[6][6] = {{-1, -1, 1, -1, 1, -1}, {-1, -1, 1, -1, 1, -1}, {1, -1, -1, -1, 1, -1},
                             {1, -1, -1, -1, 1, -1}, {1, -1, 1, -1, -1, -1}, {1, -1, 1, -1, -1, -1}};
  std::vector<std::size_t> pick;
  for (const auto& [member, sig] : w) {
    std::optional<std::size_t> found;
    for (std::size_t a = 0; a < D.size() && !found; ++a)
      if (D.vertices[a].member == member && D.signature(a) == sig) found = a;
    ASSERT_TRUE(found) << member;
    pick.push_back(*found);
  }
  auto W = D.restricted(pick);
  auto Q = W.matrix();
  for (int a = 0; a < 6; ++a)
    for (int b = 0; b < 6; ++b) EXPECT_EQ(Q[a][b], expected[a][b] == 1 ? p : m) << a << "," << b;
  auto C = cartan_type(Q);
  ASSERT_TRUE(std::holds_alternative<CartanData>(C));
  EXPECT_EQ(finite_type(std::get<CartanData>(C)).names, std::vector<std::string>{"A_5^(1)"});

  // these vectors, in the basis e_{j+1} - e_1, are joint eigenvectors in every copy
  Matrix S(4, 4);
  for (std::size_t j = 0; j < 4; ++j)
    for (std::size_t i = 0; i <= j; ++i) S(i, j) = Cyclotomic(-1);
  const std::vector<std::vector<int>> vp = {{1, 0, 0, 0}, {0, 1, -1, 0}};
  for (std::size_t x = 0; x < w.size(); ++x) {
    const auto& [member, sig] = w[x];
    Vector v(4);
    for (std::size_t r = 0; r < 4; ++r) v[r] = Cyclotomic(vp[x % 2][r]);
    const Vector ours = S * v;
    for (std::size_t i = 0; i < 3; ++i) {
      const Vector img = yd.act(gamma(c, T, i, member)) * ours;
      for (std::size_t r = 0; r < 4; ++r) EXPECT_EQ(img[r], Cyclotomic::root(sig[i]) * ours[r]) << x << " " << i;
    }
  }
}

TEST(DiagonalSubspace, DiagonalEntriesArePiScalar) {
  for (auto [k, n] : {std::pair{2, 3}, {4, 2}, {3, 2}, {2, 4}}) {
    UnmixedClass c(k, n);
    auto inv = maximal_abelian_subracks(c, SubrackCaps{}, true);
    for (const auto& lab : enumerate_irreps(k, n)) {
      if (lab.catalog_gap) continue;
      YDModule yd(c, build_rep(lab));
      const auto scalar = yd.rho.pi_scalar();
      for (const auto& o : inv.orbits) {
        auto D = diagonal_subspace(yd, make_subrack(c, inv.elements, o.representative));
        for (std::size_t a = 0; a < D.size(); ++a) EXPECT_EQ(Cyclotomic::root(D.q(a, a)), scalar) << lab.spec();
      }
    }
  }
}

TEST(DiagonalSubspace, TransporterChoiceDoesNotMatter) {
  std::mt19937 rng(17);
  std::vector<std::pair<UnmixedClass, Subrack>> cases;
  for (int n : {3, 4}) cases.emplace_back(UnmixedClass(2, n), canonical_subrack(UnmixedClass(2, n)));
  cases.emplace_back(UnmixedClass(2, 3), last_pair_triple(UnmixedClass(2, 3)));
  cases.emplace_back(UnmixedClass(4, 2), quadruple_subrack(UnmixedClass(4, 2), 1, 2));
  cases.emplace_back(UnmixedClass(4, 2), inversion_quadruple(UnmixedClass(4, 2)));
  cases.emplace_back(UnmixedClass(6, 2), quadruple_subrack(UnmixedClass(6, 2), 1, 2));
  for (const auto& [c, T] : cases) {
    for (const auto& lab : enumerate_irreps(c.k(), c.n())) {
      if (lab.catalog_gap) continue;
      YDModule yd(c, build_rep(lab));
      auto D = diagonal_subspace(yd, T);
      for (int rep = 0; rep < 2; ++rep) {
        Subrack T2;
        for (std::size_t i = 0; i < T.size(); ++i)
          T2.add(T.elements[i], T.transporters[i] * c.assemble(random_normal_form(c, rng)));
        ASSERT_TRUE(T2.transporters_valid(c.basepoint()));
        auto D2 = diagonal_subspace(yd, T2);
        ASSERT_EQ(D.size(), D2.size());
        if (lab.dim == 1) {
          EXPECT_EQ(D.matrix(), D2.matrix()) << lab.spec();
        } else {
          EXPECT_EQ(diagram_classes(dynkin_diagram(D)), diagram_classes(dynkin_diagram(D2))) << lab.spec();
        }
      }
    }
  }
}

TEST(CommutingPairs, SignCharacterPairsAreSymmetricForOddN) {
  for (int n : {3, 5}) {
    UnmixedClass c(2, n);
    std::string spec = "chi=(";
    for (int j = 0; j < n; ++j) spec += (j ? ",1" : "1");
    spec += ");mu=trivial";
    YDModule yd(c, build_rep(parse_rep_spec(spec, 2, n)));
    auto L = enumerate_class(c, 10000);
    auto adj = commuting_graph(L.elements);
    std::size_t pairs = 0;
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j : adj[i]) {
        if (j < i) continue;
        Subrack T;
        T.add(L.elements[i], L.transporters[i]);
        T.add(L.elements[j], L.transporters[j]);
        const Cyclotomic qij = yd.act(gamma(c, T, 0, 1))(0, 0), qji = yd.act(gamma(c, T, 1, 0))(0, 0);
        EXPECT_EQ(qij * qji, Cyclotomic(1));
        ++pairs;
      }
    EXPECT_GT(pairs, 0u);
  }
}

TEST(CommutingPairs, ExponentSumsAndBlockTypes) {
  for (auto [k, n] : {std::pair{4, 2}, {4, 3}, {6, 2}, {8, 2}, {4, 4}, {6, 3}}) {
    UnmixedClass c(k, n);
    const int r = k / 2;
    const auto nb = basepoint_neighborhood(c);
    for (std::size_t x = 1; x < nb.size(); ++x) {
      Subrack T = make_subrack(c, nb, {0, x});
      const NormalForm gl1 = gamma(c, T, 1, 0), g1l = gamma(c, T, 0, 1);
      ASSERT_EQ(c.assemble(gl1), nb[x]);
      EXPECT_EQ(cycle_type(gl1.b), cycle_type(g1l.b)) << to_cycle_string(nb[x]);
      int s = 0;
      for (int j = 0; j < n; ++j) s += gl1.d[j] + g1l.d[j];
      if (n % 2 == 1) {
        EXPECT_EQ(s % 2, 0) << to_cycle_string(nb[x]);
      }
      if (r % 2 == 0 && n % 2 == 0) {
        EXPECT_EQ(s % 4, 0) << to_cycle_string(nb[x]);
      }
    }
  }
}
