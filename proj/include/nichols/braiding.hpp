#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/induced.hpp"
#include "nichols/matrix.hpp"
#include "nichols/unmixed.hpp"

namespace nichols {

// M(C, ρ): the class of type (k^n) with basepoint π, and ρ an irrep of Z(π).
struct YDModule {
  UnmixedClass cls;
  InducedRep rho;

  YDModule(UnmixedClass c, InducedRep r) : cls(std::move(c)), rho(std::move(r)) {
    if (rho.k() != cls.k() || rho.n() != cls.n()) throw std::invalid_argument("YDModule: representation of the wrong centralizer");
  }

  Matrix act(const NormalForm& g) const { return rho.evaluate(g); }
};

// (k n)! / (k^n n!)
inline mpz_class class_size(int k, int n) {
  mpz_class num = 1, den = 1;
  for (int i = 2; i <= k * n; ++i) num *= i;
  for (int j = 1; j <= n; ++j) den *= k * j;
  return num / den;
}

struct CapExceeded : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Class elements t_i with transporters g_i, g_i ▷ π = t_i.
struct Subrack {
  std::vector<Permutation> elements;
  std::vector<Permutation> transporters;
  std::vector<std::size_t> indices;  // positions in the listing the elements were drawn from, if any

  std::size_t size() const { return elements.size(); }

  void add(Permutation t, Permutation g) {
    elements.push_back(std::move(t));
    transporters.push_back(std::move(g));
  }

  bool is_abelian() const {
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = i + 1; j < size(); ++j)
        if (!commute(elements[i], elements[j])) return false;
    return true;
  }

  bool transporters_valid(const Permutation& pi) const {
    for (std::size_t i = 0; i < size(); ++i)
      if (conjugate(transporters[i], pi) != elements[i]) return false;
    return true;
  }
};

struct NotCommuting : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// γ_ij = g_j^{-1} t_i g_j in normal form.
inline NormalForm gamma(const UnmixedClass& cls, const Subrack& T, std::size_t i, std::size_t j) {
  if (!commute(T.elements[i], T.elements[j]))
    throw NotCommuting("gamma: " + to_cycle_string(T.elements[i]) + " and " + to_cycle_string(T.elements[j]) +
                       " do not commute");
  return cls.normal_form(conjugate(T.transporters[j].inverse(), T.elements[i]));
}

// The whole class, π first and the rest in image order, with canonical transporters.
struct ClassListing {
  std::vector<Permutation> elements;
  std::vector<Permutation> transporters;
  std::size_t non_involutions = 0;  // k = 2 transporters that could not be made involutions

  std::size_t size() const { return elements.size(); }
};

inline ClassListing enumerate_class(const UnmixedClass& cls, std::size_t max_class) {
  if (class_size(cls.k(), cls.n()) > max_class)
    throw CapExceeded("class of type " + cls.type().to_string() + " has " + class_size(cls.k(), cls.n()).get_str() +
                      " elements, above the cap " + std::to_string(max_class));
  ClassListing out;
  out.elements.push_back(cls.basepoint());
  for (auto& p : conjugacy_class(cls.type(), cls.degree()))
    if (p != cls.basepoint()) out.elements.push_back(std::move(p));
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (i == 0) {
      out.transporters.push_back(Permutation::identity(cls.degree()));
      continue;
    }
    auto tr = cls.transporter_checked(out.elements[i]);
    if (tr.involution_requested && !tr.involution_found) ++out.non_involutions;
    out.transporters.push_back(tr.g);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> commuting_graph(const std::vector<Permutation>& elements) {
  std::vector<std::vector<std::size_t>> adj(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (std::size_t j = i + 1; j < elements.size(); ++j)
      if (commute(elements[i], elements[j])) {
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  return adj;
}

// Class elements commuting with π, π first and the rest in image order.
inline std::vector<Permutation> basepoint_neighborhood(const UnmixedClass& cls) {
  std::vector<Permutation> rest;
  for (const auto& z : cls.centralizer_elements()) {
    Permutation p = cls.assemble(z);
    if (p != cls.basepoint() && cycle_type(p) == cls.type()) rest.push_back(std::move(p));
  }
  std::sort(rest.begin(), rest.end());
  std::vector<Permutation> out{cls.basepoint()};
  out.insert(out.end(), rest.begin(), rest.end());
  return out;
}

// Orbits of a conjugation-stable set under the group generated by `gens`; orbit ids follow
// the position of each orbit's first element.
inline std::vector<std::size_t> conjugation_orbits(const std::vector<Permutation>& elements,
                                                    const std::vector<Permutation>& gens) {
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  const std::size_t none = elements.size();
  std::vector<std::size_t> orbit(elements.size(), none);
  std::size_t next = 0;
  for (std::size_t s = 0; s < elements.size(); ++s) {
    if (orbit[s] != none) continue;
    std::vector<std::size_t> stack{s};
    orbit[s] = next;
    while (!stack.empty()) {
      std::size_t x = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        auto it = index.find(conjugate(g, elements[x]));
        if (it == index.end()) throw std::logic_error("conjugation_orbits: set is not closed under conjugation");
        if (orbit[it->second] == none) {
          orbit[it->second] = next;
          stack.push_back(it->second);
        }
      }
    }
    ++next;
  }
  return orbit;
}

namespace detail {

// Bron–Kerbosch with Tomita pivoting over a dense adjacency matrix. `emit` returns false to stop.
struct CliqueSearch {
  const std::vector<std::vector<char>>* adj;
  std::function<bool(const std::vector<std::size_t>&)> emit;
  std::vector<std::size_t> current;
  bool stopped = false;

  void run(std::vector<std::size_t> P, std::vector<std::size_t> X) {
    if (stopped) return;
    if (P.empty() && X.empty()) {
      std::vector<std::size_t> c = current;
      std::sort(c.begin(), c.end());
      if (!emit(c)) stopped = true;
      return;
    }
    const auto& A = *adj;
    std::size_t pivot = 0, best = 0;
    bool have = false;
    for (const auto* S : {&P, &X})
      for (std::size_t u : *S) {
        std::size_t cnt = 0;
        for (std::size_t v : P) cnt += A[u][v];
        if (!have || cnt > best) {
          pivot = u;
          best = cnt;
          have = true;
        }
      }
    std::vector<std::size_t> candidates;
    for (std::size_t v : P)
      if (!A[pivot][v]) candidates.push_back(v);
    for (std::size_t v : candidates) {
      std::vector<std::size_t> P2, X2;
      for (std::size_t w : P)
        if (A[v][w]) P2.push_back(w);
      for (std::size_t w : X)
        if (A[v][w]) X2.push_back(w);
      current.push_back(v);
      run(std::move(P2), std::move(X2));
      current.pop_back();
      if (stopped) return;
      P.erase(std::find(P.begin(), P.end(), v));
      X.push_back(v);
    }
  }
};

}  // namespace detail

// Maximal cliques of a graph on {0..N-1}, each sorted. Returns false if `emit` stopped early.
inline bool maximal_cliques(const std::vector<std::vector<char>>& adj,
                            const std::function<bool(const std::vector<std::size_t>&)>& emit) {
  detail::CliqueSearch s{&adj, emit, {}, false};
  std::vector<std::size_t> P(adj.size());
  std::iota(P.begin(), P.end(), 0);
  s.run(std::move(P), {});
  return !s.stopped;
}

struct SubrackOrbit {
  std::vector<std::size_t> representative;  // sorted indices into SubrackInventory::elements
  std::size_t clique_size = 0;
  mpz_class class_orbit_size;               // number of maximal abelian subracks of C in this orbit
  std::size_t cliques_through_basepoint = 0;
};

struct SubrackInventory {
  bool reduced = true;
  std::vector<Permutation> elements;  // the neighbourhood of π (reduced) or the whole class
  std::vector<SubrackOrbit> orbits;
  std::size_t cliques_enumerated = 0;
  bool partial = false;

  // (clique size, orbit size) pairs, sorted.
  std::vector<std::pair<std::size_t, mpz_class>> distribution() const {
    std::vector<std::pair<std::size_t, mpz_class>> out;
    for (const auto& o : orbits) out.emplace_back(o.clique_size, o.class_orbit_size);
    std::sort(out.begin(), out.end());
    return out;
  }
};

struct SubrackCaps {
  std::size_t max_class = 20000;
  std::size_t max_subracks = 200000;
};

namespace detail {

inline std::vector<std::vector<char>> dense_commuting(const std::vector<Permutation>& elements, bool skip_first) {
  const std::size_t off = skip_first ? 1 : 0;
  const std::size_t N = elements.size() - off;
  std::vector<std::vector<char>> adj(N, std::vector<char>(N, 0));
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (commute(elements[i + off], elements[j + off])) adj[i][j] = adj[j][i] = 1;
  return adj;
}

// Orbits of cliques under conjugation by `gens`, by search from each unvisited clique.
inline std::vector<std::size_t> clique_orbits(const std::vector<Permutation>& elements,
                                              const std::vector<std::vector<std::size_t>>& cliques,
                                              const std::vector<Permutation>& gens, std::size_t& count) {
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < elements.size(); ++i) index[elements[i]] = i;
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t c = 0; c < cliques.size(); ++c) where[cliques[c]] = c;
  const std::size_t none = cliques.size();
  std::vector<std::size_t> orbit(cliques.size(), none);
  count = 0;
  for (std::size_t s = 0; s < cliques.size(); ++s) {
    if (orbit[s] != none) continue;
    std::vector<std::size_t> stack{s};
    orbit[s] = count;
    while (!stack.empty()) {
      std::size_t c = stack.back();
      stack.pop_back();
      for (const auto& g : gens) {
        std::vector<std::size_t> img;
        for (std::size_t x : cliques[c]) img.push_back(index.at(conjugate(g, elements[x])));
        std::sort(img.begin(), img.end());
        auto it = where.find(img);
        if (it == where.end()) throw std::logic_error("clique_orbits: image is not an enumerated clique");
        if (orbit[it->second] == none) {
          orbit[it->second] = count;
          stack.push_back(it->second);
        }
      }
    }
    ++count;
  }
  return orbit;
}

}  // namespace detail

// Maximal abelian subracks of C, one entry per G-orbit. With reduction only cliques through π
// inside N(π) are enumerated and merged under Z(π) and the change of basepoint; without it the
// whole class is enumerated and orbits are taken under S_{kn}.
inline SubrackInventory maximal_abelian_subracks(const UnmixedClass& cls, const SubrackCaps& caps, bool reduce = true) {
  SubrackInventory inv;
  inv.reduced = reduce;
  std::vector<std::vector<std::size_t>> cliques;
  auto collect = [&](const std::vector<std::size_t>& c) {
    if (cliques.size() >= caps.max_subracks) {
      inv.partial = true;
      return false;
    }
    cliques.push_back(c);
    return true;
  };

  if (!reduce) {
    auto listing = enumerate_class(cls, caps.max_class);
    inv.elements = listing.elements;
    maximal_cliques(detail::dense_commuting(inv.elements, false), collect);
    inv.cliques_enumerated = cliques.size();
    std::vector<Permutation> gens;
    const std::size_t N = cls.degree();
    if (N >= 2) {
      gens.push_back(Permutation::from_cycles(N, {{1, 2}}));
      std::vector<int> full(N);
      std::iota(full.begin(), full.end(), 1);
      gens.push_back(Permutation::from_cycles(N, {full}));
    }
    std::size_t count = 0;
    auto orbit = detail::clique_orbits(inv.elements, cliques, gens, count);
    inv.orbits.resize(count);
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      auto& o = inv.orbits[orbit[c]];
      if (o.representative.empty()) {
        o.representative = cliques[c];
        o.clique_size = cliques[c].size();
      }
      o.class_orbit_size += 1;
      if (cliques[c].front() == 0) ++o.cliques_through_basepoint;
    }
    return inv;
  }

  inv.elements = basepoint_neighborhood(cls);
  maximal_cliques(detail::dense_commuting(inv.elements, true), [&](const std::vector<std::size_t>& c) {
    std::vector<std::size_t> shifted{0};
    for (std::size_t x : c) shifted.push_back(x + 1);
    return collect(shifted);
  });
  inv.cliques_enumerated = cliques.size();

  std::size_t count = 0;
  auto local = detail::clique_orbits(inv.elements, cliques, cls.centralizer_generators(), count);

  // Merge Z(π)-orbits that meet the same G-orbit: move each member x of a representative onto π.
  std::vector<std::size_t> parent(count);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) { return parent[x] == x ? x : parent[x] = find(parent[x]); };
  std::map<Permutation, std::size_t> index;
  for (std::size_t i = 0; i < inv.elements.size(); ++i) index[inv.elements[i]] = i;
  std::map<std::vector<std::size_t>, std::size_t> where;
  for (std::size_t c = 0; c < cliques.size(); ++c) where[cliques[c]] = c;
  std::vector<char> done(count, 0);
  if (!inv.partial)
    for (std::size_t c = 0; c < cliques.size(); ++c) {
      if (done[local[c]]) continue;
      done[local[c]] = 1;
      for (std::size_t x : cliques[c]) {
        if (x == 0) continue;
        const Permutation h = cls.transporter(inv.elements[x]).inverse();
        std::vector<std::size_t> img;
        for (std::size_t y : cliques[c]) img.push_back(index.at(conjugate(h, inv.elements[y])));
        std::sort(img.begin(), img.end());
        auto a = find(local[c]), b = find(local[where.at(img)]);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
      }
    }

  std::map<std::size_t, std::size_t> slot;
  for (std::size_t c = 0; c < cliques.size(); ++c) {
    const std::size_t root = find(local[c]);
    auto [it, fresh] = slot.emplace(root, inv.orbits.size());
    if (fresh) {
      SubrackOrbit o;
      o.representative = cliques[c];
      o.clique_size = cliques[c].size();
      inv.orbits.push_back(o);
    }
    auto& o = inv.orbits[it->second];
    ++o.cliques_through_basepoint;
    if (cliques[c] < o.representative) o.representative = cliques[c];
  }
  const mpz_class C = class_size(cls.k(), cls.n());
  for (auto& o : inv.orbits) o.class_orbit_size = C * o.cliques_through_basepoint / o.clique_size;
  return inv;
}

// Subrack on chosen elements of a listing, with canonical transporters (π gets the identity).
inline Subrack make_subrack(const UnmixedClass& cls, const std::vector<Permutation>& elements,
                            const std::vector<std::size_t>& members) {
  Subrack T;
  for (std::size_t x : members) {
    const Permutation& t = elements[x];
    T.add(t, t == cls.basepoint() ? Permutation::identity(cls.degree()) : cls.transporter(t));
    T.indices.push_back(x);
  }
  return T;
}

// {π, α, β} on the last two blocks: α = σ_2 ▷ π, β = σ_3 ▷ π with σ_2 = (2n−2 2n−1), σ_3 = (2n−2 2n).
inline Subrack last_pair_triple(const UnmixedClass& cls) {
  if (cls.k() != 2) throw std::invalid_argument("last_pair_triple: requires k = 2");
  const int n = cls.n();
  if (n < 2) throw std::invalid_argument("last_pair_triple: requires n >= 2");
  const std::size_t N = cls.degree();
  Subrack T;
  T.add(cls.basepoint(), Permutation::identity(N));
  for (int c : {2 * n - 1, 2 * n}) {
    Permutation s = Permutation::from_cycles(N, {{2 * n - 2, c}});
    T.add(conjugate(s, cls.basepoint()), s);
  }
  return T;
}

// T = {π} ∪ {σ_{l_m}^± ⋯ σ_{l_1}^± ▷ π} with σ_l^+ = (4l−2 4l−1), σ_l^- = (4l−2 4l), 1 ≤ l ≤ ⌊n/2⌋.
// Ordered by the number of factors, then the index set, then signs with + before −; this gives
// π_0 = π, π_1 = α_1, π_2 = β_1, π_3 = α_2, …
inline Subrack canonical_subrack(const UnmixedClass& cls) {
  if (cls.k() != 2) throw std::invalid_argument("canonical_subrack: requires k = 2");
  const int L = cls.n() / 2;
  const std::size_t N = cls.degree();
  Subrack T;
  T.add(cls.basepoint(), Permutation::identity(N));
  for (int m = 1; m <= L; ++m) {
    std::vector<int> pick(m);
    std::function<void(int, int)> choose = [&](int pos, int from) {
      if (pos == m) {
        for (int signs = 0; signs < (1 << m); ++signs) {
          std::vector<std::vector<int>> cycles;
          for (int a = 0; a < m; ++a) {
            const int l = pick[a];
            const bool minus = (signs >> (m - 1 - a)) & 1;
            cycles.push_back({4 * l - 2, minus ? 4 * l : 4 * l - 1});
          }
          Permutation g = Permutation::from_cycles(N, cycles);
          T.add(conjugate(g, cls.basepoint()), g);
        }
        return;
      }
      for (int l = from; l <= L; ++l) {
        pick[pos] = l;
        choose(pos + 1, l + 1);
      }
    };
    choose(0, 1);
  }
  if (!T.is_abelian()) throw std::logic_error("canonical_subrack: result is not abelian");
  return T;
}

// {π, π^{-1}, π B_ij, (π B_ij)^{-1}} with transporters (id, σ, σ_(i,j), σ̃_(i,j)).
inline Subrack quadruple_subrack(const UnmixedClass& cls, int i, int j) {
  if (cls.k() % 2 != 0) throw std::invalid_argument("quadruple_subrack: requires k even");
  auto inv = cls.canonical_involutions(i, j);
  const Permutation& pi = cls.basepoint();
  const Permutation pij = pi * cls.block_transposition(i, j);
  Subrack T;
  T.add(pi, Permutation::identity(cls.degree()));
  T.add(pi.inverse(), inv.inverter);
  T.add(pij, inv.swap);
  T.add(pij.inverse(), inv.swap_inverter);
  if (!T.transporters_valid(pi)) throw std::logic_error("quadruple_subrack: transporter mismatch");
  if (!T.is_abelian()) throw std::logic_error("quadruple_subrack: result is not abelian");
  return T;
}

// {π, π^{-1}, A_1^{-1} A_2 ⋯ A_n, its inverse} with transporters (id, σ, σ_1, σ_2 ⋯ σ_n).
inline Subrack inversion_quadruple(const UnmixedClass& cls) {
  if (cls.k() % 2 != 0 || cls.n() < 2) throw std::invalid_argument("inversion_quadruple: requires k even and n >= 2");
  const std::size_t N = cls.degree();
  Permutation all = Permutation::identity(N), rest = Permutation::identity(N);
  for (int h = 1; h <= cls.n(); ++h) {
    all = all * cls.block_reversal(h);
    if (h >= 2) rest = rest * cls.block_reversal(h);
  }
  const Permutation& pi = cls.basepoint();
  Permutation t = cls.cycle_generator(1).inverse();
  for (int h = 2; h <= cls.n(); ++h) t = t * cls.cycle_generator(h);
  Subrack T;
  T.add(pi, Permutation::identity(N));
  T.add(pi.inverse(), all);
  T.add(t, cls.block_reversal(1));
  T.add(t.inverse(), rest);
  if (!T.transporters_valid(pi)) throw std::logic_error("inversion_quadruple: transporter mismatch");
  return T;
}

// One diagonal vertex: copy `member` of the subrack, eigenvector `index` of that copy.
struct DiagonalVertex {
  std::size_t member = 0;
  std::size_t index = 0;
  friend bool operator==(const DiagonalVertex&, const DiagonalVertex&) = default;
};

using QMatrix = std::vector<std::vector<RootOfUnity>>;

// W = span{g_j v : j ∈ T, v in the j-th eigenbasis}, where the j-th basis diagonalizes every
// ρ(γ_ij), i ∈ T. Then c(g_i v ⊗ g_j w) = q · g_j w ⊗ g_i v with q the eigenvalue of ρ(γ_ij) on w.
struct DiagonalSubspace {
  Subrack subrack;
  std::vector<std::vector<Vector>> bases;                   // [j][s]
  std::vector<std::vector<std::vector<RootOfUnity>>> eig;   // [j][i][s]
  std::vector<DiagonalVertex> vertices;

  std::size_t size() const { return vertices.size(); }

  RootOfUnity q(std::size_t a, std::size_t b) const {
    const auto& va = vertices[a];
    const auto& vb = vertices[b];
    return eig[vb.member][va.member][vb.index];
  }

  QMatrix matrix() const {
    QMatrix Q(size(), std::vector<RootOfUnity>(size()));
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b) Q[a][b] = q(a, b);
    return Q;
  }

  // Joint eigenvalues of vertex a over the copy's family, in subrack order.
  std::vector<RootOfUnity> signature(std::size_t a) const {
    std::vector<RootOfUnity> s;
    for (std::size_t i = 0; i < subrack.size(); ++i) s.push_back(eig[vertices[a].member][i][vertices[a].index]);
    return s;
  }

  DiagonalSubspace restricted(const std::vector<std::size_t>& keep) const {
    DiagonalSubspace out = *this;
    out.vertices.clear();
    for (std::size_t a : keep) out.vertices.push_back(vertices.at(a));
    return out;
  }
};

// Per-copy common eigenbasis of {ρ(γ_ij) : i ∈ T}; these commute because T is abelian.
// Each joint eigenspace is given its reduced row echelon basis, so equal eigenspaces in different
// copies get equal vectors.
inline DiagonalSubspace diagonal_subspace(const YDModule& yd, const Subrack& T) {
  if (!T.is_abelian()) throw NotCommuting("diagonal_subspace: subrack is not abelian");
  DiagonalSubspace D;
  D.subrack = T;
  const std::size_t M = T.size();
  D.bases.resize(M);
  D.eig.resize(M);
  for (std::size_t j = 0; j < M; ++j) {
    std::vector<Matrix> family;
    std::vector<int> orders;
    for (std::size_t i = 0; i < M; ++i) {
      family.push_back(yd.act(gamma(yd.cls, T, i, j)));
      orders.push_back(yd.cls.k());
    }
    auto se = simultaneous_diagonalize(family, orders);
    std::map<std::vector<std::pair<int, int>>, std::vector<std::size_t>> groups;
    std::vector<std::vector<std::pair<int, int>>> keys;
    for (std::size_t s = 0; s < se.basis.size(); ++s) {
      std::vector<std::pair<int, int>> key;
      for (std::size_t i = 0; i < M; ++i) {
        auto z = se.eigenvalues[i][s].reduced();
        key.emplace_back(z.m, z.a);
      }
      if (!groups.count(key)) keys.push_back(key);
      groups[key].push_back(s);
    }
    D.eig[j].assign(M, {});
    for (const auto& key : keys) {
      const auto& members = groups[key];
      Matrix rows(members.size(), yd.rho.dim());
      for (std::size_t r = 0; r < members.size(); ++r)
        for (std::size_t c = 0; c < yd.rho.dim(); ++c) rows(r, c) = se.basis[members[r]][c];
      auto red = rref(rows).reduced;
      for (std::size_t r = 0; r < members.size(); ++r) {
        Vector v(yd.rho.dim());
        for (std::size_t c = 0; c < yd.rho.dim(); ++c) v[c] = red(r, c);
        D.bases[j].push_back(std::move(v));
        for (std::size_t i = 0; i < M; ++i) D.eig[j][i].push_back(se.eigenvalues[i][members[r]]);
      }
    }
  }
  for (std::size_t j = 0; j < M; ++j)
    for (std::size_t s = 0; s < D.bases[j].size(); ++s) D.vertices.push_back({j, s});
  return D;
}

// Recomputes ρ(γ_ij) w for every vertex pair and checks w is an eigenvector with the stored value.
inline bool verify_diagonal(const YDModule& yd, const DiagonalSubspace& D) {
  std::map<std::pair<std::size_t, std::size_t>, Matrix> cache;
  for (std::size_t a = 0; a < D.size(); ++a)
    for (std::size_t b = 0; b < D.size(); ++b) {
      const auto i = D.vertices[a].member, j = D.vertices[b].member;
      auto key = std::pair(i, j);
      auto it = cache.find(key);
      if (it == cache.end()) it = cache.emplace(key, yd.act(gamma(yd.cls, D.subrack, i, j))).first;
      const Vector& w = D.bases[j][D.vertices[b].index];
      const Vector img = it->second * w;
      const Cyclotomic lam = Cyclotomic::root(D.q(a, b));
      for (std::size_t c = 0; c < w.size(); ++c)
        if (!(img[c] == lam * w[c])) return false;
    }
  return true;
}

// Generalized Dynkin diagram: vertex a labelled q_aa, edge a–b labelled q_ab q_ba when ≠ 1.
struct DynkinDiagram {
  struct Edge {
    std::size_t a, b;
    RootOfUnity label;
  };
  std::vector<RootOfUnity> vertices;
  std::vector<Edge> edges;

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(vertices.size());
    for (const auto& e : edges) {
      adj[e.a].push_back(e.b);
      adj[e.b].push_back(e.a);
    }
    return adj;
  }

  std::optional<RootOfUnity> edge_label(std::size_t a, std::size_t b) const {
    for (const auto& e : edges)
      if ((e.a == a && e.b == b) || (e.a == b && e.b == a)) return e.label;
    return std::nullopt;
  }

  std::vector<std::vector<std::size_t>> components() const {
    auto adj = adjacency();
    std::vector<int> comp(vertices.size(), -1);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t s = 0; s < vertices.size(); ++s) {
      if (comp[s] >= 0) continue;
      out.emplace_back();
      std::vector<std::size_t> stack{s};
      comp[s] = static_cast<int>(out.size() - 1);
      while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        out.back().push_back(x);
        for (auto y : adj[x])
          if (comp[y] < 0) {
            comp[y] = comp[s];
            stack.push_back(y);
          }
      }
      std::sort(out.back().begin(), out.back().end());
    }
    return out;
  }

  std::string to_dot() const {
    std::ostringstream os;
    os << "graph dynkin {\n";
    for (std::size_t a = 0; a < vertices.size(); ++a)
      os << "  v" << a << " [label=\"" << vertices[a].reduced().to_string() << "\"];\n";
    for (const auto& e : edges)
      os << "  v" << e.a << " -- v" << e.b << " [label=\"" << e.label.reduced().to_string() << "\"];\n";
    os << "}\n";
    return os.str();
  }
};

inline DynkinDiagram dynkin_diagram(const QMatrix& Q) {
  DynkinDiagram G;
  for (std::size_t a = 0; a < Q.size(); ++a) G.vertices.push_back(Q[a][a].reduced());
  for (std::size_t a = 0; a < Q.size(); ++a)
    for (std::size_t b = a + 1; b < Q.size(); ++b) {
      auto p = Q[a][b] * Q[b][a];
      if (!p.is_one()) G.edges.push_back({a, b, p.reduced()});
    }
  return G;
}

inline DynkinDiagram dynkin_diagram(const DiagonalSubspace& D) { return dynkin_diagram(D.matrix()); }

inline std::string q_matrix_string(const QMatrix& Q) {
  std::string s;
  for (const auto& row : Q) {
    for (std::size_t b = 0; b < row.size(); ++b) s += (b ? " " : "") + row[b].reduced().to_string();
    s += "\n";
  }
  return s;
}

}  // namespace nichols
