#pragma once

#include <algorithm>
#include <exception>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <thread>
#include <variant>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cartan.hpp"
#include "nichols/induced.hpp"

namespace nichols {

enum class Outcome { InfiniteDim, NegativeBraiding, Undecided };

inline std::string to_string(Outcome o) {
  switch (o) {
    case Outcome::InfiniteDim: return "InfiniteDim";
    case Outcome::NegativeBraiding: return "NegativeBraiding";
    case Outcome::Undecided: return "Undecided";
  }
  return "?";
}

namespace rule {
inline constexpr const char* scalar_gate = "scalar-gate";
inline constexpr const char* fixed_vector = "fixed-vector";
inline constexpr const char* non_finite_cartan = "non-finite-cartan";
inline constexpr const char* four_cycle = "four-cycle";
inline constexpr const char* negativity = "negativity";
inline constexpr const char* closed_form = "closed-form";
inline constexpr const char* catalog_gap = "catalog-gap";
inline constexpr const char* exhausted = "no-rule-applies";
}  // namespace rule

// Infinite dimension is certified by the scalar gate: q_ππ ≠ −1, or k odd.
inline bool scalar_gate_fires(const RootOfUnity& q, int ord_pi) { return ord_pi % 2 != 0 || !(q == RootOfUnity(2, 1)); }

// Induced 4-cycle a–b–c–d with every vertex −1 and edge labels x, x^{-1}, x, x^{-1}, x ≠ 1.
inline std::optional<std::vector<std::size_t>> cycle_rule(const DynkinDiagram& G) {
  const RootOfUnity minus_one(2, 1);
  const auto adj = G.adjacency();
  const std::size_t m = G.vertices.size();
  auto label = [&](std::size_t x, std::size_t y) { return G.edge_label(x, y); };
  for (std::size_t a = 0; a < m; ++a) {
    if (!(G.vertices[a] == minus_one)) continue;
    for (std::size_t b : adj[a]) {
      if (b <= a || !(G.vertices[b] == minus_one)) continue;
      const RootOfUnity x = *label(a, b);
      for (std::size_t c : adj[b]) {
        if (c <= a || c == b || label(a, c) || !(G.vertices[c] == minus_one)) continue;
        if (!(*label(b, c) == x.inverse())) continue;
        for (std::size_t d : adj[c]) {
          if (d <= a || d == b || label(b, d) || !(G.vertices[d] == minus_one)) continue;
          auto da = label(d, a);
          if (!da) continue;
          if (*label(c, d) == x && *da == x.inverse()) return std::vector<std::size_t>{a, b, c, d};
        }
      }
    }
  }
  return std::nullopt;
}

struct Finding {
  std::string rule;
  std::vector<std::size_t> vertices;  // the vertices that trigger the rule
  std::optional<CartanData> cartan;   // of the triggering components
  std::vector<std::string> names;
};

// Applies the fixed-vector rule, then the Cartan test per connected component, then the cycle rule.
inline std::optional<Finding> find_infinite(const QMatrix& Q) {
  for (std::size_t a = 0; a < Q.size(); ++a)
    if (Q[a][a].is_one()) return Finding{rule::fixed_vector, {a}, std::nullopt, {}};
  const DynkinDiagram G = dynkin_diagram(Q);
  Finding f{rule::non_finite_cartan, {}, std::nullopt, {}};
  for (const auto& comp : G.components()) {
    QMatrix sub(comp.size(), std::vector<RootOfUnity>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j = 0; j < comp.size(); ++j) sub[i][j] = Q[comp[i]][comp[j]];
    auto ct = cartan_type(sub);
    if (!std::holds_alternative<CartanData>(ct)) continue;
    auto ft = finite_type(std::get<CartanData>(ct));
    if (ft.finite) continue;
    f.vertices.insert(f.vertices.end(), comp.begin(), comp.end());
    f.names.insert(f.names.end(), ft.names.begin(), ft.names.end());
  }
  if (!f.vertices.empty()) {
    std::sort(f.vertices.begin(), f.vertices.end());
    QMatrix sub(f.vertices.size(), std::vector<RootOfUnity>(f.vertices.size()));
    for (std::size_t i = 0; i < f.vertices.size(); ++i)
      for (std::size_t j = 0; j < f.vertices.size(); ++j) sub[i][j] = Q[f.vertices[i]][f.vertices[j]];
    f.cartan = std::get<CartanData>(cartan_type(sub));
    return f;
  }
  if (auto cyc = cycle_rule(G)) return Finding{rule::four_cycle, *cyc, std::nullopt, {}};
  return std::nullopt;
}

struct Witness {
  std::string origin;  // which candidate subrack produced it
  DiagonalSubspace subspace;
  QMatrix Q;
  Finding finding;
  DynkinDiagram diagram;
};

struct NegativityCertificate {
  bool reduced = true;
  std::size_t pairs_checked = 0;   // pairs actually diagonalized
  mpz_class pairs_covered;         // ordered commuting pairs (i, j), i ≠ j, accounted for
};

struct Verdict {
  int k = 0, n = 0;
  std::string rep;
  std::size_t degree = 0;
  RootOfUnity q_pipi;
  Outcome outcome = Outcome::Undecided;
  std::string rule;
  std::string detail;
  std::optional<Witness> witness;
  std::optional<NegativityCertificate> negativity;
  std::vector<std::string> notes;
};

struct DecideConfig {
  bool symmetry = true;
  unsigned threads = 1;
  SubrackCaps caps;
  bool use_cliques = true;
};

namespace detail {

// Runs f(i) for i in [0, count) on up to `threads` workers, in batches; returns the smallest
// index whose result is engaged.
template <class R, class F>
std::optional<std::pair<std::size_t, R>> first_hit(std::size_t count, unsigned threads, F f) {
  threads = std::max(1u, threads);
  for (std::size_t start = 0; start < count; start += threads) {
    const std::size_t end = std::min(count, start + threads);
    std::vector<std::optional<R>> results(end - start);
    std::vector<std::exception_ptr> errors(end - start);
    if (end - start == 1) {
      results[0] = f(start);
    } else {
      std::vector<std::thread> pool;
      for (std::size_t i = start; i < end; ++i)
        pool.emplace_back([&, i] {
          try {
            results[i - start] = f(i);
          } catch (...) {
            errors[i - start] = std::current_exception();
          }
        });
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < results.size(); ++i) {
      if (errors[i]) std::rethrow_exception(errors[i]);
      if (results[i]) return std::pair(start + i, std::move(*results[i]));
    }
  }
  return std::nullopt;
}

inline bool pair_is_negative(const YDModule& yd, const Subrack& T, std::string& why) {
  const DiagonalSubspace D = diagonal_subspace(yd, T);
  const RootOfUnity minus_one(2, 1);
  for (std::size_t a = 0; a < D.size(); ++a) {
    if (!(D.q(a, a) == minus_one)) {
      why = "q_aa = " + D.q(a, a).reduced().to_string();
      return false;
    }
    for (std::size_t b = a + 1; b < D.size(); ++b) {
      auto p = D.q(a, b) * D.q(b, a);
      if (!p.is_one()) {
        why = "q_ab q_ba = " + p.reduced().to_string();
        return false;
      }
    }
  }
  return true;
}

}  // namespace detail

struct NegativityResult {
  bool negative = false;
  NegativityCertificate certificate;
  std::optional<Subrack> failing_pair;
  std::string why;
};

// Pairwise negativity. Reduced: pairs (π, t) with t one per Z(π)-orbit of N(π) ∖ {π}, which
// represent every commuting pair up to conjugation. Unreduced: every commuting pair of the class.
inline NegativityResult negativity_check(const YDModule& yd, const DecideConfig& cfg) {
  NegativityResult out;
  out.certificate.reduced = cfg.symmetry;
  const UnmixedClass& cls = yd.cls;
  std::vector<Subrack> pairs;
  if (cfg.symmetry) {
    const auto N = basepoint_neighborhood(cls);
    const auto orbit = conjugation_orbits(N, cls.centralizer_generators());
    std::vector<bool> seen(N.size(), false);
    seen[orbit[0]] = true;
    for (std::size_t i = 1; i < N.size(); ++i) {
      if (seen[orbit[i]]) continue;
      seen[orbit[i]] = true;
      pairs.push_back(make_subrack(cls, N, {0, i}));
    }
    out.certificate.pairs_covered = class_size(cls.k(), cls.n()) * static_cast<unsigned long>(N.size() - 1);
  } else {
    const auto L = enumerate_class(cls, cfg.caps.max_class);
    mpz_class covered = 0;
    for (std::size_t i = 0; i < L.size(); ++i)
      for (std::size_t j = i + 1; j < L.size(); ++j) {
        if (!commute(L.elements[i], L.elements[j])) continue;
        Subrack T;
        T.add(L.elements[i], L.transporters[i]);
        T.add(L.elements[j], L.transporters[j]);
        T.indices = {i, j};
        pairs.push_back(std::move(T));
        covered += 2;
      }
    out.certificate.pairs_covered = covered;
  }
  // The pair {π} alone carries the diagonal entries when there is nothing else to check.
  if (pairs.empty()) pairs.push_back(make_subrack(cls, {cls.basepoint()}, {0}));

  auto hit = detail::first_hit<std::string>(pairs.size(), cfg.threads, [&](std::size_t i) -> std::optional<std::string> {
    std::string why;
    if (detail::pair_is_negative(yd, pairs[i], why)) return std::nullopt;
    return why;
  });
  if (hit) {
    out.certificate.pairs_checked = hit->first + 1;
    out.failing_pair = pairs[hit->first];
    out.why = hit->second;
    return out;
  }
  out.certificate.pairs_checked = pairs.size();
  out.negative = true;
  return out;
}

// Shrinks the vertex set of a witness: one vertex per joint eigenvalue signature in each copy,
// then whole eigenvectors (shared across copies), then whole copies, while the rule still fires.
inline std::vector<std::size_t> minimize_witness(const DiagonalSubspace& D) {
  auto fires = [&](const std::vector<std::size_t>& keep) {
    if (keep.empty()) return false;
    return find_infinite(D.restricted(keep).matrix()).has_value();
  };
  std::vector<std::size_t> cur(D.size());
  std::iota(cur.begin(), cur.end(), 0);

  std::vector<std::size_t> dedup;
  std::set<std::pair<std::size_t, std::vector<std::pair<int, int>>>> seen;
  for (std::size_t a : cur) {
    std::vector<std::pair<int, int>> sig;
    for (const auto& z : D.signature(a)) sig.emplace_back(z.reduced().m, z.reduced().a);
    if (seen.insert({D.vertices[a].member, sig}).second) dedup.push_back(a);
  }
  if (fires(dedup)) cur = dedup;

  auto vector_key = [&](std::size_t a) {
    std::string s;
    for (const auto& x : D.bases[D.vertices[a].member][D.vertices[a].index]) s += x.to_string() + ";";
    return s;
  };
  std::vector<std::string> slots;
  for (std::size_t a : cur)
    if (std::find(slots.begin(), slots.end(), vector_key(a)) == slots.end()) slots.push_back(vector_key(a));
  for (std::size_t s = slots.size(); s-- > 0;) {
    std::vector<std::size_t> trial;
    for (std::size_t a : cur)
      if (vector_key(a) != slots[s]) trial.push_back(a);
    if (fires(trial)) cur = trial;
  }
  for (std::size_t j = D.subrack.size(); j-- > 0;) {
    std::vector<std::size_t> trial;
    for (std::size_t a : cur)
      if (D.vertices[a].member != j) trial.push_back(a);
    if (fires(trial)) cur = trial;
  }
  return cur;
}

inline std::optional<Witness> examine(const YDModule& yd, const Subrack& T, const std::string& origin) {
  const DiagonalSubspace D = diagonal_subspace(yd, T);
  if (!find_infinite(D.matrix())) return std::nullopt;
  Witness w;
  w.origin = origin;
  w.subspace = D.restricted(minimize_witness(D));
  w.Q = w.subspace.matrix();
  w.finding = *find_infinite(w.Q);
  w.diagram = dynkin_diagram(w.Q);
  return w;
}

// Re-derives a witness from scratch: eigenvector equations, then the rule on the recomputed Q.
inline bool revalidate(const YDModule& yd, const Witness& w) {
  if (!w.subspace.subrack.is_abelian() || !w.subspace.subrack.transporters_valid(yd.cls.basepoint())) return false;
  if (!verify_diagonal(yd, w.subspace)) return false;
  auto f = find_infinite(w.subspace.matrix());
  return f && f->rule == w.finding.rule;
}

struct Candidate {
  std::string origin;
  Subrack subrack;
};

// Explicit subracks tried before any enumeration.
inline std::vector<Candidate> explicit_candidates(const UnmixedClass& cls) {
  std::vector<Candidate> out;
  const int k = cls.k(), n = cls.n();
  if (k == 2 && n >= 2) {
    out.push_back({"last-pair-triple", last_pair_triple(cls)});
    if (n >= 4) out.push_back({"canonical", canonical_subrack(cls)});
  }
  if (k % 2 == 0 && k > 2 && n >= 2) {
    out.push_back({"inversion-quadruple", inversion_quadruple(cls)});
    for (int i = 1; i <= n; ++i)
      for (int j = i + 1; j <= n; ++j)
        out.push_back({"quadruple(" + std::to_string(i) + "," + std::to_string(j) + ")", quadruple_subrack(cls, i, j)});
  }
  return out;
}

inline Verdict decide(const IrrepLabel& lab, const DecideConfig& cfg = {}) {
  const int k = lab.k, n = static_cast<int>(lab.u.size());
  Verdict v;
  v.k = k;
  v.n = n;
  v.rep = lab.spec();
  v.degree = lab.dim;
  if (lab.catalog_gap) {
    v.outcome = Outcome::Undecided;
    v.rule = rule::catalog_gap;
    v.detail = "the S_m factor is outside the built-in catalog";
    return v;
  }
  const UnmixedClass cls(k, n);
  const YDModule yd(cls, build_rep(lab));
  v.q_pipi = yd.rho.pi_root();
  if (!(yd.rho.pi_scalar() == Cyclotomic::root(v.q_pipi))) throw std::logic_error("decide: rho(pi) disagrees with chi");

  if (scalar_gate_fires(v.q_pipi, k)) {
    v.outcome = Outcome::InfiniteDim;
    v.rule = rule::scalar_gate;
    v.detail = k % 2 ? "k is odd" : "q_pipi = " + v.q_pipi.to_string() + " is not -1";
    return v;
  }

  auto neg = negativity_check(yd, cfg);
  if (neg.negative) {
    v.outcome = Outcome::NegativeBraiding;
    v.rule = rule::negativity;
    v.negativity = neg.certificate;
    v.detail = std::to_string(neg.certificate.pairs_checked) + " pairs diagonalized";
    return v;
  }
  v.notes.push_back("negativity fails at (" + to_cycle_string(neg.failing_pair->elements.front()) + ", " +
                    to_cycle_string(neg.failing_pair->elements.back()) + "): " + neg.why);

  std::vector<Candidate> cands = explicit_candidates(cls);
  auto try_range = [&](std::size_t from) {
    return detail::first_hit<Witness>(cands.size() - from, cfg.threads, [&](std::size_t i) {
      return examine(yd, cands[from + i].subrack, cands[from + i].origin);
    });
  };
  auto hit = try_range(0);
  if (!hit && cfg.use_cliques) {
    const std::size_t before = cands.size();
    try {
      auto inv = maximal_abelian_subracks(cls, cfg.caps, cfg.symmetry);
      if (inv.partial) v.notes.push_back("maximal subrack enumeration stopped at the cap");
      for (std::size_t o = 0; o < inv.orbits.size(); ++o)
        cands.push_back({"maximal-subrack-" + std::to_string(o), make_subrack(cls, inv.elements, inv.orbits[o].representative)});
    } catch (const CapExceeded& e) {
      v.notes.push_back(e.what());
    }
    hit = try_range(before);
    if (hit) hit->first += before;
  }
  if (hit) {
    v.outcome = Outcome::InfiniteDim;
    v.witness = std::move(hit->second);
    v.rule = v.witness->finding.rule;
    v.detail = "witness from " + v.witness->origin;
    return v;
  }
  v.outcome = Outcome::Undecided;
  v.rule = rule::exhausted;
  v.detail = "no rule fired on any candidate subrack";
  return v;
}

inline Verdict decide(int k, int n, const std::string& rho_spec, const DecideConfig& cfg = {}) {
  return decide(parse_rep_spec(rho_spec, k, n), cfg);
}

// Closed-form classification of the unmixed case, for cross-checking decide. Also covers
// k = 2, n = 1: the sign character is negative, the trivial one is not.
inline std::optional<Outcome> closed_form_oracle(const IrrepLabel& lab) {
  const int k = lab.k, n = static_cast<int>(lab.u.size());
  if (k % 2 != 0) return Outcome::InfiniteDim;
  const bool constant = std::all_of(lab.u.begin(), lab.u.end(), [&](int x) { return x == lab.u[0]; });
  const bool one_dim = lab.dim == 1;
  const int r = k / 2;
  if (k == 2) {
    if (n % 2 == 0) return Outcome::InfiniteDim;
    if (constant && lab.u[0] == 1 && one_dim) return Outcome::NegativeBraiding;
    return Outcome::InfiniteDim;
  }
  if (n == 1) return lab.u[0] == r ? Outcome::NegativeBraiding : Outcome::InfiniteDim;
  if (!one_dim) return Outcome::InfiniteDim;
  const int c = lab.u[0];
  if ((static_cast<long long>(n) * c) % k != r) return Outcome::InfiniteDim;
  if (c == r) return Outcome::NegativeBraiding;
  if (r % 2 == 0 && (2 * c == r || 2 * c == 3 * r)) return Outcome::NegativeBraiding;
  return Outcome::InfiniteDim;
}

inline std::optional<Outcome> closed_form_oracle(int k, int n, const std::string& rho_spec) {
  return closed_form_oracle(parse_rep_spec(rho_spec, k, n));
}

}  // namespace nichols
