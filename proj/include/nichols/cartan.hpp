#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "nichols/braiding.hpp"
#include "nichols/cyclotomic.hpp"

namespace nichols {

using IntMatrix = std::vector<std::vector<int>>;

struct CartanData {
  IntMatrix A;
  std::vector<int> orders;  // ord(q_aa)
};

struct NotCartan {
  std::string reason;
};

// a_ab from q_ab q_ba = q_aa^{a_ab}, searched in (−ord q_aa, 0] from 0 downwards.
inline std::variant<CartanData, NotCartan> cartan_type(const QMatrix& Q) {
  const std::size_t m = Q.size();
  CartanData out;
  out.A.assign(m, std::vector<int>(m, 0));
  for (std::size_t a = 0; a < m; ++a) {
    const RootOfUnity qa = Q[a][a];
    const int ord = qa.order();
    if (ord == 1) return NotCartan{"q_" + std::to_string(a) + std::to_string(a) + " = 1"};
    out.orders.push_back(ord);
    out.A[a][a] = 2;
    for (std::size_t b = 0; b < m; ++b) {
      if (b == a) continue;
      const RootOfUnity p = Q[a][b] * Q[b][a];
      std::optional<int> e;
      for (int x = 0; x > -ord && !e; --x)
        if (qa.pow(x) == p) e = x;
      if (!e)
        return NotCartan{"q_ab q_ba = " + p.to_string() + " is not a power of q_aa = " + qa.reduced().to_string() +
                         " for a = " + std::to_string(a) + ", b = " + std::to_string(b)};
      out.A[a][b] = *e;
    }
  }
  return out;
}

namespace detail {

inline std::vector<std::vector<std::size_t>> cartan_components(const IntMatrix& A) {
  const std::size_t m = A.size();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    out.emplace_back();
    std::vector<std::size_t> stack{s};
    comp[s] = 1;
    while (!stack.empty()) {
      auto x = stack.back();
      stack.pop_back();
      out.back().push_back(x);
      for (std::size_t y = 0; y < m; ++y)
        if (y != x && comp[y] < 0 && (A[x][y] != 0 || A[y][x] != 0)) {
          comp[y] = 1;
          stack.push_back(y);
        }
    }
    std::sort(out.back().begin(), out.back().end());
  }
  return out;
}

inline IntMatrix submatrix(const IntMatrix& A, const std::vector<std::size_t>& idx) {
  IntMatrix S(idx.size(), std::vector<int>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) S[i][j] = A[idx[i]][idx[j]];
  return S;
}

// Rational d with d_i a_ij = d_j a_ji, for a connected A.
inline std::optional<std::vector<Rational>> symmetrizer(const IntMatrix& A) {
  const std::size_t m = A.size();
  std::vector<Rational> d(m, 0);
  std::vector<bool> seen(m, false);
  for (std::size_t s = 0; s < m; ++s) {
    if (seen[s]) continue;
    d[s] = 1;
    seen[s] = true;
    std::vector<std::size_t> stack{s};
    while (!stack.empty()) {
      auto i = stack.back();
      stack.pop_back();
      for (std::size_t j = 0; j < m; ++j) {
        if (j == i || A[i][j] == 0) continue;
        if (A[j][i] == 0) return std::nullopt;
        if (!seen[j]) {
          d[j] = d[i] * A[i][j] / A[j][i];
          seen[j] = true;
          stack.push_back(j);
        }
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (d[i] * A[i][j] != d[j] * A[j][i]) return std::nullopt;
  return d;
}

// Pivots of symmetric Gaussian elimination; positive definite iff all are positive.
inline std::vector<Rational> pivots(std::vector<std::vector<Rational>> S) {
  const std::size_t m = S.size();
  std::vector<Rational> out;
  for (std::size_t c = 0; c < m; ++c) {
    const Rational p = S[c][c];
    out.push_back(p);
    if (p == 0) break;
    for (std::size_t r = c + 1; r < m; ++r) {
      if (S[r][c] == 0) continue;
      const Rational f = S[r][c] / p;
      for (std::size_t j = c; j < m; ++j) S[r][j] -= f * S[c][j];
    }
  }
  return out;
}

inline std::vector<std::vector<Rational>> symmetrized(const IntMatrix& A, const std::vector<Rational>& d) {
  std::vector<std::vector<Rational>> S(A.size(), std::vector<Rational>(A.size()));
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t j = 0; j < A.size(); ++j) S[i][j] = d[i] * A[i][j];
  return S;
}

inline bool positive_definite(const IntMatrix& A, const std::vector<Rational>& d) {
  auto p = pivots(symmetrized(A, d));
  if (p.size() != A.size()) return false;
  return std::all_of(p.begin(), p.end(), [](const Rational& x) { return x > 0; });
}

inline Rational determinant(std::vector<std::vector<Rational>> S) {
  const std::size_t m = S.size();
  Rational det = 1;
  for (std::size_t c = 0; c < m; ++c) {
    std::size_t piv = c;
    while (piv < m && S[piv][c] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != c) {
      std::swap(S[piv], S[c]);
      det = -det;
    }
    det *= S[c][c];
    for (std::size_t r = c + 1; r < m; ++r) {
      const Rational f = S[r][c] / S[c][c];
      for (std::size_t j = c; j < m; ++j) S[r][j] -= f * S[c][j];
    }
  }
  return det;
}

// Chordless cycle of length >= 3 in the graph of A, shortest first.
inline std::optional<std::vector<std::size_t>> chordless_cycle(const IntMatrix& A) {
  const std::size_t m = A.size();
  auto adj = [&](std::size_t x, std::size_t y) { return x != y && A[x][y] != 0; };
  for (std::size_t len = 3; len <= std::min<std::size_t>(m, 12); ++len) {
    std::vector<std::size_t> path;
    std::optional<std::vector<std::size_t>> found;
    std::function<void()> grow = [&]() {
      if (found) return;
      if (path.size() == len) {
        if (adj(path.back(), path.front())) found = path;
        return;
      }
      for (std::size_t y = path.front() + 1; y < m && !found; ++y) {
        if (std::find(path.begin(), path.end(), y) != path.end() || !adj(path.back(), y)) continue;
        bool chord = false;
        for (std::size_t p = 0; p + 1 < path.size(); ++p)
          if (adj(path[p], y) && !(p == 0 && path.size() + 1 == len)) chord = true;
        if (chord) continue;
        path.push_back(y);
        grow();
        path.pop_back();
      }
    };
    for (std::size_t s = 0; s < m && !found; ++s) {
      path = {s};
      grow();
    }
    if (found) return found;
  }
  return std::nullopt;
}

// Name of a connected affine diagram, when it is one of the simply-laced ones or A_1^(1).
inline std::string affine_name(const IntMatrix& A) {
  const std::size_t m = A.size();
  if (m == 2 && A[0][1] * A[1][0] == 4) return "A_1^(1)";
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && A[i][j] != 0 && A[i][j] != -1) return "affine rank " + std::to_string(m);
  std::vector<int> deg(m, 0);
  std::size_t edges = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      if (i != j && A[i][j] != 0) {
        ++deg[i];
        if (i < j) ++edges;
      }
  if (edges == m) return "A_" + std::to_string(m - 1) + "^(1)";
  std::vector<std::size_t> branch;
  for (std::size_t i = 0; i < m; ++i)
    if (deg[i] >= 3) branch.push_back(i);
  if (branch.size() == 1 && deg[branch[0]] == 4) return "D_4^(1)";
  if (branch.size() == 2) return "D_" + std::to_string(m - 1) + "^(1)";
  if (branch.size() == 1) {
    std::vector<int> arms;
    const std::size_t c = branch[0];
    for (std::size_t y = 0; y < m; ++y) {
      if (y == c || A[c][y] == 0) continue;
      int len = 1;
      std::size_t prev = c, cur = y;
      while (true) {
        std::size_t next = m;
        for (std::size_t z = 0; z < m; ++z)
          if (z != cur && z != prev && A[cur][z] != 0) next = z;
        if (next == m) break;
        prev = cur;
        cur = next;
        ++len;
      }
      arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms == std::vector<int>{2, 2, 2}) return "E_6^(1)";
    if (arms == std::vector<int>{1, 3, 3}) return "E_7^(1)";
    if (arms == std::vector<int>{1, 2, 5}) return "E_8^(1)";
  }
  return "affine rank " + std::to_string(m);
}

}  // namespace detail

struct FiniteTypeResult {
  bool finite = false;
  bool symmetrizable = true;
  std::vector<std::string> names;  // one per non-finite connected component
};

// Finite type iff every connected component is symmetrizable with positive definite DA.
inline FiniteTypeResult finite_type(const IntMatrix& A) {
  FiniteTypeResult out;
  out.finite = true;
  for (const auto& comp : detail::cartan_components(A)) {
    const IntMatrix S = detail::submatrix(A, comp);
    auto d = detail::symmetrizer(S);
    if (!d) {
      out.finite = false;
      out.symmetrizable = false;
      out.names.push_back("non-symmetrizable");
      continue;
    }
    if (detail::positive_definite(S, *d)) continue;
    out.finite = false;
    bool affine = detail::determinant(detail::symmetrized(S, *d)) == 0;
    for (std::size_t drop = 0; drop < comp.size() && affine; ++drop) {
      std::vector<std::size_t> rest;
      for (std::size_t i = 0; i < comp.size(); ++i)
        if (i != drop) rest.push_back(i);
      const IntMatrix R = detail::submatrix(S, rest);
      for (const auto& c2 : detail::cartan_components(R)) {
        const IntMatrix R2 = detail::submatrix(R, c2);
        auto d2 = detail::symmetrizer(R2);
        if (!d2 || !detail::positive_definite(R2, *d2)) affine = false;
      }
    }
    if (affine) {
      out.names.push_back(detail::affine_name(S));
    } else if (auto cyc = detail::chordless_cycle(S)) {
      out.names.push_back("contains A_" + std::to_string(cyc->size() - 1) + "^(1)");
    } else {
      out.names.push_back("indefinite rank " + std::to_string(comp.size()));
    }
  }
  return out;
}

inline FiniteTypeResult finite_type(const CartanData& C) { return finite_type(C.A); }

inline std::string int_matrix_string(const IntMatrix& A) {
  std::string s;
  for (const auto& row : A) {
    for (std::size_t j = 0; j < row.size(); ++j) s += (j ? " " : "") + std::to_string(row[j]);
    s += "\n";
  }
  return s;
}

}  // namespace nichols
