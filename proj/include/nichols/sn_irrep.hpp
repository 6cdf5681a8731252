#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/matrix.hpp"
#include "nichols/permutation.hpp"

namespace nichols {

using Partition = std::vector<int>;  // non-increasing parts

inline std::string partition_string(const Partition& p) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s;
}

inline std::vector<Partition> partitions(int m) {
  std::vector<Partition> out;
  Partition cur;
  auto rec = [&](auto&& self, int left, int maxpart) -> void {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int p = std::min(left, maxpart); p >= 1; --p) {
      cur.push_back(p);
      self(self, left - p, p);
      cur.pop_back();
    }
  };
  rec(rec, m, m);
  return out;
}

// Irreducible representation of S_m from the built-in catalog.
class SnIrrep {
 public:
  enum class Kind { Trivial, Sign, Standard, StandardSign, Pairings };

  SnIrrep() = default;

  int degree_of_group() const { return m_; }
  const std::string& label() const { return label_; }
  const Partition& partition() const { return partition_; }
  std::size_t dim() const { return dim_; }

  // μ(g) for g ∈ S_m.
  Matrix operator()(const Permutation& g) const {
    if (static_cast<int>(g.degree()) != m_) throw std::invalid_argument("SnIrrep: permutation of the wrong degree");
    switch (kind_) {
      case Kind::Trivial: return Matrix::identity(1);
      case Kind::Sign: return Matrix::identity(1).scaled(Cyclotomic(static_cast<long>(g.sign())));
      case Kind::Standard: return standard(g);
      case Kind::StandardSign: return standard(g).scaled(Cyclotomic(static_cast<long>(g.sign())));
      case Kind::Pairings: return pairings(g);
    }
    throw std::logic_error("SnIrrep: unknown kind");
  }

  // Images of the adjacent transpositions (i i+1), i = 1..m-1.
  std::vector<Matrix> generators() const {
    std::vector<Matrix> out;
    for (int i = 1; i < m_; ++i) out.push_back((*this)(Permutation::from_cycles(m_, {{i, i + 1}})));
    return out;
  }

  friend bool operator==(const SnIrrep& a, const SnIrrep& b) { return a.m_ == b.m_ && a.partition_ == b.partition_; }

  static SnIrrep make(int m, Kind kind) {
    SnIrrep r;
    r.m_ = m;
    r.kind_ = kind;
    switch (kind) {
      case Kind::Trivial:
        r.label_ = "trivial";
        r.partition_ = {m};
        r.dim_ = 1;
        break;
      case Kind::Sign:
        r.label_ = "sign";
        r.partition_ = Partition(m, 1);
        r.dim_ = 1;
        break;
      case Kind::Standard:
        r.label_ = "standard";
        r.partition_ = {m - 1, 1};
        r.dim_ = m - 1;
        break;
      case Kind::StandardSign:
        r.label_ = "standard_sign";
        r.partition_ = Partition(m - 1, 1);
        r.partition_[0] = 2;
        r.dim_ = m - 1;
        break;
      case Kind::Pairings:
        r.label_ = "catalog:2,2";
        r.partition_ = {2, 2};
        r.dim_ = 2;
        break;
    }
    return r;
  }

 private:
  // Action on the sum-zero subspace in the basis e_i - e_{i+1}.
  Matrix standard(const Permutation& g) const {
    const int d = m_ - 1;
    Matrix out(d, d);
    for (int i = 1; i <= d; ++i) {
      std::vector<int> x(m_ + 1, 0);
      x[g(i)] += 1;
      x[g(i + 1)] -= 1;
      int run = 0;
      for (int j = 1; j <= d; ++j) {
        run += x[j];
        if (run != 0) out(j - 1, i - 1) = Cyclotomic(static_cast<long>(run));
      }
    }
    return out;
  }

  // S_4 acting on its three pairings {12|34, 13|24, 14|23}, followed by the standard rep of S_3.
  Matrix pairings(const Permutation& g) const {
    static const int pair_of[3][2] = {{1, 2}, {1, 3}, {1, 4}};
    auto index_of = [](int a, int b) {
      if (a > b) std::swap(a, b);
      // the pairing containing {a,b}
      if ((a == 1 && b == 2) || (a == 3 && b == 4)) return 1;
      if ((a == 1 && b == 3) || (a == 2 && b == 4)) return 2;
      return 3;
    };
    std::vector<int> img(3);
    for (int p = 0; p < 3; ++p) img[p] = index_of(g(pair_of[p][0]), g(pair_of[p][1]));
    return make(3, Kind::Standard)(Permutation(img));
  }

  int m_ = 1;
  Kind kind_ = Kind::Trivial;
  std::string label_ = "trivial";
  Partition partition_{1};
  std::size_t dim_ = 1;
};

// Catalog of S_m: complete for m <= 4; trivial, sign, standard and standard_sign beyond.
inline std::vector<SnIrrep> sn_catalog(int m) {
  using K = SnIrrep::Kind;
  if (m < 1) throw std::invalid_argument("sn_catalog: m must be positive");
  if (m == 1) return {SnIrrep::make(1, K::Trivial)};
  if (m == 2) return {SnIrrep::make(2, K::Trivial), SnIrrep::make(2, K::Sign)};
  if (m == 3) return {SnIrrep::make(3, K::Trivial), SnIrrep::make(3, K::Sign), SnIrrep::make(3, K::Standard)};
  std::vector<SnIrrep> out{SnIrrep::make(m, K::Trivial), SnIrrep::make(m, K::Sign), SnIrrep::make(m, K::Standard),
                           SnIrrep::make(m, K::StandardSign)};
  if (m == 4) out.push_back(SnIrrep::make(4, K::Pairings));
  return out;
}

// Partitions of m whose irreps are not in the catalog.
inline std::vector<Partition> sn_catalog_gaps(int m) {
  std::set<Partition> have;
  for (const auto& r : sn_catalog(m)) have.insert(r.partition());
  std::vector<Partition> out;
  for (const auto& p : partitions(m))
    if (!have.count(p)) out.push_back(p);
  return out;
}

struct CatalogGap : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Looks up a label: trivial | sign | standard | standard_sign | catalog:<partition>.
inline SnIrrep sn_irrep(int m, const std::string& label) {
  auto cat = sn_catalog(m);
  if (label.rfind("catalog:", 0) == 0) {
    Partition p;
    std::stringstream ss(label.substr(8));
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) p.push_back(std::stoi(part));
    int total = 0;
    for (int x : p) total += x;
    if (total != m || !std::is_sorted(p.rbegin(), p.rend()))
      throw std::invalid_argument("sn_irrep: \"" + label + "\" is not a partition of " + std::to_string(m));
    for (const auto& r : cat)
      if (r.partition() == p) return r;
    throw CatalogGap("sn_irrep: the irrep of S_" + std::to_string(m) + " for partition (" + partition_string(p) +
                     ") is outside the built-in catalog");
  }
  for (const auto& r : cat)
    if (r.label() == label) return r;
  // Labels that name an existing irrep under another name for small m.
  if (m == 1 && label == "sign") return cat[0];
  if (m == 2 && label == "standard") return cat[1];
  if (m == 3 && label == "standard_sign") return cat[2];
  throw std::invalid_argument("sn_irrep: unsupported label \"" + label + "\" for S_" + std::to_string(m));
}

}  // namespace nichols
