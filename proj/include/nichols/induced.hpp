#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/matrix.hpp"
#include "nichols/sn_irrep.hpp"
#include "nichols/unmixed.hpp"

namespace nichols {

// χ_u on (Z/k)^n: χ_u(A_j) = ζ_k^{u_j}.
struct GammaCharacter {
  int k = 2;
  std::vector<int> u;

  GammaCharacter() = default;
  GammaCharacter(int k_, std::vector<int> u_) : k(k_), u(std::move(u_)) {
    if (k < 1) throw std::invalid_argument("GammaCharacter: modulus must be positive");
    for (auto& x : u) x = ((x % k) + k) % k;
  }

  // χ_(j): j ones followed by zeros.
  static GammaCharacter weight(int k, int n, int j) {
    if (j < 0 || j > n) throw std::invalid_argument("GammaCharacter::weight: need 0 <= j <= n");
    std::vector<int> u(n, 0);
    std::fill(u.begin(), u.begin() + j, 1);
    return GammaCharacter(k, u);
  }

  int n() const { return static_cast<int>(u.size()); }

  RootOfUnity operator()(const std::vector<int>& d) const {
    long long e = 0;
    for (std::size_t j = 0; j < u.size(); ++j) e += static_cast<long long>(u[j]) * d[j];
    return RootOfUnity(k, e);
  }

  bool is_orbit_representative() const { return std::is_sorted(u.rbegin(), u.rend()); }

  friend bool operator==(const GammaCharacter&, const GammaCharacter&) = default;
};

struct OrbitStabilizer {
  std::vector<std::vector<int>> orbit;     // u-vectors, the representative's sorted form first
  std::vector<std::vector<int>> blocks;    // positions (1-based) with equal u-values; stabilizer = ∏ S_block
};

// S_n-orbit of χ under (b·χ)_{b(j)} = χ_j, and its Young stabilizer.
inline OrbitStabilizer orbit_and_stabilizer(const GammaCharacter& chi) {
  OrbitStabilizer out;
  std::vector<int> v = chi.u;
  std::sort(v.begin(), v.end(), std::greater<>());
  do {
    out.orbit.push_back(v);
  } while (std::prev_permutation(v.begin(), v.end()));
  std::map<int, std::vector<int>> by_value;
  for (int j = 0; j < chi.n(); ++j) by_value[chi.u[j]].push_back(j + 1);
  for (auto it = by_value.rbegin(); it != by_value.rend(); ++it) out.blocks.push_back(it->second);
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

// Irreducible rep Ind(χ ⊗ μ) of Z_k^n ⋊ S_n, χ a non-increasing orbit representative and
// μ = μ_1 ⊗ … ⊗ μ_s on the Young stabilizer ∏ S_{block}.
class InducedRep {
 public:
  InducedRep(GammaCharacter chi, std::vector<SnIrrep> mu) : chi_(std::move(chi)), mu_(std::move(mu)) {
    if (!chi_.is_orbit_representative())
      throw std::invalid_argument("induce: character must be given by its non-increasing representative");
    auto os = orbit_and_stabilizer(chi_);
    orbit_ = std::move(os.orbit);
    blocks_ = std::move(os.blocks);
    if (mu_.size() != blocks_.size())
      throw std::invalid_argument("induce: expected " + std::to_string(blocks_.size()) + " stabilizer factors, got " +
                                  std::to_string(mu_.size()));
    mu_dim_ = 1;
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (mu_[i].degree_of_group() != static_cast<int>(blocks_[i].size()))
        throw std::invalid_argument("induce: factor " + std::to_string(i + 1) + " must be a representation of S_" +
                                    std::to_string(blocks_[i].size()));
      mu_dim_ *= mu_[i].dim();
    }
    for (std::size_t s = 0; s < orbit_.size(); ++s) {
      index_[orbit_[s]] = s;
      cosets_.push_back(coset_representative(orbit_[s]));
    }
  }

  int k() const { return chi_.k; }
  int n() const { return chi_.n(); }
  const GammaCharacter& chi() const { return chi_; }
  const std::vector<SnIrrep>& mu() const { return mu_; }
  const std::vector<std::vector<int>>& orbit() const { return orbit_; }
  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  const std::vector<Permutation>& coset_representatives() const { return cosets_; }
  std::size_t mu_dim() const { return mu_dim_; }
  std::size_t dim() const { return orbit_.size() * mu_dim_; }

  // Canonical rep spec, accepted back by parse_rep_spec.
  std::string spec() const {
    std::string s = "chi=(";
    for (int j = 0; j < n(); ++j) s += (j ? "," : "") + std::to_string(chi_.u[j]);
    s += ");mu=";
    for (std::size_t i = 0; i < mu_.size(); ++i) s += (i ? "*" : "") + mu_[i].label();
    return s;
  }

  // μ on an element h of the Young stabilizer.
  Matrix mu_of(const Permutation& h) const {
    Matrix out = Matrix::identity(1);
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      const auto& bl = blocks_[i];
      std::vector<int> local(bl.size());
      for (std::size_t a = 0; a < bl.size(); ++a) {
        auto it = std::find(bl.begin(), bl.end(), h(bl[a]));
        if (it == bl.end()) throw std::logic_error("mu_of: permutation leaves the stabilizer");
        local[a] = static_cast<int>(it - bl.begin()) + 1;
      }
      out = kron(out, mu_[i](Permutation(local)));
    }
    return out;
  }

  // ρ(A^d P_b): the basis vector x_S ⊗ v goes to ζ^{Σ u''_j d_j} x_T ⊗ μ(c_T^{-1} b c_S) v, u'' = b·u_S.
  Matrix evaluate(const NormalForm& g) const {
    if (static_cast<int>(g.d.size()) != n() || static_cast<int>(g.b.degree()) != n())
      throw std::invalid_argument("evaluate: malformed normal form");
    Matrix out(dim(), dim());
    for (std::size_t s = 0; s < orbit_.size(); ++s) {
      std::vector<int> target(n());
      for (int j = 1; j <= n(); ++j) target[g.b(j) - 1] = orbit_[s][j - 1];
      const std::size_t t = index_.at(target);
      const Permutation h = cosets_[t].inverse() * g.b * cosets_[s];
      const Cyclotomic scalar = Cyclotomic::root(GammaCharacter(chi_.k, target)(g.d));
      const Matrix block = mu_of(h);
      for (std::size_t i = 0; i < mu_dim_; ++i)
        for (std::size_t j = 0; j < mu_dim_; ++j)
          if (!block(i, j).is_zero()) out(t * mu_dim_ + i, s * mu_dim_ + j) = block(i, j) * scalar;
    }
    return out;
  }

  // Scalar by which π = A_1⋯A_n acts, checked to be scalar.
  Cyclotomic pi_scalar() const {
    NormalForm pi{std::vector<int>(n(), 1), Permutation::identity(n())};
    auto s = evaluate(pi).scalar_value();
    if (!s) throw std::logic_error("pi_scalar: rho(pi) is not a scalar matrix");
    return *s;
  }

  RootOfUnity pi_root() const {
    return RootOfUnity(chi_.k, std::accumulate(chi_.u.begin(), chi_.u.end(), 0LL)).reduced();
  }

 private:
  // c with u'_{c(j)} = u_j, increasing on each block.
  Permutation coset_representative(const std::vector<int>& target) const {
    std::vector<int> img(n());
    std::map<int, std::vector<int>> slots;
    for (int j = n(); j >= 1; --j) slots[target[j - 1]].push_back(j);
    for (int j = 1; j <= n(); ++j) {
      auto& v = slots[chi_.u[j - 1]];
      img[j - 1] = v.back();
      v.pop_back();
    }
    return Permutation(img);
  }

  GammaCharacter chi_;
  std::vector<SnIrrep> mu_;
  std::vector<std::vector<int>> orbit_;
  std::vector<std::vector<int>> blocks_;
  std::vector<Permutation> cosets_;
  std::map<std::vector<int>, std::size_t> index_;
  std::size_t mu_dim_ = 1;
};

inline InducedRep induce(const GammaCharacter& chi, const std::vector<SnIrrep>& mu) { return InducedRep(chi, mu); }

inline Cyclotomic pi_scalar(const InducedRep& rho) { return rho.pi_scalar(); }

// Dimension of the S_m irrep for a partition, by the hook length formula.
inline std::size_t partition_dimension(const Partition& p) {
  int m = 0;
  for (int x : p) m += x;
  long double num = 1;
  for (int i = 2; i <= m; ++i) num *= i;
  long double den = 1;
  for (std::size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j) {
      int arm = p[i] - j - 1;
      int leg = 0;
      for (std::size_t l = i + 1; l < p.size() && p[l] > j; ++l) ++leg;
      den *= arm + leg + 1;
    }
  return static_cast<std::size_t>(num / den + 0.5L);
}

// One irreducible representation of the centralizer, possibly outside the catalog.
struct IrrepLabel {
  int k = 2;
  std::vector<int> u;
  std::vector<std::string> mu;  // one label per stabilizer block
  bool catalog_gap = false;
  std::size_t dim = 1;

  std::string spec() const {
    std::string s = "chi=(";
    for (std::size_t j = 0; j < u.size(); ++j) s += (j ? "," : "") + std::to_string(u[j]);
    s += ");mu=";
    for (std::size_t i = 0; i < mu.size(); ++i) s += (i ? "*" : "") + mu[i];
    return s;
  }
};

// Irreps of Z_k^n ⋊ S_n: χ over non-increasing u in lexicographic order, μ over products of
// the S_m catalogs (catalog order, then uncatalogued partitions flagged as gaps).
inline std::vector<IrrepLabel> enumerate_irreps(int k, int n) {
  std::vector<IrrepLabel> out;
  std::vector<int> u(n, 0);
  std::function<void(int, int)> rec_u = [&](int pos, int maxval) {
    if (pos == n) {
      auto os = orbit_and_stabilizer(GammaCharacter(k, u));
      std::vector<std::vector<std::pair<std::string, std::pair<bool, std::size_t>>>> options;
      for (const auto& bl : os.blocks) {
        const int m = static_cast<int>(bl.size());
        std::vector<std::pair<std::string, std::pair<bool, std::size_t>>> opt;
        for (const auto& r : sn_catalog(m)) opt.push_back({r.label(), {false, r.dim()}});
        for (const auto& p : sn_catalog_gaps(m)) opt.push_back({"catalog:" + partition_string(p), {true, partition_dimension(p)}});
        options.push_back(std::move(opt));
      }
      std::vector<std::size_t> pick(options.size(), 0);
      while (true) {
        IrrepLabel lab;
        lab.k = k;
        lab.u = u;
        lab.dim = os.orbit.size();
        for (std::size_t i = 0; i < options.size(); ++i) {
          lab.mu.push_back(options[i][pick[i]].first);
          lab.catalog_gap = lab.catalog_gap || options[i][pick[i]].second.first;
          lab.dim *= options[i][pick[i]].second.second;
        }
        out.push_back(std::move(lab));
        int i = static_cast<int>(options.size()) - 1;
        while (i >= 0 && pick[i] + 1 == options[i].size()) pick[i--] = 0;
        if (i < 0) break;
        ++pick[i];
      }
      return;
    }
    for (int v = 0; v <= maxval; ++v) {
      u[pos] = v;
      rec_u(pos + 1, v);
    }
  };
  rec_u(0, k - 1);
  return out;
}

struct RepSpecError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Parses "chi=k:<j>" or "chi=(u1,...,un)", optionally followed by ";mu=<label>[*<label>…]".
// A single μ label goes to the only stabilizer block of size >= 2 (or to every block when it is
// "trivial"); a '*'-list names either every block or every block of size >= 2, in block order.
inline IrrepLabel parse_rep_spec(const std::string& text, int k, int n) {
  std::map<std::string, std::string> fields;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    item = item.substr(b);
    item.erase(item.find_last_not_of(" \t") + 1);
    auto eq = item.find('=');
    if (eq == std::string::npos) throw RepSpecError("rep spec: expected key=value in \"" + item + "\"");
    std::string key = item.substr(0, eq);
    if (key != "chi" && key != "mu") throw RepSpecError("rep spec: unknown key \"" + key + "\"");
    if (fields.count(key)) throw RepSpecError("rep spec: duplicate key \"" + key + "\"");
    fields[key] = item.substr(eq + 1);
  }
  if (!fields.count("chi")) throw RepSpecError("rep spec: missing chi=");
  std::vector<int> u;
  const std::string& c = fields["chi"];
  try {
    if (c.rfind("k:", 0) == 0) {
      int j = std::stoi(c.substr(2));
      if (j < 0 || j > n) throw RepSpecError("rep spec: chi=k:" + std::to_string(j) + " needs 0 <= j <= n");
      u = GammaCharacter::weight(k, n, j).u;
    } else {
      if (c.size() < 2 || c.front() != '(' || c.back() != ')') throw RepSpecError("rep spec: chi must be k:<j> or (u1,...,un)");
      std::stringstream cs(c.substr(1, c.size() - 2));
      std::string tok;
      while (std::getline(cs, tok, ',')) u.push_back(std::stoi(tok));
      for (int x : u)
        if (x < 0 || x >= k) throw RepSpecError("rep spec: entries of chi must lie in 0..k-1");
    }
  } catch (const std::logic_error& e) {
    if (dynamic_cast<const RepSpecError*>(&e)) throw;
    throw RepSpecError("rep spec: malformed chi \"" + c + "\"");
  }
  if (static_cast<int>(u.size()) != n)
    throw RepSpecError("rep spec: chi has " + std::to_string(u.size()) + " entries, expected n = " + std::to_string(n));
  std::sort(u.begin(), u.end(), std::greater<>());
  auto os = orbit_and_stabilizer(GammaCharacter(k, u));

  std::vector<std::string> labels;
  if (fields.count("mu")) {
    std::stringstream ms(fields["mu"]);
    std::string tok;
    while (std::getline(ms, tok, '*')) labels.push_back(tok);
  }
  std::vector<std::size_t> big;
  for (std::size_t i = 0; i < os.blocks.size(); ++i)
    if (os.blocks[i].size() >= 2) big.push_back(i);
  std::vector<std::string> per_block(os.blocks.size(), "trivial");
  if (labels.empty() || (labels.size() == 1 && labels[0] == "trivial")) {
  } else if (labels.size() == os.blocks.size()) {
    per_block = labels;
  } else if (labels.size() == big.size()) {
    for (std::size_t i = 0; i < big.size(); ++i) per_block[big[i]] = labels[i];
  } else if (labels.size() == 1 && big.empty()) {
    if (labels[0] != "sign") throw RepSpecError("rep spec: the stabilizer is trivial; mu must be trivial");
  } else {
    throw RepSpecError("rep spec: " + std::to_string(labels.size()) + " mu label(s) for a stabilizer with " +
                       std::to_string(os.blocks.size()) + " factor(s), " + std::to_string(big.size()) +
                       " of size >= 2; list one label per factor with '*'");
  }

  IrrepLabel lab;
  lab.k = k;
  lab.u = u;
  lab.dim = os.orbit.size();
  for (std::size_t i = 0; i < os.blocks.size(); ++i) {
    const int m = static_cast<int>(os.blocks[i].size());
    try {
      auto r = sn_irrep(m, per_block[i]);
      lab.mu.push_back(r.label());
      lab.dim *= r.dim();
    } catch (const CatalogGap&) {
      lab.mu.push_back(per_block[i]);
      lab.catalog_gap = true;
      Partition p;
      std::stringstream ps(per_block[i].substr(8));
      std::string tok;
      while (std::getline(ps, tok, ',')) p.push_back(std::stoi(tok));
      lab.dim *= partition_dimension(p);
    } catch (const std::invalid_argument& e) {
      throw RepSpecError(std::string("rep spec: ") + e.what());
    }
  }
  return lab;
}

// Builds the representation for a cataloged label.
inline InducedRep build_rep(const IrrepLabel& lab) {
  if (lab.catalog_gap) throw CatalogGap("build_rep: " + lab.spec() + " needs an S_m irrep outside the catalog");
  GammaCharacter chi(lab.k, lab.u);
  auto os = orbit_and_stabilizer(chi);
  std::vector<SnIrrep> mu;
  for (std::size_t i = 0; i < os.blocks.size(); ++i) mu.push_back(sn_irrep(static_cast<int>(os.blocks[i].size()), lab.mu[i]));
  return InducedRep(chi, mu);
}

}  // namespace nichols
