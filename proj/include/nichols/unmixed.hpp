#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "nichols/permutation.hpp"

namespace nichols {

// Element (d, b) of (Z/k)^n ⋊ S_n, read as A_1^{d_1}⋯A_n^{d_n}·P_b where P_b moves block j
// onto block b(j) preserving the offset inside the block.
struct NormalForm {
  std::vector<int> d;  // exponents mod k
  Permutation b;       // permutation of the n blocks

  bool is_identity() const {
    for (int x : d)
      if (x != 0) return false;
    return b.is_identity();
  }
  friend bool operator==(const NormalForm&, const NormalForm&) = default;
};

// The class of type (k^n) in S_{kn} with basepoint π = A_1⋯A_n, A_j = (kj−k+1 … kj).
class UnmixedClass {
 public:
  UnmixedClass(int k, int n) : k_(k), n_(n) {
    if (k < 2) throw std::invalid_argument("UnmixedClass: cycle length k must be >= 2");
    if (n < 1) throw std::invalid_argument("UnmixedClass: number of cycles n must be >= 1");
    basepoint_ = Permutation::identity(degree());
    for (int j = 1; j <= n; ++j) basepoint_ = basepoint_ * cycle_generator(j);
  }

  int k() const { return k_; }
  int n() const { return n_; }
  std::size_t degree() const { return static_cast<std::size_t>(k_) * static_cast<std::size_t>(n_); }
  const Permutation& basepoint() const { return basepoint_; }
  CycleType type() const { return CycleType::uniform(k_, n_); }

  // First point of block j (1-based block index).
  int block_start(int j) const { return k_ * (j - 1) + 1; }
  int block_of(int x) const { return (x - 1) / k_ + 1; }
  int offset_of(int x) const { return (x - 1) % k_; }

  // A_j, the j-th k-cycle of the basepoint.
  Permutation cycle_generator(int j) const {
    std::vector<int> c(k_);
    std::iota(c.begin(), c.end(), block_start(j));
    return Permutation::from_cycles(degree(), {c});
  }

  // P_b: block j goes to block b(j), offsets preserved.
  Permutation block_permutation(const Permutation& b) const {
    if (static_cast<int>(b.degree()) != n_) throw std::invalid_argument("block_permutation: expected a permutation of n blocks");
    std::vector<int> img(degree());
    for (int j = 1; j <= n_; ++j)
      for (int s = 0; s < k_; ++s) img[block_start(j) - 1 + s] = block_start(b(j)) + s;
    return Permutation(std::move(img));
  }

  // B_i, swapping blocks i and i+1.
  Permutation block_swap(int i) const {
    if (i < 1 || i >= n_) throw std::out_of_range("block_swap: index outside 1..n-1");
    return block_permutation(Permutation::from_cycles(static_cast<std::size_t>(n_), {{i, i + 1}}));
  }

  // B_ij = B_i B_{i+1} ⋯ B_{j−1} ⋯ B_{i+1} B_i, built literally from the adjacent swaps.
  Permutation block_transposition(int i, int j) const {
    if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("block_transposition: need 1 <= i < j <= n");
    if (j - i == 1) return block_swap(i);
    Permutation p = Permutation::identity(degree());
    for (int h = i; h <= j - 1; ++h) p = p * block_swap(h);
    for (int h = j - 2; h >= i; --h) p = p * block_swap(h);
    return p;
  }

  // A_1, …, A_n, B_1, …, B_{n−1}.
  std::vector<Permutation> centralizer_generators() const {
    std::vector<Permutation> gens;
    for (int j = 1; j <= n_; ++j) gens.push_back(cycle_generator(j));
    for (int i = 1; i < n_; ++i) gens.push_back(block_swap(i));
    return gens;
  }

  Permutation assemble(const NormalForm& f) const {
    if (static_cast<int>(f.d.size()) != n_ || static_cast<int>(f.b.degree()) != n_)
      throw std::invalid_argument("assemble: malformed normal form");
    std::vector<int> img(degree());
    for (int j = 1; j <= n_; ++j) {
      const int target = f.b(j);
      const int shift = ((f.d[target - 1] % k_) + k_) % k_;
      for (int s = 0; s < k_; ++s) img[block_start(j) - 1 + s] = block_start(target) + (s + shift) % k_;
    }
    return Permutation(std::move(img));
  }

  std::optional<NormalForm> try_normal_form(const Permutation& g) const {
    if (g.degree() != degree()) return std::nullopt;
    NormalForm f{std::vector<int>(n_, 0), Permutation::identity(static_cast<std::size_t>(n_))};
    std::vector<int> b(n_);
    std::vector<bool> hit(n_, false);
    for (int j = 1; j <= n_; ++j) {
      const int y = g(block_start(j));
      const int target = block_of(y);
      if (hit[target - 1]) return std::nullopt;
      hit[target - 1] = true;
      b[j - 1] = target;
      f.d[target - 1] = offset_of(y);
    }
    f.b = Permutation(std::move(b));
    if (assemble(f) != g) return std::nullopt;
    return f;
  }

  NormalForm normal_form(const Permutation& g) const {
    auto f = try_normal_form(g);
    if (!f) throw std::invalid_argument("normal_form: " + to_cycle_string(g) + " does not centralize the basepoint");
    return *f;
  }

  // Product in (d, b) coordinates: (d,b)(e,c) = (d + b·e, bc) with (b·e)_{b(j)} = e_j.
  NormalForm multiply(const NormalForm& x, const NormalForm& y) const {
    NormalForm r{x.d, x.b * y.b};
    for (int j = 1; j <= n_; ++j) r.d[x.b(j) - 1] = ((r.d[x.b(j) - 1] + y.d[j - 1]) % k_ + k_) % k_;
    return r;
  }

  // All k^n · n! centralizer elements in normal form, in a fixed order.
  std::vector<NormalForm> centralizer_elements() const {
    std::vector<NormalForm> out;
    std::vector<int> perm(n_);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<int> d(n_, 0);
      while (true) {
        out.push_back(NormalForm{d, Permutation(perm)});
        int pos = n_ - 1;
        while (pos >= 0 && d[pos] == k_ - 1) d[pos--] = 0;
        if (pos < 0) break;
        ++d[pos];
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
  }

  // g with g ▷ π = t. The j-th cycle of π (A_j) is sent onto the j-th cycle of t, cycles of t
  // ordered by minimal point and read starting there. For k = 2 the result is replaced by an
  // involution from the same coset gZ(π) when one exists.
  struct Transport {
    Permutation g;
    bool involution_requested = false;
    bool involution_found = false;
  };

  Transport transporter_checked(const Permutation& t) const {
    if (t.degree() != degree() || !(cycle_type(t) == type()))
      throw std::invalid_argument("transporter: " + to_cycle_string(t) + " is not of type " + type().to_string());
    auto cyc = t.cycles();
    std::vector<int> img(degree());
    for (int j = 1; j <= n_; ++j)
      for (int s = 0; s < k_; ++s) img[block_start(j) - 1 + s] = cyc[j - 1][s];
    Transport out{Permutation(std::move(img))};
    if (k_ == 2) {
      out.involution_requested = true;
      const Permutation& g0 = out.g;
      if (g0.order() <= 2) {
        out.involution_found = true;
      } else {
        for (const auto& z : centralizer_elements()) {
          Permutation cand = g0 * assemble(z);
          if (cand.order() <= 2) {
            out.g = cand;
            out.involution_found = true;
            break;
          }
        }
      }
    }
    return out;
  }

  Permutation transporter(const Permutation& t) const { return transporter_checked(t).g; }

  // σ_j of the block-reversal construction: σ_j π σ_j = A_1 ⋯ A_j^{-1} ⋯ A_n.
  Permutation block_reversal(int j) const {
    std::vector<std::vector<int>> cycles;
    for (int h = 1; h <= k_ / 2; ++h) {
      int a = block_start(j) - 1 + h;
      int b = k_ * j - h + 1;
      if (a != b) cycles.push_back({a, b});
    }
    return Permutation::from_cycles(degree(), cycles);
  }

  struct Involutions {
    Permutation inverter;        // σ:  σ ▷ π = π^{-1}
    Permutation swap;            // σ_(i,j): σ_(i,j) ▷ π = π B_ij
    Permutation swap_inverter;   // σ̃_(i,j): σ̃_(i,j) ▷ π = (π B_ij)^{-1}
  };

  // Explicit involutions for k = 2r. Built for blocks (1,2) and moved to (i,j) by a block
  // permutation, which fixes π.
  Involutions canonical_involutions(int i, int j) const {
    if (k_ % 2 != 0) throw std::invalid_argument("canonical_involutions: k must be even");
    if (!(1 <= i && i < j && j <= n_)) throw std::out_of_range("canonical_involutions: need 1 <= i < j <= n");
    const int r = k_ / 2;
    const std::size_t N = degree();

    Permutation inverter = Permutation::identity(N);
    for (int h = 1; h <= n_; ++h) inverter = inverter * block_reversal(h);

    std::vector<std::vector<int>> sw;
    for (int m = 1; m <= r; ++m) sw.push_back({2 * m, 2 * r + 2 * m});
    Permutation swap12 = Permutation::from_cycles(N, sw);

    std::vector<std::vector<int>> tl;
    for (int m = 1; m <= r; ++m) tl.push_back({2 * m, 4 * r + 2 - 2 * m});
    const int inner = (r % 2 == 0) ? (r - 2) / 2 : (r - 1) / 2;
    for (int m = 1; m <= inner; ++m) tl.push_back({2 * m + 1, 2 * r + 1 - 2 * m});
    for (int m = 1; m <= inner; ++m) tl.push_back({2 * r + 2 * m + 1, 4 * r + 1 - 2 * m});
    Permutation swapinv12 = Permutation::from_cycles(N, tl);

    // Block permutation taking 1 -> i, 2 -> j.
    std::vector<int> b(n_);
    b[0] = i;
    b[1] = j;
    int next = 1;
    for (int pos = 2; pos < n_; ++pos) {
      while (next == i || next == j) ++next;
      b[pos] = next++;
    }
    Permutation P = block_permutation(Permutation(std::move(b)));
    // (π B_ij)^{-1} also inverts the cycles outside blocks i and j.
    Permutation others = Permutation::identity(N);
    for (int h = 1; h <= n_; ++h)
      if (h != i && h != j) others = others * block_reversal(h);
    return Involutions{inverter, conjugate(P, swap12), conjugate(P, swapinv12) * others};
  }

  friend bool operator==(const UnmixedClass& a, const UnmixedClass& b) { return a.k_ == b.k_ && a.n_ == b.n_; }

 private:
  int k_;
  int n_;
  Permutation basepoint_;
};

}  // namespace nichols
