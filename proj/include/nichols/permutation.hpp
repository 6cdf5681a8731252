#pragma once

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace nichols {

// Permutation of {1..N}. images[i-1] is the image of point i.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::size_t degree) : images_(degree) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  explicit Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 1 || static_cast<std::size_t>(x) > images_.size() || seen[x - 1])
        throw std::invalid_argument("Permutation: images are not a bijection of {1..N}");
      seen[x - 1] = true;
    }
  }

  static Permutation identity(std::size_t degree) { return Permutation(degree); }

  // Builds a permutation of {1..degree} from disjoint cycles.
  static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(degree);
    std::iota(img.begin(), img.end(), 1);
    std::vector<bool> used(degree, false);
    for (const auto& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        if (a < 1 || static_cast<std::size_t>(a) > degree)
          throw std::invalid_argument("cycle point " + std::to_string(a) + " outside ground set");
        if (used[a - 1]) throw std::invalid_argument("cycles are not disjoint at point " + std::to_string(a));
        used[a - 1] = true;
        img[a - 1] = b;
      }
    }
    return Permutation(std::move(img));
  }

  std::size_t degree() const { return images_.size(); }
  int operator()(int x) const { return images_[x - 1]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
      if (images_[i] != static_cast<int>(i + 1)) return false;
    return true;
  }

  Permutation inverse() const {
    std::vector<int> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i] - 1] = static_cast<int>(i + 1);
    Permutation p;
    p.images_ = std::move(inv);
    return p;
  }

  // Disjoint cycles of length >= 2, each starting at its minimal point, ordered by that point.
  std::vector<std::vector<int>> cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      int x = static_cast<int>(i + 1);
      while (!seen[x - 1]) {
        seen[x - 1] = true;
        c.push_back(x);
        x = images_[x - 1];
      }
      if (c.size() > 1) out.push_back(std::move(c));
    }
    return out;
  }

  int sign() const {
    int s = 1;
    for (const auto& c : cycles())
      if (c.size() % 2 == 0) s = -s;
    return s;
  }

  std::size_t order() const {
    std::size_t o = 1;
    for (const auto& c : cycles()) o = std::lcm(o, c.size());
    return o;
  }

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.images_ <=> b.images_; }

 private:
  friend Permutation compose(const Permutation& p, const Permutation& q);
  std::vector<int> images_;
};

// (p∘q)(x) = p(q(x)), so pq applies q first.
inline Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw std::invalid_argument("compose: ground set size mismatch (" + std::to_string(p.degree()) + " vs " +
                                std::to_string(q.degree()) + ")");
  Permutation r;
  r.images_.resize(p.degree());
  for (std::size_t i = 0; i < p.degree(); ++i) r.images_[i] = p.images_[q.images_[i] - 1];
  return r;
}

inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

inline Permutation power(const Permutation& p, long long e) {
  const long long ord = static_cast<long long>(p.order());
  e %= ord;
  if (e < 0) e += ord;
  Permutation r = Permutation::identity(p.degree());
  for (long long i = 0; i < e; ++i) r = r * p;
  return r;
}

// Rack operation g ▷ h = g h g^{-1}.
inline Permutation conjugate(const Permutation& g, const Permutation& h) {
  if (g.degree() != h.degree()) throw std::invalid_argument("conjugate: ground set size mismatch");
  // (g h g^-1)(g(x)) = g(h(x))
  std::vector<int> img(g.degree());
  for (int x = 1; x <= static_cast<int>(g.degree()); ++x) img[g(x) - 1] = g(h(x));
  return Permutation(std::move(img));
}

inline bool commute(const Permutation& a, const Permutation& b) {
  for (int x = 1; x <= static_cast<int>(a.degree()); ++x)
    if (a(b(x)) != b(a(x))) return false;
  return true;
}

inline std::string to_cycle_string(const Permutation& p) {
  auto cs = p.cycles();
  if (cs.empty()) return "()";
  const bool compact = p.degree() <= 9;
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i > 0 && !compact) s += ' ';
      s += std::to_string(c[i]);
    }
    s += ')';
  }
  return s;
}

// Parses "(1 2)(3 4)" on {1..degree}. Digit-run shorthand "(12)(34)" is accepted only when degree <= 9.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
  std::vector<std::vector<int>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("parse_cycles: expected '(' in \"" + std::string(text) + "\"");
    ++i;
    std::vector<std::string> tokens;
    std::string cur;
    bool separated = false;
    while (i < text.size() && text[i] != ')') {
      char ch = text[i];
      if (std::isdigit(static_cast<unsigned char>(ch))) {
        cur += ch;
      } else if (std::isspace(static_cast<unsigned char>(ch)) || ch == ',') {
        if (!cur.empty()) tokens.push_back(cur), cur.clear();
        separated = true;
      } else {
        throw std::invalid_argument("parse_cycles: unexpected character '" + std::string(1, ch) + "'");
      }
      ++i;
    }
    if (i == text.size()) throw std::invalid_argument("parse_cycles: missing ')'");
    ++i;
    if (!cur.empty()) tokens.push_back(cur);
    std::vector<int> cyc;
    if (!separated && tokens.size() == 1 && tokens[0].size() > 1) {
      if (degree > 9)
        throw std::invalid_argument("parse_cycles: digit-run shorthand is ambiguous for N >= 10; separate points");
      for (char ch : tokens[0]) cyc.push_back(ch - '0');
    } else {
      for (const auto& t : tokens) cyc.push_back(std::stoi(t));
    }
    if (cyc.size() > 1) cycles.push_back(std::move(cyc));
    skip_ws();
  }
  return Permutation::from_cycles(degree, cycles);
}

// Cycle type as multiplicities of cycle lengths, fixed points counted as 1-cycles.
struct CycleType {
  std::map<int, int> multiplicities;

  int size() const {
    int s = 0;
    for (auto [len, m] : multiplicities) s += len * m;
    return s;
  }

  static CycleType uniform(int k, int n) { return CycleType{{{k, n}}}; }

  std::string to_string() const {
    std::string s = "(";
    bool first = true;
    for (auto it = multiplicities.rbegin(); it != multiplicities.rend(); ++it) {
      if (!first) s += ",";
      first = false;
      s += std::to_string(it->first) + "^" + std::to_string(it->second);
    }
    return s + ")";
  }

  friend bool operator==(const CycleType&, const CycleType&) = default;
};

inline CycleType cycle_type(const Permutation& p) {
  CycleType t;
  std::size_t moved = 0;
  for (const auto& c : p.cycles()) {
    t.multiplicities[static_cast<int>(c.size())]++;
    moved += c.size();
  }
  if (moved < p.degree()) t.multiplicities[1] += static_cast<int>(p.degree() - moved);
  return t;
}

namespace detail {

struct ClassEnumerator {
  std::map<int, int> remaining;  // cycle length -> cycles still to place
  std::vector<bool> used;
  std::vector<int> img;
  const std::function<void(const Permutation&)>* emit;

  void run() {
    std::size_t first = 0;
    while (first < used.size() && used[first]) ++first;
    if (first == used.size()) {
      (*emit)(Permutation(img));
      return;
    }
    // The cycle through the smallest free point takes each still-available length in turn.
    for (auto& [len, count] : remaining) {
      if (count == 0) continue;
      --count;
      used[first] = true;
      std::vector<int> cyc{static_cast<int>(first + 1)};
      grow(cyc, len);
      used[first] = false;
      ++count;
    }
  }

  void grow(std::vector<int>& cyc, int len) {
    if (static_cast<int>(cyc.size()) == len) {
      std::vector<int> saved(cyc.size());
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        saved[i] = img[cyc[i] - 1];
        img[cyc[i] - 1] = cyc[(i + 1) % cyc.size()];
      }
      run();
      for (std::size_t i = 0; i < cyc.size(); ++i) img[cyc[i] - 1] = saved[i];
      return;
    }
    for (std::size_t x = 0; x < used.size(); ++x) {
      if (used[x]) continue;
      used[x] = true;
      cyc.push_back(static_cast<int>(x + 1));
      grow(cyc, len);
      cyc.pop_back();
      used[x] = false;
    }
  }
};

}  // namespace detail

// Calls `emit` once for every permutation of {1..N} with the given cycle type.
inline void for_each_in_class(const CycleType& t, std::size_t degree, const std::function<void(const Permutation&)>& emit) {
  if (t.size() != static_cast<int>(degree))
    throw std::invalid_argument("conjugacy_class: cycle type " + t.to_string() + " does not partition " +
                                std::to_string(degree));
  detail::ClassEnumerator e;
  e.remaining = t.multiplicities;
  e.used.assign(degree, false);
  e.img.resize(degree);
  std::iota(e.img.begin(), e.img.end(), 1);
  e.emit = &emit;
  e.run();
}

// Whole class, sorted by image vector.
inline std::vector<Permutation> conjugacy_class(const CycleType& t, std::size_t degree) {
  std::vector<Permutation> out;
  for_each_in_class(t, degree, [&](const Permutation& p) { out.push_back(p); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace nichols
