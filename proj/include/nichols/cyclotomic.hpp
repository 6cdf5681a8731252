#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace nichols {

using Rational = mpq_class;

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline Rational parse_rational(const std::string& s) {
  Rational q(s);
  q.canonicalize();
  return q;
}

// ζ_m^a
struct RootOfUnity {
  int m = 1;
  int a = 0;

  RootOfUnity() = default;
  RootOfUnity(int m_, long long a_) : m(m_), a(0) {
    if (m_ < 1) throw std::invalid_argument("RootOfUnity: order must be positive");
    long long r = a_ % m_;
    if (r < 0) r += m_;
    a = static_cast<int>(r);
  }

  // Same value written with the smallest possible ambient order.
  RootOfUnity reduced() const {
    int g = std::gcd(m, a);
    if (a == 0) return RootOfUnity(1, 0);
    return RootOfUnity(m / g, a / g);
  }

  int order() const { return m / std::gcd(m, a); }

  std::string to_string() const { return "z(" + std::to_string(m) + "," + std::to_string(a) + ")"; }

  friend RootOfUnity operator*(const RootOfUnity& x, const RootOfUnity& y) {
    const int l = std::lcm(x.m, y.m);
    return RootOfUnity(l, static_cast<long long>(x.a) * (l / x.m) + static_cast<long long>(y.a) * (l / y.m)).reduced();
  }
  friend bool operator==(const RootOfUnity& x, const RootOfUnity& y) {
    auto u = x.reduced(), v = y.reduced();
    return u.m == v.m && u.a == v.a;
  }
  friend bool operator<(const RootOfUnity& x, const RootOfUnity& y) {
    auto u = x.reduced(), v = y.reduced();
    return std::pair(u.m, u.a) < std::pair(v.m, v.a);
  }

  bool is_one() const { return a == 0; }
  RootOfUnity inverse() const { return RootOfUnity(m, -static_cast<long long>(a)).reduced(); }
  RootOfUnity pow(long long e) const { return RootOfUnity(m, static_cast<long long>(a) * e).reduced(); }
};

inline int order(const RootOfUnity& x) { return x.order(); }

namespace detail {

inline int euler_phi(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      while (m % p == 0) m /= p;
      result -= result / p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

using IntPoly = std::vector<long long>;  // coefficients, lowest degree first

inline IntPoly poly_divide_exact(const IntPoly& num, const IntPoly& den) {
  IntPoly rem = num;
  IntPoly q(num.size() - den.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    long long c = rem[i + den.size() - 1] / den.back();
    q[i] = c;
    for (std::size_t j = 0; j < den.size(); ++j) rem[i + j] -= c * den[j];
  }
  return q;
}

// Φ_m with integer coefficients, via x^m − 1 = ∏_{d|m} Φ_d.
inline const IntPoly& cyclotomic_polynomial(int m) {
  thread_local std::map<int, IntPoly> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (int d = 1; d < m; ++d)
    if (m % d == 0) p = poly_divide_exact(p, cyclotomic_polynomial(d));
  return cache.emplace(m, std::move(p)).first->second;
}

// Coefficients of x^e reduced modulo Φ_m, for 0 <= e < m.
inline const std::vector<std::vector<Rational>>& power_table(int m) {
  thread_local std::map<int, std::vector<std::vector<Rational>>> cache;
  auto it = cache.find(m);
  if (it != cache.end()) return it->second;
  const IntPoly& phi = cyclotomic_polynomial(m);
  const int deg = static_cast<int>(phi.size()) - 1;
  std::vector<std::vector<Rational>> table(m, std::vector<Rational>(deg, 0));
  std::vector<Rational> cur(deg, 0);
  cur[0] = 1;
  for (int e = 0; e < m; ++e) {
    table[e] = cur;
    // multiply by x and reduce
    Rational top = cur[deg - 1];
    for (int i = deg - 1; i > 0; --i) cur[i] = cur[i - 1];
    cur[0] = 0;
    if (top != 0)
      for (int i = 0; i < deg; ++i) cur[i] -= top * Rational(static_cast<long>(phi[i]));
  }
  return cache.emplace(m, std::move(table)).first->second;
}

}  // namespace detail

// Element of Q(ζ_m) in the power basis {ζ^i : 0 <= i < φ(m)}, reduced modulo Φ_m.
class Cyclotomic {
 public:
  Cyclotomic() : m_(1), c_(1, 0) {}
  Cyclotomic(long v) : m_(1), c_(1, Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Cyclotomic(const Rational& q) : m_(1), c_(1, q) {}  // NOLINT(google-explicit-constructor)

  Cyclotomic(int conductor, std::vector<Rational> coeffs) : m_(conductor), c_(std::move(coeffs)) {
    if (static_cast<int>(c_.size()) != detail::euler_phi(m_))
      throw std::invalid_argument("Cyclotomic: coefficient count must equal phi(m)");
  }

  static Cyclotomic root(const RootOfUnity& z) {
    const auto& row = detail::power_table(z.m)[z.a];
    return Cyclotomic(z.m, row).trimmed();
  }
  static Cyclotomic zeta(int m, long long a) { return root(RootOfUnity(m, a)); }

  int conductor() const { return m_; }
  const std::vector<Rational>& coefficients() const { return c_; }

  bool is_zero() const {
    for (const auto& q : c_)
      if (q != 0) return false;
    return true;
  }
  bool is_rational() const {
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }
  bool is_one() const { return is_rational() && c_[0] == 1; }

  // Same element written over Q(ζ_M), m | M.
  Cyclotomic lifted(int M) const {
    if (M == m_) return *this;
    if (M % m_ != 0) throw std::invalid_argument("Cyclotomic::lifted: target conductor is not a multiple");
    const auto& table = detail::power_table(M);
    const int step = M / m_;
    std::vector<Rational> out(detail::euler_phi(M), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      const auto& row = table[(static_cast<long long>(i) * step) % M];
      for (std::size_t j = 0; j < out.size(); ++j)
        if (row[j] != 0) out[j] += c_[i] * row[j];
    }
    return Cyclotomic(M, std::move(out));
  }

  // Rewrites a rational value with conductor 1; other values unchanged.
  Cyclotomic trimmed() const {
    if (m_ != 1 && is_rational()) return Cyclotomic(c_[0]);
    return *this;
  }

  friend Cyclotomic operator+(const Cyclotomic& x, const Cyclotomic& y) {
    const int M = std::lcm(x.m_, y.m_);
    Cyclotomic a = x.lifted(M), b = y.lifted(M);
    for (std::size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
    return a.trimmed();
  }
  friend Cyclotomic operator-(const Cyclotomic& x) {
    Cyclotomic a = x;
    for (auto& q : a.c_) q = -q;
    return a;
  }
  friend Cyclotomic operator-(const Cyclotomic& x, const Cyclotomic& y) { return x + (-y); }

  friend Cyclotomic operator*(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.m_ == 1) return y.scaled(x.c_[0]);
    if (y.m_ == 1) return x.scaled(y.c_[0]);
    const int M = std::lcm(x.m_, y.m_);
    Cyclotomic a = x.lifted(M), b = y.lifted(M);
    const auto& table = detail::power_table(M);
    const std::size_t deg = a.c_.size();
    std::vector<Rational> prod(2 * deg - 1, 0);
    for (std::size_t i = 0; i < deg; ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < deg; ++j)
        if (b.c_[j] != 0) prod[i + j] += a.c_[i] * b.c_[j];
    }
    std::vector<Rational> out(deg, 0);
    for (std::size_t e = 0; e < prod.size(); ++e) {
      if (prod[e] == 0) continue;
      const auto& row = table[e % table.size()];
      for (std::size_t j = 0; j < deg; ++j)
        if (row[j] != 0) out[j] += prod[e] * row[j];
    }
    return Cyclotomic(M, std::move(out)).trimmed();
  }

  Cyclotomic scaled(const Rational& q) const {
    Cyclotomic a = *this;
    for (auto& v : a.c_) v *= q;
    return a.trimmed();
  }

  Cyclotomic& operator+=(const Cyclotomic& y) { return *this = *this + y; }
  Cyclotomic& operator-=(const Cyclotomic& y) { return *this = *this - y; }
  Cyclotomic& operator*=(const Cyclotomic& y) { return *this = *this * y; }

  friend bool operator==(const Cyclotomic& x, const Cyclotomic& y) {
    if (x.m_ == y.m_) return x.c_ == y.c_;
    const int M = std::lcm(x.m_, y.m_);
    return x.lifted(M).c_ == y.lifted(M).c_;
  }

  Cyclotomic inverse() const;

  friend Cyclotomic operator/(const Cyclotomic& x, const Cyclotomic& y) { return x * y.inverse(); }

  std::string to_string() const {
    if (m_ == 1) return c_[0].get_str();
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] == 0) continue;
      std::string coef = c_[i].get_str();
      std::string term;
      if (i == 0) {
        term = coef;
      } else {
        std::string z = "z" + std::to_string(m_) + (i > 1 ? "^" + std::to_string(i) : "");
        if (c_[i] == 1) term = z;
        else if (c_[i] == -1) term = "-" + z;
        else term = coef + "*" + z;
      }
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s.empty() ? "0" : s;
  }

 private:
  int m_;
  std::vector<Rational> c_;
};

namespace detail {

using QPoly = std::vector<Rational>;

inline void poly_trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder in Q[x].
inline std::pair<QPoly, QPoly> poly_divmod(QPoly a, const QPoly& b) {
  QPoly q;
  poly_trim(a);
  if (a.size() < b.size()) return {q, a};
  q.assign(a.size() - b.size() + 1, 0);
  for (std::size_t i = q.size(); i-- > 0;) {
    Rational c = a[i + b.size() - 1] / b.back();
    q[i] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) a[i + j] -= c * b[j];
  }
  poly_trim(a);
  return {q, a};
}

inline QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

inline QPoly poly_sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  poly_trim(a);
  return a;
}

}  // namespace detail

// Extended Euclid against Φ_m: finds s with s·x ≡ 1.
inline Cyclotomic Cyclotomic::inverse() const {
  using namespace detail;
  if (is_zero()) throw std::domain_error("Cyclotomic::inverse: division by zero");
  if (m_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  QPoly phi;
  for (long long v : cyclotomic_polynomial(m_)) phi.push_back(Rational(static_cast<long>(v)));
  QPoly r0 = phi, r1 = c_;
  poly_trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!(r1.size() == 1)) {
    auto [q, r] = poly_divmod(r0, r1);
    QPoly s = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
    if (r1.empty()) throw std::logic_error("Cyclotomic::inverse: non-unit modulo the cyclotomic polynomial");
  }
  const Rational lead = r1[0];
  QPoly inv = poly_divmod(s1, phi).second;
  std::vector<Rational> out(c_.size(), 0);
  for (std::size_t i = 0; i < inv.size(); ++i) out[i] = inv[i] / lead;
  return Cyclotomic(m_, std::move(out)).trimmed();
}

// Decides whether x is a root of unity by exact comparison with every ζ_M^j, M the
// conductor doubled when odd (the roots of unity in Q(ζ_m) form G_{lcm(2,m)}).
inline std::optional<RootOfUnity> as_root_of_unity(const Cyclotomic& x) {
  const int m = x.conductor();
  const int M = (m % 2 == 0) ? m : 2 * m;
  for (int j = 0; j < M; ++j)
    if (Cyclotomic::zeta(M, j) == x) return RootOfUnity(M, j).reduced();
  return std::nullopt;
}

}  // namespace nichols
