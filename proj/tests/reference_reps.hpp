#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "support.hpp"

namespace testing_support {

// Representations of Z_2^3 ⋊ S_3 on S_6 given by images of A_1, A_2, A_3, B = (13)(24), C = (135)(246).
struct GeneratorImages {
  std::vector<Matrix> images;  // A_1, A_2, A_3, B, C
};

inline std::vector<Permutation> reference_generators() {
  return {P("(12)", 6), P("(34)", 6), P("(56)", 6), P("(13)(24)", 6), P("(135)(246)", 6)};
}

// Extends the generator images to the whole group by breadth-first search, failing on any
// inconsistency.
inline std::map<Permutation, Matrix> extend_to_group(const GeneratorImages& g) {
  const auto gens = reference_generators();
  const std::size_t d = g.images[0].rows();
  std::map<Permutation, Matrix> out{{Permutation::identity(6), Matrix::identity(d)}};
  std::vector<Permutation> frontier{Permutation::identity(6)};
  while (!frontier.empty()) {
    std::vector<Permutation> next;
    for (const auto& x : frontier)
      for (std::size_t s = 0; s < gens.size(); ++s) {
        const Permutation y = x * gens[s];
        const Matrix my = out.at(x) * g.images[s];
        auto it = out.find(y);
        if (it == out.end()) {
          out.emplace(y, my);
          next.push_back(y);
        } else if (!(it->second == my)) {
          throw std::logic_error("extend_to_group: generator images do not define a representation");
        }
      }
    frontier = std::move(next);
  }
  return out;
}

inline Cyclotomic w3() { return Cyclotomic::zeta(3, 1); }

inline Matrix diag(std::vector<long> d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = Cyclotomic(d[i]);
  return m;
}

inline GeneratorImages theta_reference(int sign) {
  const long s = sign;
  Matrix C(2, 2);
  C(0, 0) = w3();
  C(1, 1) = w3().inverse();
  return {{diag({s, s}), diag({s, s}), diag({s, s}), Matrix::from_ints({{0, 1}, {1, 0}}), C}};
}

inline GeneratorImages phi_reference(int sign) {
  const long s = sign;
  return {{diag({1, -1, 1}), diag({1, 1, -1}), diag({-1, 1, 1}), Matrix::from_ints({{s, 0, 0}, {0, 0, s}, {0, s, 0}}),
           Matrix::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})}};
}

inline GeneratorImages psi_reference(int sign) {
  const long s = sign;
  return {{diag({-1, 1, -1}), diag({-1, -1, 1}), diag({1, -1, -1}), Matrix::from_ints({{s, 0, 0}, {0, 0, s}, {0, s, 0}}),
           Matrix::from_ints({{0, 0, 1}, {1, 0, 0}, {0, 1, 0}})}};
}

inline GeneratorImages chi_reference(int a, int b) {
  return {{diag({a}), diag({a}), diag({a}), diag({b}), diag({1})}};
}

// Whether an induced rep has the same character as the reference on all 48 elements.
inline bool same_character(const InducedRep& rho, const GeneratorImages& ref) {
  const UnmixedClass cls(2, 3);
  for (const auto& [g, m] : extend_to_group(ref))
    if (!(rho.evaluate(cls.normal_form(g)).trace() == m.trace())) return false;
  return true;
}

}  // namespace testing_support
