#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nichols/nichols.hpp"

namespace testing_support {

using namespace nichols;

inline Permutation P(const char* cycles, std::size_t degree) { return parse_cycles(cycles, degree); }

inline Permutation random_permutation(std::size_t degree, std::mt19937& rng) {
  std::vector<int> img(degree);
  std::iota(img.begin(), img.end(), 1);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(img);
}

inline NormalForm random_normal_form(const UnmixedClass& cls, std::mt19937& rng) {
  std::uniform_int_distribution<int> d(0, cls.k() - 1);
  NormalForm f{std::vector<int>(cls.n()), random_permutation(cls.n(), rng)};
  for (auto& x : f.d) x = d(rng);
  return f;
}

inline Permutation random_class_element(const UnmixedClass& cls, std::mt19937& rng) {
  return conjugate(random_permutation(cls.degree(), rng), cls.basepoint());
}

inline Matrix rho_of(const InducedRep& rho, const UnmixedClass& cls, const Permutation& g) { return rho.evaluate(cls.normal_form(g)); }

}  // namespace testing_support
