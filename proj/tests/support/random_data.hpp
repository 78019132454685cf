#pragma once

#include <random>

#include "so4/element.hpp"
#include "so4/scalar.hpp"

namespace so4::testing {

// Small random Gaussian rationals; zero shows up now and then on purpose.
inline Scalar random_scalar(std::mt19937_64& rng, long height = 9) {
  std::uniform_int_distribution<long> num(-height, height);
  std::uniform_int_distribution<long> den(1, height);
  const Scalar re = Scalar::fraction(num(rng), den(rng));
  return re + Scalar::fraction(num(rng), den(rng)) * Scalar::i();
}

inline Scalar random_nonzero(std::mt19937_64& rng, long height = 9) {
  for (;;) {
    Scalar s = random_scalar(rng, height);
    if (!s.is_zero()) return s;
  }
}

inline Element random_element(std::mt19937_64& rng, long height = 9) {
  Element e;
  for (std::size_t k = 0; k < kDim; ++k) e[k] = random_scalar(rng, height);
  return e;
}

}  // namespace so4::testing
