#pragma once
// Deterministic uniform draws built directly on the mt19937_64 stream.
// std::uniform_real_distribution is implementation-defined, so results
// produced through it would not be reproducible across standard libraries;
// these helpers are bit-stable everywhere.

#include <cstdint>
#include <random>

#include "bergman/funcspace.hpp"

namespace bergman {

// Uniform on [0, 1): top 53 bits of the generator output.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

// Uniform on [-1, 1).
inline double uniform_pm1(std::mt19937_64& gen) { return 2.0 * uniform01(gen) - 1.0; }

// Uniform on the box [-1,1) x [-1,1); real part drawn first.
inline Complex uniform_unit_box(std::mt19937_64& gen) {
  const double re = uniform_pm1(gen);
  const double im = uniform_pm1(gen);
  return {re, im};
}

}  // namespace bergman
