// Shared fixtures: the sample presentations used across the test suites.

#ifndef DIVMON_TEST_HELPERS_HPP_
#define DIVMON_TEST_HELPERS_HPP_

#include <string>

#include "divmon/monoid.hpp"
#include "divmon/presentation.hpp"

namespace divmon::test {

// <x, y, z : x y = y z>
inline Monoid sample_xy_yz() {
  return Monoid(parse_presentation("generators: x y z\nrel: x y = y z\n"));
}

// <x, y, z : x^2 = y z, y x = z^2>
inline Monoid sample_twisted() {
  return Monoid(parse_presentation(
      "generators: x y z\nrel: x x = y z\nrel: y x = z z\n"));
}

// <x, y, z : x^2 = y z, y^2 = z x, z^2 = x y>
inline Monoid sample_cyclic() {
  return Monoid(parse_presentation(
      "generators: x y z\nrel: x x = y z\nrel: y y = z x\nrel: z z = x y\n"));
}

// <x, y, z : x^2 = y z, x y = z^2>  (not a divisibility monoid)
inline Monoid sample_bad() {
  return Monoid(parse_presentation(
      "generators: x y z\nrel: x x = y z\nrel: x y = z z\n"));
}

inline Monoid sample_free(size_t n = 2) {
  std::string gens = "generators:";
  for (size_t i = 0; i < n; ++i) {
    gens += " g" + std::to_string(i);
  }
  return Monoid(parse_presentation(gens + "\n"));
}

// <a, b : a b = b a>
inline Monoid sample_trace() {
  return Monoid(parse_presentation("generators: a b\nrel: a b = b a\n"));
}

}  // namespace divmon::test

#endif  // DIVMON_TEST_HELPERS_HPP_
