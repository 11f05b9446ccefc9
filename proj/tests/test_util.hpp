#pragma once

#include <random>

#include "ulam/perm.hpp"

namespace test_util {

using ulam::PermString;
using ulam::Sym;

inline PermString P(const char* digits) { return ulam::perm_from_digits(digits); }

inline PermString random_perm(std::size_t len, std::mt19937_64& rng) {
  PermString p = ulam::iota_perm(len);
  for (std::size_t i = len; i > 1; --i) std::swap(p[i - 1], p[rng() % i]);
  return p;
}

inline std::string random_bits(std::size_t len, std::mt19937_64& rng) {
  std::string s(len, '0');
  for (char& c : s) c = (rng() & 1) ? '1' : '0';
  return s;
}

}  // namespace test_util
