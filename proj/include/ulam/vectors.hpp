#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ulam/errors.hpp"

namespace ulam {

// Bit vector as a string over '0'/'1'; index i is coordinate i+1.
using BinaryVector = std::string;

struct VectorSet {
  std::size_t dim = 0;
  std::vector<BinaryVector> vecs;

  std::size_t size() const { return vecs.size(); }
};

// Throws shape_mismatch on wrong lengths, bad_alphabet on characters outside {0,1}.
void require_vector_set(const VectorSet& s, const char* what);

std::uint64_t inner_product(const BinaryVector& a, const BinaryVector& b);
BinaryVector pointwise_and(const BinaryVector& a, const BinaryVector& b);

inline bool orthogonal(const BinaryVector& a, const BinaryVector& b) {
  return inner_product(a, b) == 0;
}

}  // namespace ulam
