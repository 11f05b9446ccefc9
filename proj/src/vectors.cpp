#include "ulam/vectors.hpp"

namespace ulam {

void require_vector_set(const VectorSet& s, const char* what) {
  for (const BinaryVector& v : s.vecs) {
    if (v.size() != s.dim)
      fail(Errc::shape_mismatch, std::string(what) + ": vector length " +
                                     std::to_string(v.size()) + " != dim " + std::to_string(s.dim));
    for (char c : v)
      if (c != '0' && c != '1')
        fail(Errc::bad_alphabet, std::string(what) + ": vector character '" + c + "'");
  }
}

std::uint64_t inner_product(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size()) fail(Errc::shape_mismatch, "inner_product on unequal dimensions");
  std::uint64_t s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] == '1' && b[i] == '1') ? 1 : 0;
  return s;
}

BinaryVector pointwise_and(const BinaryVector& a, const BinaryVector& b) {
  if (a.size() != b.size()) fail(Errc::shape_mismatch, "pointwise_and on unequal dimensions");
  BinaryVector out(a.size(), '0');
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = (a[i] == '1' && b[i] == '1') ? '1' : '0';
  return out;
}

}  // namespace ulam
