#include "ulam/ov_gadgets.hpp"

namespace ulam {

namespace {

// one table per (side, bit); cross-side LCS drops to 1 exactly on (1,1)
const Sym kGadgetA[2][3] = {{1, 2, 3}, {3, 1, 2}};
const Sym kGadgetB[2][3] = {{1, 3, 2}, {2, 1, 3}};

int bit_of(char c, const char* what) {
  if (c == '0') return 0;
  if (c == '1') return 1;
  fail(Errc::bad_alphabet, std::string(what) + ": character '" + c + "'");
}

}  // namespace

PermString coordinate_gadget(Side side, int bit) {
  if (bit != 0 && bit != 1) fail(Errc::bad_alphabet, "coordinate_gadget bit must be 0 or 1");
  const Sym* row = side == Side::a ? kGadgetA[bit] : kGadgetB[bit];
  return PermString(row, row + 3);
}

PermString vector_gadget(Side side, const BinaryVector& v) {
  if (v.empty()) fail(Errc::shape_mismatch, "vector_gadget on empty vector");
  PermString out;
  out.reserve(3 * v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    int bit = bit_of(v[i], "vector_gadget");
    const Sym* row = side == Side::a ? kGadgetA[bit] : kGadgetB[bit];
    Sym off = static_cast<Sym>(3 * i);
    out.push_back(row[0] + off);
    out.push_back(row[1] + off);
    out.push_back(row[2] + off);
  }
  return out;
}

PermString normalized_gadget(Side side, const BinaryVector& v) {
  const std::size_t d = v.size();
  if (d == 0) fail(Errc::shape_mismatch, "normalized_gadget on empty vector");
  PermString guard;
  guard.reserve(2 * d - 1);
  for (std::size_t i = 1; i <= 2 * d - 1; ++i) guard.push_back(static_cast<Sym>(3 * d + i));

  PermString core = vector_gadget(side, v);
  PermString out;
  out.reserve(5 * d - 1);
  if (side == Side::a) {
    out.insert(out.end(), guard.begin(), guard.end());
    out.insert(out.end(), core.begin(), core.end());
  } else {
    out.insert(out.end(), core.begin(), core.end());
    out.insert(out.end(), guard.begin(), guard.end());
  }
  return out;
}

namespace {

PermString or_gadget(Side side, const VectorSet& tuple) {
  require_vector_set(tuple, "or_gadget");
  const std::size_t m = tuple.size(), d = tuple.dim;
  if (m == 0 || d == 0) fail(Errc::shape_mismatch, "or_gadget needs a nonempty tuple");
  const std::size_t v = 5 * d - 1;
  PermString out;
  out.reserve(v * m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      // row-major grid: side a repeats entry i along the row, side b entry j down
      // the column, so cell (i,j) compares tuple_a[i] against tuple_b[j]
      const BinaryVector& entry = side == Side::a ? tuple.vecs[i] : tuple.vecs[j];
      PermString cell = normalized_gadget(side, entry);
      Sym off = static_cast<Sym>((i * m + j) * v);
      for (Sym s : cell) out.push_back(s + off);
    }
  }
  return out;
}

}  // namespace

PermString or_gadget_f(const VectorSet& tuple) { return or_gadget(Side::a, tuple); }

PermString or_gadget_g(const VectorSet& tuple) { return or_gadget(Side::b, tuple); }

}  // namespace ulam
