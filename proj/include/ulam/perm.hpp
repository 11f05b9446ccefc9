#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ulam/errors.hpp"

namespace ulam {

using Sym = std::uint32_t;

// A permutation string: distinct positive symbols, not necessarily contiguous.
using PermString = std::vector<Sym>;

struct ValidationIssue {
  Errc code;         // duplicate_symbol or non_positive_symbol
  std::size_t pos;   // first offending position, 0-based
};

std::optional<ValidationIssue> validate(const PermString& s);
void require_valid(const PermString& s, const char* what);

// All symbols shifted by k. Distances are invariant under this.
PermString offset_shift(const PermString& s, Sym k);

// Keeps the symbols of `s` that occur in `keep`, in order.
PermString restrict_to(const PermString& s, const std::vector<Sym>& keep);

// Hands out fresh symbols as contiguous blocks; `next_free` only moves forward,
// so blocks from one ledger never collide.
class FreshSymbolLedger {
 public:
  explicit FreshSymbolLedger(Sym first_free = 1) : next_free_(first_free) {}

  // Reserves `count` symbols and returns the first one.
  Sym take_block(std::size_t count) {
    Sym first = next_free_;
    next_free_ += static_cast<Sym>(count);
    return first;
  }

  // Shift that maps a string over [1..width] into the next free block.
  Sym shift_for(std::size_t width) {
    Sym off = next_free_ - 1;
    next_free_ += static_cast<Sym>(width);
    return off;
  }

  Sym next_free() const { return next_free_; }

 private:
  Sym next_free_;
};

struct ConcatResult {
  PermString joined;
  std::vector<Sym> offsets;  // shift applied to each input block, in order
};

// Concatenation with per-block shifts so no two blocks share a symbol.
// Block i is shifted by the running maximum of earlier blocks; offsets are recorded
// so any block can be recovered exactly.
ConcatResult concat_fresh(const std::vector<PermString>& blocks);

// Maps symbols to 1..L by rank, preserving order of appearance of values.
PermString renormalize_alphabet(const PermString& s);

// One rank map over the union of all strings, applied to each. Inputs must share
// no constraints beyond validity; output symbols are 1..|union|.
std::vector<PermString> renormalize_family(const std::vector<PermString>& family);

PermString iota_perm(std::size_t n);
PermString reversed(const PermString& s);

// "4312" -> {4,3,1,2}. Digits 1..9 only; anything else is a parse_error.
PermString perm_from_digits(const std::string& digits);

// True iff s is a permutation of exactly {1..s.size()}.
bool is_contiguous_perm(const PermString& s);

}  // namespace ulam
