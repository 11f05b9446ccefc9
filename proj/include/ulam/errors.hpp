#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ulam {

enum class Errc {
  ok = 0,
  duplicate_symbol,
  non_positive_symbol,
  alphabet_mismatch,
  length_mismatch,
  shape_mismatch,
  empty_instance,
  guard_exceeded,
  not_a_maxcut_instance,
  no_edges,
  bad_alphabet,
  not_a_permutation,
  unequal_sizes,
  repeated_symbol,
  not_divisible_by_4,
  out_of_range,
  too_few_strings,
  missing_certificate,
  too_large,
  parse_error,
  internal_error,
};

const char* errc_name(Errc c);

// Library-level failure. `code` selects the machine-readable class, `what()` carries detail.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(errc_name(code)) + ": " + detail), code_(code) {}
  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& detail) { throw Error(code, detail); }

}  // namespace ulam
