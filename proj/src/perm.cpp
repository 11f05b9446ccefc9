#include "ulam/perm.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

namespace ulam {

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::ok: return "Ok";
    case Errc::duplicate_symbol: return "DuplicateSymbol";
    case Errc::non_positive_symbol: return "NonPositiveSymbol";
    case Errc::alphabet_mismatch: return "AlphabetMismatch";
    case Errc::length_mismatch: return "LengthMismatch";
    case Errc::shape_mismatch: return "ShapeMismatch";
    case Errc::empty_instance: return "EmptyInstance";
    case Errc::guard_exceeded: return "GuardExceeded";
    case Errc::not_a_maxcut_instance: return "NotAMaxcutInstance";
    case Errc::no_edges: return "NoEdges";
    case Errc::bad_alphabet: return "BadAlphabet";
    case Errc::not_a_permutation: return "NotAPermutation";
    case Errc::unequal_sizes: return "UnequalSizes";
    case Errc::repeated_symbol: return "RepeatedSymbol";
    case Errc::not_divisible_by_4: return "NotDivisibleBy4";
    case Errc::out_of_range: return "OutOfRange";
    case Errc::too_few_strings: return "TooFewStrings";
    case Errc::missing_certificate: return "MissingCertificate";
    case Errc::too_large: return "TooLarge";
    case Errc::parse_error: return "ParseError";
    case Errc::internal_error: return "InternalError";
  }
  return "Unknown";
}

std::optional<ValidationIssue> validate(const PermString& s) {
  std::unordered_set<Sym> seen;
  seen.reserve(s.size() * 2);
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == 0) return ValidationIssue{Errc::non_positive_symbol, i};
    if (!seen.insert(s[i]).second) return ValidationIssue{Errc::duplicate_symbol, i};
  }
  return std::nullopt;
}

void require_valid(const PermString& s, const char* what) {
  if (auto issue = validate(s)) {
    fail(issue->code, std::string(what) + " at position " + std::to_string(issue->pos + 1));
  }
}

PermString offset_shift(const PermString& s, Sym k) {
  PermString out;
  out.reserve(s.size());
  for (Sym x : s) out.push_back(x + k);
  return out;
}

PermString restrict_to(const PermString& s, const std::vector<Sym>& keep) {
  std::unordered_set<Sym> in_keep(keep.begin(), keep.end());
  PermString out;
  for (Sym x : s)
    if (in_keep.count(x)) out.push_back(x);
  return out;
}

ConcatResult concat_fresh(const std::vector<PermString>& blocks) {
  ConcatResult r;
  Sym running_max = 0;
  for (const PermString& b : blocks) {
    require_valid(b, "concat_fresh block");
    Sym off = running_max;
    r.offsets.push_back(off);
    for (Sym x : b) {
      r.joined.push_back(x + off);
      running_max = std::max(running_max, x + off);
    }
  }
  return r;
}

PermString renormalize_alphabet(const PermString& s) {
  require_valid(s, "renormalize input");
  std::vector<Sym> sorted(s);
  std::sort(sorted.begin(), sorted.end());
  std::map<Sym, Sym> rank;
  for (std::size_t i = 0; i < sorted.size(); ++i) rank[sorted[i]] = static_cast<Sym>(i + 1);
  PermString out;
  out.reserve(s.size());
  for (Sym x : s) out.push_back(rank[x]);
  return out;
}

std::vector<PermString> renormalize_family(const std::vector<PermString>& family) {
  std::vector<Sym> all;
  for (const PermString& s : family) {
    require_valid(s, "renormalize input");
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  all.erase(std::unique(all.begin(), all.end()), all.end());
  std::map<Sym, Sym> rank;
  for (std::size_t i = 0; i < all.size(); ++i) rank[all[i]] = static_cast<Sym>(i + 1);
  std::vector<PermString> out;
  out.reserve(family.size());
  for (const PermString& s : family) {
    PermString t;
    t.reserve(s.size());
    for (Sym x : s) t.push_back(rank[x]);
    out.push_back(std::move(t));
  }
  return out;
}

PermString iota_perm(std::size_t n) {
  PermString p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Sym>(i + 1);
  return p;
}

PermString reversed(const PermString& s) { return PermString(s.rbegin(), s.rend()); }

PermString perm_from_digits(const std::string& digits) {
  PermString out;
  out.reserve(digits.size());
  for (char c : digits) {
    if (c < '1' || c > '9') fail(Errc::parse_error, std::string("bad digit '") + c + "' in compact permutation");
    out.push_back(static_cast<Sym>(c - '0'));
  }
  return out;
}

bool is_contiguous_perm(const PermString& s) {
  std::vector<char> seen(s.size() + 1, 0);
  for (Sym x : s) {
    if (x == 0 || x > s.size() || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

}  // namespace ulam
