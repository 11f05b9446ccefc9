#pragma once

#include <string>

#include "ulam/io.hpp"
#include "ulam/reductions.hpp"

namespace ulam {

struct VerifyReport {
  bool ok = true;
  std::string check;   // first failing check tag, empty when ok
  std::string detail;
};

// Rebuilds the instance a certificate describes and compares it member by
// member, then replays the semantic identities of the reduction. Stops at the
// first failing check.
VerifyReport verify_certificate(const InstanceFileData& file, const Certificate& cert);

}  // namespace ulam
