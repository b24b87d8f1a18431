#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "permsync/enumerate.hpp"

namespace permsync {

/// One row of a verification run: a named check evaluated at size n (or at a
/// fixture/sample index when the check has no natural n).
struct VerifyResult {
  std::string target;
  long n = 0;
  bool verdict = true;
  std::vector<std::vector<long>> witnesses;
  std::string note;

  void fail_at(long step) {
    verdict = false;
    witnesses.push_back({step});
  }
};

struct VerifyOptions {
  EnumGuard guard;
  std::uint64_t seed = 20240823;  ///< used by the randomised cross-check only
};

/// Check identifiers accepted by run_verify_target, with their default
/// sweep bound (for the randomised cross-check the bound is a sample count).
std::vector<std::string> known_verify_targets();
long default_max_n(const std::string& target);

/// Runs one named check up to max_n. Unknown targets throw ParseError; guard
/// rejections propagate as SizeLimitError.
std::vector<VerifyResult> run_verify_target(const std::string& target, long max_n,
                                            const VerifyOptions& opts = {});

/// Conjecture scans (descent distributions over even/odd permutations versus
/// each other and versus the excedance pair). These are evidence only: a pass
/// means no counterexample was found in range, never a proof.
std::vector<VerifyResult> run_conjecture(const std::string& which, long max_n,
                                         const VerifyOptions& opts = {});

bool all_passed(const std::vector<VerifyResult>& results);

}  // namespace permsync
