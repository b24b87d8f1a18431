#pragma once

#include <string>
#include <vector>

#include "permsync/bigint.hpp"

namespace permsync {

/// Outcome of a predicate evaluation. The verdict is true exactly when the
/// witness list is empty; each witness is the index tuple at which the
/// defining inequality failed.
struct PropertyReport {
  std::string property;
  bool verdict = true;
  std::vector<std::vector<long>> witnesses;
  /// Extra context: unmet hypotheses, which side of an equivalence broke, etc.
  std::string note;
  /// For mixed-sequence scans: one concrete non-log-concave sequence.
  Seq witness_seq;

  void fail(std::vector<long> where) {
    verdict = false;
    witnesses.push_back(std::move(where));
  }
};

}  // namespace permsync
