#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "permsync/bigint.hpp"
#include "permsync/property_report.hpp"
#include "permsync/recurrence.hpp"

namespace permsync {

/// alpha*k + beta*n + gamma with exact integer coefficients. Every
/// certified recurrence coefficient in this module is affine in (n, k).
struct Affine {
  long alpha = 0;
  long beta = 0;
  long gamma = 0;

  long eval(long n, long k) const { return alpha * k + beta * n + gamma; }
  bool operator==(const Affine&) const = default;
};

/// Which named coefficient multiplies the k-shifted source term t_{n-1,k-1}.
/// The certification conditions are symmetric in c and d, so the verdict does
/// not depend on this; the generated triangle does.
enum class TermPairing { cOnShifted, cOnUnshifted };

/// Valid k interval of row n.
enum class KRange {
  zeroToNminus1,   ///< 0..n-1
  zeroToN,         ///< 0..n
  oneToN,          ///< 1..n
  zeroToHalfNm1,   ///< 0..floor((n-1)/2)
  zeroToHalfN,     ///< 0..floor(n/2)
};

long k_range_lo(KRange r);
long k_range_hi(KRange r, long n);
const char* k_range_name(KRange r);
std::optional<KRange> k_range_from_name(std::string_view name);

/// A triangular recurrence t_{n,k} = (coeff on shifted) t_{n-1,k-1} +
/// (coeff on unshifted) t_{n-1,k}, together with its first row. Out-of-range
/// source terms are 0.
struct CoeffRule {
  std::string name;
  Affine c;
  Affine d;
  TermPairing pairing = TermPairing::cOnShifted;
  Seq initial_row;
  long initial_offset = 0;  ///< k value of initial_row[0] (row n = 1)
  KRange k_range = KRange::zeroToNminus1;

  const Affine& on_shifted() const {
    return pairing == TermPairing::cOnShifted ? c : d;
  }
  const Affine& on_unshifted() const {
    return pairing == TermPairing::cOnShifted ? d : c;
  }
};

enum class SaganCondition { original, modified };
const char* condition_name(SaganCondition c);

/// Outcome of sweeping a certification condition over 1 <= n <= n_max_checked
/// and the rule's k-range.
struct Certificate {
  std::string rule_name;
  SaganCondition condition = SaganCondition::original;
  bool verdict = true;
  std::vector<std::pair<long, long>> witnesses;  ///< (n, k) failure points
  long n_max_checked = 0;
  /// True when the condition's margin was identical at every swept point, so
  /// the verdict is independent of n within (and, for affine coefficients,
  /// beyond) the checked range. Reported honestly as range-limited otherwise.
  bool uniform = false;
  /// Sharpest instance of the inequality, e.g. "2 >= 2", and where it occurs.
  std::string tightness;
  long tight_n = 0;
  long tight_k = 0;
  std::string detail;
};

/// Point evaluation of a condition: lhs cmp rhs with cmp being >= for both
/// conditions once oriented (original: 2 c d >= c_- d_+ + c_+ d_-).
struct ConditionPoint {
  long n = 0;
  long k = 0;
  Int lhs;
  Int rhs;
  bool holds = true;
  bool lhs_exact = true;  ///< modified: false when 2*sqrt(AB) is irrational
};

ConditionPoint original_condition_point(const CoeffRule& rule, long n, long k);
ConditionPoint modified_condition_point(const CoeffRule& rule, long n, long k);

/// Generates rows 1..n_max. Throws RuleViolationError with the offending
/// (n, k) if a coefficient evaluates negative inside the declared k-range.
TriangularArray build_triangle(const CoeffRule& rule, long n_max);

/// Checks coefficient-row log-concavity plus the original product condition
/// c_{k-1} d_{k+1} + c_{k+1} d_{k-1} <= 2 c_k d_k over the swept range.
Certificate certify_sagan(const CoeffRule& rule, long n_max);

/// Same sweep with the relaxed condition
/// 2 sqrt((c^2 - c_+ c_-)(d^2 - d_+ d_-)) >= c_- d_+ + c_+ d_- - 2 c d,
/// decided exactly: a non-positive right side always holds; otherwise the
/// squared comparison 4AB >= rhs^2 is taken in integers.
Certificate certify_modified_sagan(const CoeffRule& rule, long n_max);

/// Implication audit: every swept point satisfying the original condition
/// must satisfy the modified one.
PropertyReport original_implies_modified(const CoeffRule& rule, long n_max);

/// The five stock applications, keyed by the matching triangle family
/// (pair families have no coefficient rule and are rejected).
CoeffRule preset_rule(FamilyId f);
std::vector<FamilyId> preset_family_ids();

/// Parses a declarative key-value rule description:
///   name = myrule
///   c = 1 0 1            # alpha beta gamma, value = alpha*k + beta*n + gamma
///   d = -1 1 0
///   pairing = c-unshifted
///   initial = 1
///   offset = 0
///   krange = 0..n-1
/// Throws ParseError with a line diagnostic on malformed input.
CoeffRule parse_rule(std::istream& in);
CoeffRule parse_rule_text(const std::string& text);

}  // namespace permsync
