#pragma once

#include <cstdint>
#include <vector>

#include "permsync/bigint.hpp"
#include "permsync/property_report.hpp"

namespace permsync {

/// Which alternating dominance pattern a pair of sequences follows:
///  evenBelow: a <= b at even indices and a >= b at odd indices
///  evenAbove: the mirror image
///  both:      every comparison is a tie
///  neither:   no pattern holds
enum class RatioPattern { evenBelow, evenAbove, both, neither };

const char* ratio_pattern_name(RatioPattern p);

/// a_i^2 >= a_{i-1} a_{i+1} for every interior i; length <= 2 is vacuous.
PropertyReport is_log_concave(const Seq& a);

/// Weakly increasing up to some peak, then weakly decreasing.
PropertyReport is_unimodal(const Seq& a);

/// The log-concavity inequality imposed only at even (resp. odd) interior i.
PropertyReport is_even_log_concave(const Seq& a);
PropertyReport is_odd_log_concave(const Seq& a);

/// Both sequences log-concave plus the cross inequalities
/// a_{k-1} b_{k+1} <= a_k b_k and a_{k+1} b_{k-1} <= a_k b_k at interior k.
/// Throws LengthMismatchError when the lengths differ (all pair predicates do).
PropertyReport is_synchronised(const Seq& a, const Seq& b);

/// (min{a_k,b_k})^2 >= max{a_{k+1},b_{k+1}} * max{a_{k-1},b_{k-1}} at every
/// interior k.
PropertyReport is_strongly_synchronised(const Seq& a, const Seq& b);

struct RatioAlternatingResult {
  PropertyReport report;
  RatioPattern pattern = RatioPattern::neither;
};

/// True iff one of the two alternating dominance patterns holds throughout.
RatioAlternatingResult is_ratio_alternating(const Seq& a, const Seq& b);

inline constexpr std::uint64_t kDefaultExhaustiveCap = std::uint64_t{1} << 20;

/// Exhaustively checks that every mixed sequence (entry i drawn from any of
/// the given sequences at position i) is log-concave. Scans in counter order
/// with position 0 least significant and stops at the first failure, which is
/// returned in witness_seq. Throws CapExceededError when l^len exceeds cap.
PropertyReport s_family_all_log_concave(const std::vector<Seq>& seqs,
                                        std::uint64_t cap = kDefaultExhaustiveCap);

/// Confirms the equivalence: the min/max inequality holds iff the exhaustive
/// mixed-sequence scan finds only log-concave sequences. Fails only if the
/// two routes disagree.
PropertyReport minmax_vs_exhaustive_check(const Seq& a, const Seq& b,
                                          std::uint64_t cap = kDefaultExhaustiveCap);

/// The two-window generalisation of the min/max inequality:
/// min{a_j,b_j} min{a_l,b_l} >= max{a_{j-i},b_{j-i}} max{a_{l+i},b_{l+i}}
/// over all j <= l and i >= 1 with both outer indices in range. Equivalent to
/// strong synchronisation when all interior entries are positive; when they
/// are not, the scan still runs but note flags the unmet hypothesis.
PropertyReport interlacing_check(const Seq& a, const Seq& b);

/// For a pair following an alternating dominance pattern, checks the
/// equivalence between the split log-concavity statement (even-indexed for
/// the dominated-at-even member, odd-indexed for the other) and strong
/// synchronisation. Throws NotApplicableError when neither pattern holds;
/// a pattern of `both` accepts either branch of the equivalence.
PropertyReport alternating_equivalence_check(const Seq& a, const Seq& b);

}  // namespace permsync
