#pragma once

#include <cstdint>

#include "permsync/bigint.hpp"
#include "permsync/property_report.hpp"
#include "permsync/statistics.hpp"

namespace permsync {

/// Subsets of S_n selectable when tabulating a distribution.
enum class ClassFilterA { all, even, odd, derangement };

/// Subsets of B_n, split by the parity of inv_B.
enum class ClassFilterB { all, plus, minus };

/// Enumeration is factorial-time; these soft limits keep interactive calls
/// sane. Construct with override_limits = true (or see the CLI's --force /
/// environment switches) to go past them, up to the hard cap below.
struct EnumGuard {
  long max_a = 12;
  long max_b = 9;
  bool override_limits = false;
};

/// Absolute ceiling: lexicographic ranks are kept in 64-bit integers, and
/// 20! < 2^63 < 21!.
inline constexpr long kHardCapA = 20;
inline constexpr long kHardCapB = 14;  // 14! * 2^14 < 2^63

/// Distribution of a Type-A statistic over the chosen subset of S_n:
/// result[k] = #{pi : stat(pi) = k}, for k = 0..statistic_max(stat, n).
/// Parallel when built with OpenMP, otherwise identical to the serial form.
Seq distribution_a(long n, Statistic stat, ClassFilterA filter = ClassFilterA::all,
                   const EnumGuard& guard = {});

/// Single-threaded reference implementation, kept for differential testing.
Seq distribution_a_serial(long n, Statistic stat,
                          ClassFilterA filter = ClassFilterA::all,
                          const EnumGuard& guard = {});

/// Distribution of a Type-B statistic over the chosen subset of B_n.
Seq distribution_b(long n, Statistic stat, ClassFilterB filter = ClassFilterB::all,
                   const EnumGuard& guard = {});

Seq distribution_b_serial(long n, Statistic stat,
                          ClassFilterB filter = ClassFilterB::all,
                          const EnumGuard& guard = {});

/// True when two statistics have identical distributions over the whole group.
bool equidistributed_a(long n, Statistic s1, Statistic s2, const EnumGuard& guard = {});
bool equidistributed_b(long n, Statistic s1, Statistic s2, const EnumGuard& guard = {});

/// Confirms by brute force that descents and excedances share one distribution
/// over S_n and that their Type-B counterparts share one over B_n.
PropertyReport equidistribution_check(long n, const EnumGuard& guard = {});

namespace detail {
/// Writes the permutation of [n] with the given lexicographic rank (0-based)
/// into out[0..n-1], one-line notation with values 1..n.
void unrank_permutation(long n, std::uint64_t rank, int* out);
std::uint64_t factorial_u64(long n);
}  // namespace detail

}  // namespace permsync
