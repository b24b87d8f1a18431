#include "permsync/enumerate.hpp"

#include <algorithm>
#include <span>
#include <string>
#include <vector>

#include "permsync/errors.hpp"

namespace permsync {

namespace detail {

std::uint64_t factorial_u64(long n) {
  std::uint64_t f = 1;
  for (long i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

void unrank_permutation(long n, std::uint64_t rank, int* out) {
  // Factorial-base digits select from the pool of unused values.
  std::vector<int> pool(static_cast<std::size_t>(n));
  for (long i = 0; i < n; ++i) pool[static_cast<std::size_t>(i)] = static_cast<int>(i + 1);
  for (long i = 0; i < n; ++i) {
    const std::uint64_t f = factorial_u64(n - 1 - i);
    const std::uint64_t d = rank / f;
    rank %= f;
    out[i] = pool[static_cast<std::size_t>(d)];
    pool.erase(pool.begin() + static_cast<long>(d));
  }
}

}  // namespace detail

namespace {

void check_guard(long n, long soft, long hard, const EnumGuard& guard, const char* type) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (n > hard)
    throw SizeLimitError("n=" + std::to_string(n) + " exceeds the hard " + type +
                         " enumeration cap of " + std::to_string(hard));
  if (n > soft && !guard.override_limits)
    throw SizeLimitError("n=" + std::to_string(n) + " exceeds the " + type +
                         " enumeration guard of " + std::to_string(soft) +
                         " (enable the override to proceed)");
}

long eval_stat_a(Statistic s, std::span<const int> w) {
  switch (s) {
    case Statistic::exc:  return exc(w);
    case Statistic::nexc: return nexc(w);
    case Statistic::des:  return des(w);
    case Statistic::asc:  return asc(w);
    case Statistic::inv:  return inv(w);
    default:              throw StatMismatchError("Type-B statistic passed to an S_n tabulation");
  }
}

long eval_stat_b(Statistic s, std::span<const int> w) {
  switch (s) {
    case Statistic::excB:   return exc_b(w);
    case Statistic::wkexcB: return wkexc_b(w);
    case Statistic::desB:   return des_b(w);
    case Statistic::ascB:   return asc_b(w);
    case Statistic::invB:   return inv_b(w);
    case Statistic::negs:   return negs(w);
    default:                throw StatMismatchError("Type-A statistic passed to a B_n tabulation");
  }
}

bool keep_a(ClassFilterA f, std::span<const int> w) {
  switch (f) {
    case ClassFilterA::all:  return true;
    case ClassFilterA::even: return inv(w) % 2 == 0;
    case ClassFilterA::odd:  return inv(w) % 2 == 1;
    case ClassFilterA::derangement:
      for (std::size_t i = 0; i < w.size(); ++i)
        if (w[i] == static_cast<int>(i + 1)) return false;
      return true;
  }
  return true;
}

bool keep_b(ClassFilterB f, std::span<const int> w) {
  switch (f) {
    case ClassFilterB::all:   return true;
    case ClassFilterB::plus:  return inv_b(w) % 2 == 0;
    case ClassFilterB::minus: return inv_b(w) % 2 == 1;
  }
  return true;
}

Seq to_seq(const std::vector<std::uint64_t>& counts) {
  Seq out(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i];
  return out;
}

// Walks permutations of [n] in lexicographic order starting from the given
// rank, accumulating the statistic histogram for `count` of them.
void scan_a_range(long n, Statistic stat, ClassFilterA filter, std::uint64_t first,
                  std::uint64_t count, std::vector<std::uint64_t>& hist) {
  std::vector<int> w(static_cast<std::size_t>(n));
  detail::unrank_permutation(n, first, w.data());
  for (std::uint64_t done = 0; done < count; ++done) {
    if (keep_a(filter, w))
      ++hist[static_cast<std::size_t>(eval_stat_a(stat, w))];
    std::next_permutation(w.begin(), w.end());
  }
}

void scan_b_range(long n, Statistic stat, ClassFilterB filter, std::uint64_t first,
                  std::uint64_t count, std::vector<std::uint64_t>& hist) {
  std::vector<int> base(static_cast<std::size_t>(n));
  std::vector<int> w(static_cast<std::size_t>(n));
  detail::unrank_permutation(n, first, base.data());
  const std::uint64_t masks = std::uint64_t{1} << n;
  for (std::uint64_t done = 0; done < count; ++done) {
    for (std::uint64_t m = 0; m < masks; ++m) {
      for (long i = 0; i < n; ++i) {
        const int v = base[static_cast<std::size_t>(i)];
        w[static_cast<std::size_t>(i)] = (m >> i) & 1 ? -v : v;
      }
      if (keep_b(filter, w))
        ++hist[static_cast<std::size_t>(eval_stat_b(stat, w))];
    }
    std::next_permutation(base.begin(), base.end());
  }
}

}  // namespace

Seq distribution_a_serial(long n, Statistic stat, ClassFilterA filter,
                          const EnumGuard& guard) {
  if (!is_type_a(stat)) throw StatMismatchError("Type-B statistic passed to an S_n tabulation");
  check_guard(n, guard.max_a, kHardCapA, guard, "S_n");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(statistic_max(stat, n)) + 1, 0);
  scan_a_range(n, stat, filter, 0, detail::factorial_u64(n), hist);
  return to_seq(hist);
}

Seq distribution_b_serial(long n, Statistic stat, ClassFilterB filter,
                          const EnumGuard& guard) {
  if (!is_type_b(stat)) throw StatMismatchError("Type-A statistic passed to a B_n tabulation");
  check_guard(n, guard.max_b, kHardCapB, guard, "B_n");
  std::vector<std::uint64_t> hist(static_cast<std::size_t>(statistic_max(stat, n)) + 1, 0);
  scan_b_range(n, stat, filter, 0, detail::factorial_u64(n), hist);
  return to_seq(hist);
}

#ifdef _OPENMP

Seq distribution_a(long n, Statistic stat, ClassFilterA filter, const EnumGuard& guard) {
  if (!is_type_a(stat)) throw StatMismatchError("Type-B statistic passed to an S_n tabulation");
  check_guard(n, guard.max_a, kHardCapA, guard, "S_n");
  const std::size_t bins = static_cast<std::size_t>(statistic_max(stat, n)) + 1;
  const std::uint64_t total = detail::factorial_u64(n);
  // Split the rank space into contiguous chunks; each thread walks its chunk
  // with next_permutation after one unranking call.
  const int chunks = total < 64 ? 1 : 64;
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(chunks), std::vector<std::uint64_t>(bins, 0));
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / static_cast<std::uint64_t>(chunks);
    scan_a_range(n, stat, filter, lo, hi - lo, partial[static_cast<std::size_t>(c)]);
  }
  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < bins; ++i) hist[i] += p[i];
  return to_seq(hist);
}

Seq distribution_b(long n, Statistic stat, ClassFilterB filter, const EnumGuard& guard) {
  if (!is_type_b(stat)) throw StatMismatchError("Type-A statistic passed to a B_n tabulation");
  check_guard(n, guard.max_b, kHardCapB, guard, "B_n");
  const std::size_t bins = static_cast<std::size_t>(statistic_max(stat, n)) + 1;
  const std::uint64_t total = detail::factorial_u64(n);
  const int chunks = total < 64 ? 1 : 64;
  std::vector<std::vector<std::uint64_t>> partial(
      static_cast<std::size_t>(chunks), std::vector<std::uint64_t>(bins, 0));
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < chunks; ++c) {
    const std::uint64_t lo = total * static_cast<std::uint64_t>(c) / static_cast<std::uint64_t>(chunks);
    const std::uint64_t hi = total * static_cast<std::uint64_t>(c + 1) / static_cast<std::uint64_t>(chunks);
    scan_b_range(n, stat, filter, lo, hi - lo, partial[static_cast<std::size_t>(c)]);
  }
  std::vector<std::uint64_t> hist(bins, 0);
  for (const auto& p : partial)
    for (std::size_t i = 0; i < bins; ++i) hist[i] += p[i];
  return to_seq(hist);
}

#else

Seq distribution_a(long n, Statistic stat, ClassFilterA filter, const EnumGuard& guard) {
  return distribution_a_serial(n, stat, filter, guard);
}

Seq distribution_b(long n, Statistic stat, ClassFilterB filter, const EnumGuard& guard) {
  return distribution_b_serial(n, stat, filter, guard);
}

#endif  // _OPENMP

bool equidistributed_a(long n, Statistic s1, Statistic s2, const EnumGuard& guard) {
  const Seq d1 = distribution_a(n, s1, ClassFilterA::all, guard);
  const Seq d2 = distribution_a(n, s2, ClassFilterA::all, guard);
  const std::size_t len = std::max(d1.size(), d2.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Int a = i < d1.size() ? d1[i] : Int(0);
    const Int b = i < d2.size() ? d2[i] : Int(0);
    if (a != b) return false;
  }
  return true;
}

bool equidistributed_b(long n, Statistic s1, Statistic s2, const EnumGuard& guard) {
  const Seq d1 = distribution_b(n, s1, ClassFilterB::all, guard);
  const Seq d2 = distribution_b(n, s2, ClassFilterB::all, guard);
  const std::size_t len = std::max(d1.size(), d2.size());
  for (std::size_t i = 0; i < len; ++i) {
    const Int a = i < d1.size() ? d1[i] : Int(0);
    const Int b = i < d2.size() ? d2[i] : Int(0);
    if (a != b) return false;
  }
  return true;
}

PropertyReport equidistribution_check(long n, const EnumGuard& guard) {
  PropertyReport report;
  report.property = "equidistribution";
  if (!equidistributed_a(n, Statistic::des, Statistic::exc, guard)) {
    report.fail({n});
    report.note = "des and exc differ over S_n";
  }
  if (!equidistributed_b(n, Statistic::desB, Statistic::excB, guard)) {
    report.fail({n});
    if (!report.note.empty()) report.note += "; ";
    report.note += "des_B and exc_B differ over B_n";
  }
  return report;
}

}  // namespace permsync
