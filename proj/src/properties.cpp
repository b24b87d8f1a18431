#include "permsync/properties.hpp"

#include <algorithm>
#include <string>

#include "permsync/errors.hpp"

namespace permsync {

namespace {

void require_same_length(const Seq& a, const Seq& b) {
  if (a.size() != b.size())
    throw LengthMismatchError("sequence lengths differ: " +
                              std::to_string(a.size()) + " vs " +
                              std::to_string(b.size()));
}

void require_nonempty(const Seq& a) {
  if (a.empty()) throw std::invalid_argument("sequence must have length >= 1");
}

PropertyReport log_concave_on(const Seq& a, const char* name, int parity) {
  require_nonempty(a);
  PropertyReport r;
  r.property = name;
  const long len = static_cast<long>(a.size());
  for (long i = 1; i + 1 < len; ++i) {
    if (parity >= 0 && i % 2 != parity) continue;
    const auto& cur = a[static_cast<std::size_t>(i)];
    if (cur * cur < a[static_cast<std::size_t>(i - 1)] * a[static_cast<std::size_t>(i + 1)])
      r.fail({i});
  }
  return r;
}

}  // namespace

const char* ratio_pattern_name(RatioPattern p) {
  switch (p) {
    case RatioPattern::evenBelow: return "evenBelow";
    case RatioPattern::evenAbove: return "evenAbove";
    case RatioPattern::both:      return "both";
    case RatioPattern::neither:   return "neither";
  }
  return "?";
}

PropertyReport is_log_concave(const Seq& a) {
  return log_concave_on(a, "log-concave", -1);
}

PropertyReport is_even_log_concave(const Seq& a) {
  return log_concave_on(a, "even-log-concave", 0);
}

PropertyReport is_odd_log_concave(const Seq& a) {
  return log_concave_on(a, "odd-log-concave", 1);
}

PropertyReport is_unimodal(const Seq& a) {
  require_nonempty(a);
  PropertyReport r;
  r.property = "unimodal";
  const long len = static_cast<long>(a.size());
  long i = 0;
  while (i + 1 < len && a[static_cast<std::size_t>(i)] <= a[static_cast<std::size_t>(i + 1)]) ++i;
  // i is a peak candidate; everything after must be weakly decreasing.
  for (; i + 1 < len; ++i)
    if (a[static_cast<std::size_t>(i)] < a[static_cast<std::size_t>(i + 1)])
      r.fail({i + 1});
  return r;
}

PropertyReport is_synchronised(const Seq& a, const Seq& b) {
  require_same_length(a, b);
  require_nonempty(a);
  PropertyReport r;
  r.property = "synchronised";
  const PropertyReport la = is_log_concave(a);
  const PropertyReport lb = is_log_concave(b);
  for (const auto& w : la.witnesses) r.fail(w);
  for (const auto& w : lb.witnesses) r.fail(w);
  if (!la.verdict || !lb.verdict) r.note = "a member is not log-concave";
  const long len = static_cast<long>(a.size());
  auto at = [](const Seq& v, long k) -> const Int& { return v[static_cast<std::size_t>(k)]; };
  for (long k = 1; k + 1 < len; ++k) {
    if (at(a, k - 1) * at(b, k + 1) > at(a, k) * at(b, k) ||
        at(a, k + 1) * at(b, k - 1) > at(a, k) * at(b, k))
      r.fail({k});
  }
  return r;
}

PropertyReport is_strongly_synchronised(const Seq& a, const Seq& b) {
  require_same_length(a, b);
  require_nonempty(a);
  PropertyReport r;
  r.property = "strongly-synchronised";
  const long len = static_cast<long>(a.size());
  auto lo = [&](long k) { return std::min(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)]); };
  auto hi = [&](long k) { return std::max(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)]); };
  for (long k = 1; k + 1 < len; ++k)
    if (lo(k) * lo(k) < hi(k + 1) * hi(k - 1)) r.fail({k});
  return r;
}

RatioAlternatingResult is_ratio_alternating(const Seq& a, const Seq& b) {
  require_same_length(a, b);
  require_nonempty(a);
  RatioAlternatingResult res;
  res.report.property = "ratio-alternating";
  const long len = static_cast<long>(a.size());
  bool even_below = true, even_above = true;
  long first_below_break = -1, first_above_break = -1;
  for (long i = 0; i < len; ++i) {
    const auto& x = a[static_cast<std::size_t>(i)];
    const auto& y = b[static_cast<std::size_t>(i)];
    const bool le_wanted_below = i % 2 == 0;  // evenBelow wants a<=b at even i
    if ((le_wanted_below ? x <= y : x >= y) == false && even_below) {
      even_below = false;
      first_below_break = i;
    }
    if ((le_wanted_below ? x >= y : x <= y) == false && even_above) {
      even_above = false;
      first_above_break = i;
    }
  }
  if (even_below && even_above) {
    res.pattern = RatioPattern::both;
  } else if (even_below) {
    res.pattern = RatioPattern::evenBelow;
  } else if (even_above) {
    res.pattern = RatioPattern::evenAbove;
  } else {
    res.pattern = RatioPattern::neither;
    res.report.fail({first_below_break});
    res.report.fail({first_above_break});
    res.report.note = "first index breaking each pattern";
  }
  return res;
}

PropertyReport s_family_all_log_concave(const std::vector<Seq>& seqs,
                                        std::uint64_t cap) {
  if (seqs.empty()) throw std::invalid_argument("need at least one sequence");
  const std::uint64_t l = seqs.size();
  const long len = static_cast<long>(seqs.front().size());
  for (const Seq& s : seqs) require_same_length(seqs.front(), s);
  require_nonempty(seqs.front());

  std::uint64_t total = 1;
  for (long i = 0; i < len; ++i) {
    if (total > cap / l)
      throw CapExceededError("mixed-sequence count exceeds the exhaustive cap of " +
                             std::to_string(cap) +
                             "; for two sequences the min/max criterion gives the "
                             "same verdict without enumeration");
    total *= l;
  }

  PropertyReport r;
  r.property = "s-family-log-concave";
  std::vector<std::size_t> sel(static_cast<std::size_t>(len), 0);
  Seq c(static_cast<std::size_t>(len));
  for (std::uint64_t it = 0; it < total; ++it) {
    for (long i = 0; i < len; ++i)
      c[static_cast<std::size_t>(i)] = seqs[sel[static_cast<std::size_t>(i)]][static_cast<std::size_t>(i)];
    for (long i = 1; i + 1 < len; ++i) {
      const auto& cur = c[static_cast<std::size_t>(i)];
      if (cur * cur < c[static_cast<std::size_t>(i - 1)] * c[static_cast<std::size_t>(i + 1)]) {
        r.fail({i});
        r.witness_seq = c;
        return r;
      }
    }
    // Advance the l-ary counter, position 0 least significant.
    for (long i = 0; i < len; ++i) {
      auto& d = sel[static_cast<std::size_t>(i)];
      if (++d < l) break;
      d = 0;
    }
  }
  return r;
}

PropertyReport minmax_vs_exhaustive_check(const Seq& a, const Seq& b,
                                          std::uint64_t cap) {
  PropertyReport r;
  r.property = "minmax-vs-exhaustive";
  const PropertyReport ss = is_strongly_synchronised(a, b);
  const PropertyReport scan = s_family_all_log_concave({a, b}, cap);
  if (ss.verdict != scan.verdict) {
    r.fail(ss.witnesses.empty() ? (scan.witnesses.empty() ? std::vector<long>{0}
                                                          : scan.witnesses.front())
                                : ss.witnesses.front());
    r.note = std::string("min/max says ") + (ss.verdict ? "true" : "false") +
             ", exhaustive scan says " + (scan.verdict ? "true" : "false");
    r.witness_seq = scan.witness_seq;
  }
  return r;
}

PropertyReport interlacing_check(const Seq& a, const Seq& b) {
  require_same_length(a, b);
  require_nonempty(a);
  PropertyReport r;
  r.property = "interlacing";
  const long len = static_cast<long>(a.size());
  auto lo = [&](long k) { return std::min(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)]); };
  auto hi = [&](long k) { return std::max(a[static_cast<std::size_t>(k)], b[static_cast<std::size_t>(k)]); };
  for (long j = 0; j < len; ++j)
    for (long l = j; l < len; ++l)
      for (long i = 1; j - i >= 0 && l + i < len; ++i)
        if (lo(j) * lo(l) < hi(j - i) * hi(l + i)) r.fail({j, l, i});
  for (long i = 1; i + 1 < len; ++i) {
    if (a[static_cast<std::size_t>(i)] <= 0 || b[static_cast<std::size_t>(i)] <= 0) {
      r.note = "interior entries not all positive; equivalence with the "
               "min/max predicate is not asserted";
      break;
    }
  }
  return r;
}

PropertyReport alternating_equivalence_check(const Seq& a, const Seq& b) {
  const RatioAlternatingResult ra = is_ratio_alternating(a, b);
  if (ra.pattern == RatioPattern::neither)
    throw NotApplicableError(
        "pair follows neither alternating dominance pattern; the equivalence "
        "has no claim here");
  PropertyReport r;
  r.property = "alternating-equivalence";
  const bool ss = is_strongly_synchronised(a, b).verdict;
  const bool split_below = is_even_log_concave(a).verdict && is_odd_log_concave(b).verdict;
  const bool split_above = is_odd_log_concave(a).verdict && is_even_log_concave(b).verdict;
  bool pass = false;
  switch (ra.pattern) {
    case RatioPattern::evenBelow: pass = split_below == ss; break;
    case RatioPattern::evenAbove: pass = split_above == ss; break;
    case RatioPattern::both:      pass = split_below == ss || split_above == ss; break;
    case RatioPattern::neither:   break;
  }
  r.note = std::string("pattern ") + ratio_pattern_name(ra.pattern) +
           "; split log-concavity " +
           ((ra.pattern == RatioPattern::evenAbove ? split_above : split_below)
                ? "true" : "false") +
           ", strong synchronisation " + (ss ? "true" : "false");
  if (!pass) r.fail({0});
  return r;
}

}  // namespace permsync
