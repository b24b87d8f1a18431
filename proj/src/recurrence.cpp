#include "permsync/recurrence.hpp"

#include <stdexcept>
#include <string>

namespace permsync {

const char* family_name(FamilyId f) {
  switch (f) {
    case FamilyId::eulerA:           return "eulerA";
    case FamilyId::pqA:              return "pqA";
    case FamilyId::eulerB:           return "eulerB";
    case FamilyId::pqB:              return "pqB";
    case FamilyId::secondOrderEuler: return "secondOrderEuler";
    case FamilyId::gammaA:           return "gammaA";
    case FamilyId::gammaB:           return "gammaB";
  }
  return "?";
}

std::optional<FamilyId> family_from_name(std::string_view name) {
  for (FamilyId f : {FamilyId::eulerA, FamilyId::pqA, FamilyId::eulerB,
                     FamilyId::pqB, FamilyId::secondOrderEuler, FamilyId::gammaA,
                     FamilyId::gammaB})
    if (name == family_name(f)) return f;
  return std::nullopt;
}

TriangularArray::TriangularArray(long k_offset, std::vector<Seq> rows)
    : k_offset_(k_offset), rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("triangle needs at least one row");
}

const Seq& TriangularArray::row(long n) const {
  if (n < 1 || n > max_n())
    throw std::out_of_range("row " + std::to_string(n) + " not in 1.." +
                            std::to_string(max_n()));
  return rows_[static_cast<std::size_t>(n - 1)];
}

Int TriangularArray::at(long n, long k) const {
  const Seq& r = row(n);
  const long idx = k - k_offset_;
  if (idx < 0 || idx >= static_cast<long>(r.size())) return 0;
  return r[static_cast<std::size_t>(idx)];
}

namespace {

void require_positive(long n_max) {
  if (n_max < 1) throw std::invalid_argument("n_max must be >= 1");
}

// Generic single-triangle builder: row n entry k gets
// unshifted(n,k) * t[n-1][k] + shifted(n,k) * t[n-1][k-1].
template <typename Len, typename Unshifted, typename Shifted>
TriangularArray build_single(long n_max, long k_offset, Seq base, Len row_len,
                             Unshifted cu, Shifted cs) {
  require_positive(n_max);
  std::vector<Seq> rows;
  rows.reserve(static_cast<std::size_t>(n_max));
  rows.push_back(std::move(base));
  for (long n = 2; n <= n_max; ++n) {
    const Seq& prev = rows.back();
    const long prev_len = static_cast<long>(prev.size());
    auto prev_at = [&](long k) -> Int {
      const long idx = k - k_offset;
      return (idx < 0 || idx >= prev_len) ? Int(0) : prev[static_cast<std::size_t>(idx)];
    };
    Seq r(static_cast<std::size_t>(row_len(n)));
    for (long i = 0; i < static_cast<long>(r.size()); ++i) {
      const long k = i + k_offset;
      r[static_cast<std::size_t>(i)] =
          cu(n, k) * prev_at(k) + cs(n, k) * prev_at(k - 1);
    }
    rows.push_back(std::move(r));
  }
  return TriangularArray(k_offset, std::move(rows));
}

}  // namespace

TriangularArray eulerian_a(long n_max) {
  return build_single(
      n_max, 0, Seq{1}, [](long n) { return n; },
      [](long, long k) { return Int(k + 1); },
      [](long n, long k) { return Int(n - k); });
}

TriangularArray eulerian_b(long n_max) {
  return build_single(
      n_max, 0, Seq{1, 1}, [](long n) { return n + 1; },
      [](long, long k) { return Int(2 * k + 1); },
      [](long n, long k) { return Int(2 * (n - k) + 1); });
}

TriangularArray second_order_eulerian(long n_max) {
  return build_single(
      n_max, 1, Seq{1}, [](long n) { return n; },
      [](long, long k) { return Int(k); },
      [](long n, long k) { return Int(2 * n - k); });
}

TriangularArray gamma_a(long n_max) {
  return build_single(
      n_max, 0, Seq{1}, [](long n) { return (n - 1) / 2 + 1; },
      [](long, long k) { return Int(k + 1); },
      [](long n, long k) { return Int(2 * n - 4 * k); });
}

TriangularArray gamma_b(long n_max) {
  return build_single(
      n_max, 0, Seq{1}, [](long n) { return n / 2 + 1; },
      [](long, long k) { return Int(2 * k + 1); },
      [](long n, long k) { return Int(4 * (n + 1 - 2 * k)); });
}

namespace {

// Coupled builder for the even/odd excedance pairs. Each new first-row entry
// reads the previous second row plus its own previous row, and vice versa.
PairTable build_pair(long n_max, long row_len_extra, Seq base_first,
                     Seq base_second, const Int& k_scale, const Int& shift_add) {
  require_positive(n_max);
  std::vector<Seq> fr, sr;
  fr.reserve(static_cast<std::size_t>(n_max));
  sr.reserve(static_cast<std::size_t>(n_max));
  fr.push_back(std::move(base_first));
  sr.push_back(std::move(base_second));
  for (long n = 2; n <= n_max; ++n) {
    const Seq& pf = fr.back();
    const Seq& ps = sr.back();
    auto get = [](const Seq& v, long k) -> Int {
      return (k < 0 || k >= static_cast<long>(v.size()))
                 ? Int(0)
                 : v[static_cast<std::size_t>(k)];
    };
    const long len = n + row_len_extra;
    Seq nf(static_cast<std::size_t>(len)), ns(static_cast<std::size_t>(len));
    for (long k = 0; k < len; ++k) {
      const Int cu = k_scale * k;                              // on the k term
      const Int cs = k_scale * (n - k) + shift_add;            // on the k-1 term
      nf[static_cast<std::size_t>(k)] =
          cu * get(ps, k) + cs * get(ps, k - 1) + get(pf, k);
      ns[static_cast<std::size_t>(k)] =
          cu * get(pf, k) + cs * get(pf, k - 1) + get(ps, k);
    }
    fr.push_back(std::move(nf));
    sr.push_back(std::move(ns));
  }
  return PairTable{TriangularArray(0, std::move(fr)),
                   TriangularArray(0, std::move(sr))};
}

}  // namespace

PairTable pq_a(long n_max) {
  // P_{n,k} = k Q_{n-1,k} + (n-k) Q_{n-1,k-1} + P_{n-1,k}, rows k = 0..n-1.
  return build_pair(n_max, 0, Seq{1}, Seq{0}, 1, 0);
}

PairTable pq_b(long n_max) {
  // P^B_{n,k} = 2k Q^B_{n-1,k} + (2n-2k+1) Q^B_{n-1,k-1} + P^B_{n-1,k},
  // rows k = 0..n.
  return build_pair(n_max, 1, Seq{1, 0}, Seq{0, 1}, 2, 1);
}

TriangularArray build_family(FamilyId f, long n_max) {
  switch (f) {
    case FamilyId::eulerA:           return eulerian_a(n_max);
    case FamilyId::eulerB:           return eulerian_b(n_max);
    case FamilyId::secondOrderEuler: return second_order_eulerian(n_max);
    case FamilyId::gammaA:           return gamma_a(n_max);
    case FamilyId::gammaB:           return gamma_b(n_max);
    case FamilyId::pqA:
    case FamilyId::pqB:
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " is a pair family; use build_pair_family");
  }
  throw std::invalid_argument("unknown family");
}

PairTable build_pair_family(FamilyId f, long n_max) {
  switch (f) {
    case FamilyId::pqA: return pq_a(n_max);
    case FamilyId::pqB: return pq_b(n_max);
    default:
      throw std::invalid_argument(std::string(family_name(f)) +
                                  " is a single-triangle family; use build_family");
  }
}

Int NineTermSplit::term_sum() const {
  Int s = 0;
  for (const Int& t : term) s += t;
  return s;
}

namespace {

NineTermSplit check_split_range(const PairTable& pq, long n, long k, long k_hi) {
  if (n < 2 || n > pq.first.max_n() || k < 1 || k > k_hi)
    throw std::out_of_range("split index (n=" + std::to_string(n) +
                            ", k=" + std::to_string(k) + ") outside the valid range");
  NineTermSplit s;
  s.n = n;
  s.k = k;
  return s;
}

}  // namespace

NineTermSplit nine_term_split_a(const PairTable& pq, long n, long k) {
  NineTermSplit s = check_split_range(pq, n, k, n - 2);
  const auto P = [&](long kk) { return pq.first.at(n - 1, kk); };
  const auto Q = [&](long kk) { return pq.second.at(n - 1, kk); };
  s.term[0] = Int(k * k - 1) * (Q(k) * Q(k) - Q(k + 1) * Q(k - 1));
  s.term[1] = Q(k) * Q(k) + Q(k - 1) * Q(k - 1) - 2 * Q(k - 1) * Q(k);
  s.term[2] = Int((n - k) * (n - k) - 1) * (Q(k - 1) * Q(k - 1) - Q(k) * Q(k - 2));
  s.term[3] = P(k) * P(k) - P(k + 1) * P(k - 1);
  s.term[4] = Int(k + 1) * (n - k + 1) * (Q(k) * Q(k - 1) - Q(k + 1) * Q(k - 2));
  s.term[5] = Int(k - 1) * (n - k - 1) * (Q(k - 1) * Q(k) - Q(k - 1) * Q(k));
  s.term[6] = Int(n - k - 1) * (Q(k - 1) * P(k) - Q(k) * P(k - 1));
  s.term[7] = Int(n - k + 1) * (Q(k - 1) * P(k) - Q(k - 2) * P(k + 1));
  s.term[8] = 2 * k * Q(k) * P(k) - Int(k + 1) * Q(k + 1) * P(k - 1) -
              Int(k - 1) * Q(k - 1) * P(k + 1);
  s.difference = pq.first.at(n, k) * pq.first.at(n, k) -
                 pq.first.at(n, k + 1) * pq.first.at(n, k - 1);
  s.residual = s.difference - s.term_sum();
  return s;
}

NineTermSplit nine_term_split_b(const PairTable& pq, long n, long k) {
  NineTermSplit s = check_split_range(pq, n, k, n - 1);
  const auto P = [&](long kk) { return pq.first.at(n - 1, kk); };
  const auto Q = [&](long kk) { return pq.second.at(n - 1, kk); };
  const long m = 2 * n - 2 * k;
  s.term[0] = 4 * Int(k * k - 1) * (Q(k) * Q(k) - Q(k + 1) * Q(k - 1));
  s.term[1] = 4 * Q(k) * Q(k) + 4 * Q(k - 1) * Q(k - 1) - 8 * Q(k - 1) * Q(k);
  s.term[2] = Int((m + 1) * (m + 1) - 4) * (Q(k - 1) * Q(k - 1) - Q(k) * Q(k - 2));
  s.term[3] = P(k) * P(k) - P(k + 1) * P(k - 1);
  s.term[4] = 2 * Int(k + 1) * (m + 3) * (Q(k) * Q(k - 1) - Q(k + 1) * Q(k - 2));
  s.term[5] = 2 * Int(k - 1) * (m - 1) * (Q(k - 1) * Q(k) - Q(k - 1) * Q(k));
  s.term[6] = Int(m - 1) * (Q(k - 1) * P(k) - Q(k) * P(k - 1));
  s.term[7] = Int(m + 3) * (Q(k - 1) * P(k) - Q(k - 2) * P(k + 1));
  s.term[8] = 4 * k * Q(k) * P(k) - 2 * Int(k + 1) * Q(k + 1) * P(k - 1) -
              2 * Int(k - 1) * Q(k - 1) * P(k + 1);
  s.difference = pq.first.at(n, k) * pq.first.at(n, k) -
                 pq.first.at(n, k + 1) * pq.first.at(n, k - 1);
  s.residual = s.difference - s.term_sum();
  return s;
}

}  // namespace permsync
