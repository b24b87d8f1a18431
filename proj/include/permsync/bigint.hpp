#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace permsync {

/// Exact integer type used everywhere. Counts exceed 64 bits already at
/// moderate sizes (A_{21,k} > 2^64), so there is no fixed-width fast path.
using Int = boost::multiprecision::cpp_int;

/// A finite sequence of exact integers, index origin 0. Distribution rows,
/// triangle rows and predicate inputs are all carried as Seq.
using Seq = std::vector<Int>;

/// C(n, k) as an exact integer; 0 outside 0 <= k <= n.
Int binomial(long n, long k);

/// Floor square root of a non-negative integer.
Int isqrt(const Int& x);

/// True iff x is a perfect square.
bool is_square(const Int& x);

std::string seq_to_string(const Seq& s);

/// Polynomial helpers on coefficient sequences (used by the gamma bases).
Seq poly_mul(const Seq& a, const Seq& b);
Seq poly_add(const Seq& a, const Seq& b);
/// (1+t)^e as a coefficient sequence.
Seq one_plus_t_pow(long e);

}  // namespace permsync
