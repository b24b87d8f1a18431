#include "permsync/bigint.hpp"

#include <sstream>
#include <stdexcept>

namespace permsync {

Int binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Int r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact at every step: r is C(n, i+1) here
  }
  return r;
}

Int isqrt(const Int& x) {
  if (x < 0) throw std::domain_error("isqrt of negative value");
  return boost::multiprecision::sqrt(x);
}

bool is_square(const Int& x) {
  if (x < 0) return false;
  Int r = boost::multiprecision::sqrt(x);
  return r * r == x;
}

std::string seq_to_string(const Seq& s) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) os << ',';
    os << s[i];
  }
  os << ')';
  return os.str();
}

Seq poly_mul(const Seq& a, const Seq& b) {
  if (a.empty() || b.empty()) return {};
  Seq r(a.size() + b.size() - 1, Int(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

Seq poly_add(const Seq& a, const Seq& b) {
  Seq r(std::max(a.size(), b.size()), Int(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

Seq one_plus_t_pow(long e) {
  Seq r(static_cast<std::size_t>(e) + 1);
  for (long k = 0; k <= e; ++k) r[static_cast<std::size_t>(k)] = binomial(e, k);
  return r;
}

}  // namespace permsync
