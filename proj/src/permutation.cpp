#include "permsync/permutation.hpp"

#include <cstdlib>
#include <stdexcept>
#include <string>

#include "permsync/errors.hpp"

namespace permsync {

namespace {

void check_bijection(const std::vector<int>& v, bool signed_entries) {
  const int n = static_cast<int>(v.size());
  if (n < 1) throw std::invalid_argument("permutation size must be >= 1");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int x : v) {
    const int a = signed_entries ? std::abs(x) : x;
    if (a < 1 || a > n)
      throw std::invalid_argument("entry " + std::to_string(x) +
                                  " out of range for n=" + std::to_string(n));
    if (seen[static_cast<std::size_t>(a - 1)])
      throw std::invalid_argument("duplicate entry " + std::to_string(x));
    seen[static_cast<std::size_t>(a - 1)] = 1;
  }
}

}  // namespace

PermutationA::PermutationA(std::vector<int> images) : images_(std::move(images)) {
  check_bijection(images_, /*signed_entries=*/false);
}

PermutationA PermutationA::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return PermutationA(std::move(v));
}

long PermutationA::statistic(Statistic s) const {
  if (!is_type_a(s))
    throw StatMismatchError(std::string(statistic_name(s)) +
                            " is a signed-permutation statistic");
  switch (s) {
    case Statistic::exc:  return exc(images_);
    case Statistic::nexc: return nexc(images_);
    case Statistic::des:  return des(images_);
    case Statistic::asc:  return asc(images_);
    case Statistic::inv:  return inv(images_);
    default:              throw StatMismatchError("unreachable");
  }
}

Parity PermutationA::parity() const {
  return inv(images_) % 2 == 0 ? Parity::even : Parity::odd;
}

PermutationA PermutationA::compose(const PermutationA& q) const {
  if (size() != q.size())
    throw std::invalid_argument("cannot compose permutations of different sizes");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= size(); ++i)
    v[static_cast<std::size_t>(i - 1)] = (*this)(q(i));
  return PermutationA(std::move(v));
}

SignedPermutation::SignedPermutation(std::vector<int> window)
    : window_(std::move(window)) {
  check_bijection(window_, /*signed_entries=*/true);
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i + 1;
  return SignedPermutation(std::move(v));
}

int SignedPermutation::operator()(int i) const {
  if (i == 0 || std::abs(i) > size())
    throw std::out_of_range("index " + std::to_string(i) + " outside window");
  return i > 0 ? window_[static_cast<std::size_t>(i - 1)]
               : -window_[static_cast<std::size_t>(-i - 1)];
}

long SignedPermutation::statistic(Statistic s) const {
  if (!is_type_b(s))
    throw StatMismatchError(std::string(statistic_name(s)) +
                            " is an unsigned-permutation statistic");
  switch (s) {
    case Statistic::excB:   return exc_b(window_);
    case Statistic::wkexcB: return wkexc_b(window_);
    case Statistic::desB:   return des_b(window_);
    case Statistic::ascB:   return asc_b(window_);
    case Statistic::invB:   return inv_b(window_);
    case Statistic::negs:   return negs(window_);
    default:                throw StatMismatchError("unreachable");
  }
}

LengthParity SignedPermutation::length_parity() const {
  return inv_b(window_) % 2 == 0 ? LengthParity::plus : LengthParity::minus;
}

}  // namespace permsync
