#include "permsync/statistics.hpp"

#include <cstdlib>

#include "permsync/errors.hpp"

namespace permsync {

bool is_type_a(Statistic s) {
  switch (s) {
    case Statistic::exc:
    case Statistic::nexc:
    case Statistic::des:
    case Statistic::asc:
    case Statistic::inv:
      return true;
    default:
      return false;
  }
}

bool is_type_b(Statistic s) { return !is_type_a(s); }

const char* statistic_name(Statistic s) {
  switch (s) {
    case Statistic::exc: return "exc";
    case Statistic::nexc: return "nexc";
    case Statistic::des: return "des";
    case Statistic::asc: return "asc";
    case Statistic::inv: return "inv";
    case Statistic::excB: return "excB";
    case Statistic::wkexcB: return "wkexcB";
    case Statistic::desB: return "desB";
    case Statistic::ascB: return "ascB";
    case Statistic::invB: return "invB";
    case Statistic::negs: return "negs";
  }
  return "?";
}

Statistic statistic_from_name(const std::string& name) {
  for (Statistic s : {Statistic::exc, Statistic::nexc, Statistic::des,
                      Statistic::asc, Statistic::inv, Statistic::excB,
                      Statistic::wkexcB, Statistic::desB, Statistic::ascB,
                      Statistic::invB, Statistic::negs}) {
    if (name == statistic_name(s)) return s;
  }
  throw ParseError("unknown statistic: " + name);
}

long exc(std::span<const int> images) {
  long c = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] > static_cast<int>(i) + 1) ++c;
  return c;
}

long nexc(std::span<const int> images) {
  return static_cast<long>(images.size()) - exc(images);
}

long des(std::span<const int> images) {
  long c = 0;
  for (std::size_t i = 0; i + 1 < images.size(); ++i)
    if (images[i] > images[i + 1]) ++c;
  return c;
}

long asc(std::span<const int> images) {
  long c = 0;
  for (std::size_t i = 0; i + 1 < images.size(); ++i)
    if (images[i] < images[i + 1]) ++c;
  return c;
}

long inv(std::span<const int> images) {
  long c = 0;
  for (std::size_t i = 0; i < images.size(); ++i)
    for (std::size_t j = i + 1; j < images.size(); ++j)
      if (images[i] > images[j]) ++c;
  return c;
}

long exc_b(std::span<const int> window) {
  long c = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    int v = window[i];
    int j = std::abs(v);  // pi_{|pi(i)|} is the window entry at |v|
    if (window[static_cast<std::size_t>(j) - 1] > v) ++c;
    if (v == -(static_cast<int>(i) + 1)) ++c;
  }
  return c;
}

long wkexc_b(std::span<const int> window) {
  long c = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    int v = window[i];
    int j = std::abs(v);
    if (window[static_cast<std::size_t>(j) - 1] > v) ++c;
    if (v == static_cast<int>(i) + 1) ++c;
  }
  return c;
}

long des_b(std::span<const int> window) {
  long c = 0;
  int prev = 0;  // pi_0 = 0
  for (int v : window) {
    if (prev > v) ++c;
    prev = v;
  }
  return c;
}

long asc_b(std::span<const int> window) {
  long c = 0;
  int prev = 0;
  for (int v : window) {
    if (prev < v) ++c;
    prev = v;
  }
  return c;
}

long inv_b(std::span<const int> window) {
  long c = 0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    for (std::size_t j = i + 1; j < window.size(); ++j) {
      if (window[i] > window[j]) ++c;
      if (-window[i] > window[j]) ++c;
    }
    if (window[i] < 0) ++c;
  }
  return c;
}

long negs(std::span<const int> window) {
  long c = 0;
  for (int v : window)
    if (v < 0) ++c;
  return c;
}

long statistic_max(Statistic s, long n) {
  switch (s) {
    case Statistic::exc:
    case Statistic::des:
    case Statistic::asc:
      return n - 1;
    case Statistic::nexc:
      return n;
    case Statistic::inv:
      return n * (n - 1) / 2;
    case Statistic::excB:
    case Statistic::wkexcB:
    case Statistic::desB:
    case Statistic::ascB:
    case Statistic::negs:
      return n;
    case Statistic::invB:
      return n * n;  // length of the longest element
  }
  return 0;
}

}  // namespace permsync
