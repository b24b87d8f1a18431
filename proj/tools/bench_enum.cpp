// Compares the parallel enumeration kernels against the serial reference:
// same distributions, wall-clock times side by side. Run with no arguments
// for the default sizes, or pass "<nA> <nB>".

#include <chrono>
#include <cstdlib>
#include <iomanip>
#include <iostream>

#include "permsync/enumerate.hpp"

using namespace permsync;

namespace {

template <typename F>
std::pair<Seq, double> timed(F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  Seq result = f();
  const std::chrono::duration<double, std::milli> dt =
      std::chrono::steady_clock::now() - t0;
  return {std::move(result), dt.count()};
}

bool compare(const char* label, const std::pair<Seq, double>& serial,
             const std::pair<Seq, double>& parallel) {
  const bool match = serial.first == parallel.first;
  std::cout << std::left << std::setw(28) << label << std::right << std::fixed
            << std::setprecision(1) << "serial " << std::setw(9) << serial.second
            << " ms   parallel " << std::setw(9) << parallel.second
            << " ms   speedup " << std::setprecision(2)
            << serial.second / parallel.second << "x   "
            << (match ? "outputs match" : "OUTPUT MISMATCH") << '\n';
  return match;
}

}  // namespace

int main(int argc, char** argv) {
  const long n_a = argc > 1 ? std::strtol(argv[1], nullptr, 10) : 10;
  const long n_b = argc > 2 ? std::strtol(argv[2], nullptr, 10) : 7;
  EnumGuard guard;
  guard.override_limits = true;

#ifdef _OPENMP
  std::cout << "OpenMP enabled\n";
#else
  std::cout << "OpenMP not available; parallel entry points fall back to serial\n";
#endif
  std::cout << "sizes: S_" << n_a << " (" << detail::factorial_u64(n_a)
            << " elements), B_" << n_b << " ("
            << (detail::factorial_u64(n_b) << n_b) << " elements)\n";

  bool ok = true;
  ok &= compare("exc over S_n",
                timed([&] { return distribution_a_serial(n_a, Statistic::exc,
                                                         ClassFilterA::all, guard); }),
                timed([&] { return distribution_a(n_a, Statistic::exc,
                                                  ClassFilterA::all, guard); }));
  ok &= compare("inv over even S_n",
                timed([&] { return distribution_a_serial(n_a, Statistic::inv,
                                                         ClassFilterA::even, guard); }),
                timed([&] { return distribution_a(n_a, Statistic::inv,
                                                  ClassFilterA::even, guard); }));
  ok &= compare("excB over B_n",
                timed([&] { return distribution_b_serial(n_b, Statistic::excB,
                                                         ClassFilterB::all, guard); }),
                timed([&] { return distribution_b(n_b, Statistic::excB,
                                                  ClassFilterB::all, guard); }));
  ok &= compare("desB over B_n plus",
                timed([&] { return distribution_b_serial(n_b, Statistic::desB,
                                                         ClassFilterB::plus, guard); }),
                timed([&] { return distribution_b(n_b, Statistic::desB,
                                                  ClassFilterB::plus, guard); }));
  return ok ? 0 : 1;
}
