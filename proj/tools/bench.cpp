// Serial vs OpenMP timings for the scan kernels: exact factorial, base-case
// comparison sweeps, integer sign scans, and the Wallis sandwich.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "stirling/bounds.hpp"
#include "stirling/catalog.hpp"
#include "stirling/factorial.hpp"
#include "stirling/scan.hpp"
#include "stirling/wallis.hpp"

using namespace stirling;

namespace {

double seconds(const std::function<void()>& fn) {
  auto t0 = std::chrono::steady_clock::now();
  fn();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

void row(const char* name, double serial, double parallel) {
  std::printf("%-28s %9.3f ms %9.3f ms %6.2fx\n", name, serial * 1e3, parallel * 1e3,
              parallel > 0 ? serial / parallel : 0.0);
}

}  // namespace

int main() {
  std::printf("%-28s %12s %12s %7s\n", "kernel", "serial", "parallel", "speedup");
  if (!scan::have_openmp()) std::printf("(built without OpenMP: both columns run serially)\n");

  {
    Int ref, one, many;
    double ref_s = seconds([&] { ref = factorial_serial(200000); });
#ifdef _OPENMP
    int threads = omp_get_max_threads();
    omp_set_num_threads(1);
    double s = seconds([&] { one = factorial(200000); });
    omp_set_num_threads(threads);
#else
    double s = seconds([&] { one = factorial(200000); });
#endif
    double p = seconds([&] { many = factorial(200000); });
    if (ref != one || ref != many) {
      std::fprintf(stderr, "factorial mismatch\n");
      return 1;
    }
    row("factorial tree(200000)", s, p);
    std::printf("%-28s %9.3f ms   (running product, the test oracle)\n",
                "factorial reference", ref_s * 1e3);
  }

  {
    const RatFunc& a103 = catalog_find("c103_upper")->spec.a;
    auto sweep = [&](bool parallel) {
      scan::map_range<Verdict>(
          1, 400, [&](long n) { return strict_compare(n, a103, Direction::upper).verdict; },
          parallel);
    };
    double s = seconds([&] { sweep(false); });
    double p = seconds([&] { sweep(true); });
    row("strict_compare n=1..399", s, p);
  }

  {
    const Poly& p2375 = *catalog_find("t2375_lower")->printed_poly;
    std::vector<Int> coeffs;
    for (const auto& c : p2375.coeffs()) coeffs.push_back(c.num());
    auto scan_signs = [&](bool parallel) {
      scan::map_range<int>(
          1, 200000,
          [&](long n) {
            Int acc = 0, x(n);
            for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
            return sgn(acc);
          },
          parallel);
    };
    double s = seconds([&] { scan_signs(false); });
    double p = seconds([&] { scan_signs(true); });
    row("sign scan deg-12 n<200000", s, p);
  }

  {
    auto sweep = [&](bool parallel) {
      scan::map_range<Verdict>(
          1, 600, [](long n) { return wallis_sandwich_check(static_cast<unsigned long>(n)); },
          parallel);
    };
    double s = seconds([&] { sweep(false); });
    double p = seconds([&] { sweep(true); });
    row("wallis sandwich n=1..599", s, p);
  }

  return 0;
}
