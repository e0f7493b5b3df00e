#include "stirling/factorial.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stirling {

namespace {

// product of the integers in [lo, hi], balanced so operand sizes stay even
Int range_product(unsigned long lo, unsigned long hi) {
  if (lo > hi) return 1;
  if (hi - lo < 8) {
    Int r = lo;
    for (unsigned long i = lo + 1; i <= hi; ++i) r *= i;
    return r;
  }
  unsigned long mid = lo + (hi - lo) / 2;
  return range_product(lo, mid) * range_product(mid + 1, hi);
}

#ifdef _OPENMP
Int range_product_tasks(unsigned long lo, unsigned long hi, int depth) {
  if (depth <= 0 || hi - lo < 4096) return range_product(lo, hi);
  unsigned long mid = lo + (hi - lo) / 2;
  Int left, right;
#pragma omp task shared(left)
  left = range_product_tasks(lo, mid, depth - 1);
#pragma omp task shared(right)
  right = range_product_tasks(mid + 1, hi, depth - 1);
#pragma omp taskwait
  return left * right;
}
#endif

}  // namespace

Int factorial_serial(unsigned long n) {
  Int r = 1;
  for (unsigned long i = 2; i <= n; ++i) r *= i;
  return r;
}

Int factorial(unsigned long n) {
  if (n < 2) return 1;
#ifdef _OPENMP
  // spawning a team only pays off for large n, and never from inside one of
  // the scan workers (nested regions would just add entry overhead)
  if (n >= 4096 && !omp_in_parallel()) {
    Int result;
#pragma omp parallel
#pragma omp single
    result = range_product_tasks(2, n, 6);
    return result;
  }
#endif
  return range_product(2, n);
}

}  // namespace stirling
