#pragma once

#include <exception>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace stirling::scan {

/// Whether the OpenMP kernels are compiled in.
inline constexpr bool have_openmp() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

/// Ordered map of f over the integer range [lo, hi). The OpenMP path produces
/// the same vector as the serial one (slots are index-addressed); exceptions
/// are re-thrown for the smallest failing index, so error reporting is also
/// deterministic.
template <class T, class F>
std::vector<T> map_range(long lo, long hi, F&& f, bool parallel = have_openmp()) {
  const long count = hi > lo ? hi - lo : 0;
  std::vector<T> out(static_cast<size_t>(count));
  std::vector<std::exception_ptr> errs(static_cast<size_t>(count));
#ifdef _OPENMP
  if (parallel && count > 1) {
#pragma omp parallel for schedule(dynamic, 8)
    for (long i = 0; i < count; ++i) {
      try {
        out[static_cast<size_t>(i)] = f(lo + i);
      } catch (...) {
        errs[static_cast<size_t>(i)] = std::current_exception();
      }
    }
    for (auto& e : errs)
      if (e) std::rethrow_exception(e);
    return out;
  }
#else
  (void)parallel;
#endif
  for (long i = 0; i < count; ++i) out[static_cast<size_t>(i)] = f(lo + i);
  return out;
}

/// Smallest n in [lo, hi) with ok(n) false, scanning chunk by chunk so the
/// parallel path can stop early yet stays deterministic.
template <class Pred>
std::optional<long> first_violation(long lo, long hi, Pred&& ok, bool parallel = have_openmp()) {
  constexpr long kChunk = 256;
  for (long base = lo; base < hi; base += kChunk) {
    long end = std::min(hi, base + kChunk);
    auto flags = map_range<char>(
        base, end, [&](long n) { return static_cast<char>(ok(n) ? 1 : 0); }, parallel);
    for (long i = 0; i < end - base; ++i)
      if (!flags[static_cast<size_t>(i)]) return base + i;
  }
  return std::nullopt;
}

}  // namespace stirling::scan
