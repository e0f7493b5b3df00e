#pragma once

#include "stirling/rat.hpp"

namespace stirling {

/// Exact n! as a running product 2..n. Reference implementation; the parallel
/// kernel is checked against it bit for bit.
Int factorial_serial(unsigned long n);

/// Exact n! via a balanced product tree, OpenMP-parallel at the top levels.
/// Identical result to factorial_serial (exact integer arithmetic commutes
/// with the split). Comfortable up to n ~ 10^6 and beyond.
Int factorial(unsigned long n);

}  // namespace stirling
