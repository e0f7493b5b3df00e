#pragma once

#include <vector>

#include "stirling/poly.hpp"

namespace stirling {

/// Integer B such that every real root of p is strictly below B; the smaller
/// of a Cauchy bound and a Fujiwara-style bound, both from exact coefficient
/// ratios. p must be nonconstant.
Int real_root_bound(const Poly& p);

/// Sturm chain of the squarefree part of p.
std::vector<Poly> sturm_chain(const Poly& p);

long sign_changes_at(const std::vector<Poly>& chain, const Rat& x);
long sign_changes_at_pos_inf(const std::vector<Poly>& chain);

/// Number of distinct real roots of p in the open interval (x, +inf).
long roots_above(const Poly& p, const Rat& x);

/// Signs of p at every integer in [from, to); parallel scan. Values are
/// -1/0/+1.
std::vector<int> integer_sign_scan(const Poly& p, long from, long to);

}  // namespace stirling
