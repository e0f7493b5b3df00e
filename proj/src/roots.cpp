#include "stirling/roots.hpp"

#include <stdexcept>

#include "stirling/scan.hpp"

namespace stirling {

namespace {

Int ceil_div(const Int& a, const Int& b) {
  Int q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace

Int real_root_bound(const Poly& p) {
  if (p.degree() < 1) throw std::domain_error("real_root_bound: constant polynomial");
  Poly q = p.primitive();  // integer coefficients, same roots
  long d = q.degree();
  Int lead = abs(q.coeff(static_cast<size_t>(d)).num());
  // Cauchy: 1 + max |a_i|/|a_d|
  Int cauchy = 0;
  for (long i = 0; i < d; ++i) {
    Int ai = abs(q.coeff(static_cast<size_t>(i)).num());
    if (ai == 0) continue;
    Int t = ceil_div(ai, lead);
    if (t > cauchy) cauchy = t;
  }
  cauchy += 1;
  // Fujiwara: 2 max_k (|a_{d-k}|/|a_d|)^(1/k), overestimated through integer roots
  Int fuji = 1;
  for (long k = 1; k <= d; ++k) {
    Int ak = abs(q.coeff(static_cast<size_t>(d - k)).num());
    if (ak == 0) continue;
    Int ratio = ceil_div(ak, lead);
    Int root;
    mpz_root(root.get_mpz_t(), ratio.get_mpz_t(), static_cast<unsigned long>(k));
    root += 1;  // (root+1)^k > ratio >= |a_{d-k}|/|a_d|
    if (root > fuji) fuji = root;
  }
  fuji = 2 * fuji + 1;
  return cauchy < fuji ? cauchy : fuji;
}

std::vector<Poly> sturm_chain(const Poly& p) {
  Poly g = Poly::gcd(p, p.derivative());
  Poly base = g.degree() > 0 ? p.divmod(g).first : p;
  std::vector<Poly> chain;
  chain.push_back(base);
  if (base.degree() < 1) return chain;
  chain.push_back(base.derivative());
  while (chain.back().degree() > 0) {
    Poly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    // negate and rescale to primitive; positive scaling preserves the chain
    chain.push_back((-r).primitive());
  }
  return chain;
}

namespace {

long count_changes(const std::vector<int>& signs) {
  long changes = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++changes;
    prev = s;
  }
  return changes;
}

}  // namespace

long sign_changes_at(const std::vector<Poly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& q : chain) signs.push_back(q.eval(x).sign());
  return count_changes(signs);
}

long sign_changes_at_pos_inf(const std::vector<Poly>& chain) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const Poly& q : chain) signs.push_back(q.leading().sign());
  return count_changes(signs);
}

long roots_above(const Poly& p, const Rat& x) {
  if (p.degree() < 1) return 0;
  auto chain = sturm_chain(p);
  return sign_changes_at(chain, x) - sign_changes_at_pos_inf(chain);
}

std::vector<int> integer_sign_scan(const Poly& p, long from, long to) {
  // integer Horner on the primitive part (signs are unchanged)
  Poly q = p.primitive();
  std::vector<Int> coeffs;
  coeffs.reserve(static_cast<size_t>(q.degree() + 1));
  for (const auto& c : q.coeffs()) coeffs.push_back(c.num());
  return scan::map_range<int>(from, to, [&](long n) {
    Int acc = 0;
    Int x(n);
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + *it;
    return sgn(acc);
  });
}

}  // namespace stirling
