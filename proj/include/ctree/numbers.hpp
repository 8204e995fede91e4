#pragma once

// Exact arithmetic for the counting formulas: binomial coefficients, Catalan
// numbers, super-Catalan numbers of order m, the summands of the recurrence
//
//   u_n = sum_{k >= 0} 2^(n-m-2k) C(n-m, 2k) u_k,
//
// and the per-hidden-node-count class sizes.  Everything is computed over
// arbitrary-precision rationals; the only non-integer value in the whole
// family is the order-0 value at n = 0, which equals 1/2.

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace ctree {

using BigInt = boost::multiprecision::cpp_int;
using Exact = boost::multiprecision::cpp_rational;

inline bool is_integer(const Exact& x) { return denominator(x) == 1; }

inline std::string to_decimal(const Exact& x) { return x.str(); }

// C(n, k); zero outside 0 <= k <= n.
inline Exact binomial(long n, long k) {
  if (n < 0) throw std::domain_error("binomial: n must be nonnegative");
  if (k < 0 || k > n) return Exact(0);
  if (k > n - k) k = n - k;
  BigInt c = 1;
  for (long i = 1; i <= k; ++i) c = c * (n - k + i) / i;  // exact at every step
  return Exact(c);
}

inline BigInt pow2(long e) {
  if (e < 0) throw std::domain_error("pow2: negative exponent");
  return BigInt(1) << e;
}

inline Exact catalan(long n) {
  if (n < 0) throw std::domain_error("catalan: n must be nonnegative");
  return binomial(2 * n, n) / Exact(n + 1);
}

// C(2m,m) C(2n,n) / (2 C(m+n,m)).  Integral for every (m,n) except (0,0).
inline Exact super_catalan(long m, long n) {
  if (m < 0 || n < 0) throw std::domain_error("super_catalan: arguments must be nonnegative");
  return binomial(2 * m, m) * binomial(2 * n, n) / (Exact(2) * binomial(m + n, m));
}

// Summand of the order-m recurrence at index k: 2^(n-m-2k) C(n-m,2k) u_k.
inline Exact recurrence_term(long m, long n, long k) {
  if (n < m) throw std::domain_error("recurrence_term: requires n >= m");
  if (k < 0 || 2 * k > n - m) return Exact(0);
  return Exact(pow2(n - m - 2 * k)) * binomial(n - m, 2 * k) * super_catalan(m, k);
}

// All nonzero-range summands, k = 0 .. floor((n-m)/2).
inline std::vector<Exact> recurrence_terms(long m, long n) {
  if (n < m) throw std::domain_error("recurrence_terms: requires n >= m");
  std::vector<Exact> terms;
  for (long k = 0; 2 * k <= n - m; ++k) terms.push_back(recurrence_term(m, n, k));
  return terms;
}

inline Exact recurrence_rhs(long m, long n) {
  Exact sum = 0;
  for (const Exact& t : recurrence_terms(m, n)) sum += t;
  return sum;
}

// Number of n-ctrees with exactly k hidden nodes, equally the number of
// (n,k)-configurations: C(n-2, 2k) 2^(n-2-2k) u_k with u of order 2.
inline Exact hidden_class_count(long n, long k) {
  if (n < 2) throw std::domain_error("hidden_class_count: requires n >= 2");
  if (k < 0 || 2 * k > n - 2) return Exact(0);
  return Exact(pow2(n - 2 - 2 * k)) * binomial(n - 2, 2 * k) * super_catalan(2, k);
}

// 6 C_n rooted aligned cubic trees on n nodes, 6 C_n / (n+2) unrooted ones.
inline Exact ctree_count(long n, bool rooted) {
  if (n < 0) throw std::domain_error("ctree_count: n must be nonnegative");
  Exact c = Exact(6) * catalan(n);
  return rooted ? c : Exact(c / Exact(n + 2));
}

}  // namespace ctree
