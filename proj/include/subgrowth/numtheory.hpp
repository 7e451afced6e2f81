#ifndef SUBGROWTH_NUMTHEORY_HPP
#define SUBGROWTH_NUMTHEORY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "error.hpp"

/*
 * Elementary arithmetic functions over positive integers. Indices stay at
 * desk scale, so plain trial division is used throughout.
 */

namespace subgrowth::numtheory {

/// A factorisation n = ell * m of an index n. `ell` is the order of the
/// cyclic quotient, `m` the index of the intermediate subgroup.
struct DivisorPair {
  std::uint64_t ell;
  std::uint64_t m;

  friend bool operator==(DivisorPair const &, DivisorPair const &) = default;
};

namespace detail {

inline void require_positive(std::uint64_t n, char const *what)
{
  if (n == 0)
    throw domain_error(std::string(what) + ": argument must be positive");
}

} // namespace detail

inline std::vector<std::uint64_t> divisors(std::uint64_t n)
{
  detail::require_positive(n, "divisors");
  std::vector<std::uint64_t> low, high;
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d)
      continue;
    low.push_back(d);
    if (d != n / d)
      high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

/// All (ell, m) with ell * m == n, ascending in ell.
inline std::vector<DivisorPair> divisor_pairs(std::uint64_t n)
{
  detail::require_positive(n, "divisor_pairs");
  std::vector<DivisorPair> pairs;
  for (auto ell : divisors(n))
    pairs.push_back({ell, n / ell});
  return pairs;
}

inline int mobius(std::uint64_t n)
{
  detail::require_positive(n, "mobius");
  int sign = 1;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    n /= p;
    if (n % p == 0)
      return 0;
    sign = -sign;
  }
  if (n > 1)
    sign = -sign;
  return sign;
}

inline std::uint64_t euler_phi(std::uint64_t n)
{
  detail::require_positive(n, "euler_phi");
  std::uint64_t result = n;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p)
      continue;
    while (n % p == 0)
      n /= p;
    result -= result / p;
  }
  if (n > 1)
    result -= result / n;
  return result;
}

inline std::uint64_t gcd(std::uint64_t a, std::uint64_t b)
{
  if (a == 0 && b == 0)
    throw domain_error("gcd: both arguments are zero");
  while (b) {
    auto t = a % b;
    a = b;
    b = t;
  }
  return a;
}

} // namespace subgrowth::numtheory

#endif // SUBGROWTH_NUMTHEORY_HPP
