#ifndef SUBGROWTH_BIGINT_HPP
#define SUBGROWTH_BIGINT_HPP

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace subgrowth {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt pow(BigInt const &base, std::uint64_t exponent)
{
  BigInt result = 1;
  BigInt b = base;
  while (exponent) {
    if (exponent & 1u)
      result *= b;
    exponent >>= 1;
    if (exponent)
      b *= b;
  }
  return result;
}

inline BigInt factorial(std::uint64_t n)
{
  BigInt result = 1;
  for (std::uint64_t i = 2; i <= n; ++i)
    result *= i;
  return result;
}

inline BigInt binomial(std::uint64_t n, std::uint64_t k)
{
  if (k > n)
    return 0;
  k = k < n - k ? k : n - k;
  BigInt result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;
  }
  return result;
}

} // namespace subgrowth

#endif // SUBGROWTH_BIGINT_HPP
