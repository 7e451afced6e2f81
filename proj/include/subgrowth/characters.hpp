#ifndef SUBGROWTH_CHARACTERS_HPP
#define SUBGROWTH_CHARACTERS_HPP

#include <cstdint>
#include <map>
#include <mutex>
#include <numeric>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"

/*
 * Irreducible characters of the symmetric group S_k are indexed by the
 * partitions of k. Only their degrees are needed here, computed with the
 * hook length formula, together with the power sums
 *
 *   beta(k, nu) = sum over partitions lambda of k of (k! / f^lambda)^nu
 *
 * that drive the subgroup counts of surface groups.
 */

namespace subgrowth::characters {

/// Weakly decreasing list of positive parts.
class Partition {
public:
  explicit Partition(std::vector<unsigned> parts)
  : parts_(std::move(parts))
  {
    if (parts_.empty())
      throw domain_error("Partition: empty part list");
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] == 0)
        throw domain_error("Partition: parts must be positive");
      if (i && parts_[i] > parts_[i - 1])
        throw domain_error("Partition: parts must be weakly decreasing");
    }
  }

  std::vector<unsigned> const &parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }

  unsigned weight() const
  { return std::accumulate(parts_.begin(), parts_.end(), 0u); }

  Partition conjugate() const
  {
    std::vector<unsigned> cols(parts_.front(), 0);
    for (auto p : parts_)
      for (unsigned j = 0; j < p; ++j)
        ++cols[j];
    return Partition(std::move(cols));
  }

  friend bool operator==(Partition const &, Partition const &) = default;

private:
  std::vector<unsigned> parts_;
};

/// All partitions of k in lexicographically decreasing order, starting
/// with (k) and ending with (1,...,1).
inline std::vector<Partition> partitions(unsigned k)
{
  if (k == 0)
    throw domain_error("partitions: weight must be positive");

  std::vector<Partition> out;
  std::vector<unsigned> cur{k};
  for (;;) {
    out.emplace_back(cur);
    // Find the last part larger than 1, decrement it and refill greedily.
    unsigned ones = 0;
    while (!cur.empty() && cur.back() == 1) {
      cur.pop_back();
      ++ones;
    }
    if (cur.empty())
      break;
    unsigned part = --cur.back();
    unsigned rest = ones + 1;
    while (rest > part) {
      cur.push_back(part);
      rest -= part;
    }
    if (rest)
      cur.push_back(rest);
  }
  return out;
}

/// Product of all hook lengths of the Young diagram, i.e. k! / f^lambda.
inline BigInt hook_product(Partition const &lambda)
{
  auto const &rows = lambda.parts();
  auto cols = lambda.conjugate().parts();
  BigInt prod = 1;
  for (unsigned i = 0; i < rows.size(); ++i)
    for (unsigned j = 0; j < rows[i]; ++j)
      prod *= (rows[i] - j) + (cols[j] - i) - 1;
  return prod;
}

/// Degree f^lambda of the irreducible representation indexed by lambda.
inline BigInt degree(Partition const &lambda)
{
  BigInt kfact = factorial(lambda.weight());
  BigInt hooks = hook_product(lambda);
  if (kfact % hooks != 0)
    throw consistency_error("degree: hook product does not divide k!");
  return kfact / hooks;
}

inline BigInt beta_uncached(unsigned k, int nu)
{
  if (nu < 0)
    throw domain_error("beta: nu must be nonnegative");
  BigInt sum = 0;
  for (auto const &lambda : partitions(k))
    sum += pow(hook_product(lambda), static_cast<std::uint64_t>(nu));
  return sum;
}

namespace detail {

struct BetaCache {
  std::mutex mutex;
  std::map<std::pair<unsigned, int>, BigInt> values;
};

inline BetaCache &beta_cache()
{
  static BetaCache cache;
  return cache;
}

} // namespace detail

/// beta(k, nu), memoised per (k, nu). Safe to call concurrently.
inline BigInt beta(unsigned k, int nu)
{
  if (nu < 0)
    throw domain_error("beta: nu must be nonnegative");
  if (k == 0)
    throw domain_error("beta: k must be positive");

  auto &cache = detail::beta_cache();
  {
    std::lock_guard lock(cache.mutex);
    auto it = cache.values.find({k, nu});
    if (it != cache.values.end())
      return it->second;
  }
  BigInt value = beta_uncached(k, nu);
  std::lock_guard lock(cache.mutex);
  return cache.values.try_emplace({k, nu}, std::move(value)).first->second;
}

} // namespace subgrowth::characters

#endif // SUBGROWTH_CHARACTERS_HPP
