#ifndef SUBGROWTH_ABELIAN_HPP
#define SUBGROWTH_ABELIAN_HPP

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bigint.hpp"
#include "error.hpp"
#include "numtheory.hpp"

namespace subgrowth {

/// Isomorphism type of a finitely generated abelian group
///   Z_{m_1} + ... + Z_{m_s} + Z^rank.
/// Any cyclic decomposition is accepted; the torsion orders need not be
/// invariant factors. They are stored sorted ascending.
class HomologySignature {
public:
  HomologySignature() = default;

  HomologySignature(std::vector<std::uint64_t> torsion, std::uint64_t rank)
  : torsion_(std::move(torsion)), rank_(rank)
  {
    for (auto m : torsion_)
      if (m < 2)
        throw domain_error("HomologySignature: torsion order " + std::to_string(m) + " is less than 2");
    std::sort(torsion_.begin(), torsion_.end());
  }

  static HomologySignature free(std::uint64_t rank) { return {{}, rank}; }

  std::vector<std::uint64_t> const &torsion() const { return torsion_; }
  std::uint64_t rank() const { return rank_; }

  friend bool operator==(HomologySignature const &, HomologySignature const &) = default;

private:
  std::vector<std::uint64_t> torsion_;
  std::uint64_t rank_ = 0;
};

namespace abelian {

/// |Hom(H, Z_d)| = prod_i gcd(m_i, d) * d^rank.
inline BigInt hom_count(HomologySignature const &h, std::uint64_t d)
{
  if (d == 0)
    throw domain_error("hom_count: target order must be positive");
  BigInt count = pow(BigInt(d), h.rank());
  for (auto m : h.torsion())
    count *= numtheory::gcd(m, d);
  return count;
}

/// |Epi(H, Z_ell)| by Moebius inversion of the Hom counts over d | ell.
inline BigInt epi_count(HomologySignature const &h, std::uint64_t ell)
{
  if (ell == 0)
    throw domain_error("epi_count: target order must be positive");
  BigInt count = 0;
  for (auto d : numtheory::divisors(ell)) {
    int mu = numtheory::mobius(ell / d);
    if (mu > 0)
      count += hom_count(h, d);
    else if (mu < 0)
      count -= hom_count(h, d);
  }
  if (count < 0)
    throw consistency_error("epi_count: negative epimorphism count");
  return count;
}

} // namespace abelian
} // namespace subgrowth

#endif // SUBGROWTH_ABELIAN_HPP
