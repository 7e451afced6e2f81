#ifndef SUBGROWTH_CENSUS_HPP
#define SUBGROWTH_CENSUS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "bigint.hpp"
#include "characters.hpp"
#include "error.hpp"

/*
 * Subgroup census for the three families of surface groups:
 *
 *   free groups F_r                 (fundamental groups of bordered surfaces)
 *   orientable surface groups Phi_g <a_1,b_1,...,a_g,b_g : prod [a_i,b_i] = 1>
 *   non-orientable groups Lambda_p  <a_1,...,a_p : prod a_i^2 = 1>
 *
 * M(m) counts index-m subgroups. For Lambda_p the count is split into
 * orientable (M+) and non-orientable (M-) subgroups. Every index-m subgroup
 * of one of these groups is again such a group, determined up to isomorphism
 * by the Euler characteristic; covering_fiber() records it via its first
 * homology.
 */

namespace subgrowth {

class GroupKind {
public:
  enum class Family { free, orientable, nonorientable };

  static GroupKind free(unsigned rank)
  {
    if (rank < 1)
      throw domain_error("free group rank must be at least 1");
    return GroupKind(Family::free, rank);
  }

  static GroupKind orientable(unsigned genus)
  {
    if (genus < 1)
      throw domain_error("orientable genus must be at least 1");
    return GroupKind(Family::orientable, genus);
  }

  static GroupKind nonorientable(unsigned genus)
  {
    if (genus < 2)
      throw domain_error("non-orientable genus must be at least 2");
    return GroupKind(Family::nonorientable, genus);
  }

  Family family() const { return family_; }

  /// r, g or p depending on the family.
  unsigned parameter() const { return param_; }

  /// Number of generators in the standard presentation.
  unsigned generator_count() const
  { return family_ == Family::orientable ? 2 * param_ : param_; }

  /// Exponent nu of the character sums: 2g-2 for Phi_g, p-2 for Lambda_p.
  int nu() const
  {
    switch (family_) {
    case Family::orientable:
      return 2 * static_cast<int>(param_) - 2;
    case Family::nonorientable:
      return static_cast<int>(param_) - 2;
    case Family::free:
      break;
    }
    throw domain_error("nu is undefined for free groups");
  }

  std::string to_string() const
  {
    switch (family_) {
    case Family::free:
      return "free:" + std::to_string(param_);
    case Family::orientable:
      return "orient:" + std::to_string(param_);
    case Family::nonorientable:
      return "nonorient:" + std::to_string(param_);
    }
    return {};
  }

  friend bool operator==(GroupKind const &, GroupKind const &) = default;

private:
  GroupKind(Family f, unsigned param) : family_(f), param_(param) {}

  Family family_;
  unsigned param_;
};

/// One isomorphism class of index-m subgroups, identified by its first
/// homology, together with the number of subgroups in it.
struct FiberClass {
  HomologySignature signature;
  BigInt multiplicity;
};

namespace census {

namespace detail {

inline void require_index(unsigned m, char const *what)
{
  if (m == 0)
    throw domain_error(std::string(what) + ": index must be positive");
}

inline void require_nu(int nu, char const *what)
{
  if (nu < 0)
    throw domain_error(std::string(what) + ": nu must be nonnegative");
}

} // namespace detail

/// Hall's t_{m,r}: t_1 = 1, t_m = m!^r - sum_{j<m} C(m-1, j-1) (m-j)!^r t_j.
inline BigInt hall_t(unsigned m, unsigned r)
{
  detail::require_index(m, "hall_t");
  if (r < 1)
    throw domain_error("hall_t: rank must be at least 1");

  std::vector<BigInt> t(m + 1);
  std::vector<BigInt> fact_pow(m + 1);
  for (unsigned i = 1; i <= m; ++i)
    fact_pow[i] = pow(factorial(i), r);

  t[1] = 1;
  for (unsigned k = 2; k <= m; ++k) {
    BigInt v = fact_pow[k];
    for (unsigned j = 1; j < k; ++j)
      v -= binomial(k - 1, j - 1) * fact_pow[k - j] * t[j];
    t[k] = std::move(v);
  }
  return t[m];
}

/// R_nu(m) through the composition sum
///   m * sum_{s=1}^{m} (-1)^{s+1}/s * sum_{i_1+...+i_s=m} beta_{i_1}...beta_{i_s},
/// evaluated in exact rationals. The result must be an integer.
inline BigInt r_nu_closed(unsigned m, int nu)
{
  detail::require_index(m, "r_nu_closed");
  detail::require_nu(nu, "r_nu_closed");

  std::vector<BigInt> beta(m + 1);
  for (unsigned k = 1; k <= m; ++k)
    beta[k] = characters::beta(k, nu);

  // compositions(s, rest): sum over compositions of `rest` into s positive
  // parts of the product of their beta values.
  std::map<std::pair<unsigned, unsigned>, BigInt> memo;
  auto compositions = [&](auto &self, unsigned s, unsigned rest) -> BigInt {
    if (s == 0)
      return rest == 0 ? BigInt(1) : BigInt(0);
    if (rest < s)
      return 0;
    auto key = std::make_pair(s, rest);
    if (auto it = memo.find(key); it != memo.end())
      return it->second;
    BigInt sum = 0;
    for (unsigned first = 1; first + (s - 1) <= rest; ++first)
      sum += beta[first] * self(self, s - 1, rest - first);
    memo.emplace(key, sum);
    return sum;
  };

  BigRational total = 0;
  for (unsigned s = 1; s <= m; ++s) {
    BigRational term(compositions(compositions, s, m), BigInt(s));
    if (s % 2)
      total += term;
    else
      total -= term;
  }
  total *= m;

  if (denominator(total) != 1)
    throw consistency_error("r_nu_closed: R_nu(" + std::to_string(m) + ") is not an integer");
  return numerator(total);
}

/// R_nu(m) through M(1) = 1, M(m) = m beta_m - sum_{j<m} beta_{m-j} M(j).
inline BigInt r_nu_recursive(unsigned m, int nu)
{
  detail::require_index(m, "r_nu_recursive");
  detail::require_nu(nu, "r_nu_recursive");

  std::vector<BigInt> count(m + 1);
  count[1] = 1;
  for (unsigned k = 2; k <= m; ++k) {
    BigInt v = BigInt(k) * characters::beta(k, nu);
    for (unsigned j = 1; j < k; ++j)
      v -= characters::beta(k - j, nu) * count[j];
    count[k] = std::move(v);
  }
  return count[m];
}

/// M(m), the number of index-m subgroups.
inline BigInt count_subgroups(GroupKind const &kind, unsigned m)
{
  detail::require_index(m, "count_subgroups");
  if (kind.family() == GroupKind::Family::free) {
    BigInt t = hall_t(m, kind.parameter());
    BigInt f = factorial(m - 1);
    if (t % f != 0)
      throw consistency_error("count_subgroups: (m-1)! does not divide Hall's t");
    return t / f;
  }
  return r_nu_recursive(m, kind.nu());
}

/// M+(m) for Lambda_p: zero for odd m, R_{2nu}(m/2) for even m.
inline BigInt count_orientable_subgroups(unsigned p, unsigned m)
{
  detail::require_index(m, "count_orientable_subgroups");
  auto kind = GroupKind::nonorientable(p);
  if (m % 2)
    return 0;
  return r_nu_recursive(m / 2, 2 * kind.nu());
}

/// M-(m) = M(m) - M+(m) for Lambda_p.
inline BigInt count_nonorientable_subgroups(unsigned p, unsigned m)
{
  detail::require_index(m, "count_nonorientable_subgroups");
  auto kind = GroupKind::nonorientable(p);
  BigInt v = count_subgroups(kind, m) - count_orientable_subgroups(p, m);
  if (v < 0)
    throw consistency_error("count_nonorientable_subgroups: M(m) < M+(m)");
  return v;
}

/// Isomorphism classes (as first homology) of index-m subgroups with their
/// multiplicities. Zero-multiplicity classes are omitted.
inline std::vector<FiberClass> covering_fiber(GroupKind const &kind, unsigned m)
{
  detail::require_index(m, "covering_fiber");
  std::uint64_t const param = kind.parameter();
  std::vector<FiberClass> fiber;

  switch (kind.family()) {
  case GroupKind::Family::free:
    // Nielsen-Schreier: rank (r-1)m + 1.
    fiber.push_back({HomologySignature::free((param - 1) * m + 1), count_subgroups(kind, m)});
    break;
  case GroupKind::Family::orientable:
    // Genus (g-1)m + 1.
    fiber.push_back({HomologySignature::free(2 * ((param - 1) * m + 1)), count_subgroups(kind, m)});
    break;
  case GroupKind::Family::nonorientable: {
    // Orientable covers have genus m(p-2)/2 + 1, non-orientable ones m(p-2) + 2.
    std::uint64_t const base = m * (param - 2);
    BigInt plus = count_orientable_subgroups(kind.parameter(), m);
    BigInt minus = count_nonorientable_subgroups(kind.parameter(), m);
    if (plus != 0)
      fiber.push_back({HomologySignature::free(base + 2), std::move(plus)});
    if (minus != 0)
      fiber.push_back({HomologySignature({2}, base + 1), std::move(minus)});
    break;
  }
  }

  if (kind.family() != GroupKind::Family::nonorientable && fiber.front().multiplicity == 0)
    fiber.clear();
  return fiber;
}

} // namespace census
} // namespace subgrowth

#endif // SUBGROWTH_CENSUS_HPP
