#ifndef SUBGROWTH_CLASSES_HPP
#define SUBGROWTH_CLASSES_HPP

#include <concepts>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "abelian.hpp"
#include "bigint.hpp"
#include "census.hpp"
#include "error.hpp"
#include "numtheory.hpp"

/*
 * Conjugacy classes of index-n subgroups.
 *
 * Every conjugacy class of index-n subgroups contributes exactly n to
 *
 *   sum over ell * m = n, over index-m subgroups K, of |Epi(K, Z_ell)|,
 *
 * so N(n) is that sum divided by n. Since the target is cyclic, |Epi(K, Z_ell)|
 * only depends on the first homology of K, and the inner sum over K
 * collapses to a sum over homology classes weighted by their multiplicity.
 */

namespace subgrowth::classes {

/// Callable yielding the homology fiber of index-m subgroups.
template <typename F>
concept FiberProvider = std::invocable<F const &, unsigned> &&
    std::convertible_to<std::invoke_result_t<F const &, unsigned>, std::vector<FiberClass>>;

/// The sum above, before division by n.
template <FiberProvider F>
BigInt classes_accumulator(unsigned n, F const &fiber_provider)
{
  if (n == 0)
    throw domain_error("classes_accumulator: index must be positive");
  BigInt acc = 0;
  for (auto [ell, m] : numtheory::divisor_pairs(n)) {
    std::vector<FiberClass> fiber = fiber_provider(static_cast<unsigned>(m));
    for (auto const &cls : fiber)
      acc += abelian::epi_count(cls.signature, ell) * cls.multiplicity;
  }
  return acc;
}

/// N(n) for any group whose index-m subgroups are described by
/// `fiber_provider`. Throws consistency_error if n does not divide the sum,
/// which only happens for a provider that describes no actual group.
template <FiberProvider F>
BigInt count_classes_generic(unsigned n, F const &fiber_provider)
{
  BigInt acc = classes_accumulator(n, fiber_provider);
  if (acc % n != 0)
    throw consistency_error("count_classes_generic: index " + std::to_string(n) +
                            " does not divide the accumulated epimorphism count");
  return acc / n;
}

namespace detail {

// sum_{d | ell} mu(ell/d) * gcd(torsion, d) * d^rank, written out per family.
inline BigInt moebius_power_sum(std::uint64_t ell, std::uint64_t exponent, std::uint64_t torsion)
{
  BigInt sum = 0;
  for (auto d : numtheory::divisors(ell)) {
    int mu = numtheory::mobius(ell / d);
    if (mu == 0)
      continue;
    BigInt term = pow(BigInt(d), exponent);
    if (torsion)
      term *= numtheory::gcd(torsion, d);
    if (mu > 0)
      sum += term;
    else
      sum -= term;
  }
  return sum;
}

} // namespace detail

/// N(n) through the closed forms for free, orientable and non-orientable
/// surface groups. Exponents are read off covering_fiber() so that this path
/// and the generic one agree on the subgroup types.
inline BigInt count_classes(GroupKind const &kind, unsigned n)
{
  if (n == 0)
    throw domain_error("count_classes: index must be positive");

  BigInt acc = 0;
  for (auto [ell, m] : numtheory::divisor_pairs(n)) {
    auto fiber = census::covering_fiber(kind, static_cast<unsigned>(m));
    switch (kind.family()) {
    case GroupKind::Family::free:
    case GroupKind::Family::orientable:
      // sum_{d|ell} mu(ell/d) d^{rank of K} * M(m)
      for (auto const &cls : fiber)
        acc += detail::moebius_power_sum(ell, cls.signature.rank(), 0) * cls.multiplicity;
      break;
    case GroupKind::Family::nonorientable:
      // sum_{d|ell} mu(ell/d) (d^{e+} M+(m) + (2,d) d^{e-} M-(m))
      for (auto const &cls : fiber) {
        std::uint64_t torsion = cls.signature.torsion().empty() ? 0 : 2;
        acc += detail::moebius_power_sum(ell, cls.signature.rank(), torsion) * cls.multiplicity;
      }
      break;
    }
  }
  if (acc % n != 0)
    throw consistency_error("count_classes: index does not divide the accumulated count");
  return acc / n;
}

struct CensusRow {
  unsigned n;
  BigInt subgroups;                  // M(n)
  std::optional<BigInt> orientable;    // M+(n), non-orientable kinds only
  std::optional<BigInt> nonorientable; // M-(n)
  BigInt classes;                    // N(n)
};

struct CensusTable {
  GroupKind kind;
  std::vector<CensusRow> rows;
};

inline CensusRow census_row(GroupKind const &kind, unsigned n)
{
  CensusRow row{n, census::count_subgroups(kind, n), std::nullopt, std::nullopt,
                count_classes(kind, n)};
  if (kind.family() == GroupKind::Family::nonorientable) {
    row.orientable = census::count_orientable_subgroups(kind.parameter(), n);
    row.nonorientable = census::count_nonorientable_subgroups(kind.parameter(), n);
  }
  return row;
}

inline CensusTable census_table(GroupKind const &kind, unsigned n_max)
{
  if (n_max == 0)
    throw domain_error("census_table: max index must be positive");
  CensusTable table{kind, {}};
  table.rows.reserve(n_max);
  for (unsigned n = 1; n <= n_max; ++n)
    table.rows.push_back(census_row(kind, n));
  return table;
}

/// Checks the structural identities every row must satisfy. Returns one
/// message per violation; empty means the table is consistent.
inline std::vector<std::string> table_violations(CensusTable const &table)
{
  std::vector<std::string> out;
  auto fiber = [&](unsigned m) { return census::covering_fiber(table.kind, m); };
  for (auto const &row : table.rows) {
    std::string at = " at n=" + std::to_string(row.n);
    if (classes_accumulator(row.n, fiber) % row.n != 0)
      out.push_back("accumulator not divisible by n" + at);
    if (row.classes > row.subgroups)
      out.push_back("N > M" + at);
    if (row.subgroups > row.n * row.classes)
      out.push_back("M > n*N" + at);
    if (row.n == 2 && row.subgroups != row.classes)
      out.push_back("N(2) != M(2)");
    if (row.n == 1 && row.classes != 1)
      out.push_back("N(1) != 1");
    if (row.orientable.has_value() != row.nonorientable.has_value())
      out.push_back("incomplete orientability split" + at);
    if (row.orientable && *row.orientable + *row.nonorientable != row.subgroups)
      out.push_back("M+ + M- != M" + at);
  }
  return out;
}

} // namespace subgrowth::classes

#endif // SUBGROWTH_CLASSES_HPP
