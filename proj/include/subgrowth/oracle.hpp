#ifndef SUBGROWTH_ORACLE_HPP
#define SUBGROWTH_ORACLE_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "abelian.hpp"
#include "bigint.hpp"
#include "census.hpp"
#include "error.hpp"
#include "numtheory.hpp"

/*
 * Brute-force verification through permutation representations.
 *
 * Index-n subgroups of a group G correspond to transitive actions of G on
 * {0,...,n-1} with a marked point 0, so M(n) is the number of transitive
 * homomorphisms G -> S_n divided by (n-1)!. Conjugacy classes of index-n
 * subgroups correspond to transitive actions up to relabelling, i.e. orbits
 * of transitive homomorphisms under simultaneous conjugation in S_n.
 *
 * A homomorphism is a tuple of generator images satisfying the defining
 * relation. Tuples are enumerated exhaustively and tested; nothing here
 * uses the formulas being checked.
 *
 * Permutations act on the right: point i goes to perm[i], and a word x y
 * applies x first.
 */

namespace subgrowth::oracle {

using Permutation = std::vector<std::uint8_t>;

/// Generator images for a standard presentation of a GroupKind, in the
/// order a_1, ..., a_r (free), a_1, b_1, ..., a_g, b_g (orientable), or
/// a_1, ..., a_p (non-orientable).
struct PermutationTuple {
  unsigned degree;
  std::vector<Permutation> images;

  friend bool operator==(PermutationTuple const &, PermutationTuple const &) = default;
};

/// Maximum number of generator-image tuples a single enumeration may visit.
inline constexpr std::uint64_t max_tuples = 200'000'000;

inline constexpr unsigned max_epi_generators = 6;
inline constexpr std::uint64_t max_epi_order = 24;

namespace detail {

inline constexpr unsigned max_degree = 16;
using Perm = std::array<std::uint8_t, max_degree>;

/// The elements of S_n in lexicographic order of their one-line images,
/// with an index lookup and conjugation tables for adjacent transpositions.
class SymmetricGroup {
public:
  explicit SymmetricGroup(unsigned n) : n_(n)
  {
    Perm p{};
    std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
    do {
      elems_.push_back(p);
    } while (std::next_permutation(p.begin(), p.begin() + n));
  }

  unsigned degree() const { return n_; }
  std::size_t size() const { return elems_.size(); }
  Perm const &operator[](std::size_t i) const { return elems_[i]; }

  /// Lexicographic rank via the Lehmer code.
  std::uint32_t index_of(Perm const &p) const
  {
    std::uint32_t rank = 0;
    for (unsigned i = 0; i < n_; ++i) {
      unsigned smaller = 0;
      for (unsigned j = i + 1; j < n_; ++j)
        smaller += p[j] < p[i];
      rank = rank * (n_ - i) + smaller;
    }
    return rank;
  }

  /// conj[t][k] = index of s^-1 x s for x = elems[k], s = (t t+1).
  std::vector<std::vector<std::uint32_t>> transposition_conjugates() const
  {
    std::vector<std::vector<std::uint32_t>> out;
    for (unsigned t = 0; t + 1 < n_; ++t) {
      std::vector<std::uint32_t> row(elems_.size());
      auto swap_point = [t](std::uint8_t x) -> std::uint8_t {
        return x == t ? t + 1 : x == t + 1 ? t : x;
      };
      for (std::size_t k = 0; k < elems_.size(); ++k) {
        Perm c{};
        for (unsigned i = 0; i < n_; ++i)
          c[swap_point(static_cast<std::uint8_t>(i))] = swap_point(elems_[k][i]);
        row[k] = index_of(c);
      }
      out.push_back(std::move(row));
    }
    return out;
  }

private:
  unsigned n_;
  std::vector<Perm> elems_;
};

inline Perm identity(unsigned n)
{
  Perm p{};
  std::iota(p.begin(), p.begin() + n, std::uint8_t{0});
  return p;
}

// x then y
inline Perm compose(Perm const &x, Perm const &y, unsigned n)
{
  Perm r{};
  for (unsigned i = 0; i < n; ++i)
    r[i] = y[x[i]];
  return r;
}

inline Perm inverse(Perm const &x, unsigned n)
{
  Perm r{};
  for (unsigned i = 0; i < n; ++i)
    r[x[i]] = static_cast<std::uint8_t>(i);
  return r;
}

inline bool is_identity(Perm const &x, unsigned n)
{
  for (unsigned i = 0; i < n; ++i)
    if (x[i] != i)
      return false;
  return true;
}

inline bool satisfies_relation(GroupKind const &kind, SymmetricGroup const &sym,
                               std::vector<std::uint32_t> const &idx)
{
  unsigned const n = sym.degree();
  switch (kind.family()) {
  case GroupKind::Family::free:
    return true;
  case GroupKind::Family::orientable: {
    Perm acc = identity(n);
    for (std::size_t i = 0; i < idx.size(); i += 2) {
      auto const &a = sym[idx[i]];
      auto const &b = sym[idx[i + 1]];
      acc = compose(acc, a, n);
      acc = compose(acc, b, n);
      acc = compose(acc, inverse(a, n), n);
      acc = compose(acc, inverse(b, n), n);
    }
    return is_identity(acc, n);
  }
  case GroupKind::Family::nonorientable: {
    Perm acc = identity(n);
    for (auto i : idx) {
      acc = compose(acc, sym[i], n);
      acc = compose(acc, sym[i], n);
    }
    return is_identity(acc, n);
  }
  }
  return false;
}

inline bool is_transitive(SymmetricGroup const &sym, std::vector<std::uint32_t> const &idx)
{
  unsigned const n = sym.degree();
  std::array<bool, max_degree> seen{};
  std::array<std::uint8_t, max_degree> queue{};
  unsigned head = 0, tail = 0;
  seen[0] = true;
  queue[tail++] = 0;
  while (head < tail) {
    auto pt = queue[head++];
    for (auto g : idx) {
      auto next = sym[g][pt];
      if (!seen[next]) {
        seen[next] = true;
        queue[tail++] = next;
      }
    }
  }
  return tail == n;
}

/// Throws resource_error unless |S_n|^generators <= max_tuples.
inline void require_feasible(GroupKind const &kind, unsigned n)
{
  if (n == 0)
    throw domain_error("oracle: degree must be positive");
  BigInt tuples = pow(factorial(n), kind.generator_count());
  if (n > max_degree || tuples > max_tuples)
    throw resource_error("oracle: " + kind.to_string() + " at index " + std::to_string(n) +
                         " needs " + tuples.str() + " tuples, bound is " + std::to_string(max_tuples));
}

/// Visits the index tuple of every relation-satisfying homomorphism whose
/// first generator image has index in [first_begin, first_end).
template <typename Visitor>
void for_each_relation_hom(GroupKind const &kind, SymmetricGroup const &sym,
                           std::uint32_t first_begin, std::uint32_t first_end, Visitor &&visit)
{
  unsigned const gens = kind.generator_count();
  auto const size = static_cast<std::uint32_t>(sym.size());
  if (first_begin >= first_end)
    return;
  std::vector<std::uint32_t> idx(gens, 0);
  idx[0] = first_begin;
  for (;;) {
    if (satisfies_relation(kind, sym, idx))
      visit(std::as_const(idx));
    // odometer, last generator fastest
    unsigned pos = gens;
    while (pos > 0) {
      --pos;
      std::uint32_t limit = pos == 0 ? first_end : size;
      if (++idx[pos] < limit)
        break;
      if (pos == 0)
        return;
      idx[pos] = 0;
    }
  }
}

/// Runs `work(begin, end)` over a partition of the first-generator range and
/// returns the per-partition results in range order.
template <typename Work>
auto partitioned(std::uint32_t size, unsigned workers, Work work)
{
  using Result = decltype(work(std::uint32_t{}, std::uint32_t{}));
  workers = std::max(1u, std::min<unsigned>(workers, size));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = work(0, size);
    return results;
  }
  std::vector<std::jthread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    auto begin = static_cast<std::uint32_t>(std::uint64_t(size) * w / workers);
    auto end = static_cast<std::uint32_t>(std::uint64_t(size) * (w + 1) / workers);
    threads.emplace_back([&results, &work, w, begin, end] { results[w] = work(begin, end); });
  }
  threads.clear();
  return results;
}

inline std::uint64_t encode(std::vector<std::uint32_t> const &idx, std::uint64_t radix)
{
  std::uint64_t code = 0;
  for (auto i : idx)
    code = code * radix + i;
  return code;
}

inline BigInt divide_by_stabiliser(std::uint64_t transitive, unsigned n, char const *what)
{
  BigInt count = transitive;
  BigInt f = factorial(n - 1);
  if (count % f != 0)
    throw consistency_error(std::string(what) + ": (n-1)! does not divide the transitive count");
  return count / f;
}

class UnionFind {
public:
  explicit UnionFind(std::size_t n) : parent_(n)
  { std::iota(parent_.begin(), parent_.end(), std::uint32_t{0}); }

  std::uint32_t find(std::uint32_t x)
  {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::uint32_t a, std::uint32_t b)
  {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[std::max(a, b)] = std::min(a, b);
  }

  std::size_t roots()
  {
    std::size_t count = 0;
    for (std::uint32_t i = 0; i < parent_.size(); ++i)
      count += find(i) == i;
    return count;
  }

private:
  std::vector<std::uint32_t> parent_;
};

} // namespace detail

/// Every tuple of permutations of {0..n-1} satisfying the defining relation
/// of `kind`, transitive or not.
inline std::vector<PermutationTuple> enumerate_relation_homs(GroupKind const &kind, unsigned n)
{
  detail::require_feasible(kind, n);
  detail::SymmetricGroup sym(n);
  std::vector<PermutationTuple> out;
  detail::for_each_relation_hom(kind, sym, 0, static_cast<std::uint32_t>(sym.size()),
                                [&](auto const &idx) {
    PermutationTuple t{n, {}};
    for (auto i : idx)
      t.images.emplace_back(sym[i].begin(), sym[i].begin() + n);
    out.push_back(std::move(t));
  });
  return out;
}

/// M(n) as (number of transitive homomorphisms to S_n) / (n-1)!.
inline BigInt oracle_count_subgroups(GroupKind const &kind, unsigned n, unsigned workers = 1)
{
  detail::require_feasible(kind, n);
  detail::SymmetricGroup sym(n);
  auto parts = detail::partitioned(static_cast<std::uint32_t>(sym.size()), workers,
                                   [&](std::uint32_t begin, std::uint32_t end) {
    std::uint64_t count = 0;
    detail::for_each_relation_hom(kind, sym, begin, end, [&](auto const &idx) {
      count += detail::is_transitive(sym, idx);
    });
    return count;
  });
  return detail::divide_by_stabiliser(std::accumulate(parts.begin(), parts.end(), std::uint64_t{0}),
                                      n, "oracle_count_subgroups");
}

/// N(n) as the number of orbits of transitive homomorphisms under
/// simultaneous conjugation. Orbits are merged with union-find along
/// conjugation by adjacent transpositions, which generate S_n.
inline BigInt oracle_count_classes(GroupKind const &kind, unsigned n, unsigned workers = 1)
{
  detail::require_feasible(kind, n);
  detail::SymmetricGroup sym(n);
  std::uint64_t const radix = sym.size();

  // Codes are the mixed-radix rank of the concatenated one-line images; the
  // odometer emits them ascending, and partitions are contiguous ranges.
  auto parts = detail::partitioned(static_cast<std::uint32_t>(sym.size()), workers,
                                   [&](std::uint32_t begin, std::uint32_t end) {
    std::vector<std::uint64_t> codes;
    detail::for_each_relation_hom(kind, sym, begin, end, [&](auto const &idx) {
      if (detail::is_transitive(sym, idx))
        codes.push_back(detail::encode(idx, radix));
    });
    return codes;
  });
  std::vector<std::uint64_t> codes;
  for (auto &p : parts)
    codes.insert(codes.end(), p.begin(), p.end());

  auto const conj = sym.transposition_conjugates();
  unsigned const gens = kind.generator_count();
  detail::UnionFind uf(codes.size());
  std::vector<std::uint32_t> idx(gens), moved(gens);
  for (std::uint32_t k = 0; k < codes.size(); ++k) {
    std::uint64_t code = codes[k];
    for (unsigned g = gens; g-- > 0;) {
      idx[g] = static_cast<std::uint32_t>(code % radix);
      code /= radix;
    }
    for (auto const &table : conj) {
      for (unsigned g = 0; g < gens; ++g)
        moved[g] = table[idx[g]];
      auto target = detail::encode(moved, radix);
      auto it = std::lower_bound(codes.begin(), codes.end(), target);
      if (it == codes.end() || *it != target)
        throw consistency_error("oracle_count_classes: conjugate of a transitive tuple not found");
      uf.unite(k, static_cast<std::uint32_t>(it - codes.begin()));
    }
  }
  return BigInt(uf.roots());
}

struct OrientationSplit {
  BigInt orientable;
  BigInt nonorientable;
};

/// (M+, M-) for Lambda_p. For each transitive homomorphism, the stabiliser
/// of point 0 is generated by the Schreier generators rep(i) x rep(i^x)^-1
/// taken over a BFS coset tree. The orientation character sends every a_k to
/// 1 in Z_2, so on a word it is the exponent sum mod 2; the subgroup is
/// orientable iff the character vanishes on all Schreier generators.
inline OrientationSplit oracle_orientable_split(unsigned p, unsigned n, unsigned workers = 1)
{
  auto const kind = GroupKind::nonorientable(p);
  detail::require_feasible(kind, n);
  detail::SymmetricGroup sym(n);

  struct Counts {
    std::uint64_t plus = 0, minus = 0;
  };
  auto parts = detail::partitioned(static_cast<std::uint32_t>(sym.size()), workers,
                                   [&](std::uint32_t begin, std::uint32_t end) {
    Counts c;
    std::vector<long> exponent_sum(n);
    std::vector<bool> seen(n);
    std::vector<unsigned> queue(n);
    detail::for_each_relation_hom(kind, sym, begin, end, [&](auto const &idx) {
      // coset representatives: BFS words from point 0
      std::fill(seen.begin(), seen.end(), false);
      unsigned head = 0, tail = 0;
      seen[0] = true;
      exponent_sum[0] = 0;
      queue[tail++] = 0;
      while (head < tail) {
        unsigned pt = queue[head++];
        for (auto g : idx) {
          unsigned next = sym[g][pt];
          if (!seen[next]) {
            seen[next] = true;
            exponent_sum[next] = exponent_sum[pt] + 1;
            queue[tail++] = next;
          }
        }
      }
      if (tail != n)
        return;
      bool orientable = true;
      for (unsigned pt = 0; pt < n && orientable; ++pt)
        for (auto g : idx) {
          long schreier = exponent_sum[pt] + 1 - exponent_sum[sym[g][pt]];
          if (schreier % 2 != 0) {
            orientable = false;
            break;
          }
        }
      ++(orientable ? c.plus : c.minus);
    });
    return c;
  });

  Counts total;
  for (auto const &c : parts) {
    total.plus += c.plus;
    total.minus += c.minus;
  }
  return {detail::divide_by_stabiliser(total.plus, n, "oracle_orientable_split"),
          detail::divide_by_stabiliser(total.minus, n, "oracle_orientable_split")};
}

/// |Epi(H, Z_ell)| by listing every assignment of generator images in Z_ell
/// (a torsion generator of order m may only go to x with m x = 0) and
/// keeping those whose images generate Z_ell.
inline BigInt oracle_epi_count(HomologySignature const &h, std::uint64_t ell)
{
  if (ell == 0)
    throw domain_error("oracle_epi_count: target order must be positive");
  std::size_t const gens = h.torsion().size() + h.rank();
  if (gens > max_epi_generators || ell > max_epi_order)
    throw resource_error("oracle_epi_count: at most " + std::to_string(max_epi_generators) +
                         " generators and order at most " + std::to_string(max_epi_order));

  std::vector<std::uint64_t> orders = h.torsion();
  orders.resize(gens, 0); // 0 marks a free generator

  std::uint64_t count = 0;
  auto walk = [&](auto &self, std::size_t pos, std::uint64_t g) -> void {
    if (pos == gens) {
      count += g == 1;
      return;
    }
    for (std::uint64_t x = 0; x < ell; ++x) {
      if (orders[pos] && (orders[pos] * x) % ell != 0)
        continue;
      self(self, pos + 1, std::gcd(g, x));
    }
  };
  walk(walk, 0, ell);
  return BigInt(count);
}

} // namespace subgrowth::oracle

#endif // SUBGROWTH_ORACLE_HPP
