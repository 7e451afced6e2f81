// Acceptance suite: every check is exact integer equality. Prints one
// PASS/FAIL line per criterion and exits nonzero if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <subgrowth/subgrowth.hpp>

using namespace subgrowth;

namespace {

using Clock = std::chrono::steady_clock;

class Check {
public:
  void expect(bool ok, std::string const &what)
  {
    if (!ok && failures_.size() < 5)
      failures_.push_back(what);
    failed_ = failed_ || !ok;
  }

  template <typename A, typename B>
  void equal(A const &a, B const &b, std::string const &what)
  {
    std::ostringstream msg;
    msg << what << ": got " << a << ", want " << b;
    expect(a == b, msg.str());
  }

  bool failed() const { return failed_; }
  std::vector<std::string> const &failures() const { return failures_; }

private:
  bool failed_ = false;
  std::vector<std::string> failures_;
};

struct Criterion {
  int id;
  std::string title;
  double time_limit_s; // 0 = none stated
  std::function<void(Check &)> body;
};

BigInt sigma(unsigned m)
{
  BigInt s = 0;
  for (unsigned d = 1; d <= m; ++d)
    if (m % d == 0)
      s += d;
  return s;
}

std::uint64_t partition_count(unsigned k)
{
  std::vector<std::uint64_t> ways(k + 1, 0);
  ways[0] = 1;
  for (unsigned part = 1; part <= k; ++part)
    for (unsigned s = part; s <= k; ++s)
      ways[s] += ways[s - part];
  return ways[k];
}

std::string at(GroupKind const &kind, unsigned n)
{ return kind.to_string() + " n=" + std::to_string(n); }

auto provider(GroupKind kind)
{
  return [kind](unsigned m) { return census::covering_fiber(kind, m); };
}

void free_census(Check &c)
{
  auto const kind = GroupKind::free(2);
  std::vector<BigInt> want{1, 3, 13, 71, 461, 3447};
  for (unsigned n = 1; n <= 6; ++n) {
    c.equal(census::count_subgroups(kind, n), want[n - 1], "Hall M " + at(kind, n));
    if (n <= 5)
      c.equal(oracle::oracle_count_subgroups(kind, n), want[n - 1], "oracle M " + at(kind, n));
  }
}

void free_classes(Check &c)
{
  auto const kind = GroupKind::free(2);
  std::vector<BigInt> want{1, 3, 7, 26, 97, 624};
  for (unsigned n = 1; n <= 6; ++n) {
    c.equal(classes::count_classes(kind, n), want[n - 1], "N " + at(kind, n));
    if (n <= 5)
      c.equal(oracle::oracle_count_classes(kind, n), want[n - 1], "oracle N " + at(kind, n));
  }
}

void torus(Check &c)
{
  auto const kind = GroupKind::orientable(1);
  for (unsigned n = 1; n <= 20; ++n) {
    auto s = sigma(n);
    c.equal(census::r_nu_closed(n, 0), s, "R_0 closed " + at(kind, n));
    c.equal(census::count_subgroups(kind, n), s, "M " + at(kind, n));
    c.equal(classes::count_classes(kind, n), s, "N " + at(kind, n));
  }
}

void genus_two(Check &c)
{
  auto const kind = GroupKind::orientable(2);
  c.equal(census::count_subgroups(kind, 2), 15, "M " + at(kind, 2));
  c.equal(classes::count_classes(kind, 2), 15, "N " + at(kind, 2));
  for (unsigned n = 2; n <= 3; ++n) {
    c.equal(oracle::oracle_count_subgroups(kind, n), census::count_subgroups(kind, n), "oracle M " + at(kind, n));
    c.equal(oracle::oracle_count_classes(kind, n), classes::count_classes(kind, n), "oracle N " + at(kind, n));
  }
  for (unsigned n = 1; n <= 10; ++n)
    c.equal(classes::count_classes(kind, n), classes::count_classes_generic(n, provider(kind)),
            "closed vs generic " + at(kind, n));
}

void nonorientable(Check &c)
{
  struct Want {
    unsigned p;
    BigInt m, plus, minus, n;
    unsigned oracle_max;
    unsigned generic_max;
  };
  for (auto const &w : {Want{3, 7, 1, 6, 7, 4, 8}, Want{2, 3, 1, 2, 3, 5, 8}}) {
    auto const kind = GroupKind::nonorientable(w.p);
    c.equal(census::count_subgroups(kind, 2), w.m, "M " + at(kind, 2));
    c.equal(census::count_orientable_subgroups(w.p, 2), w.plus, "M+ " + at(kind, 2));
    c.equal(census::count_nonorientable_subgroups(w.p, 2), w.minus, "M- " + at(kind, 2));
    c.equal(classes::count_classes(kind, 2), w.n, "N " + at(kind, 2));
    for (unsigned n = 1; n <= w.generic_max; ++n)
      c.equal(classes::count_classes(kind, n), classes::count_classes_generic(n, provider(kind)),
              "closed vs generic " + at(kind, n));
    for (unsigned n = 1; n <= w.oracle_max; ++n) {
      c.equal(oracle::oracle_count_subgroups(kind, n), census::count_subgroups(kind, n), "oracle M " + at(kind, n));
      c.equal(oracle::oracle_count_classes(kind, n), classes::count_classes(kind, n), "oracle N " + at(kind, n));
      auto split = oracle::oracle_orientable_split(w.p, n);
      c.equal(split.orientable, census::count_orientable_subgroups(w.p, n), "oracle M+ " + at(kind, n));
      c.equal(split.nonorientable, census::count_nonorientable_subgroups(w.p, n), "oracle M- " + at(kind, n));
    }
  }
}

void r_nu_agreement(Check &c)
{
  for (unsigned m = 1; m <= 12; ++m)
    for (int nu = 0; nu <= 4; ++nu) {
      std::string where = "m=" + std::to_string(m) + " nu=" + std::to_string(nu);
      try {
        c.equal(census::r_nu_closed(m, nu), census::r_nu_recursive(m, nu), "closed vs recursive " + where);
      } catch (consistency_error const &e) {
        c.expect(false, std::string("non-integral closed form ") + where + ": " + e.what());
      }
    }
}

void epi_hom(Check &c)
{
  std::vector<std::vector<std::uint64_t>> torsions{{}};
  for (std::uint64_t a = 2; a <= 6; ++a) {
    torsions.push_back({a});
    for (std::uint64_t b = a; b <= 6; ++b)
      torsions.push_back({a, b});
  }
  for (auto const &t : torsions)
    for (std::uint64_t rank = 0; rank <= 4; ++rank) {
      HomologySignature h(t, rank);
      for (std::uint64_t ell = 1; ell <= 24; ++ell) {
        std::ostringstream where;
        where << "torsion size " << t.size() << (t.empty() ? 0 : t.front()) << (t.size() > 1 ? t.back() : 0)
              << " rank " << rank << " ell " << ell;
        BigInt sum = 0;
        for (auto d : numtheory::divisors(ell))
          sum += abelian::epi_count(h, d);
        c.equal(sum, abelian::hom_count(h, ell), "sum Epi vs Hom " + where.str());
        c.equal(abelian::epi_count(h, ell), oracle::oracle_epi_count(h, ell), "Epi vs oracle " + where.str());
      }
    }
}

void structural(Check &c)
{
  std::vector<GroupKind> kinds{GroupKind::free(1),          GroupKind::free(2),          GroupKind::free(3),
                               GroupKind::orientable(1),    GroupKind::orientable(2),    GroupKind::orientable(3),
                               GroupKind::nonorientable(2), GroupKind::nonorientable(3), GroupKind::nonorientable(4)};
  for (auto const &kind : kinds) {
    auto table = classes::census_table(kind, 12);
    for (auto const &v : classes::table_violations(table))
      c.expect(false, kind.to_string() + ": " + v);
    c.expect(table.rows.size() == 12, kind.to_string() + ": row count");
  }
}

void characters_layer(Check &c)
{
  for (unsigned k = 1; k <= 12; ++k) {
    BigInt sum = 0;
    for (auto const &lambda : characters::partitions(k)) {
      auto f = characters::degree(lambda);
      sum += f * f;
    }
    c.equal(sum, factorial(k), "sum f^2 k=" + std::to_string(k));
  }
  for (unsigned k = 1; k <= 20; ++k)
    c.equal(characters::beta(k, 0), partition_count(k), "beta(k,0) k=" + std::to_string(k));
}

} // namespace

int main()
{
  std::vector<Criterion> criteria{
      {1, "free-group census M(n), F_2, n<=6; oracle n<=5", 30, free_census},
      {2, "free-group classes N(n), F_2, n<=6; oracle n<=5", 120, free_classes},
      {3, "torus M = N = sigma(n), n<=20", 0, torus},
      {4, "genus-2 surface: M(2) = N(2) = 15; oracle n=2,3; closed = generic n<=10", 60, genus_two},
      {5, "non-orientable Lambda_3, Klein bottle: split, generic, oracle", 120, nonorientable},
      {6, "R_nu closed form = recursion, m<=12, nu<=4, integral", 0, r_nu_agreement},
      {7, "Epi/Hom Moebius inversion and Epi oracle", 0, epi_hom},
      {8, "structural invariants on census tables", 0, structural},
      {9, "character layer: sum f^2 = k!, beta(k,0) = p(k)", 0, characters_layer},
  };

  int failed = 0;
  for (auto const &cr : criteria) {
    Check check;
    auto start = Clock::now();
    std::string error;
    try {
      cr.body(check);
    } catch (std::exception const &e) {
      error = e.what();
    }
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    bool over_time = cr.time_limit_s > 0 && secs > cr.time_limit_s;
    bool ok = !check.failed() && error.empty() && !over_time;
    failed += !ok;

    std::cout << (ok ? "PASS" : "FAIL") << " [" << cr.id << "] " << cr.title << " (" << secs << " s";
    if (cr.time_limit_s > 0)
      std::cout << ", limit " << cr.time_limit_s << " s";
    std::cout << ")\n";
    for (auto const &f : check.failures())
      std::cout << "    " << f << '\n';
    if (!error.empty())
      std::cout << "    exception: " << error << '\n';
    if (over_time)
      std::cout << "    exceeded time limit\n";
  }
  std::cout << (failed ? "acceptance: FAILED " : "acceptance: all criteria passed") ;
  if (failed)
    std::cout << failed << " criteria";
  std::cout << '\n';
  return failed ? 1 : 0;
}
