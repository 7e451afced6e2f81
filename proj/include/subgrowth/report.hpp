#ifndef SUBGROWTH_REPORT_HPP
#define SUBGROWTH_REPORT_HPP

#include <charconv>
#include <cstdint>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "census.hpp"
#include "classes.hpp"
#include "error.hpp"
#include "oracle.hpp"

// Text front end shared by the command-line tool: group descriptors, table
// rendering, and the formula-versus-oracle report.

namespace subgrowth::report {

namespace detail {

inline std::uint64_t parse_uint(std::string_view text, std::string_view what)
{
  std::uint64_t value = 0;
  auto const *end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (text.empty() || ec != std::errc{} || ptr != end)
    throw domain_error("invalid " + std::string(what) + " '" + std::string(text) + "'");
  return value;
}

inline unsigned parse_small(std::string_view text, std::string_view what)
{
  auto v = parse_uint(text, what);
  if (v > 1'000'000)
    throw domain_error(std::string(what) + " '" + std::string(text) + "' is out of range");
  return static_cast<unsigned>(v);
}

} // namespace detail

/// "free:R" (R >= 1), "orient:G" (G >= 1) or "nonorient:P" (P >= 2).
inline GroupKind parse_group(std::string_view spec)
{
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw domain_error("group must look like free:R, orient:G or nonorient:P, got '" + std::string(spec) + "'");
  auto family = spec.substr(0, colon);
  auto value = detail::parse_small(spec.substr(colon + 1), "group parameter");
  if (family == "free")
    return GroupKind::free(value);
  if (family == "orient")
    return GroupKind::orientable(value);
  if (family == "nonorient")
    return GroupKind::nonorientable(value);
  throw domain_error("unknown group family '" + std::string(family) + "'");
}

/// Comma-separated torsion orders, each at least 2. Empty text is no torsion.
inline std::vector<std::uint64_t> parse_torsion(std::string_view text)
{
  std::vector<std::uint64_t> out;
  if (text.empty())
    return out;
  std::size_t start = 0;
  for (;;) {
    auto comma = text.find(',', start);
    auto item = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    auto v = detail::parse_uint(item, "torsion order");
    if (v < 2)
      throw domain_error("torsion order " + std::to_string(v) + " is less than 2");
    out.push_back(v);
    if (comma == std::string_view::npos)
      break;
    start = comma + 1;
  }
  return out;
}

inline bool has_split(classes::CensusTable const &table)
{ return table.kind.family() == GroupKind::Family::nonorientable; }

inline void write_csv(std::ostream &out, classes::CensusTable const &table)
{
  bool split = has_split(table);
  out << (split ? "n,M,M_plus,M_minus,N\n" : "n,M,N\n");
  for (auto const &row : table.rows) {
    out << row.n << ',' << row.subgroups;
    if (split)
      out << ',' << *row.orientable << ',' << *row.nonorientable;
    out << ',' << row.classes << '\n';
  }
}

// Values exceed 64 bits, so the numbers are written out by hand rather than
// through a JSON library that would round them to doubles.
inline void write_json(std::ostream &out, classes::CensusTable const &table)
{
  bool split = has_split(table);
  out << '[';
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    auto const &row = table.rows[i];
    if (i)
      out << ',';
    out << "{\"n\":" << row.n << ",\"M\":" << row.subgroups;
    if (split)
      out << ",\"M_plus\":" << *row.orientable << ",\"M_minus\":" << *row.nonorientable;
    out << ",\"N\":" << row.classes << '}';
  }
  out << "]\n";
}

/// Rejects a verification request past the oracle bound before any work starts.
inline void require_verifiable(GroupKind const &kind, unsigned max_index)
{
  if (max_index == 0)
    throw domain_error("max index must be positive");
  oracle::detail::require_feasible(kind, max_index);
}

/// Compares M, N (and M+, M- for non-orientable kinds) from the formulas
/// with the oracle for n = 1..max_index. Writes one line per check and
/// returns true iff all of them pass.
inline bool verify(std::ostream &out, GroupKind const &kind, unsigned max_index, unsigned workers = 1)
{
  require_verifiable(kind, max_index);
  bool all = true;
  auto line = [&](unsigned n, char const *what, BigInt const &formula, BigInt const &brute) {
    bool ok = formula == brute;
    all = all && ok;
    out << (ok ? "PASS" : "FAIL") << ' ' << kind.to_string() << " n=" << n << ' ' << what
        << " formula=" << formula << " oracle=" << brute << '\n';
  };
  for (unsigned n = 1; n <= max_index; ++n) {
    line(n, "M", census::count_subgroups(kind, n), oracle::oracle_count_subgroups(kind, n, workers));
    line(n, "N", classes::count_classes(kind, n), oracle::oracle_count_classes(kind, n, workers));
    if (kind.family() == GroupKind::Family::nonorientable) {
      auto split = oracle::oracle_orientable_split(kind.parameter(), n, workers);
      line(n, "M_plus", census::count_orientable_subgroups(kind.parameter(), n), split.orientable);
      line(n, "M_minus", census::count_nonorientable_subgroups(kind.parameter(), n), split.nonorientable);
    }
  }
  return all;
}

} // namespace subgrowth::report

#endif // SUBGROWTH_REPORT_HPP
