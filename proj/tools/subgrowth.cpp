// subgrowth: exact counts of finite-index subgroups and their conjugacy
// classes in free and surface groups.
//
//   subgrowth count  --group free:2 --index 3 --what subgroups|classes|split
//   subgrowth table  --group nonorient:3 --max-index 10 --format json|csv
//   subgrowth verify --group orient:2 --max-index 3
//   subgrowth epi    --torsion 2,4 --rank 1 --order 6
//
// Exit codes: 0 success, 1 verification failure, 2 usage/domain/resource error.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include <subgrowth/abelian.hpp>
#include <subgrowth/census.hpp>
#include <subgrowth/classes.hpp>
#include <subgrowth/report.hpp>

namespace {

constexpr int exit_ok = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

} // namespace

int main(int argc, char **argv)
{
  using namespace subgrowth;

  CLI::App app{"Count finite-index subgroups and coverings of free and surface groups"};
  app.require_subcommand(1);

  std::string group;
  unsigned index = 0;
  std::string what = "subgroups";
  std::string format = "csv";
  std::string torsion;
  std::uint64_t rank = 0;
  std::uint64_t order = 0;
  unsigned jobs = 1;

  auto *count = app.add_subcommand("count", "Print M(n), N(n) or the M+/M- split");
  count->add_option("--group", group, "free:R, orient:G or nonorient:P")->required();
  count->add_option("--index", index, "Subgroup index n")->required();
  count->add_option("--what", what, "subgroups, classes or split")
      ->check(CLI::IsMember({"subgroups", "classes", "split"}));

  auto *table = app.add_subcommand("table", "Print the census for n = 1..max-index");
  table->add_option("--group", group, "free:R, orient:G or nonorient:P")->required();
  table->add_option("--max-index", index, "Largest index")->required();
  table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  auto *verify = app.add_subcommand("verify", "Compare formulas with brute-force enumeration");
  verify->add_option("--group", group, "free:R, orient:G or nonorient:P")->required();
  verify->add_option("--max-index", index, "Largest index")->required();
  verify->add_option("--jobs", jobs, "Worker threads for the enumeration")->check(CLI::Range(1u, 256u));

  auto *epi = app.add_subcommand("epi", "Print |Epi(H, Z_order)| for H = torsion + Z^rank");
  epi->add_option("--torsion", torsion, "Comma-separated torsion orders, each >= 2");
  epi->add_option("--rank", rank, "Free rank");
  epi->add_option("--order", order, "Order of the cyclic target")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const &e) {
    return app.exit(e);
  } catch (CLI::ParseError const &e) {
    std::cerr << "subgrowth: " << e.what() << '\n';
    return exit_usage;
  }

  try {
    if (*count) {
      auto kind = report::parse_group(group);
      if (index == 0)
        throw domain_error("index must be positive");
      if (what == "subgroups") {
        std::cout << census::count_subgroups(kind, index) << '\n';
      } else if (what == "classes") {
        std::cout << classes::count_classes(kind, index) << '\n';
      } else {
        if (kind.family() != GroupKind::Family::nonorientable)
          throw domain_error("--what split requires a nonorient group");
        std::cout << census::count_orientable_subgroups(kind.parameter(), index) << ' '
                  << census::count_nonorientable_subgroups(kind.parameter(), index) << '\n';
      }
    } else if (*table) {
      auto kind = report::parse_group(group);
      auto t = classes::census_table(kind, index);
      if (format == "json")
        report::write_json(std::cout, t);
      else
        report::write_csv(std::cout, t);
    } else if (*verify) {
      auto kind = report::parse_group(group);
      report::require_verifiable(kind, index);
      return report::verify(std::cout, kind, index, jobs) ? exit_ok : exit_failed;
    } else if (*epi) {
      if (order == 0)
        throw domain_error("order must be positive");
      HomologySignature h(report::parse_torsion(torsion), rank);
      std::cout << abelian::epi_count(h, order) << '\n';
    }
  } catch (domain_error const &e) {
    std::cerr << "subgrowth: " << e.what() << '\n';
    return exit_usage;
  } catch (resource_error const &e) {
    std::cerr << "subgrowth: " << e.what() << '\n';
    return exit_usage;
  } catch (consistency_error const &e) {
    std::cerr << "subgrowth: internal consistency failure: " << e.what() << '\n';
    return exit_failed;
  }
  return exit_ok;
}
