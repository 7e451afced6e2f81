// Prints the number of n-fold coverings of a genus-2 surface and of the
// Klein bottle, and checks the first few against brute force.

#include <iostream>

#include <subgrowth/subgrowth.hpp>

int main()
{
  using namespace subgrowth;

  for (auto kind : {GroupKind::orientable(2), GroupKind::nonorientable(2)}) {
    std::cout << kind.to_string() << '\n';
    for (unsigned n = 1; n <= 8; ++n)
      std::cout << "  n=" << n << "  subgroups=" << census::count_subgroups(kind, n)
                << "  coverings=" << classes::count_classes(kind, n) << '\n';
  }

  auto klein = GroupKind::nonorientable(2);
  for (unsigned n = 1; n <= 4; ++n)
    if (oracle::oracle_count_classes(klein, n) != classes::count_classes(klein, n))
      return 1;
  return 0;
}
