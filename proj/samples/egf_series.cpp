// Avoidance counts of disjoint-chain POPs straight from exponential generating
// functions, far past what enumeration can reach.

#include <popkit/popkit.hpp>

#include <iostream>

int main() {
  using namespace popkit;
  const auto three_pairs = bipartite_dc_closed_form(3, 20);
  std::cout << "three 2-chains:";
  for (const auto& v : three_pairs.counts()) std::cout << ' ' << v;
  std::cout << '\n';

  const auto mixed = dc_series({{1, 2, 3}, {2, 1}}, 20);
  std::cout << "[123|54]:";
  for (const auto& v : mixed.counts()) std::cout << ' ' << v;
  std::cout << '\n';
}
