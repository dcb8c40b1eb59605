// Group the length-5 complete bipartite POPs with |A| = 2 by their counts.

#include <popkit/popkit.hpp>

#include <iostream>

int main() {
  const auto report = popkit::classify(popkit::cb_family(5, 2), 8);
  for (const auto& c : report.classes) {
    for (const auto& v : c.prefix) std::cout << v << ' ';
    std::cout << '\n';
    for (const auto& m : c.members) std::cout << "  " << m << '\n';
  }
}
