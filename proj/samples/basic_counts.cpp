// Count permutations avoiding a few POPs given in text notation.

#include <popkit/popkit.hpp>

#include <iostream>

int main() {
  for (const char* text : {"chain:132", "cb:4:{1,2}", "n:3142", "dc:[12|43]"}) {
    const auto p = popkit::parse_poset(text);
    std::cout << text << "  " << popkit::canonical_form(p) << '\n';
    for (unsigned n = 0; n <= 8; ++n) std::cout << "  " << popkit::count_avoiders(p, n);
    std::cout << '\n';
  }
  // A single text: how many times does 3 sit below 1 in 41253?
  std::cout << "occurrences: " << popkit::count_occurrences(popkit::Permutation{4, 1, 2, 5, 3},
                                                           popkit::parse_poset("rel:3:{(3,1)}"))
            << '\n';
}
