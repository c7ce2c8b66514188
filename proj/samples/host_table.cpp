// Prints order, size, minimum degree and girth of the algebraic hosts.

#include <cstdio>

#include "girthforge/hosts.hpp"

int main() {
  std::printf("%-22s %6s %7s %5s %5s\n", "host", "n", "m", "mindeg", "girth");
  for (std::uint64_t q : {2, 3, 5, 7, 11, 13, 17}) {
    for (const auto& h : {girthforge::polarity_graph(q), girthforge::incidence_graph_pg2(q)})
      std::printf("%-22s %6zu %7zu %5zu %5s\n", h.label.c_str(), h.order(), h.size(), h.min_degree,
                  h.certified_girth.to_string().c_str());
  }
}
