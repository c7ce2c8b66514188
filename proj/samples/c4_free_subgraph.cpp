// Reads an edge list from stdin and prints a large C4-free subgraph of it.

#include <iostream>

#include "girthforge.hpp"

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : 0;
  const auto g = girthforge::read_edge_list(std::cin);
  const auto res = girthforge::extract_even_cycle_free(g, 2, 16, seed);
  std::cerr << res.report.method << ": " << res.graph.size() << " of " << g.size() << " edges\n";
  girthforge::write_edge_list(std::cout, res.graph);
}
