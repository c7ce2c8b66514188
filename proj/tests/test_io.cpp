#include <catch_amalgamated.hpp>

#include <sstream>

#include "girthforge/edge_list.hpp"
#include "girthforge/generators.hpp"
#include "girthforge/random.hpp"

using namespace girthforge;

TEST_CASE("edge list parses comments, blanks and the vertex count line") {
  const Graph g = parse_edge_list("# a comment\n\n0 1\n  1 2  \n# vertices 6\n3\t4\n");
  CHECK(g.order() == 6);
  CHECK(g.size() == 3);
  CHECK(g.has_edge(3, 4));
  CHECK(parse_edge_list("0 1\n5 2\n").order() == 6);
}

TEST_CASE("edge list errors carry line numbers") {
  auto message = [](const std::string& text) {
    try {
      parse_edge_list(text);
    } catch (const ParseError& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("0 1\n1 0\n").find("line 2") != std::string::npos);
  CHECK(message("0 1\n\n3 3\n").find("line 3") != std::string::npos);
  CHECK(message("0 x\n").find("line 1") != std::string::npos);
  CHECK(message("0 1 2\n").find("line 1") != std::string::npos);
  CHECK(message("0\n").find("line 1") != std::string::npos);
  CHECK(message("-1 2\n").find("line 1") != std::string::npos);
  CHECK(message("# vertices 2\n0 5\n").find("line 2") != std::string::npos);
}

TEST_CASE("edge list round trip keeps isolated vertices") {
  const Graph g(7, {{0, 1}, {2, 5}});
  const Graph back = parse_edge_list(to_edge_list(g));
  CHECK(back.order() == 7);
  CHECK(back.edges() == g.edges());
}

TEST_CASE("generators produce the expected counts") {
  CHECK(complete(7).size() == 21);
  CHECK(star(5).order() == 6);
  CHECK(star(5).max_degree() == 5);
  CHECK(complete_bipartite(3, 4).size() == 12);
  CHECK(cycle(6).size() == 6);
  CHECK(path(4).size() == 3);
  const Graph ca = clique_apex(4, 6);
  CHECK(ca.order() == 6 * 5 + 1);
  CHECK(ca.size() == 6 * 10 + 6);
  CHECK(ca.degree(static_cast<Vertex>(ca.order() - 1)) == 6);
  CHECK(ca.min_degree() == 4);
  const Graph r = random_gnm(30, 80, 5);
  CHECK(r.size() == 80);
  CHECK(r.edges() == random_gnm(30, 80, 5).edges());
  CHECK(r.edges() != random_gnm(30, 80, 6).edges());
  CHECK_THROWS(random_gnm(4, 7, 1));
  CHECK(generate("complete_bipartite:2:3").size() == 6);
  CHECK_THROWS_AS(generate("complete:3:4"), std::invalid_argument);
  CHECK_THROWS_AS(generate("wheel:5"), std::invalid_argument);
}

TEST_CASE("random helpers are portable and unbiased in range") {
  CHECK(splitmix64(0) == 0xe220a8397b1dcdafULL);
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) CHECK(uniform_below(rng, 7) < 7);
  for (int i = 0; i < 1000; ++i) {
    const double x = uniform_unit(rng);
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
  std::vector<int> v{0, 1, 2, 3, 4, 5};
  Rng a(9), b(9);
  auto w = v;
  shuffle(std::span<int>(v), a);
  shuffle(std::span<int>(w), b);
  CHECK(v == w);
  CHECK(mix_seed(7, 0) != mix_seed(7, 1));
}
