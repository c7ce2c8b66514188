#include <catch_amalgamated.hpp>

#include "girthforge/edge_extract.hpp"
#include "girthforge/generators.hpp"
#include "girthforge/oracle.hpp"
#include "support.hpp"

using namespace girthforge;

TEST_CASE("exact ex anchors") {
  const auto even4 = ForbiddenFamily::even_up_to(4);
  CHECK(exact_ex(complete(4), even4).value == 4);
  CHECK(exact_ex(cycle(5), even4).value == 5);
  CHECK(exact_ex(complete_bipartite(3, 3), even4).value == 6);
  CHECK(support::brute_ex(complete(4), [](const Graph& h) { return support::has_even_cycle_up_to(h, 4); }) == 4);
  CHECK(support::brute_ex(complete_bipartite(3, 3), [](const Graph& h) { return support::has_even_cycle_up_to(h, 4); }) == 6);
  CHECK(exact_ex(complete(5), ForbiddenFamily::all_up_to(3)).value == 6);  // Turan: K5 triangle-free max
}

TEST_CASE("exact ex matches exhaustive enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const Graph g = support::random_graph(7, 0.45, seed);
    if (g.size() > 14) continue;
    CAPTURE(seed, g.size());
    const auto even4 = exact_ex(g, ForbiddenFamily::even_up_to(4));
    CHECK(even4.value == support::brute_ex(g, [](const Graph& h) { return support::has_even_cycle_up_to(h, 4); }));
    const auto all4 = exact_ex(g, ForbiddenFamily::all_up_to(4));
    CHECK(all4.value == support::brute_ex(g, [](const Graph& h) { return support::has_cycle_up_to(h, 4); }));
  }
}

TEST_CASE("exact witness re-certifies and identity case returns m") {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const Graph g = random_gnm(9, 14, seed);
    const auto fam = ForbiddenFamily::even_up_to(4);
    const auto res = exact_ex(g, fam);
    CHECK(res.witness.size() == res.value);
    CHECK(std::is_sorted(res.witness.begin(), res.witness.end()));
    CHECK(check_family_free(edge_subgraph(g, res.witness), fam).free());
    CHECK(res.explored > 0);
  }
  CHECK(exact_ex(cycle(7), ForbiddenFamily::even_up_to(6)).value == 7);
  CHECK(exact_ex(Graph(3), ForbiddenFamily::even_up_to(4)).value == 0);
  CHECK_THROWS_AS(exact_ex(complete(9), ForbiddenFamily::even_up_to(4)), std::invalid_argument);
}

TEST_CASE("extractor output never beats the oracle") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Graph g = random_gnm(9, 12 + seed % 8, seed);
    const auto ex = exact_ex(g, ForbiddenFamily::even_up_to(4)).value;
    for (std::uint64_t s = 0; s < 3; ++s) CHECK(extract_even_cycle_free(g, 2, 4, s).graph.size() <= ex);
  }
}

TEST_CASE("cherry check examples") {
  // C8 as a 4+4 bipartite graph: A = {0..3}, B = {4..7}.
  const Graph c8(8, {{0, 4}, {4, 1}, {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 0}});
  const auto v = cherry_check(c8, 4);
  CHECK(v.holds());
  CHECK(v.cherries == 4);
  CHECK(v.bound == 6);

  const auto k22 = cherry_check(complete_bipartite(2, 2), 2);
  REQUIRE_FALSE(k22.holds());
  CHECK(validate_witness(complete_bipartite(2, 2), *k22.violation));
  CHECK(k22.violation->length() == 4);

  const auto s = cherry_check(complete_bipartite(1, 6), 1);
  CHECK(s.holds());
  CHECK(s.cherries == s.bound);
  CHECK_THROWS_AS(cherry_check(complete(3), 1), std::invalid_argument);
}

TEST_CASE("cherry violation iff a 4-cycle exists") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph base = support::random_graph(10, 0.35, seed);
    const Graph h = filter_edges(base, [&](EdgeId id) { return (base.edge(id).u < 5) != (base.edge(id).v < 5); });
    const auto v = cherry_check(h, 5);
    CHECK(v.holds() == !find_short_even_cycle(h, 4).has_value());
    if (v.holds()) CHECK(v.cherries <= v.bound);
    if (!v.holds()) CHECK(validate_witness(h, *v.violation));
  }
}
