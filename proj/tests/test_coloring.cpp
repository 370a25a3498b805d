#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromabound/coloring.hpp"
#include "chromabound/enumerate.hpp"
#include "chromabound/families.hpp"
#include "oracles.hpp"

using namespace chromabound;

namespace {

Graph petersen() {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::from_edges(10, edges);
}

}  // namespace

TEST_CASE("coloring from colours") {
  const Coloring c = Coloring::from_colors({1, 2, 1, 3});
  CHECK(c.k == 3);
  CHECK_THROWS(Coloring::from_colors({1, 3}));  // colour 2 unused
  CHECK_THROWS(Coloring::from_colors({0, 1}));
}

TEST_CASE("validate") {
  const Graph p4 = path_graph(4);
  CHECK(validate(p4, Coloring::from_colors({1, 2, 1, 2}), ColoringClass::proper));
  CHECK_FALSE(validate(p4, Coloring::from_colors({1, 1, 2, 1}), ColoringClass::proper));
  CHECK(validate(p4, Coloring::from_colors({1, 2, 3, 1}), ColoringClass::complete));
  CHECK_FALSE(validate(p4, Coloring::from_colors({1, 2, 1, 3}), ColoringClass::complete));
  CHECK(validate(p4, Coloring::from_colors({1, 2, 3, 1}), ColoringClass::grundy));
  CHECK_FALSE(validate(p4, Coloring::from_colors({2, 1, 3, 2}), ColoringClass::grundy));
  CHECK_THROWS_AS(validate(p4, Coloring::from_colors({1, 2}), ColoringClass::proper), ContractError);
}

TEST_CASE("degeneracy ordering") {
  const Graph p = petersen();
  const DegeneracyOrdering d = degeneracy_ordering(p);
  CHECK(d.degeneracy == 3);
  CHECK(oracle::degeneracy(p) == 3);
  CHECK(coloring_number(p) == 4);
  // each vertex has at most `degeneracy` earlier neighbours
  std::vector<int> pos(10);
  for (int i = 0; i < 10; ++i) pos[d.order[i]] = i;
  for (int i = 0; i < 10; ++i) {
    int back = 0;
    for (int u = 0; u < 10; ++u)
      if (p.adjacent(u, d.order[i]) && pos[u] < i) ++back;
    CHECK(back == d.back_degrees[i]);
    CHECK(back <= d.degeneracy);
  }
  CHECK(coloring_number(Graph(0)) == 0);
  CHECK(coloring_number(Graph(3)) == 1);
  CHECK(coloring_number(complete_graph(6)) == 6);
}

TEST_CASE("coloring number agrees with the subgraph oracle") {
  for (const Graph& g : enumerate_up_to(7)) CHECK(coloring_number(g) == oracle::degeneracy(g) + 1);
}

TEST_CASE("P4 colouring numbers") {
  const Graph p4 = path_graph(4);
  CHECK(chromatic_number(p4).number() == 2);
  CHECK(coloring_number(p4) == 2);
  CHECK(grundy_number(p4).number() == 3);
  CHECK(achromatic_number(p4).number() == 3);
}

TEST_CASE("families") {
  for (int n = 1; n <= 8; ++n) {
    CHECK(chromatic_number(complete_graph(n)).number() == n);
    CHECK(grundy_number(complete_graph(n)).number() == n);
    CHECK(achromatic_number(complete_graph(n)).number() == n);
  }
  CHECK(chromatic_number(cycle_graph(7)).number() == 3);
  CHECK(chromatic_number(petersen()).number() == 3);
  CHECK(achromatic_number(star_graph(6)).number() == 2);
  CHECK(grundy_number(star_graph(6)).number() == 2);
  CHECK(chromatic_number(Graph(0)).number() == 0);
}

TEST_CASE("search limits") {
  CHECK_THROWS_AS(chromatic_number(Graph(11)), LimitError);
  CHECK_THROWS_AS(grundy_number(Graph(10)), LimitError);
  CHECK_THROWS_AS(achromatic_number(Graph(10)), LimitError);
}

TEST_CASE("first fit") {
  const Graph p4 = path_graph(4);
  const std::vector<int> ends_first{0, 3, 1, 2};
  const Coloring c = first_fit(p4, ends_first);
  CHECK(c.k == 3);
  CHECK(validate(p4, c, ColoringClass::grundy));
}

TEST_CASE("complete colourings") {
  const Graph p4 = path_graph(4);
  auto c = find_complete_coloring(p4, 3);
  REQUIRE(c.has_value());
  CHECK(validate(p4, *c, ColoringClass::complete));
  CHECK_FALSE(find_complete_coloring(p4, 4).has_value());
}

TEST_CASE("exact numbers agree with naive oracles up to order 6") {
  for (const Graph& g : enumerate_up_to(6)) {
    const auto chi = chromatic_number(g);
    const auto gam = grundy_number(g);
    const auto psi = achromatic_number(g);
    CHECK(chi.number() == oracle::chromatic(g));
    CHECK(gam.number() == oracle::grundy(g));
    CHECK(psi.number() == oracle::achromatic(g));
    CHECK(validate(g, chi.coloring, ColoringClass::proper));
    CHECK(validate(g, gam.coloring, ColoringClass::grundy));
    CHECK(validate(g, psi.coloring, ColoringClass::complete));
  }
}

TEST_CASE("chi <= Grundy <= psi and chi <= col <= Delta + 1 up to order 7") {
  for (const Graph& g : enumerate_up_to(7)) {
    const int chi = chromatic_number(g).number();
    const int gam = grundy_number(g).number();
    const int psi = achromatic_number(g).number();
    const int col = coloring_number(g);
    CHECK(chi <= gam);
    CHECK(gam <= psi);
    CHECK(chi <= col);
    CHECK(col <= g.max_degree() + 1);
    CHECK(gam <= g.max_degree() + 1);
  }
}
