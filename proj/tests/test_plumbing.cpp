#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <vector>

#include "linkinv/errors.hpp"
#include "linkinv/plumbing.hpp"
#include "linkinv/selftest.hpp"

using namespace linkinv;
using plumbing::IntersectionMatrix;
using plumbing::PlumbingGraph;
using plumbing::Vertex;

namespace {

PlumbingGraph e8_graph() {
  // star with arms of lengths 1, 2, 4 from vertex 0, all weights -2
  std::vector<Vertex> v;
  for (int i = 0; i < 8; ++i) v.push_back({i, -2, 0});
  return plumbing::build_graph(
      v, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {5, 6}, {6, 7}});
}

PlumbingGraph single_vertex(long long weight, int genus) {
  return plumbing::build_graph({{0, weight, genus}}, {});
}

IntersectionMatrix random_symmetric(std::mt19937_64& rng, int max_r) {
  const int r = 1 + static_cast<int>(rng() % max_r);
  IntersectionMatrix m(r);
  for (int i = 0; i < r; ++i)
    for (int j = i; j < r; ++j) {
      const Int e = make_int(static_cast<long long>(rng() % 19) - 9);
      m.at(i, j) = e;
      m.at(j, i) = e;
    }
  return m;
}

PlumbingGraph permuted(const PlumbingGraph& g, const std::vector<int>& perm) {
  std::vector<Vertex> vertices(g.vertices.size());
  for (size_t i = 0; i < g.vertices.size(); ++i) {
    vertices[perm[i]] = g.vertices[i];
    vertices[perm[i]].id = perm[i];
  }
  std::vector<std::pair<int, int>> edges;
  for (const auto& [u, v] : g.edges) edges.emplace_back(perm[u], perm[v]);
  return plumbing::build_graph(std::move(vertices), std::move(edges));
}

}  // namespace

TEST_CASE("build_graph validation") {
  CHECK(single_vertex(-2, 0).vertex_count() == 1);

  const PlumbingGraph a2 =
      plumbing::build_graph({{0, -2, 0}, {1, -2, 0}}, {{0, 1}});
  CHECK(a2.vertex_count() == 2);
  CHECK(a2.edge_count() == 1);

  CHECK_THROWS_WITH_AS(plumbing::build_graph({{0, -2, 0}}, {{0, 0}}),
                       doctest::Contains("loops-forbidden"), Error);
  CHECK_THROWS_WITH_AS(plumbing::build_graph({{0, -2, 0}, {2, -2, 0}}, {{0, 2}}),
                       doctest::Contains("bad-ids"), Error);
  CHECK_THROWS_WITH_AS(plumbing::build_graph({{0, -2, 0}, {1, -2, 0}}, {}),
                       doctest::Contains("not-connected"), Error);
  CHECK_THROWS_WITH_AS(plumbing::build_graph({}, {}),
                       doctest::Contains("bad-ids"), Error);
  CHECK_THROWS_WITH_AS(plumbing::build_graph({{0, -2, -1}}, {}),
                       doctest::Contains("invalid-argument"), Error);
  CHECK_THROWS_WITH_AS(plumbing::build_graph({{0, -2, 0}}, {{0, 1}}),
                       doctest::Contains("bad-ids"), Error);

  // vertices may arrive in any order; edges are normalized and sorted
  const PlumbingGraph shuffled =
      plumbing::build_graph({{1, -3, 0}, {0, -2, 1}}, {{1, 0}});
  CHECK(shuffled.vertices[0].id == 0);
  CHECK(shuffled.vertices[0].weight == -2);
  CHECK(shuffled.edges == std::vector<std::pair<int, int>>{{0, 1}});
}

TEST_CASE("intersection matrices") {
  const IntersectionMatrix single = plumbing::intersection_matrix(single_vertex(-2, 0));
  CHECK(single.size() == 1);
  CHECK(single.at(0, 0) == -2);

  const PlumbingGraph a2 =
      plumbing::build_graph({{0, -2, 0}, {1, -2, 0}}, {{0, 1}});
  const IntersectionMatrix m = plumbing::intersection_matrix(a2);
  CHECK(m.at(0, 0) == -2);
  CHECK(m.at(1, 1) == -2);
  CHECK(m.at(0, 1) == 1);
  CHECK(m.at(1, 0) == 1);

  // multi-edge doubles the off-diagonal entry
  const PlumbingGraph doubled =
      plumbing::build_graph({{0, -3, 0}, {1, -3, 0}}, {{0, 1}, {0, 1}});
  CHECK(plumbing::intersection_matrix(doubled).at(0, 1) == 2);

  const IntersectionMatrix e8 = plumbing::intersection_matrix(e8_graph());
  for (int i = 0; i < 8; ++i) CHECK(e8.at(i, i) == -2);
}

TEST_CASE("determinants") {
  CHECK(plumbing::determinant(plumbing::intersection_matrix(single_vertex(-2, 0))) == -2);

  const PlumbingGraph a2 =
      plumbing::build_graph({{0, -2, 0}, {1, -2, 0}}, {{0, 1}});
  CHECK(plumbing::determinant(plumbing::intersection_matrix(a2)) == 3);

  CHECK(plumbing::determinant(plumbing::intersection_matrix(e8_graph())) == 1);

  // zero pivot forces a row swap mid-elimination
  IntersectionMatrix z(2);
  z.at(0, 0) = 0;
  z.at(0, 1) = 1;
  z.at(1, 0) = 1;
  z.at(1, 1) = 0;
  CHECK(plumbing::determinant(z) == -1);

  IntersectionMatrix singular(2);
  singular.at(0, 0) = -1;
  singular.at(0, 1) = 1;
  singular.at(1, 0) = 1;
  singular.at(1, 1) = -1;
  CHECK(plumbing::determinant(singular) == 0);
}

TEST_CASE("determinant is invariant under relabeling") {
  std::mt19937_64 rng(0xdec0de);
  for (int trial = 0; trial < 50; ++trial) {
    const PlumbingGraph g =
        selftest::random_connected_graph(rng, 2, 6, 3, -9, 9, 2);
    std::vector<int> perm(g.vertex_count());
    for (int i = 0; i < g.vertex_count(); ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CHECK(plumbing::determinant(plumbing::intersection_matrix(g)) ==
          plumbing::determinant(plumbing::intersection_matrix(permuted(g, perm))));
  }
}

TEST_CASE("negative definiteness") {
  IntersectionMatrix neg(1), pos(1);
  neg.at(0, 0) = -2;
  pos.at(0, 0) = 1;
  CHECK(plumbing::is_negative_definite(neg));
  CHECK_FALSE(plumbing::is_negative_definite(pos));
  CHECK(plumbing::is_negative_definite(plumbing::intersection_matrix(e8_graph())));

  IntersectionMatrix singular(2);  // det 0: semidefinite, not definite
  singular.at(0, 0) = -1;
  singular.at(0, 1) = 1;
  singular.at(1, 0) = 1;
  singular.at(1, 1) = -1;
  CHECK_FALSE(plumbing::is_negative_definite(singular));
  CHECK_FALSE(plumbing::is_negative_definite_cholesky(singular));

  IntersectionMatrix zero(3);
  CHECK_FALSE(plumbing::is_negative_definite(zero));
}

TEST_CASE("dual-method definiteness agreement on random symmetric matrices") {
  std::mt19937_64 rng(0x5157);
  for (int trial = 0; trial < 1000; ++trial) {
    const IntersectionMatrix m = random_symmetric(rng, 6);
    CHECK(plumbing::is_negative_definite(m) ==
          plumbing::is_negative_definite_cholesky(m));
  }
}

TEST_CASE("diagonally dominant graphs are negative definite") {
  std::mt19937_64 rng(0xd011);
  for (int trial = 0; trial < 200; ++trial) {
    PlumbingGraph g = selftest::random_connected_graph(rng, 1, 7, 3, -1, -1, 2);
    std::vector<Vertex> vertices = g.vertices;
    for (Vertex& v : vertices)
      v.weight = -(plumbing::degree(g, v.id) + 1 + static_cast<int>(rng() % 3));
    g = plumbing::build_graph(vertices, g.edges);
    CHECK(plumbing::is_negative_definite(plumbing::intersection_matrix(g)));
  }
}

TEST_CASE("canonical cycle") {
  // w_i = 2 g_i - 2 along a chain: right-hand side vanishes, K = 0
  const PlumbingGraph chain = plumbing::build_graph(
      {{0, -2, 0}, {1, -2, 0}, {2, -2, 0}}, {{0, 1}, {1, 2}});
  const plumbing::CanonicalCycle trivial = plumbing::canonical_cycle(chain);
  CHECK(trivial.integral);
  CHECK(trivial.k_squared == 0);
  for (const Rat& k : trivial.coefficients) CHECK(k == 0);

  const plumbing::CanonicalCycle third = plumbing::canonical_cycle(single_vertex(-3, 0));
  CHECK_FALSE(third.integral);
  CHECK(third.coefficients == std::vector<Rat>{make_rat(-1, 3)});

  const plumbing::CanonicalCycle elliptic = plumbing::canonical_cycle(single_vertex(-2, 1));
  CHECK(elliptic.integral);
  CHECK(elliptic.coefficients == std::vector<Rat>{Rat(-1)});
  CHECK(elliptic.k_squared == -2);

  const PlumbingGraph degenerate =
      plumbing::build_graph({{0, -1, 0}, {1, -1, 0}}, {{0, 1}});
  CHECK_THROWS_WITH_AS(plumbing::canonical_cycle(degenerate),
                       doctest::Contains("singular-intersection-form"), Error);

  // invertibility is the only requirement; definiteness is not
  const plumbing::CanonicalCycle indefinite = plumbing::canonical_cycle(single_vertex(2, 0));
  CHECK(indefinite.integral);
  CHECK(indefinite.coefficients == std::vector<Rat>{Rat(-2)});
  CHECK(indefinite.k_squared == 8);
}

TEST_CASE("adjunction residual vanishes and the two solve routes agree") {
  std::mt19937_64 rng(0xadd);
  int solved = 0;
  while (solved < 100) {
    const PlumbingGraph g = selftest::random_connected_graph(rng, 1, 6, 3, -9, 9, 3);
    const IntersectionMatrix m = plumbing::intersection_matrix(g);
    if (plumbing::determinant(m) == 0) continue;
    ++solved;
    const std::vector<Int> b = plumbing::adjunction_rhs(g);
    const plumbing::CanonicalCycle cycle = plumbing::canonical_cycle(g);

    const std::vector<Rat> lu = plumbing::solve_fraction_free_lu(m, b);
    CHECK(lu == cycle.coefficients);

    Rat k2_lu(0);
    for (int i = 0; i < m.size(); ++i)
      for (int j = 0; j < m.size(); ++j)
        k2_lu += lu[i] * Rat(m.at(i, j)) * lu[j];
    CHECK(k2_lu == cycle.k_squared);

    for (int i = 0; i < m.size(); ++i) {
      Rat residual = -Rat(b[i]);
      for (int j = 0; j < m.size(); ++j)
        residual += Rat(m.at(i, j)) * cycle.coefficients[j];
      CHECK(residual == 0);
    }
  }
}

TEST_CASE("euler characteristic of the exceptional set") {
  CHECK(plumbing::euler_char_exceptional(single_vertex(-2, 0)) == 2);
  CHECK(plumbing::euler_char_exceptional(single_vertex(-2, 1)) == 0);
  CHECK(plumbing::euler_char_exceptional(e8_graph()) == 9);
}

TEST_CASE("laufer chi") {
  CHECK(plumbing::laufer_chi(e8_graph(), 0) == 9);
  CHECK(plumbing::laufer_chi(single_vertex(-2, 1), 1) == 10);
  CHECK(plumbing::laufer_chi(single_vertex(-1, 1), 1) == 11);
  CHECK_THROWS_WITH_AS(plumbing::laufer_chi(single_vertex(-3, 0), 0),
                       doctest::Contains("not-gorenstein"), Error);
}
