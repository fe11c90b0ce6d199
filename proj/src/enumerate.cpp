#include "linkinv/enumerate.hpp"

#include <cassert>
#include <random>
#include <string>

#include "linkinv/errors.hpp"

namespace linkinv::enumerate {

using plumbing::IntersectionMatrix;
using plumbing::PlumbingGraph;

namespace {

IntersectionMatrix matrix_with_weights(const PlumbingGraph& shape,
                                       const std::vector<long long>& weights) {
  const int r = shape.vertex_count();
  IntersectionMatrix m(r);
  for (int i = 0; i < r; ++i) m.at(i, i) = make_int(weights[i]);
  for (const auto& [u, v] : shape.edges) {
    m.at(u, v) += 1;
    m.at(v, u) += 1;
  }
  return m;
}

}  // namespace

WeightSweepReport sweep_weights(const PlumbingGraph& topology,
                                long long weight_bound, SweepMode mode) {
  if (weight_bound < 1)
    throw Error("invalid-argument", "weight bound must be >= 1");
  const int r = topology.vertex_count();

  WeightSweepReport report;
  report.r = r;
  report.weight_bound = weight_bound;
  report.mode = mode;

  if (!mode.sampled) {
    Int box = 1;
    for (int i = 0; i < r; ++i) box *= make_int(weight_bound);
    if (box > kExhaustiveGuard)
      throw Error("too-large-use-sampling",
                  "weight box " + box.get_str() +
                      " exceeds the exhaustive guard; use sampled mode");
    std::vector<long long> w(r, -1);
    while (true) {
      ++report.total;
      if (plumbing::is_negative_definite(matrix_with_weights(topology, w)))
        ++report.negative_definite;
      int pos = 0;  // odometer over {-N..-1}^r
      while (pos < r) {
        if (w[pos] > -weight_bound) {
          --w[pos];
          break;
        }
        w[pos] = -1;
        ++pos;
      }
      if (pos == r) break;
    }
    return report;
  }

  if (mode.samples == 0)
    throw Error("invalid-argument", "sampled mode needs a positive sample count");
  // raw modulo draw rather than uniform_int_distribution: bit-reproducible
  // across standard libraries
  std::mt19937_64 rng(mode.seed);
  std::vector<long long> w(r);
  for (std::uint64_t s = 0; s < mode.samples; ++s) {
    for (int i = 0; i < r; ++i)
      w[i] = -1 - static_cast<long long>(rng() % static_cast<std::uint64_t>(weight_bound));
    ++report.total;
    if (plumbing::is_negative_definite(matrix_with_weights(topology, w)))
      ++report.negative_definite;
  }
  return report;
}

GenusSolutionSet gorenstein_genera(const PlumbingGraph& graph, int g_max) {
  if (g_max < 0) throw Error("invalid-argument", "g_max must be >= 0");
  const int r = graph.vertex_count();
  const IntersectionMatrix m = plumbing::intersection_matrix(graph);
  const Int det = plumbing::determinant(m);
  if (det == 0)
    throw Error("singular-intersection-form", "intersection matrix is singular");

  // adj(I) column by column: x solving I x = e_j gives adj column det * x.
  std::vector<std::vector<Int>> adj_cols(r, std::vector<Int>(r));
  for (int j = 0; j < r; ++j) {
    std::vector<Int> e(r, 0);
    e[j] = 1;
    const std::vector<Rat> x = plumbing::solve_fraction_free_lu(m, e);
    for (int i = 0; i < r; ++i) {
      Rat entry = x[i] * Rat(det);
      assert(is_integer(entry));
      adj_cols[j][i] = entry.get_num();
    }
  }

  GenusSolutionSet out;
  out.g_max = g_max;
  out.lattice_period = abs(det);

  // Lexicographic odometer over {0..g_max}^r; integrality of k = adj*b/det
  // is a componentwise divisibility test.
  std::vector<int> g(r, 0);
  std::vector<Int> y(r);
  while (true) {
    for (int i = 0; i < r; ++i) y[i] = 0;
    for (int j = 0; j < r; ++j) {
      const Int b_j = -(make_int(graph.vertices[j].weight) + 2 - 2 * g[j]);
      for (int i = 0; i < r; ++i) y[i] += adj_cols[j][i] * b_j;
    }
    bool integral = true;
    for (int i = 0; i < r; ++i)
      if (y[i] % det != 0) { integral = false; break; }
    if (integral) out.solutions.push_back(g);

    int pos = r - 1;  // increment from the right: solutions emerge sorted
    while (pos >= 0) {
      if (g[pos] < g_max) {
        ++g[pos];
        break;
      }
      g[pos] = 0;
      --pos;
    }
    if (pos < 0) break;
  }

  // re-verify each solution through the full solver before emitting
  for (const std::vector<int>& sol : out.solutions) {
    PlumbingGraph regraded = graph;
    for (int i = 0; i < r; ++i) regraded.vertices[i].genus = sol[i];
    if (!plumbing::canonical_cycle(regraded).integral)
      throw Error("internal-inconsistency",
                  "divisibility screen and exact solver disagree");
  }
  return out;
}

}  // namespace linkinv::enumerate
