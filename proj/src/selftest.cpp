#include "linkinv/selftest.hpp"

#include <algorithm>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <set>
#include <sstream>

#include "linkinv/brieskorn.hpp"
#include "linkinv/enumerate.hpp"
#include "linkinv/errors.hpp"
#include "linkinv/frames.hpp"
#include "linkinv/graph_io.hpp"
#include "linkinv/todd.hpp"

namespace linkinv::selftest {

using brieskorn::ExponentTriple;
using brieskorn::SingularityProfile;
using plumbing::IntersectionMatrix;
using plumbing::PlumbingGraph;
using plumbing::Vertex;

const char* const kFixtureE8 =
    "graph e8\n"
    "vertex 0 -2 0\n"
    "vertex 1 -2 0\n"
    "vertex 2 -2 0\n"
    "vertex 3 -2 0\n"
    "vertex 4 -2 0\n"
    "vertex 5 -2 0\n"
    "vertex 6 -2 0\n"
    "vertex 7 -2 0\n"
    "edge 0 1\n"
    "edge 0 2\n"
    "edge 0 4\n"
    "edge 2 3\n"
    "edge 4 5\n"
    "edge 5 6\n"
    "edge 6 7\n";

const char* const kFixtureA2 =
    "graph a2\n"
    "vertex 0 -2 0\n"
    "vertex 1 -2 0\n"
    "edge 0 1\n";

const char* const kFixtureSingleMinus3 =
    "graph cusp3\n"
    "vertex 0 -3 0\n";

const char* const kFixturePath2 =
    "graph path2\n"
    "vertex 0 -2 0\n"
    "vertex 1 -3 0\n"
    "edge 0 1\n";

PlumbingGraph random_connected_graph(std::mt19937_64& rng, int min_r, int max_r,
                                     int extra_edges, long long weight_lo,
                                     long long weight_hi, int genus_max) {
  const int r = min_r + static_cast<int>(rng() % (max_r - min_r + 1));
  std::vector<Vertex> vertices(r);
  const unsigned long long weight_span =
      static_cast<unsigned long long>(weight_hi - weight_lo + 1);
  for (int i = 0; i < r; ++i) {
    vertices[i].id = i;
    vertices[i].weight = weight_lo + static_cast<long long>(rng() % weight_span);
    vertices[i].genus = genus_max == 0 ? 0 : static_cast<int>(rng() % (genus_max + 1));
  }
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i < r; ++i)
    edges.emplace_back(static_cast<int>(rng() % i), i);  // random spanning tree
  if (r > 1 && extra_edges > 0) {
    const int extra = static_cast<int>(rng() % (extra_edges + 1));
    for (int e = 0; e < extra; ++e) {
      const int u = static_cast<int>(rng() % r);
      const int v = static_cast<int>(rng() % r);
      if (u != v) edges.emplace_back(u, v);
    }
  }
  return plumbing::build_graph(std::move(vertices), std::move(edges));
}

namespace {

// first-failure recorder: keeps criteria readable as straight-line checks
struct Checker {
  bool ok = true;
  std::string detail;

  void expect(bool cond, const std::string& msg) {
    if (!cond && ok) {
      ok = false;
      detail = msg;
    }
  }
};

Rat coef_of(const todd::ToddPolynomial& p, std::vector<int> exps) {
  auto it = p.terms.find(todd::ChernMonomial{std::move(exps)});
  return it == p.terms.end() ? Rat(0) : it->second;
}

std::vector<ExponentTriple> coprime_sweep() {
  std::vector<ExponentTriple> triples;
  for (long long a = 2; a <= 25; ++a)
    for (long long b = a + 1; b <= 25; ++b)
      for (long long c = b + 1; c <= 25; ++c) {
        if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
          continue;
        triples.emplace_back(a, b, c);
      }
  return triples;
}

std::string triple_str(const ExponentTriple& t) {
  std::ostringstream s;
  s << '(' << t.a() << ',' << t.b() << ',' << t.c() << ')';
  return s.str();
}

Result todd_fidelity() {
  Checker c;
  const auto t1 = todd::todd_polynomial(1);
  c.expect(t1.terms.size() == 1 && coef_of(t1, {1}) == make_rat(1, 2), "T1");
  const auto t2 = todd::todd_polynomial(2);
  c.expect(t2.terms.size() == 2 && coef_of(t2, {2, 0}) == make_rat(1, 12) &&
               coef_of(t2, {0, 1}) == make_rat(1, 12),
           "T2");
  const auto t3 = todd::todd_polynomial(3);
  c.expect(t3.terms.size() == 1 && coef_of(t3, {1, 1, 0}) == make_rat(1, 24),
           "T3");
  const auto t4 = todd::todd_polynomial(4);
  c.expect(t4.terms.size() == 5 && coef_of(t4, {0, 0, 0, 1}) == make_rat(-1, 720) &&
               coef_of(t4, {1, 0, 1, 0}) == make_rat(1, 720) &&
               coef_of(t4, {0, 2, 0, 0}) == make_rat(3, 720) &&
               coef_of(t4, {2, 1, 0, 0}) == make_rat(4, 720) &&
               coef_of(t4, {4, 0, 0, 0}) == make_rat(-1, 720),
           "T4");
  return {1, "todd-fidelity", c.ok, c.detail};
}

Result genus_normalization() {
  Checker c;
  for (int n = 1; n <= 6; ++n) {
    todd::ChernVector chern;
    Int binom = n + 1;  // C(n+1, 1)
    for (int i = 1; i <= n; ++i) {
      chern.values.push_back(binom.get_si());
      binom = binom * (n + 1 - i) / (i + 1);
    }
    c.expect(todd::evaluate_genus(todd::todd_polynomial(n), chern) == 1,
             "Todd genus of P^" + std::to_string(n));
  }
  return {2, "genus-normalization", c.ok, c.detail};
}

Result brieskorn_sweep(const std::vector<ExponentTriple>& sweep) {
  Checker c;
  for (const ExponentTriple& t : sweep) {
    const PlumbingGraph graph = brieskorn::seifert_graph(t);
    const IntersectionMatrix m = plumbing::intersection_matrix(graph);
    c.expect(plumbing::is_negative_definite(m),
             "negative definiteness at " + triple_str(t));
    c.expect(abs(plumbing::determinant(m)) == 1, "|det| = 1 at " + triple_str(t));
    c.expect(plumbing::canonical_cycle(graph).integral,
             "integral canonical cycle at " + triple_str(t));
    const SingularityProfile p = brieskorn::profile(t);
    const long long chi = plumbing::laufer_chi(graph, p.p_g);
    c.expect(chi == p.mu + 1 && chi == p.ehat,
             "Laufer chi = mu + 1 = ehat at " + triple_str(t));
  }
  return {3, "brieskorn-sweep", c.ok, c.detail};
}

Result signature_reconciliation(const std::vector<ExponentTriple>& sweep) {
  Checker c;
  for (const ExponentTriple& t : sweep) {
    const long long sigma = brieskorn::signature(t);
    c.expect(sigma == 4 * brieskorn::geometric_genus(t) - brieskorn::milnor_number(t),
             "sigma = 4 p_g - mu at " + triple_str(t));
    c.expect(sigma % 8 == 0, "sigma = 0 mod 8 at " + triple_str(t));
  }
  return {4, "signature-reconciliation", c.ok, c.detail};
}

Result named_values() {
  Checker c;
  const SingularityProfile p = brieskorn::profile(ExponentTriple(2, 3, 5));
  c.expect(p.mu == 8 && p.p_g == 0 && p.sigma == -8 && p.chi == 9 && p.ehat == 9 &&
               p.e_r == 9 && p.e_c == 9 && p.rochlin == 8 && p.casson &&
               *p.casson == -1,
           "profile(2,3,5)");
  const SingularityProfile q = brieskorn::profile(ExponentTriple(2, 3, 11));
  c.expect(q.casson && *q.casson == -2, "casson(2,3,11)");
  return {5, "named-values", c.ok, c.detail};
}

Result torsor_axioms() {
  Checker c;
  std::mt19937_64 rng(0x5eade5);
  auto draw = [&rng]() {
    return static_cast<long long>(rng() % (1u << 20)) - (1 << 19);
  };
  for (int trial = 0; trial < 10'000 && c.ok; ++trial) {
    const frames::FrameClass f{"L", draw(), frames::Basepoint::kAbstract};
    const frames::FrameClass g{"L", draw(), frames::Basepoint::kAbstract};
    const frames::FrameClass h{"L", draw(), frames::Basepoint::kAbstract};
    const long long m = draw(), n = draw();
    c.expect(frames::act(f, 0).offset == f.offset, "identity action");
    c.expect(frames::act(frames::act(f, m), n).offset ==
                 frames::act(f, m + n).offset,
             "action composition");
    c.expect(frames::diff(frames::act(f, n), f) == n, "diff of a twist");
    c.expect(frames::diff(f, g) + frames::diff(g, h) == frames::diff(f, h),
             "cocycle identity");
    const long long d = frames::diff(f, g);
    c.expect(frames::act(g, d).offset == f.offset &&
                 frames::act(g, d + 1).offset != f.offset &&
                 frames::act(g, d - 1).offset != f.offset,
             "unique transporter");
  }
  return {6, "torsor-axioms", c.ok, c.detail};
}

Result reduction_diagram() {
  Checker c;
  for (long long e = -1000; e <= 1000; ++e) {
    const frames::InvariantBundle b = frames::reduce(e);
    c.expect(b.e_c == b.e_r % 12, "e_c = e_r mod 12 at " + std::to_string(e));
    c.expect(b.e_c == static_cast<int>(mod_nonneg(e, 12)),
             "direct Z -> Z12 at " + std::to_string(e));
    c.expect(b.e_r == static_cast<int>(mod_nonneg(e, 24)),
             "Z -> Z24 at " + std::to_string(e));
  }
  int preimages[12] = {};
  for (int x = 0; x < 24; ++x) ++preimages[frames::reduce(x).e_c];
  for (int y = 0; y < 12; ++y)
    c.expect(preimages[y] == 2, "Z24 -> Z12 is 2-to-1 at " + std::to_string(y));
  return {7, "reduction-diagram", c.ok, c.detail};
}

Result e_r_route_agreement(const std::vector<ExponentTriple>& sweep) {
  Checker c;
  for (const ExponentTriple& t : sweep) {
    const SingularityProfile p = brieskorn::profile(t);
    Rat td = make_rat(p.chi);
    td /= 12;
    c.expect(frames::e_r_from_td_arf(td, 0) == frames::reduce(p.ehat).e_r,
             "e_R routes at " + triple_str(t));
  }
  return {8, "e_r-route-agreement", c.ok, c.detail};
}

Result plumbing_robustness() {
  Checker c;
  std::mt19937_64 rng(0xba4e155);
  for (int trial = 0; trial < 1000 && c.ok; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 6);
    IntersectionMatrix m(r);
    for (int i = 0; i < r; ++i)
      for (int j = i; j < r; ++j) {
        const Int entry = make_int(static_cast<long long>(rng() % 19) - 9);
        m.at(i, j) = entry;
        m.at(j, i) = entry;
      }
    c.expect(plumbing::is_negative_definite(m) ==
                 plumbing::is_negative_definite_cholesky(m),
             "definiteness dual-method at trial " + std::to_string(trial));
  }
  for (int trial = 0; trial < 200 && c.ok; ++trial) {
    const PlumbingGraph g = random_connected_graph(rng, 1, 6, 3, -9, 9, 3);
    const IntersectionMatrix m = plumbing::intersection_matrix(g);
    if (plumbing::determinant(m) == 0) continue;
    const std::vector<Int> b = plumbing::adjunction_rhs(g);
    const plumbing::CanonicalCycle cycle = plumbing::canonical_cycle(g);
    for (int i = 0; i < m.size(); ++i) {
      Rat residual = -Rat(b[i]);
      for (int j = 0; j < m.size(); ++j)
        residual += Rat(m.at(i, j)) * cycle.coefficients[j];
      c.expect(residual == 0, "adjunction residual at trial " + std::to_string(trial));
    }
  }
  return {9, "plumbing-robustness", c.ok, c.detail};
}

Result enumeration() {
  Checker c;
  const PlumbingGraph path2 = graphio::parse_string(kFixturePath2).graph;
  const auto sweep =
      enumerate::sweep_weights(path2, 3, enumerate::SweepMode::exhaustive());
  c.expect(sweep.total == 9 && sweep.negative_definite == 8,
           "path r=2, N=3 sweep is 8/9");

  const PlumbingGraph single3 = graphio::parse_string(kFixtureSingleMinus3).graph;
  const auto genera = enumerate::gorenstein_genera(single3, 7);
  c.expect(genera.solutions ==
                   std::vector<std::vector<int>>{{1}, {4}, {7}} &&
               genera.lattice_period == 3,
           "single -3 vertex genera {1,4,7}, period 3");

  std::mt19937_64 rng(0xc05e7);
  int tested = 0;
  while (tested < 100 && c.ok) {
    const PlumbingGraph g = random_connected_graph(rng, 1, 4, 2, -3, -1, 0);
    const Int det = plumbing::determinant(plumbing::intersection_matrix(g));
    if (det == 0 || abs(det) > 6) continue;
    ++tested;
    const Int abs_det = abs(det);
    const long long period = abs_det.get_si();
    const int g_max = static_cast<int>(2 * period);
    const auto sol = enumerate::gorenstein_genera(g, g_max);
    const std::set<std::vector<int>> members(sol.solutions.begin(),
                                             sol.solutions.end());
    for (const std::vector<int>& s : sol.solutions)
      for (size_t i = 0; i < s.size(); ++i) {
        std::vector<int> shifted = s;
        shifted[i] += static_cast<int>(period);
        if (shifted[i] <= g_max)
          c.expect(members.count(shifted) == 1,
                   "coset closure on random graph " + std::to_string(tested));
      }
  }
  return {10, "enumeration", c.ok, c.detail};
}

}  // namespace

std::vector<Result> run_core() {
  const std::vector<ExponentTriple> sweep = coprime_sweep();
  std::vector<Result> results;
  results.push_back(todd_fidelity());
  results.push_back(genus_normalization());
  results.push_back(brieskorn_sweep(sweep));
  results.push_back(signature_reconciliation(sweep));
  results.push_back(named_values());
  results.push_back(torsor_axioms());
  results.push_back(reduction_diagram());
  results.push_back(e_r_route_agreement(sweep));
  results.push_back(plumbing_robustness());
  results.push_back(enumeration());
  return results;
}

Result run_roundtrip() {
  Checker c;
  for (const char* fixture :
       {kFixtureE8, kFixtureA2, kFixtureSingleMinus3, kFixturePath2}) {
    const graphio::GraphDocument doc = graphio::parse_string(fixture);
    c.expect(graphio::emit(doc) == fixture, "fixture round-trip");
  }
  std::mt19937_64 rng(0x60a7);
  for (int trial = 0; trial < 100 && c.ok; ++trial) {
    graphio::GraphDocument doc;
    doc.name = "rnd" + std::to_string(trial);
    doc.graph = random_connected_graph(rng, 1, 7, 3, -9, 9, 2);
    const std::string text = graphio::emit(doc);
    const graphio::GraphDocument back = graphio::parse_string(text);
    c.expect(graphio::emit(back) == text,
             "random graph round-trip at trial " + std::to_string(trial));
  }
  return {11, "interface-roundtrip", c.ok, c.detail};
}

bool run_embedded(std::ostream& out) {
  std::vector<Result> results = run_core();
  results.push_back(run_roundtrip());
  bool all = true;
  for (const Result& r : results) {
    out << "criterion " << std::setw(2) << std::setfill('0') << r.number
        << std::setfill(' ') << ' ' << r.name << ": "
        << (r.pass ? "PASS" : "FAIL");
    if (!r.pass) out << " (" << r.detail << ")";
    out << "\n";
    all = all && r.pass;
  }
  return all;
}

}  // namespace linkinv::selftest
