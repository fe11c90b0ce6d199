// Weighted plumbing graphs (Gamma, w, g) and the exact linear algebra on
// their intersection matrices: determinants, negative definiteness, and the
// canonical cycle solving the adjunction system K.E_i = -E_i^2 - 2 + 2g_i.
//
// All verdicts (definiteness, integrality) are decided in exact integer or
// rational arithmetic; nothing here touches floating point.

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "linkinv/rational.hpp"

namespace linkinv::plumbing {

struct Vertex {
  int id = 0;
  long long weight = 0;  // self-intersection w_i
  int genus = 0;         // g_i >= 0
};

// Connected loop-free multigraph with ids 0..r-1.  Edges are stored
// normalized (smaller id first) and sorted; multi-edges are repeated pairs.
struct PlumbingGraph {
  std::vector<Vertex> vertices;               // sorted by id
  std::vector<std::pair<int, int>> edges;

  int vertex_count() const { return static_cast<int>(vertices.size()); }
  int edge_count() const { return static_cast<int>(edges.size()); }
};

// Symmetric integer matrix: diagonal w_i, off-diagonal the edge counts.
class IntersectionMatrix {
 public:
  IntersectionMatrix() = default;
  explicit IntersectionMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

  int size() const { return n_; }
  Int& at(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
  const Int& at(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

 private:
  int n_ = 0;
  std::vector<Int> a_;
};

struct CanonicalCycle {
  std::vector<Rat> coefficients;  // k_i, exact solution of I k = b
  bool integral = false;          // every k_i in Z
  Rat k_squared;                  // k^T I k
};

// Validates invariants (no loops, contiguous ids, connected, genera >= 0).
// Throws "loops-forbidden", "bad-ids", "not-connected", "invalid-argument".
PlumbingGraph build_graph(std::vector<Vertex> vertices,
                          std::vector<std::pair<int, int>> edges);

IntersectionMatrix intersection_matrix(const PlumbingGraph& g);

// Exact determinant by fraction-free (Bareiss) elimination with row pivoting.
Int determinant(const IntersectionMatrix& m);

// Leading-principal-minor criterion: (-1)^k det(minor_k) > 0 for all k.
bool is_negative_definite(const IntersectionMatrix& m);

// Independent verdict: exact rational LDL^T of -m, all pivots positive.
bool is_negative_definite_cholesky(const IntersectionMatrix& m);

// Right-hand side of the adjunction system: b_i = -(w_i + 2 - 2 g_i).
std::vector<Int> adjunction_rhs(const PlumbingGraph& g);

// Exact rational solve of m x = b by Cramer's rule (Bareiss determinants).
// Throws "singular-intersection-form" when det m = 0.
std::vector<Rat> solve_cramer(const IntersectionMatrix& m,
                              const std::vector<Int>& b);

// Same system, second route: fraction-free forward elimination plus rational
// back-substitution.  Must agree with solve_cramer exactly (tested).
std::vector<Rat> solve_fraction_free_lu(const IntersectionMatrix& m,
                                        const std::vector<Int>& b);

// Canonical cycle of the adjunction system, with integrality verdict and
// k^2.  Throws "singular-intersection-form" when the form is degenerate.
CanonicalCycle canonical_cycle(const PlumbingGraph& g);

// Topological Euler characteristic of the exceptional configuration:
// sum_i (2 - 2 g_i) - #edges.
long long euler_char_exceptional(const PlumbingGraph& g);

// Laufer-type smoothing Euler characteristic 12 p_g + K^2 + chi_top(E).
// Requires an integral canonical cycle; throws "not-gorenstein" otherwise.
long long laufer_chi(const PlumbingGraph& g, long long p_g);

// Edge-endpoint count at vertex i (multi-edges count once per copy).
int degree(const PlumbingGraph& g, int i);

}  // namespace linkinv::plumbing
