#include "linkinv/plumbing.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "linkinv/errors.hpp"

namespace linkinv::plumbing {

namespace {

void divexact(Int& q, const Int& n, const Int& d) {
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
}

// Bareiss forward elimination on a copy of m (optionally augmented with b).
// Returns {det, augmented matrix after elimination}.  Row pivoting only on
// zero pivots; the exact-division property is preserved under row swaps.
struct BareissResult {
  Int det;
  std::vector<std::vector<Int>> rows;  // upper triangular in the first n cols
};

BareissResult bareiss_forward(const IntersectionMatrix& m,
                              const std::vector<Int>* rhs) {
  const int n = m.size();
  const int cols = rhs ? n + 1 : n;
  std::vector<std::vector<Int>> a(n, std::vector<Int>(cols));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);
    if (rhs) a[i][n] = (*rhs)[i];
  }

  int sign = 1;
  Int prev = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      int pivot_row = -1;
      for (int i = k + 1; i < n; ++i)
        if (a[i][k] != 0) { pivot_row = i; break; }
      if (pivot_row < 0) return {Int(0), std::move(a)};
      std::swap(a[k], a[pivot_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < cols; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        divexact(a[i][j], t, prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Int det = a[n - 1][n - 1];
  if (sign < 0) det = -det;
  return {std::move(det), std::move(a)};
}

}  // namespace

PlumbingGraph build_graph(std::vector<Vertex> vertices,
                          std::vector<std::pair<int, int>> edges) {
  const int r = static_cast<int>(vertices.size());
  if (r == 0) throw Error("bad-ids", "graph needs at least one vertex");

  std::sort(vertices.begin(), vertices.end(),
            [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  for (int i = 0; i < r; ++i) {
    if (vertices[i].id != i)
      throw Error("bad-ids", "vertex ids must be exactly 0.." +
                                 std::to_string(r - 1));
    if (vertices[i].genus < 0)
      throw Error("invalid-argument", "genus must be non-negative");
  }

  for (auto& [u, v] : edges) {
    if (u == v) throw Error("loops-forbidden", "edge joins a vertex to itself");
    if (u < 0 || u >= r || v < 0 || v >= r)
      throw Error("bad-ids", "edge endpoint out of range");
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());

  // connectivity by union-find
  std::vector<int> parent(r);
  for (int i = 0; i < r; ++i) parent[i] = i;
  auto find = [&parent](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) parent[find(u)] = find(v);
  for (int i = 0; i < r; ++i)
    if (find(i) != find(0)) throw Error("not-connected", "graph is disconnected");

  return PlumbingGraph{std::move(vertices), std::move(edges)};
}

IntersectionMatrix intersection_matrix(const PlumbingGraph& g) {
  const int r = g.vertex_count();
  IntersectionMatrix m(r);
  for (int i = 0; i < r; ++i) m.at(i, i) = make_int(g.vertices[i].weight);
  for (const auto& [u, v] : g.edges) {
    m.at(u, v) += 1;
    m.at(v, u) += 1;
  }
  return m;
}

Int determinant(const IntersectionMatrix& m) {
  if (m.size() == 0) return 1;
  return bareiss_forward(m, nullptr).det;
}

bool is_negative_definite(const IntersectionMatrix& m) {
  // Pivot-free Bareiss: after step k-1 the (k,k) entry is the k-th leading
  // principal minor, which must have sign (-1)^k.  A zero pivot means a
  // vanishing minor, which already rules definiteness out.
  const int n = m.size();
  std::vector<std::vector<Int>> a(n, std::vector<Int>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m.at(i, j);

  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    const int want = (k % 2 == 0) ? -1 : 1;  // sign of det(minor_{k+1})
    if (sgn(a[k][k]) != want) return false;
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        Int t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        divexact(a[i][j], t, prev);
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return true;
}

bool is_negative_definite_cholesky(const IntersectionMatrix& m) {
  // LDL^T of -m over the rationals; positive definite iff every pivot > 0.
  const int n = m.size();
  std::vector<std::vector<Rat>> a(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = Rat(-m.at(i, j));

  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      const Rat f = a[i][k] / a[k][k];
      for (int j = k + 1; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

std::vector<Int> adjunction_rhs(const PlumbingGraph& g) {
  std::vector<Int> b(g.vertex_count());
  for (int i = 0; i < g.vertex_count(); ++i)
    b[i] = -(make_int(g.vertices[i].weight) + 2 - 2 * g.vertices[i].genus);
  return b;
}

std::vector<Rat> solve_cramer(const IntersectionMatrix& m,
                              const std::vector<Int>& b) {
  const int n = m.size();
  assert(static_cast<int>(b.size()) == n);
  const Int det = determinant(m);
  if (det == 0)
    throw Error("singular-intersection-form", "intersection matrix is singular");

  std::vector<Rat> x(n);
  for (int col = 0; col < n; ++col) {
    IntersectionMatrix replaced = m;
    for (int i = 0; i < n; ++i) replaced.at(i, col) = b[i];
    Rat xi{determinant(replaced), det};
    xi.canonicalize();
    x[col] = xi;
  }
  return x;
}

std::vector<Rat> solve_fraction_free_lu(const IntersectionMatrix& m,
                                        const std::vector<Int>& b) {
  const int n = m.size();
  assert(static_cast<int>(b.size()) == n);
  BareissResult r = bareiss_forward(m, &b);
  if (r.det == 0)
    throw Error("singular-intersection-form", "intersection matrix is singular");

  std::vector<Rat> x(n);
  for (int i = n - 1; i >= 0; --i) {
    Rat acc{r.rows[i][n]};
    for (int j = i + 1; j < n; ++j) acc -= Rat(r.rows[i][j]) * x[j];
    acc /= Rat(r.rows[i][i]);
    x[i] = acc;
  }
  return x;
}

CanonicalCycle canonical_cycle(const PlumbingGraph& g) {
  const IntersectionMatrix m = intersection_matrix(g);
  const std::vector<Int> b = adjunction_rhs(g);
  CanonicalCycle cycle;
  cycle.coefficients = solve_cramer(m, b);

  cycle.integral = true;
  for (const Rat& k : cycle.coefficients)
    if (!is_integer(k)) { cycle.integral = false; break; }

  Rat ksq(0);
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      ksq += cycle.coefficients[i] * Rat(m.at(i, j)) * cycle.coefficients[j];
  cycle.k_squared = ksq;
  return cycle;
}

long long euler_char_exceptional(const PlumbingGraph& g) {
  long long chi = 0;
  for (const Vertex& v : g.vertices) chi += 2 - 2 * static_cast<long long>(v.genus);
  return chi - g.edge_count();
}

long long laufer_chi(const PlumbingGraph& g, long long p_g) {
  const CanonicalCycle cycle = canonical_cycle(g);
  if (!cycle.integral)
    throw Error("not-gorenstein", "canonical cycle is not integral");
  assert(is_integer(cycle.k_squared));
  assert(cycle.k_squared.get_num().fits_slong_p());
  const long long k2 = static_cast<long long>(cycle.k_squared.get_num().get_si());
  return 12 * p_g + k2 + euler_char_exceptional(g);
}

int degree(const PlumbingGraph& g, int i) {
  int d = 0;
  for (const auto& [u, v] : g.edges) d += (u == i) + (v == i);
  return d;
}

}  // namespace linkinv::plumbing
