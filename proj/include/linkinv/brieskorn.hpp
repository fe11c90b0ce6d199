// Classical invariants of Brieskorn-Pham surface singularities
// x^a + y^b + z^c = 0: Milnor number, geometric genus, Milnor-fiber
// signature, and the star-shaped resolution graph of the link.
//
// Orientation convention: the one in which the Milnor-fiber intersection
// form of (2,3,5) is negative definite (sigma = -8), matching the
// negative-definite resolution lattices used throughout.  The Casson and
// Rochlin values inherit this sign.

#pragma once

#include <optional>
#include <vector>

#include "linkinv/plumbing.hpp"

namespace linkinv::brieskorn {

// Exponents a <= b <= c, each >= 2 (all invariants are symmetric in them).
class ExponentTriple {
 public:
  ExponentTriple(long long a, long long b, long long c);

  long long a() const { return a_; }
  long long b() const { return b_; }
  long long c() const { return c_; }
  bool pairwise_coprime() const;

 private:
  long long a_, b_, c_;
};

struct SingularityProfile {
  long long mu = 0;       // Milnor number (a-1)(b-1)(c-1)
  long long p_g = 0;      // geometric genus
  long long sigma = 0;    // signature of the Milnor fiber
  long long chi = 0;      // Euler characteristic mu + 1
  long long ehat = 0;     // integral e-invariant, = chi
  int e_r = 0;            // ehat mod 24, representative 0..23
  int e_c = 0;            // ehat mod 12, representative 0..11
  int rochlin = 0;        // sigma mod 16, representative 0..15
  std::optional<long long> casson;  // sigma / 8, homology spheres only
};

long long milnor_number(const ExponentTriple& t);

// #{(i,j,k) >= 1 : i/a + j/b + k/c < 1}, exact rational comparisons.
long long geometric_genus(const ExponentTriple& t);

// Brieskorn-Pham lattice count: over 1 <= i < a, 1 <= j < b, 1 <= k < c and
// s = i/a + j/b + k/c, points with s in (0,1) u (2,3) count +1, points with
// s in (1,2) count -1, integer s counts 0.
long long signature(const ExponentTriple& t);

// Hirzebruch-Jung expansion p/q = k1 - 1/(k2 - 1/(...)), all k_i >= 2.
// Requires p > q >= 1 and gcd(p, q) = 1; throws "invalid-argument".
std::vector<long long> neg_continued_fraction(long long p, long long q);

// Star-shaped plumbing graph of the link, all genera zero: central vertex
// -b0 and three Hirzebruch-Jung arms -k1..-ks from a_i/beta_i, where
// (b0, beta_i) is the unique solution of
//     b0*(abc) - sum_i beta_i*(abc)/a_i = 1,  0 < beta_i < a_i.
// The output is negative definite with |det| = 1, integral canonical cycle,
// and laufer_chi(graph, p_g) = mu + 1 (validated by the test suite).
// Throws "not-homology-sphere" unless a, b, c are pairwise coprime.
plumbing::PlumbingGraph seifert_graph(const ExponentTriple& t);

SingularityProfile profile(const ExponentTriple& t);

// signature / 8.  Throws "not-homology-sphere" for non-coprime exponents
// and "internal-inconsistency" if the signature is not divisible by 8.
long long casson(const ExponentTriple& t);

}  // namespace linkinv::brieskorn
