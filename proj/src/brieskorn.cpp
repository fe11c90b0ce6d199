#include "linkinv/brieskorn.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>

#include "linkinv/errors.hpp"
#include "linkinv/rational.hpp"

namespace linkinv::brieskorn {

using plumbing::PlumbingGraph;
using plumbing::Vertex;

ExponentTriple::ExponentTriple(long long a, long long b, long long c)
    : a_(a), b_(b), c_(c) {
  if (a_ < 2 || b_ < 2 || c_ < 2)
    throw Error("invalid-argument", "exponents must all be >= 2");
  if (a_ > b_) std::swap(a_, b_);
  if (b_ > c_) std::swap(b_, c_);
  if (a_ > b_) std::swap(a_, b_);
}

bool ExponentTriple::pairwise_coprime() const {
  return std::gcd(a_, b_) == 1 && std::gcd(a_, c_) == 1 && std::gcd(b_, c_) == 1;
}

long long milnor_number(const ExponentTriple& t) {
  return (t.a() - 1) * (t.b() - 1) * (t.c() - 1);
}

long long geometric_genus(const ExponentTriple& t) {
  // i/a + j/b + k/c < 1  <=>  i*bc + j*ac + k*ab < abc
  const Int bc = make_int(t.b()) * make_int(t.c());
  const Int ac = make_int(t.a()) * make_int(t.c());
  const Int ab = make_int(t.a()) * make_int(t.b());
  const Int abc = ab * make_int(t.c());
  long long count = 0;
  for (long long i = 1; i < t.a(); ++i) {
    const Int si = make_int(i) * bc;
    if (si + ac + ab >= abc) break;  // j = k = 1 already too big; i only grows
    for (long long j = 1; j < t.b(); ++j) {
      const Int sij = si + make_int(j) * ac;
      if (sij + ab >= abc) break;
      for (long long k = 1; k < t.c(); ++k) {
        if (sij + make_int(k) * ab >= abc) break;
        ++count;
      }
    }
  }
  return count;
}

long long signature(const ExponentTriple& t) {
  const Int bc = make_int(t.b()) * make_int(t.c());
  const Int ac = make_int(t.a()) * make_int(t.c());
  const Int ab = make_int(t.a()) * make_int(t.b());
  const Int abc = ab * make_int(t.c());
  const Int abc2 = 2 * abc;
  long long sig = 0;
  for (long long i = 1; i < t.a(); ++i)
    for (long long j = 1; j < t.b(); ++j)
      for (long long k = 1; k < t.c(); ++k) {
        const Int s = make_int(i) * bc + make_int(j) * ac + make_int(k) * ab;  // = (i/a+j/b+k/c) * abc
        if (s < abc)
          ++sig;
        else if (s > abc && s < abc2)
          --sig;
        else if (s > abc2)
          ++sig;  // s < 3*abc always, since i/a, j/b, k/c < 1
      }
  return sig;
}

std::vector<long long> neg_continued_fraction(long long p, long long q) {
  if (q < 1 || p <= q)
    throw Error("invalid-argument", "need p > q >= 1");
  if (std::gcd(p, q) != 1)
    throw Error("invalid-argument", "p and q must be coprime");
  std::vector<long long> terms;
  while (q > 0) {
    const long long k = (p + q - 1) / q;  // ceil(p/q)
    terms.push_back(k);
    const long long next_q = k * q - p;
    p = q;
    q = next_q;
  }
  return terms;
}

namespace {

long long mod_inverse(long long value, long long modulus) {
  // extended Euclid; gcd(value, modulus) = 1 is the caller's contract
  long long r0 = modulus, r1 = ((value % modulus) + modulus) % modulus;
  long long s0 = 0, s1 = 1;
  while (r1 != 0) {
    const long long q = r0 / r1;
    r0 -= q * r1;
    std::swap(r0, r1);
    s0 -= q * s1;
    std::swap(s0, s1);
  }
  assert(r0 == 1);
  return ((s0 % modulus) + modulus) % modulus;
}

}  // namespace

plumbing::PlumbingGraph seifert_graph(const ExponentTriple& t) {
  if (!t.pairwise_coprime())
    throw Error("not-homology-sphere", "exponents must be pairwise coprime");

  const long long exps[3] = {t.a(), t.b(), t.c()};
  const long long big = exps[0] * exps[1] * exps[2];

  // beta_i solves (big/a_i) * beta_i = -1 (mod a_i), 0 < beta_i < a_i; then
  // b0 = (1 + sum beta_i * big/a_i) / big is a positive integer by CRT.
  long long beta[3];
  long long numerator = 1;
  for (int i = 0; i < 3; ++i) {
    const long long cofactor = big / exps[i];
    beta[i] = (exps[i] - mod_inverse(cofactor, exps[i])) % exps[i];
    assert(beta[i] > 0 && beta[i] < exps[i]);
    numerator += beta[i] * cofactor;
  }
  assert(numerator % big == 0);
  const long long b0 = numerator / big;

  std::vector<Vertex> vertices;
  std::vector<std::pair<int, int>> edges;
  vertices.push_back({0, -b0, 0});
  for (int i = 0; i < 3; ++i) {
    int prev = 0;
    for (const long long k : neg_continued_fraction(exps[i], beta[i])) {
      const int id = static_cast<int>(vertices.size());
      vertices.push_back({id, -k, 0});
      edges.emplace_back(prev, id);
      prev = id;
    }
  }
  return plumbing::build_graph(std::move(vertices), std::move(edges));
}

SingularityProfile profile(const ExponentTriple& t) {
  SingularityProfile p;
  p.mu = milnor_number(t);
  p.p_g = geometric_genus(t);
  p.sigma = signature(t);
  p.chi = p.mu + 1;
  p.ehat = p.chi;
  p.e_r = static_cast<int>(mod_nonneg(p.ehat, 24));
  p.e_c = static_cast<int>(mod_nonneg(p.ehat, 12));
  p.rochlin = static_cast<int>(mod_nonneg(p.sigma, 16));
  if (t.pairwise_coprime()) p.casson = casson(t);
  return p;
}

long long casson(const ExponentTriple& t) {
  if (!t.pairwise_coprime())
    throw Error("not-homology-sphere", "exponents must be pairwise coprime");
  const long long sigma = signature(t);
  if (sigma % 8 != 0)
    throw Error("internal-inconsistency",
                "signature of a Brieskorn sphere must be divisible by 8");
  return sigma / 8;
}

}  // namespace linkinv::brieskorn
