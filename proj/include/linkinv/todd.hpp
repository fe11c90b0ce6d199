// Todd multiplicative sequence in exact rational arithmetic.
//
// The generating series is Q(x) = x / (1 - e^{-x}).  The grade-k Todd
// polynomial T_k(c_1, ..., c_k) is obtained by expanding the product
// Q(x_1) * ... * Q(x_m) with m >= k formal roots, keeping the homogeneous
// part of total degree k, and rewriting that symmetric polynomial in the
// elementary symmetric functions e_j, which are then renamed c_j.  The
// result does not depend on m as long as m >= k.
//
// Low grades, for reference:
//   T_1 = 1/2 c1
//   T_2 = 1/12 (c2 + c1^2)
//   T_3 = 1/24 (c2 c1)
//   T_4 = 1/720 (-c4 + c3 c1 + 3 c2^2 + 4 c2 c1^2 - c1^4)

#pragma once

#include <map>
#include <string>
#include <vector>

#include "linkinv/rational.hpp"

namespace linkinv::todd {

// Truncated power series; coefficients[i] is the coefficient of x^i.
struct RationalSeries {
  std::vector<Rat> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
};

// c1^{e1} * c2^{e2} * ... * ck^{ek}.  The weighted degree sum(i * e_i)
// always equals the grade of the polynomial the monomial belongs to.
struct ChernMonomial {
  std::vector<int> exponents;

  int weighted_degree() const {
    int d = 0;
    for (size_t i = 0; i < exponents.size(); ++i)
      d += static_cast<int>(i + 1) * exponents[i];
    return d;
  }

  bool operator<(const ChernMonomial& o) const { return exponents < o.exponents; }
  bool operator==(const ChernMonomial& o) const { return exponents == o.exponents; }
};

// A graded polynomial in the formal Chern symbols.  Zero coefficients are
// never stored.
struct ToddPolynomial {
  int grade = 0;
  std::map<ChernMonomial, Rat> terms;
};

// Integer Chern numbers c_1[X], ..., c_k[X] against the orientation cycle.
struct ChernVector {
  std::vector<long long> values;
};

inline constexpr int kDefaultMaxGrade = 8;

// Bernoulli number B_k in the unsigned convention (B_1 = 1/6, B_2 = 1/30,
// B_3 = 1/42, ...): the coefficient of x^{2k} in Q(x) is
// (-1)^{k-1} B_k / (2k)!.  Throws "invalid-argument" for k < 1.
Rat bernoulli(int k);

// Q(x) truncated at the given order, computed by exact series inversion of
// (1 - e^{-x}) / x.
RationalSeries todd_series(int order);

// The grade-k member of the Todd sequence.  num_vars = 0 means "use k
// formal roots"; any m >= k gives the same polynomial (tested).  Throws
// "unsupported-grade" when k exceeds max_grade, "invalid-argument" for
// k < 1 or num_vars < k.
ToddPolynomial todd_polynomial(int grade, int num_vars = 0,
                               int max_grade = kDefaultMaxGrade);

// Substitute integer Chern numbers; exact rational result.  Throws
// "invalid-argument" when the vector length differs from the grade.
Rat evaluate_genus(const ToddPolynomial& poly, const ChernVector& chern);

// Grade-2 Todd genus in relative Chern numbers: (c1^2 + c2) / 12.
Rat todd_relative_surface(long long c1_sq, long long c2);

// Canonical serialization: terms sorted by reverse-lexicographic exponent
// sequence (compare from the last exponent, smaller first), each term as
// coef*c1^e1*c2^e2... with unit exponents and zero-exponent factors
// omitted, no spaces.  Example: T_2 -> "1/12*c1^2+1/12*c2".
std::string to_string(const ToddPolynomial& poly);

}  // namespace linkinv::todd
