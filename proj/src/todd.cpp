#include "linkinv/todd.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "linkinv/errors.hpp"

namespace linkinv::todd {

namespace {

// Multivariate polynomial in a fixed number of formal roots, keyed by
// exponent vectors.  std::map's lexicographic vector compare doubles as the
// monomial order used by the symmetric reduction below.
using RootPoly = std::map<std::vector<int>, Rat>;

int total_degree(const std::vector<int>& mono) {
  int d = 0;
  for (int e : mono) d += e;
  return d;
}

void add_term(RootPoly& p, const std::vector<int>& mono, const Rat& coef) {
  if (coef == 0) return;
  auto it = p.find(mono);
  if (it == p.end()) {
    p.emplace(mono, coef);
  } else {
    it->second += coef;
    if (it->second == 0) p.erase(it);
  }
}

RootPoly multiply(const RootPoly& a, const RootPoly& b, int max_degree) {
  RootPoly out;
  for (const auto& [ma, ca] : a) {
    const int da = total_degree(ma);
    for (const auto& [mb, cb] : b) {
      if (da + total_degree(mb) > max_degree) continue;
      std::vector<int> m(ma.size());
      for (size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      add_term(out, m, ca * cb);
    }
  }
  return out;
}

// Elementary symmetric polynomial e_j in num_vars variables.
RootPoly elementary_symmetric(int j, int num_vars) {
  RootPoly out;
  std::vector<int> picks(j);
  // Walk all j-subsets of the variable set.
  for (int i = 0; i < j; ++i) picks[i] = i;
  while (true) {
    std::vector<int> mono(num_vars, 0);
    for (int v : picks) mono[v] = 1;
    out.emplace(std::move(mono), Rat(1));
    int i = j - 1;
    while (i >= 0 && picks[i] == num_vars - j + i) --i;
    if (i < 0) break;
    ++picks[i];
    for (int t = i + 1; t < j; ++t) picks[t] = picks[t - 1] + 1;
  }
  return out;
}

// Signed Bernoulli numbers B_n (B_1 = -1/2 flavour) via the classical
// recurrence sum_{j=0}^{n} C(n+1, j) B_j = 0.
std::vector<Rat> signed_bernoulli(int up_to) {
  std::vector<Rat> b;
  b.reserve(up_to + 1);
  b.emplace_back(1);
  for (int n = 1; n <= up_to; ++n) {
    Rat acc(0);
    Int binom = 1;  // C(n+1, 0)
    for (int j = 0; j < n; ++j) {
      acc += Rat(binom) * b[j];
      binom = binom * (n + 1 - j) / (j + 1);
    }
    acc /= n + 1;
    b.push_back(-acc);
  }
  return b;
}

}  // namespace

Rat bernoulli(int k) {
  if (k < 1) throw Error("invalid-argument", "bernoulli index must be >= 1");
  auto b = signed_bernoulli(2 * k);
  Rat value = b[2 * k];
  if (k % 2 == 0) value = -value;  // B_k = (-1)^{k-1} B_{2k} (signed)
  return value;
}

RationalSeries todd_series(int order) {
  if (order < 0) throw Error("invalid-argument", "series order must be >= 0");
  // (1 - e^{-x}) / x = sum_{n>=0} (-1)^n x^n / (n+1)!
  std::vector<Rat> denom(order + 1);
  Int fact = 1;
  for (int n = 0; n <= order; ++n) {
    fact *= n + 1;
    Rat c(1);
    c /= Rat(fact);
    if (n % 2 == 1) c = -c;
    denom[n] = c;
  }
  // reciprocal series: q_0 = 1, q_n = -sum_{i=1}^{n} denom_i q_{n-i}
  RationalSeries q;
  q.coefficients.assign(order + 1, Rat(0));
  q.coefficients[0] = 1;
  for (int n = 1; n <= order; ++n) {
    Rat acc(0);
    for (int i = 1; i <= n; ++i) acc += denom[i] * q.coefficients[n - i];
    q.coefficients[n] = -acc;
  }
  return q;
}

ToddPolynomial todd_polynomial(int grade, int num_vars, int max_grade) {
  if (grade < 1) throw Error("invalid-argument", "grade must be >= 1");
  if (grade > max_grade)
    throw Error("unsupported-grade",
                "grade " + std::to_string(grade) + " exceeds maximum " +
                    std::to_string(max_grade));
  const int m = num_vars == 0 ? grade : num_vars;
  if (m < grade)
    throw Error("invalid-argument", "need at least as many roots as the grade");

  const RationalSeries q = todd_series(grade);

  // prod_{i=1}^{m} Q(x_i), truncated at total degree `grade`
  RootPoly product;
  product.emplace(std::vector<int>(m, 0), Rat(1));
  for (int var = 0; var < m; ++var) {
    RootPoly next;
    for (const auto& [mono, coef] : product) {
      const int room = grade - total_degree(mono);
      for (int d = 0; d <= room; ++d) {
        if (q.coefficients[d] == 0) continue;
        std::vector<int> shifted = mono;
        shifted[var] += d;
        add_term(next, shifted, coef * q.coefficients[d]);
      }
    }
    product = std::move(next);
  }

  // homogeneous part of degree `grade`
  RootPoly sym;
  for (const auto& [mono, coef] : product)
    if (total_degree(mono) == grade) sym.emplace(mono, coef);

  // Rewrite in elementary symmetric polynomials by iterative elimination:
  // the lex-leading monomial x^lambda of a symmetric polynomial has
  // non-increasing lambda, and prod_j e_j^{lambda_j - lambda_{j+1}} has the
  // same leading monomial with coefficient 1.
  ToddPolynomial result;
  result.grade = grade;
  while (!sym.empty()) {
    const auto lead = std::prev(sym.end());
    const std::vector<int> lambda = lead->first;
    const Rat coef = lead->second;
    for (size_t i = 0; i + 1 < lambda.size(); ++i)
      assert(lambda[i] >= lambda[i + 1] && "leading term of a symmetric poly");

    std::vector<int> chern_exp(grade, 0);
    RootPoly expansion;
    expansion.emplace(std::vector<int>(m, 0), Rat(1));
    for (int j = 0; j < m; ++j) {
      const int next = j + 1 < m ? lambda[j + 1] : 0;
      const int power = lambda[j] - next;
      if (power == 0) continue;
      assert(j + 1 <= grade);
      chern_exp[j] = power;
      const RootPoly ej = elementary_symmetric(j + 1, m);
      for (int t = 0; t < power; ++t) expansion = multiply(expansion, ej, grade);
    }

    for (const auto& [mono, c] : expansion) add_term(sym, mono, -coef * c);
    result.terms.emplace(ChernMonomial{std::move(chern_exp)}, coef);
  }
  return result;
}

Rat evaluate_genus(const ToddPolynomial& poly, const ChernVector& chern) {
  if (static_cast<int>(chern.values.size()) != poly.grade)
    throw Error("invalid-argument",
                "Chern vector length must equal the polynomial grade");
  Rat total(0);
  for (const auto& [mono, coef] : poly.terms) {
    Int factor = 1;
    for (size_t i = 0; i < mono.exponents.size(); ++i) {
      if (mono.exponents[i] == 0) continue;
      Int p;
      mpz_pow_ui(p.get_mpz_t(), make_int(chern.values[i]).get_mpz_t(),
                 static_cast<unsigned long>(mono.exponents[i]));
      factor *= p;
    }
    total += coef * Rat(factor);
  }
  return total;
}

Rat todd_relative_surface(long long c1_sq, long long c2) {
  Rat r(make_int(c1_sq) + make_int(c2));
  r /= 12;
  return r;
}

std::string to_string(const ToddPolynomial& poly) {
  // reverse-lexicographic term order: compare exponent sequences from the
  // last index, smaller exponent first
  std::vector<const std::pair<const ChernMonomial, Rat>*> terms;
  terms.reserve(poly.terms.size());
  for (const auto& t : poly.terms) terms.push_back(&t);
  std::sort(terms.begin(), terms.end(), [](const auto* a, const auto* b) {
    const auto& ea = a->first.exponents;
    const auto& eb = b->first.exponents;
    return std::lexicographical_compare(ea.rbegin(), ea.rend(), eb.rbegin(),
                                        eb.rend());
  });

  std::ostringstream out;
  bool first = true;
  for (const auto* term : terms) {
    const Rat& coef = term->second;
    if (!first && coef >= 0) out << '+';
    first = false;
    out << coef.get_str();
    for (size_t i = 0; i < term->first.exponents.size(); ++i) {
      const int e = term->first.exponents[i];
      if (e == 0) continue;
      out << "*c" << i + 1;
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

}  // namespace linkinv::todd
