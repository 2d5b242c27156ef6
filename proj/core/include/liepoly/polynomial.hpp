#ifndef LIEPOLY_POLYNOMIAL_HPP
#define LIEPOLY_POLYNOMIAL_HPP

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include <liepoly/rational.hpp>

namespace liepoly {

using Monomial = std::vector<int>; // exponent vector

// Monomial order attached to a level vector (a_1..a_n): compare modified
// total degrees sum a_i k_i first, ties broken lexicographically on the
// exponent vectors. This grading reproduces the published fourteen-monomial
// chain u2^2 > u1^3 > u1^2 u3 > ... > 1 for the (6,10,6) level vector.
struct LevelOrder {
  std::vector<long long> level;

  long long degree(const Monomial& m) const {
    long long d = 0;
    for (size_t i = 0; i < m.size(); ++i) d += level[i] * m[i];
    return d;
  }
  // <0, 0, >0 like a three-way compare of m1 vs m2.
  int cmp(const Monomial& m1, const Monomial& m2) const {
    long long d1 = degree(m1), d2 = degree(m2);
    if (d1 != d2) return d1 < d2 ? -1 : 1;
    for (size_t i = 0; i < m1.size(); ++i)
      if (m1[i] != m2[i]) return m1[i] < m2[i] ? -1 : 1;
    return 0;
  }
  bool less(const Monomial& m1, const Monomial& m2) const { return cmp(m1, m2) < 0; }
};

// Block order for product groups: factor blocks compared left to right, each
// under its own level order.
struct BlockLevelOrder {
  std::vector<LevelOrder> blocks;
  std::vector<std::pair<int, int>> ranges;

  int cmp(const Monomial& m1, const Monomial& m2) const;
  bool less(const Monomial& m1, const Monomial& m2) const { return cmp(m1, m2) < 0; }
};

// Sparse multivariate polynomial with exact rational coefficients. Zero
// coefficients are never stored.
class MultiPoly {
public:
  MultiPoly() : arity_(0) {}
  explicit MultiPoly(int arity) : arity_(arity) {}

  static MultiPoly constant(int arity, const Rat& c);
  static MultiPoly variable(int arity, int index, int power = 1);
  static MultiPoly monomial(Monomial m, const Rat& c);

  int arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rat>& terms() const { return terms_; }

  const Rat& coeff(const Monomial& m) const;
  void add_term(const Monomial& m, const Rat& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const Rat& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rat& c) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

  bool has_integer_coefficients() const;

  // Largest monomial under the given comparison (nullptr-like when zero).
  template <typename Order>
  const std::pair<const Monomial, Rat>* leading(const Order& order) const {
    const std::pair<const Monomial, Rat>* best = nullptr;
    for (const auto& t : terms_)
      if (!best || order.less(best->first, t.first)) best = &t;
    return best;
  }

  // Substitute polynomials for the variables (exact composition).
  MultiPoly compose(const std::vector<MultiPoly>& args) const;

  // Map exponent vectors, e.g. to permute or embed variables.
  MultiPoly map_monomials(int new_arity,
                          const std::function<Monomial(const Monomial&)>& f) const;

  std::complex<double> eval(const std::vector<std::complex<double>>& u) const;
  double eval_real(const std::vector<double>& u) const;

  // Rendering like "24 + 8*u1 + 6*u2 - 3*u3^2 + u1*u2", terms in ascending
  // order.  Variable names default to u1..un.
  std::string str(const std::vector<std::string>& names = {}) const;

private:
  int arity_;
  std::map<Monomial, Rat> terms_;
};

} // namespace liepoly

#endif
