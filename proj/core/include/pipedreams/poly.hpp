#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "pipedreams/weyl.hpp"

namespace pipedreams {

using Rational = boost::multiprecision::cpp_rational;

// A power product in the three variable families z, x, t.  Exponent vectors
// are stored with trailing zeros stripped so that equal monomials compare
// equal regardless of how they were built; indices are 1-based throughout.
class Monomial {
 public:
  Monomial() = default;
  Monomial(std::vector<int> z, std::vector<int> x, std::vector<int> t);

  static Monomial one() { return {}; }
  static Monomial z_var(int i, int exp = 1);
  static Monomial x_var(int i, int exp = 1);
  static Monomial t_var(int i, int exp = 1);

  const std::vector<int>& z() const { return z_; }
  const std::vector<int>& x() const { return x_; }
  const std::vector<int>& t() const { return t_; }

  // Exponent of the i-th variable of a family; zero beyond the stored width.
  int z_exp(int i) const;
  int x_exp(int i) const;
  int t_exp(int i) const;

  int degree() const;
  bool is_one() const { return z_.empty() && x_.empty() && t_.empty(); }

  Monomial operator*(const Monomial& other) const;

  // Storage order (plain lexicographic on the three vectors).  This is the
  // container key order, not the mathematical term order; see dominance_less.
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<int> z_;
  std::vector<int> x_;
  std::vector<int> t_;
};

// The term order used for leading monomials: exponent tuples are compared
// lexicographically reading the variables in the sequence
//   z_high, ..., z_2, z_1, x_1, x_2, ..., t_1, t_2, ...
// and the larger exponent at the first differing slot wins.  Reading the z
// family from the top index down makes the comparison independent of how
// many z variables are in scope.
bool dominance_less(const Monomial& a, const Monomial& b);

struct BottomOrder {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return dominance_less(a, b);
  }
};

// Declared variable widths: z_1..z_n, x_1..x_k, t_1..t_m.  The x and t widths
// are genuine truncation levels (higher-index variables have been set to
// zero), so polynomials only compare equal, add, or multiply when their
// contexts match exactly.
struct Context {
  int n = 0;
  int k = 0;
  int m = 0;
  friend bool operator==(const Context&, const Context&) = default;
};

// Sparse exact-rational polynomial in z_1..z_n, x_1..x_k, t_1..t_m.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Context ctx) : ctx_(ctx) {}

  static Polynomial zero(Context ctx) { return Polynomial(ctx); }
  static Polynomial constant(const Rational& c, Context ctx);
  static Polynomial term(const Monomial& mono, const Rational& c, Context ctx);

  const Context& context() const { return ctx_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coefficient(const Monomial& mono) const;

  // Adds c * mono, erasing the entry if the result cancels.  Throws
  // std::invalid_argument if the monomial uses a variable outside the
  // context.
  Polynomial& add_term(const Monomial& mono, const Rational& c);

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator*(const Polynomial& other) const;
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial lhs, const Polynomial& rhs) {
    lhs += rhs;
    return lhs;
  }
  friend Polynomial operator-(Polynomial lhs, const Polynomial& rhs) {
    lhs -= rhs;
    return lhs;
  }
  friend Polynomial operator*(const Rational& c, Polynomial p) {
    p *= c;
    return p;
  }
  friend Polynomial operator*(Polynomial p, const Rational& c) {
    p *= c;
    return p;
  }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  // Substitutes x_j = 0 for j > new_k and lowers the declared level.
  Polynomial truncate_x(int new_k) const;
  // Substitutes t_j = 0 for j > new_m.
  Polynomial truncate_t(int new_m) const;
  // Re-declares the context without changing any term.  Widening n is always
  // sound; widening k or m is an explicit escape hatch (a level-k polynomial
  // is NOT the level-(k+1) truncation of the same series) and is therefore
  // only done when the caller takes responsibility, e.g. stability checks.
  Polynomial with_context(Context ctx) const;

 private:
  Context ctx_;
  std::map<Monomial, Rational> terms_;
};

// x_1^d + ... + x_k^d.
Polynomial power_sum(int d, Context ctx);
Polynomial power_sum(int d, int k);

// Which variable family a ring automorphism or divided difference acts on.
enum class VarFamily { z, t };

// The ring automorphism attached to a generator letter.
//
// Simple letters swap adjacent variables of the family and preserve the
// context.  The sign-node letters substitute into the x list and therefore
// lower the declared x level: the caller supplies the input at level k+1
// (s_0-type, one inserted slot) or k+2 (s_1hat-type, two inserted slots) and
// receives the result at level k.
//   z family:  s_0: z_1 -> -z_1 and (x_1, x_2, ...) -> (z_1, x_1, ...)
//              s_1hat: (z_1, z_2) -> (-z_2, -z_1), x list gains (z_1, z_2)
//   t family:  s_0: t_1 -> -t_1 and the x list gains -t_1
//              s_1hat: (t_1, t_2) -> (-t_2, -t_1), x list gains (-t_1, -t_2)
// Throws std::invalid_argument when the swap index exceeds the declared
// width, and std::runtime_error when the input level leaves no room for the
// insertion.
Polynomial act_generator(const Polynomial& f, VarFamily family, Letter s);

// Divided difference attached to a generator letter:
//   z family:  simple i: (f - s_i f) / (z_i - z_{i+1})
//              s_0:      (f - s_0 f) / (-2 z_1), doubled for type B
//              s_1hat:   (f - s_1hat f) / (-z_1 - z_2)
//   t family:  simple i: (f - s_i f) / (t_{i+1} - t_i)
//              s_0:      (f - s_0 f) / (2 t_1), halved denominator for type B
//              s_1hat:   (f - s_1hat f) / (t_1 + t_2)
// The group type selects the sign-node normalization (B or C) and rejects
// letters the type does not have.  For the inserting letters the input is
// truncated to the output level before subtracting, so the quotient is exact
// whenever the input is a valid truncation; otherwise this throws
// std::runtime_error("non-divisible numerator").
Polynomial divided_difference(const Polynomial& f, VarFamily family, Letter s,
                              GroupType type);

// The maximal monomial of a nonzero polynomial under dominance_less.
Monomial leading_monomial(const Polynomial& f);

// Plain-text rendering, e.g. "x1 + x2" or "1/3*z1*x1^3".  Terms are listed
// from the leading monomial down.
std::string to_text(const Polynomial& f);
// LaTeX fragment in the same order, e.g. "\frac{1}{3} z_1 x_1^{3}".
std::string to_latex(const Polynomial& f);
// Compact JSON object {"terms":[{"c":"1/3","z":[...],"x":[...],"t":[...]}]}
// with fixed-width exponent arrays matching the context and terms in the
// same canonical order.
std::string to_json(const Polynomial& f);

}  // namespace pipedreams
