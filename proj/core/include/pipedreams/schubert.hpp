#pragma once

#include <vector>

#include "pipedreams/pipedream.hpp"
#include "pipedreams/poly.hpp"
#include "pipedreams/weyl.hpp"

namespace pipedreams {

/// A length-additive splitting of a signed permutation into a signed part u
/// and a sign-free part v (every window entry of v positive).
struct Factorization {
  SignedPermutation u;
  SignedPermutation v;
  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// Which side the sign-free factor sits on: right means w = u v, left means
/// w = v u.
enum class FactorSide { right, left };

/// All splittings w = u v (or w = v u) with v sign-free and
/// length(u) + length(v) = length(w), lengths taken in type t.  The identity
/// factors only as (id, id); an element with no sign-free right factor other
/// than the identity yields the single pair (w, id).  Sorted by v's window.
std::vector<Factorization> factorizations(const SignedPermutation& w, GroupType t,
                                          FactorSide side = FactorSide::right);

/// Finite Schubert polynomial of a sign-free permutation: the sum of dream
/// monomials over the plain staircase base, in z variables only.
/// Context {n-1, 0, 0}.
Polynomial schubert_A(const SignedPermutation& w);

/// Truncated Schubert polynomial of the signed types: the sum of dream
/// monomials over the level-k extended base of type t (B, C, or D).
/// Context {n-1, k, 0}.
Polynomial schubert_BCD(GroupType t, const SignedPermutation& w, int k);

/// The same polynomial assembled from length-additive factorizations
/// w = u v: a type-matched Stanley symmetric polynomial in x for the signed
/// part times the finite Schubert polynomial in z for the sign-free part,
/// scaled by 2^{-negative_count(w)} in type B.  Type D sums can carry
/// half-integral terms; the assembled total must be integral and a
/// violation throws std::logic_error.  Context {n-1, k, 0}.
Polynomial schubert_via_BH(GroupType t, const SignedPermutation& w, int k);

/// Both computations of the double polynomial in z, x, and t.
struct DoubleSchubert {
  /// Sum over left splittings w = v u of the sign-flipped finite Schubert
  /// polynomial of v^{-1} in the t variables times the single polynomial
  /// of u.
  Polynomial via_factorizations;
  /// Signed sum of dream monomials over the double base, each weighted by
  /// (-1)^(t-degree).
  Polynomial via_dreams;
  /// Whether the two agree term for term.
  bool consistent = false;
};

/// Double Schubert polynomial of type t (B, C, or D) at x-level k with m
/// t-variables; both routes are returned in context {n-1, k, m}.  Values of
/// m at least n-1 only widen the context (no t variable beyond t_{n-1}
/// occurs); smaller m truncates.
DoubleSchubert double_schubert(GroupType t, const SignedPermutation& w, int k,
                               int m);

/// Outcome of one divided-difference relation check.
struct DividedDifferenceReport {
  /// Whether the letter shortens w on the acted side (right for z, left
  /// for t).
  bool length_drops = false;
  /// Whether operator output equals the expected polynomial exactly.
  bool passed = false;
  /// Operator output minus expected (zero when passed).
  Polynomial difference;
};

/// Checks one defining relation of the divided-difference operators at
/// comparison level k: applying the operator for the letter to the Schubert
/// polynomial of w must give the Schubert polynomial of the shortened
/// element, or zero when the letter lengthens w.  The input polynomial is
/// built internally at the higher level the operator consumes (k+1 for the
/// faucet letter, k+2 for the fork letter).  family z checks the right
/// action on single polynomials; family t checks the left action on double
/// polynomials, built with enough t-variables for the letter's reach.
/// Negative k throws std::invalid_argument.
DividedDifferenceReport verify_divided_difference(GroupType t,
                                                  const SignedPermutation& w,
                                                  Letter s, VarFamily family,
                                                  int k);

/// One box of the trapezoid diagram for the hyperoctahedral double sum: n
/// added rows of length n on top (row 1 topmost, each shifted one column
/// right of the row below) over a staircase of rows n-1, ..., 1.
struct EydBox {
  bool staircase = false;  ///< false: added row; true: staircase row
  int row = 0;             ///< 1-based, from the top of its region
  int offset = 0;          ///< 0-based, from the left end of the row
  friend auto operator<=>(const EydBox&, const EydBox&) = default;
};

/// Every box of the rank-n trapezoid in reading order: rows top to bottom
/// (all added rows, then the staircase), right to left within a row.
std::vector<EydBox> eyd_boxes(int n);

/// Letter carried by a box: staircase row r offset c gives s_{r+c}; an
/// added row gives s_0 at offset 0 and s_c at offset c >= 1.
Letter eyd_letter(int n, const EydBox& box);

/// Weight binomial of a box, in context {n-1, n, n-1}.  Staircase row r
/// offset c: z_r + x_{c+1}.  Added row r offset 0: x_{n+1-r}; offset c >= 1:
/// x_{n+1-r} + x_q for q = n+1-r+c when q <= n, else x_{n+1-r} - t_{q-n}.
Polynomial eyd_weight(int n, const EydBox& box);

/// A marked subset of trapezoid boxes whose letters, in reading order,
/// multiply to a group element one letter at a time without ever shortening
/// it.
struct ExtendedEYD {
  int n = 0;
  std::vector<EydBox> marked;  ///< in reading order
  friend bool operator==(const ExtendedEYD&, const ExtendedEYD&) = default;
};

/// The reading word of a marked diagram.
std::vector<Letter> eyd_word(const ExtendedEYD& d);

/// Product of the box weights, in context {n-1, n, n-1}.
Polynomial eyd_weight_product(const ExtendedEYD& d);

/// All marked diagrams whose reading word is a reduced word for w, in
/// reading-order lexicographic order.
std::vector<ExtendedEYD> enumerate_eyds(const SignedPermutation& w);

/// Sum of weight products over all marked diagrams for w: the type-B double
/// polynomial at x-level n with n-1 t-variables.  Context {n-1, n, n-1}.
Polynomial kirillov_naruse_B(const SignedPermutation& w);

}  // namespace pipedreams
