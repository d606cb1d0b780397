#pragma once

#include <string>
#include <vector>

#include "pipedreams/pipedream.hpp"
#include "pipedreams/poly.hpp"
#include "pipedreams/weyl.hpp"

namespace pipedreams {

/// Interior positions i (1-based, 2 <= i <= |a|-1) where the letter heights
/// rise then fall: height(a_{i-1}) < height(a_i) > height(a_{i+1}).  Heights
/// place the two fork letters of the even orthogonal diagram at the same
/// level, so neither one peaks over the other.
std::vector<int> peak_set(const std::vector<Letter>& a);

/// A weakly decreasing variable assignment x_{j_1} >= ... >= x_{j_l} for the
/// letters of a word, recorded as its exponent monomial together with the
/// number of distinct variables used.
struct XAdmissible {
  Monomial monomial;
  int distinct = 0;
  friend bool operator==(const XAdmissible&, const XAdmissible&) = default;
};

/// All weakly decreasing sequences j_1 >= ... >= j_l with entries in 1..k
/// such that a triple repeat j_{i-1} = j_i = j_{i+1} never straddles a peak
/// of the word.  The empty word yields the single empty assignment.  Sorted
/// by monomial.
std::vector<XAdmissible> x_admissible(const std::vector<Letter>& a, int k);

/// All weakly increasing sequences j_1 <= ... <= j_l with 1 <= j_i <= b_i
/// (b_i the index of the i-th simple letter) where a repeat j_i = j_{i+1}
/// forces the strict descent b_i > b_{i+1}.  Only simple letters are
/// allowed.  Sorted.
std::vector<Monomial> z_admissible(const std::vector<Letter>& b);

/// Sum of 2^{distinct} x^alpha over all reduced words of w (hyperoctahedral
/// group, letters s_0, s_1, ...) and all their admissible assignments with
/// variables up to x_k.  Context {0, k, 0}.
Polynomial stanley_F(const SignedPermutation& w, int k);

/// The even-orthogonal variant: sum of 2^{distinct - o} x^alpha, where o
/// counts the occurrences of the two fork letters in the word.  Requires an
/// even number of sign changes.  Context {0, k, 0}.
Polynomial stanley_E(const SignedPermutation& w, int k);

/// A semistandard Young tableau: left-adjusted rows of weakly decreasing
/// lengths, entries positive, weakly increasing along rows and strictly
/// increasing down columns.  Rows are validated on construction.
class SSYTableau {
 public:
  explicit SSYTableau(std::vector<std::vector<int>> rows);

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;
  int max_entry() const;
  /// Product of z_i over all entries i.
  Monomial weight() const;

  friend bool operator==(const SSYTableau&, const SSYTableau&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// A circled shifted Young tableau: row i of a strict partition shape is
/// indented i - 1 boxes, and entries come from the ordered alphabet
/// 1' < 1 < 2' < 2 < ..., encoded as integers 2i-1 (circled i') and 2i
/// (plain i).  Entries weakly increase along rows and down columns, a row
/// never repeats a circled value and a column never repeats a plain value.
class ShiftedTableau {
 public:
  explicit ShiftedTableau(std::vector<std::vector<int>> rows);

  static int circled(int i) { return 2 * i - 1; }
  static int plain(int i) { return 2 * i; }
  static int value(int entry) { return (entry + 1) / 2; }
  static bool is_circled(int entry) { return entry % 2 == 1; }

  const std::vector<std::vector<int>>& rows() const { return rows_; }
  std::vector<int> shape() const;
  int max_value() const;
  /// True when the leftmost entry of every row is plain.
  bool is_primed() const;
  /// Product of x_i over all entries with value i, circled or not.
  Monomial weight() const;

  friend bool operator==(const ShiftedTableau&, const ShiftedTableau&) =
      default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// Every semistandard tableau of shape lambda with entries at most k, in
/// row-major lexicographic order.
std::vector<SSYTableau> all_ssyt(const std::vector<int>& lambda, int k);

/// Every circled shifted tableau of strict shape mu with values at most k;
/// primed_only keeps the tableaux whose row-leading entries are plain.
std::vector<ShiftedTableau> all_shifted(const std::vector<int>& mu, int k,
                                        bool primed_only);

/// Schur polynomial s_lambda(z_1..z_k): the sum of weights over all
/// semistandard tableaux of shape lambda with entries at most k.
/// Context {k, 0, 0}.
Polynomial schur(const std::vector<int>& lambda, int k);

/// P- and Q-Schur polynomials in x_1..x_k: sums of weights over circled
/// shifted tableaux of the strict shape mu with values at most k; P ranges
/// over the tableaux whose row-leading entries are plain, Q over all of
/// them, so Q_mu = 2^{len(mu)} P_mu.  Context {0, k, 0}.
Polynomial schur_P(const std::vector<int>& mu, int k);
Polynomial schur_Q(const std::vector<int>& mu, int k);

/// Tableau from a reduced dream on a plain staircase base whose shape has a
/// single descent k.  Pushing the crosses down to the bottom dream slides
/// them along anti-diagonals; the box a cross ends in receives the entry
/// k + 1 - r where r is the row the cross started in.  Weight-preserving
/// after reversing the staircase variables: weight(T) under
/// (z_k, ..., z_1) equals the dream monomial.
SSYTableau dream_to_ssyt(const PipeDream& d);

/// Inverse of dream_to_ssyt: the entry v in tableau box (row j, column c)
/// lifts the bottom cross of that box back to base row k + 1 - v along its
/// anti-diagonal.
PipeDream ssyt_to_dream(const SSYTableau& t, const SignedPermutation& w);

/// Tableau from a reduced dream on a one- or two-faucet block base whose
/// shape has a strictly increasing window.  Block i of the bottom dream
/// holds row i of the shifted shape; the entry records the block each
/// significant element started in, circled when it started in the vertical
/// part of its block (corners count as horizontal).  The image lies in the
/// primed subset exactly for the single-faucet base.  Weight-preserving.
ShiftedTableau dream_to_shifted(const PipeDream& d);

/// Inverse of dream_to_shifted on a base with k blocks: the entry in box
/// (i, j) places a significant element in the prescribed block and part, on
/// the anti-diagonal of the bottom element for that box.
PipeDream shifted_to_dream(GroupType type, const ShiftedTableau& t,
                           const SignedPermutation& w, int k);

/// Compact JSON: {"shape":[...],"rows":[[...]]} with circled entries
/// rendered as strings like "3'".
std::string to_json(const SSYTableau& t);
std::string to_json(const ShiftedTableau& t);

/// ytableau environments; shifted rows are indented with \none and circled
/// entries render as i^\circ.
std::string to_latex(const SSYTableau& t);
std::string to_latex(const ShiftedTableau& t);

}  // namespace pipedreams
