#pragma once

// Classical Weyl groups as signed permutations: window arithmetic, generator
// words, length, reduced-word enumeration, Lehmer codes and Grassmannian
// recognition for the series A, B, C, D.

#include <cassert>
#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pipedreams {

// B and C share the same group of signed permutations; the tag selects the
// polynomial normalization downstream. D is the even-sign subgroup.
enum class GroupType { A, B, C, D };

const char* group_type_name(GroupType t);
GroupType group_type_from_name(std::string_view name);

inline bool allows_s0(GroupType t) { return t == GroupType::B || t == GroupType::C; }
inline bool allows_s1hat(GroupType t) { return t == GroupType::D; }

// A generator letter: s_0 (sign change, types B/C), s_1hat (type D), or a
// simple transposition s_i, i >= 1 (all types).
//
// Letters carry a total "rank" used wherever words are ordered:
//   s_0 -> 0,  s_1hat -> 1,  s_i -> i + 1,
// i.e. s_0 < s_1hat < s_1 < s_2 < ...  Distinct from rank is the height()
// used in peak comparisons, where s_1hat and s_1 are equal.
class Letter {
 public:
  static Letter s0() { return Letter(0); }
  static Letter s1hat() { return Letter(1); }
  static Letter simple(int i) {
    assert(i >= 1);
    return Letter(i + 1);
  }
  static Letter from_rank(int r) {
    assert(r >= 0);
    return Letter(r);
  }

  bool is_s0() const { return rank_ == 0; }
  bool is_s1hat() const { return rank_ == 1; }
  bool is_simple() const { return rank_ >= 2; }
  int simple_index() const {
    assert(is_simple());
    return rank_ - 1;
  }
  // Height in the order  s_0 < s_1hat = s_1 < s_2 < ... used for peaks.
  int height() const { return rank_ <= 1 ? rank_ : rank_ - 1; }
  int rank() const { return rank_; }

  std::string str() const;  // "s0", "s1^", "s2", ...

  auto operator<=>(const Letter&) const = default;

 private:
  explicit Letter(int rank) : rank_(rank) {}
  int rank_;
};

// A word in the generators.  `marked` lists the start indices of commuting
// {s_1, s_1hat} pairs that were emitted together by a single cell (type D);
// such a pair may be read in either order without changing the element, the
// length, or admissibility, so all operations below use `letters` directly.
struct Word {
  std::vector<Letter> letters;
  std::vector<std::size_t> marked;

  std::size_t size() const { return letters.size(); }
  bool operator==(const Word&) const = default;
};

std::string word_str(const Word& a);
std::string word_str(const std::vector<Letter>& letters);

// All 2^{|marked|} letter sequences obtained by flipping marked pairs,
// sorted lexicographically by rank.
std::vector<std::vector<Letter>> word_readings(const Word& a);

// True if s is a generator of the rank-n group of type t.
bool letter_valid(Letter s, GroupType t, int n);

// The generator list of the rank-n group of type t, in rank order.
std::vector<Letter> generators(GroupType t, int n);

// A signed permutation w of {-n..-1, 1..n} with w(-i) = -w(i), stored as the
// window (w(1), ..., w(n)).  Ordinary permutations are the sign-free case.
class SignedPermutation {
 public:
  explicit SignedPermutation(std::vector<int> window);
  static SignedPermutation identity(int n);

  int n() const { return static_cast<int>(window_.size()); }
  const std::vector<int>& window() const { return window_; }

  // w(i) for 1 <= |i| <= n.
  int map(int i) const {
    assert(i != 0 && i >= -n() && i <= n());
    return i > 0 ? window_[i - 1] : -window_[-i - 1];
  }

  int negative_count() const;               // s(w), the number of negative window entries
  bool is_identity() const;
  bool has_negative() const { return negative_count() > 0; }
  bool valid_for(GroupType t) const;        // A: no signs; D: even sign count

  SignedPermutation inverse() const;

  bool operator==(const SignedPermutation&) const = default;
  // Lexicographic on the window; a deterministic order for sets and maps.
  auto operator<=>(const SignedPermutation&) const = default;

 private:
  std::vector<int> window_;
};

// (u * v)(i) = u(v(i)).
SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v);

// The generator s as an element of the rank-n group.
SignedPermutation letter_permutation(Letter s, int n);

enum class Side { left, right };

// w * s (right) or s * w (left).  Right multiplication acts on window
// positions: s_i swaps entries i, i+1; s_0 negates entry 1; s_1hat maps
// (w_1, w_2) to (-w_2, -w_1).  Left multiplication acts on values.
SignedPermutation apply_letter(const SignedPermutation& w, Letter s, Side side);

// Coxeter length.  Closed formulas (validated against a breadth-first Cayley
// oracle in the tests):
//   A, B, C:  inv(w) + sum_{w(i)<0} |w(i)|       (the sum vanishes on A)
//   D:        inv(w) + sum_{w(i)<0} (|w(i)| - 1)
// where inv(w) = #{i < j : w(i) > w(j)} over the window.
int length(const SignedPermutation& w, GroupType t);

// The product of a letter sequence in the rank-n group.
SignedPermutation word_product(const std::vector<Letter>& letters, int n);
SignedPermutation word_product(const Word& a, int n);

// True iff |a| equals the length of the product of a.
bool is_reduced_word(const Word& a, GroupType t, int n);
bool is_reduced_word(const std::vector<Letter>& letters, GroupType t, int n);

// The complete set R(w) of reduced words, sorted lexicographically by letter
// rank.  Computed by depth-first descent over right descents, memoized per
// element.
std::vector<std::vector<Letter>> reduced_words(const SignedPermutation& w, GroupType t);

// Right descents: generators s with length(w s) < length(w).
std::vector<Letter> right_descents(const SignedPermutation& w, GroupType t);

// L_i(w) = #{j > i : w(i) > w(j)} over window positions, plus N(w): the
// decreasing list of positive values whose preimage under w is negative
// (equivalently |w(i)| over the negative window entries).  (L, N) is a
// complete invariant.
struct LehmerCode {
  std::vector<int> L;
  std::vector<int> N;
  bool operator==(const LehmerCode&) const = default;
};

LehmerCode lehmer_code(const SignedPermutation& w);

// Reconstruct the unique w with the given code: position i receives the
// (L_i + 1)-th smallest value still available, where the available values
// are -v for v in N and +v otherwise.
SignedPermutation from_lehmer_code(const LehmerCode& code, int n);

// Grassmannian data.
//   A:    unique descent at k;  lambda_i = w(k+1-i) - (k+1-i), trailing zeros
//         stripped.  Absent when the descent is not unique (including id).
//   B, C: window strictly increasing;  mu = (|w(1)|, ..., |w(s)|), the strict
//         partition of negated values.
//   D:    window strictly increasing and even sign count;  mu' = mu - (1,..,1)
//         with a trailing zero dropped.
struct GrassmannianData {
  int descent = 0;             // k for type A; 0 for the signed types
  std::vector<int> partition;  // lambda (A) or mu / mu' (B/C / D)
  bool operator==(const GrassmannianData&) const = default;
};

std::optional<GrassmannianData> grassmannian_data(const SignedPermutation& w, GroupType t);

// Every element of the rank-n group of type t, sorted by window.
std::vector<SignedPermutation> all_elements(GroupType t, int n);

// One-line notation: space-separated integers.  Negative entries print with
// a leading minus; the parser also accepts a trailing "~" as the sign marker
// ("3 -2 1" == "3 2~ 1").
SignedPermutation parse_one_line(std::string_view text);
std::string to_one_line(const SignedPermutation& w);

}  // namespace pipedreams
