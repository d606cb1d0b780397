#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pipedreams/poly.hpp"
#include "pipedreams/weyl.hpp"

namespace pipedreams {

/// Tile states. The first three route a single strand and carry no letter;
/// the last four are "significant": they carry letters and variable weight.
///
///   Elbow           two quarter-turn joints: left->top and bottom->right
///   ElbowUp         single joint bottom->right (left boundary tiles and
///                   unfauceted corner spots)
///   SingleElbow     single joint left->top (row-terminating cap tiles)
///   Cross           left->right and bottom->top
///   ElbowWithFaucet bottom->right joint whose strand picks up a sign change
///   CrossWithFaucet cross where both strands pick up a sign change
///   ElbowTwoFaucets elbow whose two joints each pick up a sign change
///
/// The numeric order below defines the canonical ordering of dreams:
/// dreams over the same base compare lexicographically by these values in
/// reading order.
enum class CellContent {
  Elbow = 0,
  ElbowUp = 1,
  SingleElbow = 2,
  Cross = 3,
  ElbowWithFaucet = 4,
  CrossWithFaucet = 5,
  ElbowTwoFaucets = 6,
};

/// Stable lowercase identifier ("elbow", "cross_with_faucet", ...).
const char* cell_content_name(CellContent c);

/// Single-character picture used by the ASCII renderer:
/// '.' Elbow/ElbowUp, '+' Cross, 'o' ElbowWithFaucet, '@' CrossWithFaucet,
/// '%' ElbowTwoFaucets.  SingleElbow caps are scenery and render as blanks.
char cell_content_glyph(CellContent c);

/// Where a tile sits structurally.
enum class CellKind {
  Boundary,  ///< fixed ElbowUp tile on the left staircase-shaped border
  Sea,       ///< fixed Elbow tile between the structured regions
  Cap,       ///< fixed SingleElbow tile closing a row on the right
  Box,       ///< fillable letter-carrying box
};

/// Which structured region a Box belongs to.
enum class CellRegion {
  Staircase,  ///< lower-left staircase rows, weight z_i by local row
  Block,      ///< one of the k Gamma-blocks, weight x_j (blocks counted
              ///< from the bottom)
  Northeast,  ///< upper-right staircase of a double base, weight -t_c by
              ///< local column
};

/// What a Box may contain.
enum class CellRole {
  Plain,       ///< {Elbow, Cross}; a Cross emits the box letter
  FaucetSpot,  ///< {ElbowUp, ElbowWithFaucet}; the faucet emits s0
  SignCorner,  ///< {Elbow, Cross, CrossWithFaucet, ElbowTwoFaucets};
               ///< Cross emits s1, CrossWithFaucet emits s1hat,
               ///< ElbowTwoFaucets emits the commuting pair {s1, s1hat}
};

/// Variable attached to a box; exponents land in the z/x/t parts of the
/// weight monomial.  Kind t means the variable enters with a minus sign:
/// a dream contributes (-1)^(t-degree) times its monomial.
struct VariableTag {
  enum class Kind { z, x, t } kind = Kind::z;
  int index = 0;  ///< 1-based
};

/// Key identifying a box across bases with different block counts.
struct BoxKey {
  int region = 0;  ///< 0 staircase, 1 block, 2 northeast
  int block = 0;   ///< block number, 0 outside blocks
  int dr = 0;      ///< row offset inside the region piece
  int dc = 0;      ///< column offset inside the region piece
  friend auto operator<=>(const BoxKey&, const BoxKey&) = default;
};

/// One tile of a base.
struct BaseCell {
  int row = 0;  ///< 1-based, top row is 1
  int col = 0;  ///< 1-based
  CellKind kind = CellKind::Sea;
  // The fields below are meaningful for kind == Box only.
  CellRegion region = CellRegion::Staircase;
  CellRole role = CellRole::Plain;
  int block = 0;                 ///< Gamma-block number (1..k), else 0
  std::optional<Letter> letter;  ///< letter carried by a Cross here
  VariableTag var;
  BoxKey key;
};

class Base;
using BasePtr = std::shared_ptr<const Base>;

/// The fixed board a pipe dream is drawn on: a staircase region whose row i
/// hosts strand i, optionally k Gamma-blocks above it, and for double bases
/// an extra staircase in the upper-right corner.  All tiles are listed in
/// reading order: row by row from the top, right to left within a row.
class Base {
 public:
  GroupType type() const { return type_; }
  int n() const { return n_; }
  int k() const { return k_; }
  bool is_double() const { return is_double_; }

  /// All tiles in reading order.
  const std::vector<BaseCell>& cells() const { return cells_; }
  /// Indices into cells() of the fillable boxes, in reading order.
  const std::vector<std::size_t>& boxes() const { return boxes_; }
  /// Total number of rows.
  int rows() const { return rows_; }

  /// Index into cells() of the tile at (row, col), or npos.
  std::size_t cell_at(int row, int col) const;
  /// Ordinal in boxes() of the box at (row, col); throws if absent.
  std::size_t box_ordinal_at(int row, int col) const;

  /// Columns of the n top-edge exit positions, left to right.
  const std::vector<int>& exit_cols() const { return exit_cols_; }
  /// Entry point (row, col) at whose left edge strand i enters (1-based i).
  std::pair<int, int> entry(int i) const;

  /// Contents allowed in a box of the given role under this base's group
  /// type, in canonical (ascending) order.
  std::vector<CellContent> allowed_contents(CellRole role) const;
  /// Default (letterless) content for a role: Elbow or ElbowUp.
  static CellContent default_content(CellRole role);

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

  friend BasePtr build_base(GroupType type, int n, int k, bool is_double);

 private:
  Base() = default;

  GroupType type_ = GroupType::A;
  int n_ = 0;
  int k_ = 0;
  bool is_double_ = false;
  int rows_ = 0;
  std::vector<BaseCell> cells_;
  std::vector<std::size_t> boxes_;
  std::vector<std::size_t> grid_;  // (row-1)*cols_span_ + (col-1) -> index
  int cols_span_ = 0;
  std::vector<int> exit_cols_;
  int entry_row0_ = 0;  // row of strand 1's entry
  int entry_col_ = 0;
};

/// Builds the board for the given group type, strand count n >= 1 and
/// Gamma-block count k >= 0.  Type A has no Gamma-blocks (k is ignored)
/// and no sign tiles.  Type D requires n >= 2.  A double base adds an
/// upper-right staircase whose crosses carry the variables -t_c.
BasePtr build_base(GroupType type, int n, int k, bool is_double = false);

/// A filling of the boxes of a base.  Immutable; copies are cheap (the base
/// is shared).
class PipeDream {
 public:
  /// contents[i] fills boxes()[i]; every entry must be allowed for the
  /// box's role.
  PipeDream(BasePtr base, std::vector<CellContent> contents);

  const Base& base() const { return *base_; }
  const BasePtr& base_ptr() const { return base_; }
  const std::vector<CellContent>& contents() const { return contents_; }
  CellContent content(std::size_t box_ordinal) const;
  /// Copy of this dream with one box changed.
  PipeDream with_content(std::size_t box_ordinal, CellContent c) const;

  friend bool operator==(const PipeDream& a, const PipeDream& b);

 private:
  BasePtr base_;
  std::vector<CellContent> contents_;
};

/// All boxes at their letterless default (Elbow / ElbowUp).
PipeDream empty_dream(BasePtr base);

/// Canonical order: base tag (type, n, k, double), then contents
/// lexicographically in reading order.
bool dream_less(const PipeDream& a, const PipeDream& b);

/// The word of a dream, read right to left within rows, top row first.
/// An ElbowTwoFaucets box emits the commuting pair s1 s1hat, recorded in
/// Word::marked so that both readings are recoverable.  The word splits
/// into a prefix from the upper-right staircase (t_len letters, double
/// bases only), a middle from the Gamma-blocks (x_len) and a suffix from
/// the staircase (z_len).
struct ReadWord {
  Word word;
  std::size_t t_len = 0;
  std::size_t x_len = 0;
  std::size_t z_len = 0;
};
ReadWord read_word(const PipeDream& d);

/// Product of the word; defined for non-reduced dreams as well.
SignedPermutation shape(const PipeDream& d);

/// True iff the word length equals the length of the shape.
bool is_reduced(const PipeDream& d);

/// Reducedness decided by following the strands instead of the word:
/// A: no two strands cross twice; B/C: additionally each strand carries at
/// most one faucet and strands crossing twice have exactly one faucet
/// between the crossings on exactly one of them; D: none of the eight
/// forbidden two-meeting patterns occurs.  Agrees with is_reduced().
bool is_reduced_by_strands(const PipeDream& d);

/// Weight: product over boxes of var^w where w is 1 for Cross,
/// ElbowWithFaucet and CrossWithFaucet, 2 for ElbowTwoFaucets.  Exponents
/// of t-variables are recorded unsigned; callers account for the sign
/// (-1)^(t-degree).
Monomial monomial(const PipeDream& d);

/// Window computed by tracing each strand through the tiles: strand i ends
/// at exit e with f faucets and yields value (-1)^f * e at position i.
/// Equals shape() on reduced dreams.
std::vector<int> trace_strands(const PipeDream& d);

/// All reduced dreams of the given shape on the k-block base, in canonical
/// order.  Honors the PIPEDREAMS_THREADS environment variable (subtree
/// split with deterministic merge).
std::vector<PipeDream> enumerate_dreams(GroupType type,
                                        const SignedPermutation& w, int k,
                                        bool is_double = false);

/// A shape-preserving local replacement moving significant content from
/// box a down to box b (row of a strictly above row of b).  The ten kinds,
/// written (content of a, content of b) before -> after with
/// E=Elbow, U=ElbowUp, X=Cross, F=ElbowWithFaucet, C=CrossWithFaucet,
/// T=ElbowTwoFaucets:
///   1 (X,E)->(E,X)   2 (C,E)->(E,X)   3 (X,E)->(E,C)
///   4 (C,E)->(E,C)   5 (F,U)->(U,F)   6 (T,E)->(C,X)
///   7 (T,E)->(X,C)   8 (C,X)->(E,T)   9 (X,C)->(E,T)
///  10 (T,E)->(X,X)
struct AdmissibleMove {
  std::size_t a = 0;  ///< box ordinal of the upper cell
  std::size_t b = 0;  ///< box ordinal of the lower cell
  int kind = 0;       ///< 1..10
  friend bool operator==(const AdmissibleMove&, const AdmissibleMove&) =
      default;
};

/// All moves applicable to d: the pattern matches, the results are allowed
/// contents and the shape is preserved.  The weight monomial never
/// decreases in dominance order under a move, and the significant content
/// always shifts strictly downward.  Sorted by (a, b, kind).
std::vector<AdmissibleMove> admissible_moves(const PipeDream& d);

/// Applies a move after validating it; throws std::invalid_argument on a
/// pattern/eligibility mismatch or if the shape would change.
PipeDream apply_move(const PipeDream& d, const AdmissibleMove& m);

/// The unique move-minimal dream of the given shape, built from the signed
/// Lehmer code:
///   A: row i of the staircase gets L_i left-adjusted crosses (k = 0);
///   B: block j gets a fauceted corner and crosses at letters 1..N_j-1;
///   C: as B but the faucet sits atop the vertical part and the corner
///      stays an ElbowUp;
///   D: with M = (N_j - 1, trailing zero dropped), block j gets M_j
///      crosses starting at the corner, the corner fauceted iff j is odd.
/// Block count: s(w) for B/C, the length of M for D, 0 for A.
PipeDream bottom_dream(GroupType type, const SignedPermutation& w);

struct ReductionResult {
  std::vector<AdmissibleMove> moves;
  PipeDream result;
};

/// Deterministic downward reduction of a reduced dream; ends at the bottom
/// dream of its shape (embedded into the input's block count).
/// Type A walks the classical policy: repeatedly take the lowest, then
/// leftmost elbow-cross fragment and push its cross down a ladder.  The
/// other types greedily apply the first move under the ordering
/// (b-row descending, b-col ascending, a-row descending, a-col ascending,
/// kind).
ReductionResult reduce_to_bottom(const PipeDream& d);

/// Same dream on a base with new_k Gamma-blocks.  Growing adds empty
/// blocks; shrinking requires the dropped blocks to be empty.
PipeDream embed_dream(const PipeDream& d, int new_k);

/// Fixed-width picture, one row per line: box glyphs per content, blanks
/// for boundary, sea and cap tiles; staircase rows carry "i|" gutters.
std::string to_ascii(const PipeDream& d);

/// ytableau-style LaTeX: scenery as \none, boxes framed with a content
/// symbol.
std::string to_latex(const PipeDream& d);

/// Compact JSON: {"type","n","k","double","cells":[{"block","row","col",
/// "content"},...]} with the boxes in reading order.
std::string to_json(const PipeDream& d);

}  // namespace pipedreams
