#include "pipedreams/pipedream.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cstdlib>
#include <future>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace pipedreams {

namespace {

std::string pos_str(int row, int col) {
  return "(" + std::to_string(row) + ", " + std::to_string(col) + ")";
}

}  // namespace

const char* cell_content_name(CellContent c) {
  switch (c) {
    case CellContent::Elbow:
      return "elbow";
    case CellContent::ElbowUp:
      return "elbow_up";
    case CellContent::SingleElbow:
      return "single_elbow";
    case CellContent::Cross:
      return "cross";
    case CellContent::ElbowWithFaucet:
      return "elbow_with_faucet";
    case CellContent::CrossWithFaucet:
      return "cross_with_faucet";
    case CellContent::ElbowTwoFaucets:
      return "elbow_two_faucets";
  }
  throw std::logic_error("unknown cell content");
}

char cell_content_glyph(CellContent c) {
  switch (c) {
    case CellContent::Elbow:
    case CellContent::ElbowUp:
      return '.';
    case CellContent::SingleElbow:
      return ' ';
    case CellContent::Cross:
      return '+';
    case CellContent::ElbowWithFaucet:
      return 'o';
    case CellContent::CrossWithFaucet:
      return '@';
    case CellContent::ElbowTwoFaucets:
      return '%';
  }
  throw std::logic_error("unknown cell content");
}

std::size_t Base::cell_at(int row, int col) const {
  if (row < 1 || row > rows_ || col < 1 || col > cols_span_) return npos;
  return grid_[static_cast<std::size_t>(row - 1) * cols_span_ + (col - 1)];
}

std::size_t Base::box_ordinal_at(int row, int col) const {
  std::size_t idx = cell_at(row, col);
  if (idx == npos || cells_[idx].kind != CellKind::Box)
    throw std::invalid_argument("no box at " + pos_str(row, col));
  auto it = std::lower_bound(boxes_.begin(), boxes_.end(), idx);
  assert(it != boxes_.end() && *it == idx);
  return static_cast<std::size_t>(it - boxes_.begin());
}

std::pair<int, int> Base::entry(int i) const {
  if (i < 1 || i > n_)
    throw std::invalid_argument("strand index out of range");
  return {entry_row0_ + i - 1, entry_col_};
}

std::vector<CellContent> Base::allowed_contents(CellRole role) const {
  switch (role) {
    case CellRole::Plain:
      return {CellContent::Elbow, CellContent::Cross};
    case CellRole::FaucetSpot:
      return {CellContent::ElbowUp, CellContent::ElbowWithFaucet};
    case CellRole::SignCorner:
      return {CellContent::Elbow, CellContent::Cross,
              CellContent::CrossWithFaucet, CellContent::ElbowTwoFaucets};
  }
  throw std::logic_error("unknown cell role");
}

CellContent Base::default_content(CellRole role) {
  return role == CellRole::FaucetSpot ? CellContent::ElbowUp
                                      : CellContent::Elbow;
}

namespace {

bool role_allows(CellRole role, CellContent c) {
  switch (role) {
    case CellRole::Plain:
      return c == CellContent::Elbow || c == CellContent::Cross;
    case CellRole::FaucetSpot:
      return c == CellContent::ElbowUp || c == CellContent::ElbowWithFaucet;
    case CellRole::SignCorner:
      return c == CellContent::Elbow || c == CellContent::Cross ||
             c == CellContent::CrossWithFaucet ||
             c == CellContent::ElbowTwoFaucets;
  }
  return false;
}

}  // namespace

BasePtr build_base(GroupType type, int n, int k, bool is_double) {
  if (n < 1) throw std::invalid_argument("the base needs at least one strand");
  if (type == GroupType::D && n < 2)
    throw std::invalid_argument("a type D base needs at least two strands");
  if (k < 0)
    throw std::invalid_argument("the number of blocks cannot be negative");
  if (type == GroupType::A) k = 0;

  auto base = std::shared_ptr<Base>(new Base());
  base->type_ = type;
  base->n_ = n;
  base->k_ = k;
  base->is_double_ = is_double;

  const int shift = is_double ? n - 1 : 0;
  const int stair_col0 = type == GroupType::A ? 1 : 2;
  int rs = 1;  // first staircase row
  switch (type) {
    case GroupType::A:
      rs = 1;
      break;
    case GroupType::B:
      rs = k * n + 1;
      break;
    case GroupType::C:
      rs = k * (n + 1) + 1;
      break;
    case GroupType::D:
      rs = k * (n - 1) + 1;
      break;
  }
  rs += shift;
  // Scenery diagonals: a row-terminating cap sits at column cap_const - row
  // in every row; the boundary of the single part sits at column S - row.
  const int S = type == GroupType::A ? rs : rs + 1;
  const int cap_const = rs + n - 1 + stair_col0;
  // Anchor column of the upper-right staircase of a double base.  It sits on
  // the diagonals along which strands leave the single part, so its crosses
  // act on the exiting strands.
  const int q = cap_const - shift - 1;

  base->rows_ = rs + n - 1;
  base->cols_span_ = cap_const - 1;
  base->entry_row0_ = rs;
  base->entry_col_ = stair_col0;

  std::vector<BaseCell>& cells = base->cells_;
  std::map<std::pair<int, int>, std::size_t> occupied;

  auto add_cell = [&](int row, int col, CellKind kind) -> BaseCell& {
    assert(row >= 1 && row <= base->rows_);
    assert(col >= 1 && col <= base->cols_span_);
    auto inserted = occupied.emplace(std::make_pair(row, col), cells.size());
    assert(inserted.second);
    (void)inserted;
    BaseCell cell;
    cell.row = row;
    cell.col = col;
    cell.kind = kind;
    cells.push_back(cell);
    return cells.back();
  };

  auto add_box = [&](int row, int col, CellRegion region, CellRole role,
                     int block, Letter letter, VariableTag var, BoxKey key) {
    BaseCell& cell = add_cell(row, col, CellKind::Box);
    cell.region = region;
    cell.role = role;
    cell.block = block;
    cell.letter = letter;
    cell.var = var;
    cell.key = key;
  };

  const auto zvar = [](int i) {
    return VariableTag{VariableTag::Kind::z, i};
  };
  const auto xvar = [](int j) {
    return VariableTag{VariableTag::Kind::x, j};
  };
  const auto tvar = [](int c) {
    return VariableTag{VariableTag::Kind::t, c};
  };

  // Gamma-blocks, numbered from the bottom.
  for (int j = 1; j <= k; ++j) {
    int row0 = 0;
    int col0 = 0;
    switch (type) {
      case GroupType::A:
        continue;
      case GroupType::B:
        row0 = (k - j) * n + 1 + shift;
        col0 = j * n + 1;
        add_box(row0, col0, CellRegion::Block, CellRole::FaucetSpot, j,
                Letter::s0(), xvar(j), BoxKey{1, j, 0, 0});
        for (int h = 1; h < n; ++h)
          add_box(row0, col0 + h, CellRegion::Block, CellRole::Plain, j,
                  Letter::simple(h), xvar(j), BoxKey{1, j, 0, h});
        for (int v = 1; v < n; ++v)
          add_box(row0 + v, col0, CellRegion::Block, CellRole::Plain, j,
                  Letter::simple(v), xvar(j), BoxKey{1, j, v, 0});
        break;
      case GroupType::C:
        row0 = (k - j) * (n + 1) + 1 + shift;
        col0 = (j - 1) * (n + 1) + n + 2;
        add_box(row0, col0, CellRegion::Block, CellRole::FaucetSpot, j,
                Letter::s0(), xvar(j), BoxKey{1, j, 0, 0});
        for (int h = 1; h < n; ++h)
          add_box(row0, col0 + h, CellRegion::Block, CellRole::Plain, j,
                  Letter::simple(h), xvar(j), BoxKey{1, j, 0, h});
        add_box(row0 + 1, col0 - 1, CellRegion::Block, CellRole::FaucetSpot, j,
                Letter::s0(), xvar(j), BoxKey{1, j, 1, -1});
        for (int v = 1; v < n; ++v)
          add_box(row0 + 1 + v, col0 - 1, CellRegion::Block, CellRole::Plain,
                  j, Letter::simple(v), xvar(j), BoxKey{1, j, 1 + v, -1});
        break;
      case GroupType::D:
        row0 = (k - j) * (n - 1) + 1 + shift;
        col0 = (j - 1) * (n - 1) + n + 1;
        add_box(row0, col0, CellRegion::Block, CellRole::SignCorner, j,
                Letter::simple(1), xvar(j), BoxKey{1, j, 0, 0});
        for (int h = 2; h < n; ++h)
          add_box(row0, col0 + h - 1, CellRegion::Block, CellRole::Plain, j,
                  Letter::simple(h), xvar(j), BoxKey{1, j, 0, h - 1});
        for (int v = 2; v < n; ++v)
          add_box(row0 + v - 1, col0, CellRegion::Block, CellRole::Plain, j,
                  Letter::simple(v), xvar(j), BoxKey{1, j, v - 1, 0});
        break;
    }
  }

  // Lower staircase: local row i hosts strand i and carries z_i.
  for (int i = 1; i < n; ++i)
    for (int c = 0; c < n - i; ++c)
      add_box(rs + i - 1, stair_col0 + c, CellRegion::Staircase,
              CellRole::Plain, 0, Letter::simple(i + c), zvar(i),
              BoxKey{0, 0, i, c});

  // Upper-right staircase of a double base; column c carries -t_c.
  if (is_double)
    for (int r = 1; r <= shift; ++r)
      for (int c = 1; c <= n - r; ++c)
        add_box(r, q + c - 1, CellRegion::Northeast, CellRole::Plain, 0,
                Letter::simple(r + c - 1), tvar(c), BoxKey{2, 0, r, c});

  // Scenery: caps on every row; boundary and sea around the single part;
  // sea joining the single part to the upper staircase of a double base.
  for (int r = 1; r <= base->rows_; ++r) {
    const int capcol = cap_const - r;
    assert(!occupied.count({r, capcol}));
    add_cell(r, capcol, CellKind::Cap);
    if (r >= rs) continue;
    if (r <= shift) {
      for (int c = q - r; c < capcol; ++c)
        if (!occupied.count({r, c})) add_cell(r, c, CellKind::Sea);
    } else {
      const int bnd = S - r;
      assert(bnd >= stair_col0);
      if (!occupied.count({r, bnd})) add_cell(r, bnd, CellKind::Boundary);
      for (int c = bnd + 1; c < capcol; ++c)
        if (!occupied.count({r, c})) add_cell(r, c, CellKind::Sea);
    }
  }

  // Reading order: top row first, right to left within a row.
  std::sort(cells.begin(), cells.end(),
            [](const BaseCell& a, const BaseCell& b) {
              return a.row != b.row ? a.row < b.row : a.col > b.col;
            });

  base->grid_.assign(
      static_cast<std::size_t>(base->rows_) * base->cols_span_, Base::npos);
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const BaseCell& cell = cells[i];
    base->grid_[static_cast<std::size_t>(cell.row - 1) * base->cols_span_ +
                (cell.col - 1)] = i;
    if (cell.kind == CellKind::Box) base->boxes_.push_back(i);
  }

  for (std::size_t i : base->boxes_) {
    const BaseCell& cell = cells[i];
    if (cell.row == 1 && cell.role != CellRole::FaucetSpot)
      base->exit_cols_.push_back(cell.col);
  }
  base->exit_cols_.push_back(cap_const - 1);
  std::sort(base->exit_cols_.begin(), base->exit_cols_.end());
  assert(static_cast<int>(base->exit_cols_.size()) == n);

  return base;
}

PipeDream::PipeDream(BasePtr base, std::vector<CellContent> contents)
    : base_(std::move(base)), contents_(std::move(contents)) {
  if (!base_) throw std::invalid_argument("a pipe dream needs a base");
  if (contents_.size() != base_->boxes().size())
    throw std::invalid_argument(
        "the content list does not match the number of boxes");
  for (std::size_t i = 0; i < contents_.size(); ++i) {
    const BaseCell& cell = base_->cells()[base_->boxes()[i]];
    if (!role_allows(cell.role, contents_[i]))
      throw std::invalid_argument(
          std::string("cell content ") + cell_content_name(contents_[i]) +
          " not allowed at " + pos_str(cell.row, cell.col));
  }
}

CellContent PipeDream::content(std::size_t box_ordinal) const {
  if (box_ordinal >= contents_.size())
    throw std::invalid_argument("box ordinal out of range");
  return contents_[box_ordinal];
}

PipeDream PipeDream::with_content(std::size_t box_ordinal,
                                  CellContent c) const {
  std::vector<CellContent> contents = contents_;
  if (box_ordinal >= contents.size())
    throw std::invalid_argument("box ordinal out of range");
  contents[box_ordinal] = c;
  return PipeDream(base_, std::move(contents));
}

namespace {

std::tuple<GroupType, int, int, bool> base_tag(const Base& b) {
  return {b.type(), b.n(), b.k(), b.is_double()};
}

}  // namespace

bool operator==(const PipeDream& a, const PipeDream& b) {
  return base_tag(a.base()) == base_tag(b.base()) &&
         a.contents() == b.contents();
}

PipeDream empty_dream(BasePtr base) {
  if (!base) throw std::invalid_argument("a pipe dream needs a base");
  std::vector<CellContent> contents;
  contents.reserve(base->boxes().size());
  for (std::size_t i : base->boxes())
    contents.push_back(Base::default_content(base->cells()[i].role));
  return PipeDream(std::move(base), std::move(contents));
}

bool dream_less(const PipeDream& a, const PipeDream& b) {
  auto ta = base_tag(a.base());
  auto tb = base_tag(b.base());
  if (ta != tb) return ta < tb;
  return a.contents() < b.contents();
}

ReadWord read_word(const PipeDream& d) {
  const Base& b = d.base();
  ReadWord out;
  for (std::size_t ord = 0; ord < b.boxes().size(); ++ord) {
    const BaseCell& cell = b.cells()[b.boxes()[ord]];
    std::size_t emitted = 0;
    switch (d.content(ord)) {
      case CellContent::Cross:
      case CellContent::ElbowWithFaucet:
        out.word.letters.push_back(*cell.letter);
        emitted = 1;
        break;
      case CellContent::CrossWithFaucet:
        out.word.letters.push_back(Letter::s1hat());
        emitted = 1;
        break;
      case CellContent::ElbowTwoFaucets:
        out.word.marked.push_back(out.word.letters.size());
        out.word.letters.push_back(*cell.letter);
        out.word.letters.push_back(Letter::s1hat());
        emitted = 2;
        break;
      default:
        break;
    }
    switch (cell.region) {
      case CellRegion::Northeast:
        out.t_len += emitted;
        break;
      case CellRegion::Block:
        out.x_len += emitted;
        break;
      case CellRegion::Staircase:
        out.z_len += emitted;
        break;
    }
  }
  assert(out.t_len + out.x_len + out.z_len == out.word.size());
  return out;
}

SignedPermutation shape(const PipeDream& d) {
  return word_product(read_word(d).word, d.base().n());
}

bool is_reduced(const PipeDream& d) {
  return is_reduced_word(read_word(d).word, d.base().type(), d.base().n());
}

Monomial monomial(const PipeDream& d) {
  const Base& b = d.base();
  std::vector<int> z(b.n(), 0);
  std::vector<int> x(b.k(), 0);
  std::vector<int> t(b.is_double() ? b.n() - 1 : 0, 0);
  for (std::size_t ord = 0; ord < b.boxes().size(); ++ord) {
    int w = 0;
    switch (d.content(ord)) {
      case CellContent::Cross:
      case CellContent::ElbowWithFaucet:
      case CellContent::CrossWithFaucet:
        w = 1;
        break;
      case CellContent::ElbowTwoFaucets:
        w = 2;
        break;
      default:
        continue;
    }
    const VariableTag& var = b.cells()[b.boxes()[ord]].var;
    switch (var.kind) {
      case VariableTag::Kind::z:
        z[var.index - 1] += w;
        break;
      case VariableTag::Kind::x:
        x[var.index - 1] += w;
        break;
      case VariableTag::Kind::t:
        t[var.index - 1] += w;
        break;
    }
  }
  return Monomial(std::move(z), std::move(x), std::move(t));
}

namespace {

// One step of a strand's path.
struct StrandStep {
  std::size_t cell;  // index into Base::cells()
  bool faucet;       // the strand picks up a faucet here
};

CellContent content_at(const PipeDream& d, std::size_t cell_index) {
  const BaseCell& cell = d.base().cells()[cell_index];
  switch (cell.kind) {
    case CellKind::Boundary:
      return CellContent::ElbowUp;
    case CellKind::Sea:
      return CellContent::Elbow;
    case CellKind::Cap:
      return CellContent::SingleElbow;
    case CellKind::Box:
      return d.content(d.base().box_ordinal_at(cell.row, cell.col));
  }
  throw std::logic_error("unknown cell kind");
}

// Follows strand i (1-based) to its exit; returns the signed exit value and
// optionally records the visited cells.
int walk_strand(const PipeDream& d, int i, std::vector<StrandStep>* steps) {
  const Base& b = d.base();
  auto [r, c] = b.entry(i);
  bool from_west = true;
  int faucets = 0;
  while (true) {
    std::size_t idx = b.cell_at(r, c);
    if (idx == Base::npos)
      throw std::logic_error("strand " + std::to_string(i) +
                             " left the board at " + pos_str(r, c));
    bool north = false;
    bool faucet = false;
    switch (content_at(d, idx)) {
      case CellContent::Elbow:
        north = from_west;
        break;
      case CellContent::ElbowUp:
        if (from_west)
          throw std::logic_error("strand entered a bottom-to-right joint "
                                 "from the west at " +
                                 pos_str(r, c));
        north = false;
        break;
      case CellContent::SingleElbow:
        if (!from_west)
          throw std::logic_error("strand entered a left-to-top joint from "
                                 "the south at " +
                                 pos_str(r, c));
        north = true;
        break;
      case CellContent::Cross:
        north = !from_west;
        break;
      case CellContent::ElbowWithFaucet:
        if (from_west)
          throw std::logic_error("strand entered a bottom-to-right joint "
                                 "from the west at " +
                                 pos_str(r, c));
        north = false;
        faucet = true;
        break;
      case CellContent::CrossWithFaucet:
        north = !from_west;
        faucet = true;
        break;
      case CellContent::ElbowTwoFaucets:
        north = from_west;
        faucet = true;
        break;
    }
    if (faucet) ++faucets;
    if (steps) steps->push_back({idx, faucet});
    if (north) {
      --r;
      from_west = false;
      if (r == 0) break;
    } else {
      ++c;
      from_west = true;
    }
  }
  const auto& exits = b.exit_cols();
  auto it = std::find(exits.begin(), exits.end(), c);
  if (it == exits.end())
    throw std::logic_error("strand exited at a non-exit column " +
                           std::to_string(c));
  int label = static_cast<int>(it - exits.begin()) + 1;
  return faucets % 2 ? -label : label;
}

}  // namespace

std::vector<int> trace_strands(const PipeDream& d) {
  std::vector<int> window(d.base().n());
  for (int i = 1; i <= d.base().n(); ++i)
    window[i - 1] = walk_strand(d, i, nullptr);
  return window;
}

bool is_reduced_by_strands(const PipeDream& d) {
  const Base& b = d.base();
  const GroupType type = b.type();
  const int n = b.n();
  std::vector<std::vector<StrandStep>> paths(n);
  for (int i = 1; i <= n; ++i) walk_strand(d, i, &paths[i - 1]);

  if (type == GroupType::B || type == GroupType::C) {
    for (const auto& path : paths) {
      int faucets = 0;
      for (const StrandStep& s : path) faucets += s.faucet ? 1 : 0;
      if (faucets > 1) return false;
    }
  }

  // Does strand p carry a faucet strictly between path positions i and j?
  auto faucet_between = [&](int p, std::size_t i, std::size_t j) {
    if (i > j) std::swap(i, j);
    for (std::size_t t = i + 1; t < j; ++t)
      if (paths[p][t].faucet) return true;
    return false;
  };

  for (int p = 0; p < n; ++p) {
    std::map<std::size_t, std::size_t> pos_p;
    for (std::size_t t = 0; t < paths[p].size(); ++t)
      pos_p.emplace(paths[p][t].cell, t);
    for (int r = p + 1; r < n; ++r) {
      // Meetings of the pair at letter-carrying tiles, as
      // (cell, position in p's path, position in r's path).
      std::vector<std::tuple<std::size_t, std::size_t, std::size_t>> meet;
      for (std::size_t t = 0; t < paths[r].size(); ++t) {
        auto it = pos_p.find(paths[r][t].cell);
        if (it == pos_p.end()) continue;
        CellContent c = content_at(d, paths[r][t].cell);
        bool counts = c == CellContent::Cross ||
                      c == CellContent::CrossWithFaucet ||
                      (type == GroupType::D &&
                       c == CellContent::ElbowTwoFaucets);
        if (counts) meet.emplace_back(paths[r][t].cell, it->second, t);
      }
      if (type == GroupType::A) {
        if (meet.size() >= 2) return false;
        continue;
      }
      for (std::size_t u = 0; u < meet.size(); ++u) {
        for (std::size_t v = u + 1; v < meet.size(); ++v) {
          CellContent cu = content_at(d, std::get<0>(meet[u]));
          CellContent cv = content_at(d, std::get<0>(meet[v]));
          if (type == GroupType::D) {
            if (cu == CellContent::ElbowTwoFaucets ||
                cv == CellContent::ElbowTwoFaucets)
              return false;
            int between =
                (faucet_between(p, std::get<1>(meet[u]), std::get<1>(meet[v]))
                     ? 1
                     : 0) +
                (faucet_between(r, std::get<2>(meet[u]), std::get<2>(meet[v]))
                     ? 1
                     : 0);
            int with_faucet = (cu == CellContent::CrossWithFaucet ? 1 : 0) +
                              (cv == CellContent::CrossWithFaucet ? 1 : 0);
            if (between % 2 == with_faucet % 2) return false;
          } else {
            // Types B and C: exactly one of the two strands must carry a
            // faucet between any two of their crossings.
            int between =
                (faucet_between(p, std::get<1>(meet[u]), std::get<1>(meet[v]))
                     ? 1
                     : 0) +
                (faucet_between(r, std::get<2>(meet[u]), std::get<2>(meet[v]))
                     ? 1
                     : 0);
            if (between != 1) return false;
          }
        }
      }
    }
  }
  return true;
}

namespace {

struct MovePattern {
  CellContent a_before, b_before, a_after, b_after;
};

constexpr CellContent kE = CellContent::Elbow;
constexpr CellContent kU = CellContent::ElbowUp;
constexpr CellContent kX = CellContent::Cross;
constexpr CellContent kF = CellContent::ElbowWithFaucet;
constexpr CellContent kC = CellContent::CrossWithFaucet;
constexpr CellContent kT = CellContent::ElbowTwoFaucets;

constexpr std::array<MovePattern, 10> kMovePatterns = {{
    {kX, kE, kE, kX},  // 1
    {kC, kE, kE, kX},  // 2
    {kX, kE, kE, kC},  // 3
    {kC, kE, kE, kC},  // 4
    {kF, kU, kU, kF},  // 5
    {kT, kE, kC, kX},  // 6
    {kT, kE, kX, kC},  // 7
    {kC, kX, kE, kT},  // 8
    {kX, kC, kE, kT},  // 9
    {kT, kE, kX, kX},  // 10
}};

PipeDream apply_pattern(const PipeDream& d, std::size_t a, std::size_t b,
                        const MovePattern& p) {
  std::vector<CellContent> contents = d.contents();
  contents[a] = p.a_after;
  contents[b] = p.b_after;
  return PipeDream(d.base_ptr(), std::move(contents));
}

}  // namespace

std::vector<AdmissibleMove> admissible_moves(const PipeDream& d) {
  const Base& base = d.base();
  const SignedPermutation w = shape(d);
  std::vector<AdmissibleMove> out;
  const std::size_t count = base.boxes().size();
  for (std::size_t a = 0; a < count; ++a) {
    const BaseCell& ca = base.cells()[base.boxes()[a]];
    for (std::size_t b = 0; b < count; ++b) {
      const BaseCell& cb = base.cells()[base.boxes()[b]];
      if (ca.row >= cb.row) continue;
      for (int kind = 1; kind <= static_cast<int>(kMovePatterns.size());
           ++kind) {
        const MovePattern& p = kMovePatterns[kind - 1];
        if (d.content(a) != p.a_before || d.content(b) != p.b_before)
          continue;
        if (!role_allows(ca.role, p.a_after) ||
            !role_allows(cb.role, p.b_after))
          continue;
        if (shape(apply_pattern(d, a, b, p)) == w)
          out.push_back({a, b, kind});
      }
    }
  }
  return out;
}

PipeDream apply_move(const PipeDream& d, const AdmissibleMove& m) {
  const Base& base = d.base();
  if (m.kind < 1 || m.kind > 10)
    throw std::invalid_argument("move kind out of range");
  if (m.a >= base.boxes().size() || m.b >= base.boxes().size() ||
      m.a == m.b)
    throw std::invalid_argument("move box ordinals out of range");
  const BaseCell& ca = base.cells()[base.boxes()[m.a]];
  const BaseCell& cb = base.cells()[base.boxes()[m.b]];
  if (ca.row >= cb.row)
    throw std::invalid_argument(
        "the move's upper box must lie strictly above the lower one");
  const MovePattern& p = kMovePatterns[m.kind - 1];
  if (d.content(m.a) != p.a_before || d.content(m.b) != p.b_before)
    throw std::invalid_argument("the boxes do not match the move pattern");
  if (!role_allows(ca.role, p.a_after) || !role_allows(cb.role, p.b_after))
    throw std::invalid_argument("the move target is not allowed at this box");
  PipeDream next = apply_pattern(d, m.a, m.b, p);
  if (!(shape(next) == shape(d)))
    throw std::invalid_argument("the move does not preserve the shape");
  return next;
}

namespace {

std::size_t find_box_by_key(const Base& base, const BoxKey& key) {
  for (std::size_t ord = 0; ord < base.boxes().size(); ++ord)
    if (base.cells()[base.boxes()[ord]].key == key) return ord;
  throw std::logic_error("no box with the requested key");
}

}  // namespace

PipeDream bottom_dream(GroupType type, const SignedPermutation& w) {
  if (!w.valid_for(type))
    throw std::invalid_argument("the window is not an element of the group");
  const int n = w.n();
  const LehmerCode code = lehmer_code(w);

  int k = 0;
  std::vector<int> horizontal;  // crosses in the horizontal block parts
  switch (type) {
    case GroupType::A:
      k = 0;
      break;
    case GroupType::B:
    case GroupType::C:
      k = static_cast<int>(code.N.size());
      for (int v : code.N) horizontal.push_back(v - 1);
      break;
    case GroupType::D: {
      for (int v : code.N) horizontal.push_back(v - 1);
      if (!horizontal.empty() && horizontal.back() == 0)
        horizontal.pop_back();
      k = static_cast<int>(horizontal.size());
      break;
    }
  }

  BasePtr base = build_base(type, n, k, false);
  PipeDream dream = empty_dream(base);
  std::vector<CellContent> contents = dream.contents();

  auto set_key = [&](const BoxKey& key, CellContent c) {
    contents[find_box_by_key(*base, key)] = c;
  };

  for (int i = 1; i <= n; ++i) {
    assert(code.L[i - 1] <= n - i);
    for (int c = 0; c < code.L[i - 1]; ++c)
      set_key(BoxKey{0, 0, i, c}, CellContent::Cross);
  }

  for (int j = 1; j <= k; ++j) {
    switch (type) {
      case GroupType::A:
        break;
      case GroupType::B:
        set_key(BoxKey{1, j, 0, 0}, CellContent::ElbowWithFaucet);
        for (int h = 1; h <= horizontal[j - 1]; ++h)
          set_key(BoxKey{1, j, 0, h}, CellContent::Cross);
        break;
      case GroupType::C:
        set_key(BoxKey{1, j, 1, -1}, CellContent::ElbowWithFaucet);
        for (int h = 1; h <= horizontal[j - 1]; ++h)
          set_key(BoxKey{1, j, 0, h}, CellContent::Cross);
        break;
      case GroupType::D:
        set_key(BoxKey{1, j, 0, 0}, j % 2 == 1
                                        ? CellContent::CrossWithFaucet
                                        : CellContent::Cross);
        for (int h = 2; h <= horizontal[j - 1]; ++h)
          set_key(BoxKey{1, j, 0, h - 1}, CellContent::Cross);
        break;
    }
  }

  return PipeDream(base, std::move(contents));
}

PipeDream embed_dream(const PipeDream& d, int new_k) {
  const Base& old_base = d.base();
  if (old_base.type() == GroupType::A) new_k = 0;
  if (new_k < 0)
    throw std::invalid_argument("the number of blocks cannot be negative");
  BasePtr base = build_base(old_base.type(), old_base.n(), new_k,
                            old_base.is_double());
  std::map<BoxKey, std::size_t> by_key;
  for (std::size_t ord = 0; ord < base->boxes().size(); ++ord)
    by_key.emplace(base->cells()[base->boxes()[ord]].key, ord);

  PipeDream dream = empty_dream(base);
  std::vector<CellContent> contents = dream.contents();
  for (std::size_t ord = 0; ord < old_base.boxes().size(); ++ord) {
    const BaseCell& cell = old_base.cells()[old_base.boxes()[ord]];
    auto it = by_key.find(cell.key);
    if (it != by_key.end()) {
      contents[it->second] = d.content(ord);
    } else if (d.content(ord) != Base::default_content(cell.role)) {
      throw std::invalid_argument(
          "cannot drop a non-empty block while embedding");
    }
  }
  return PipeDream(base, std::move(contents));
}

namespace {

// True iff right multiplication by s makes w longer (uniform over the
// classical types that contain s).
bool raises(const SignedPermutation& w, Letter s) {
  if (s.is_s0()) return w.map(1) > 0;
  if (s.is_s1hat()) return w.map(1) + w.map(2) > 0;
  int i = s.simple_index();
  return w.map(i) < w.map(i + 1);
}

std::vector<Letter> letters_of(const BaseCell& cell, CellContent c) {
  switch (c) {
    case CellContent::Cross:
    case CellContent::ElbowWithFaucet:
      return {*cell.letter};
    case CellContent::CrossWithFaucet:
      return {Letter::s1hat()};
    case CellContent::ElbowTwoFaucets:
      return {*cell.letter, Letter::s1hat()};
    default:
      return {};
  }
}

struct EnumJob {
  std::vector<CellContent> fill;  // decided prefix
  SignedPermutation perm;
  int len;
};

void enumerate_from(const BasePtr& base, const SignedPermutation& target,
                    int target_len, const std::vector<int>& suffix_cap,
                    EnumJob job, std::vector<PipeDream>& out) {
  const std::size_t count = base->boxes().size();
  std::vector<CellContent> fill = std::move(job.fill);
  const std::size_t start = fill.size();
  fill.resize(count);

  // Depth-first search over the remaining boxes, trying contents in
  // canonical order so the dreams come out sorted.
  auto rec = [&](auto&& self, std::size_t depth, const SignedPermutation& cur,
                 int len) -> void {
    if (len + suffix_cap[depth] < target_len) return;
    if (depth == count) {
      if (len == target_len && cur == target)
        out.emplace_back(base, fill);
      return;
    }
    const BaseCell& cell = base->cells()[base->boxes()[depth]];
    for (CellContent c : base->allowed_contents(cell.role)) {
      SignedPermutation next = cur;
      int next_len = len;
      bool ok = true;
      for (Letter s : letters_of(cell, c)) {
        if (!raises(next, s) || next_len + 1 > target_len) {
          ok = false;
          break;
        }
        next = apply_letter(next, s, Side::right);
        ++next_len;
      }
      if (!ok) continue;
      fill[depth] = c;
      self(self, depth + 1, next, next_len);
    }
  };
  rec(rec, start, job.perm, job.len);
}

}  // namespace

std::vector<PipeDream> enumerate_dreams(GroupType type,
                                        const SignedPermutation& w, int k,
                                        bool is_double) {
  if (!w.valid_for(type))
    throw std::invalid_argument("the window is not an element of the group");
  BasePtr base = build_base(type, w.n(), k, is_double);
  const int target_len = length(w, type);
  const std::size_t count = base->boxes().size();

  std::vector<int> suffix_cap(count + 1, 0);
  for (std::size_t i = count; i-- > 0;) {
    const BaseCell& cell = base->cells()[base->boxes()[i]];
    suffix_cap[i] =
        suffix_cap[i + 1] + (cell.role == CellRole::SignCorner ? 2 : 1);
  }

  int threads = 1;
  if (const char* env = std::getenv("PIPEDREAMS_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 1) threads = static_cast<int>(std::min(v, 64L));
  }

  std::vector<PipeDream> out;
  EnumJob root{{}, SignedPermutation::identity(w.n()), 0};
  if (threads <= 1 || count == 0) {
    enumerate_from(base, w, target_len, suffix_cap, std::move(root), out);
    return out;
  }

  // Expand the choice tree breadth-first into independent jobs, then solve
  // the jobs in parallel and concatenate in order: the result does not
  // depend on the number of threads.
  std::vector<EnumJob> jobs{std::move(root)};
  std::size_t depth = 0;
  while (depth < count &&
         jobs.size() < static_cast<std::size_t>(threads) * 4 &&
         jobs.size() < 256) {
    std::vector<EnumJob> next_jobs;
    const BaseCell& cell = base->cells()[base->boxes()[depth]];
    for (EnumJob& job : jobs) {
      for (CellContent c : base->allowed_contents(cell.role)) {
        SignedPermutation next = job.perm;
        int next_len = job.len;
        bool ok = true;
        for (Letter s : letters_of(cell, c)) {
          if (!raises(next, s) || next_len + 1 > target_len) {
            ok = false;
            break;
          }
          next = apply_letter(next, s, Side::right);
          ++next_len;
        }
        if (!ok) continue;
        EnumJob sub{job.fill, std::move(next), next_len};
        sub.fill.push_back(c);
        next_jobs.push_back(std::move(sub));
      }
    }
    jobs = std::move(next_jobs);
    ++depth;
    if (jobs.empty()) return out;
  }

  std::vector<std::future<std::vector<PipeDream>>> futures;
  futures.reserve(jobs.size());
  for (EnumJob& job : jobs) {
    futures.push_back(std::async(
        std::launch::async,
        [&base, &w, target_len, &suffix_cap](EnumJob j) {
          std::vector<PipeDream> part;
          enumerate_from(base, w, target_len, suffix_cap, std::move(j), part);
          return part;
        },
        std::move(job)));
  }
  for (auto& f : futures) {
    std::vector<PipeDream> part = f.get();
    for (PipeDream& d : part) out.push_back(std::move(d));
  }
  return out;
}

ReductionResult reduce_to_bottom(const PipeDream& d) {
  const Base& base = d.base();
  if (base.is_double())
    throw std::invalid_argument("reduction requires a single base");
  if (!is_reduced(d))
    throw std::invalid_argument("reduction requires a reduced pipe dream");

  ReductionResult res{{}, d};

  auto content_at_box = [&](const PipeDream& cur, int row,
                            int col) -> std::optional<CellContent> {
    std::size_t idx = base.cell_at(row, col);
    if (idx == Base::npos || base.cells()[idx].kind != CellKind::Box)
      return std::nullopt;
    return cur.content(base.box_ordinal_at(row, col));
  };

  if (base.type() == GroupType::A) {
    // Classical policy: take the lowest (then leftmost) cross that has an
    // elbow immediately to its left and push it down a ladder of double
    // crosses into the elbow below the ladder.
    while (true) {
      int fr = -1;
      int fc = -1;
      for (std::size_t ord = 0; ord < base.boxes().size(); ++ord) {
        const BaseCell& cell = base.cells()[base.boxes()[ord]];
        if (res.result.content(ord) != CellContent::Cross) continue;
        auto west = content_at_box(res.result, cell.row, cell.col - 1);
        if (!west || *west != CellContent::Elbow) continue;
        if (cell.row > fr || (cell.row == fr && cell.col < fc)) {
          fr = cell.row;
          fc = cell.col;
        }
      }
      if (fr < 0) break;
      int m = 1;
      while (content_at_box(res.result, fr + m, fc - 1) ==
                 CellContent::Cross &&
             content_at_box(res.result, fr + m, fc) == CellContent::Cross)
        ++m;
      auto dest = content_at_box(res.result, fr + m, fc - 1);
      auto beside = content_at_box(res.result, fr + m, fc);
      if (dest != CellContent::Elbow ||
          (beside && *beside != CellContent::Elbow))
        throw std::logic_error("ladder scan failed at " + pos_str(fr, fc));
      AdmissibleMove mv{base.box_ordinal_at(fr, fc),
                        base.box_ordinal_at(fr + m, fc - 1), 1};
      res.result = apply_move(res.result, mv);
      res.moves.push_back(mv);
    }
    return res;
  }

  // Signed types: greedily apply the first admissible move under the order
  // (lower box as deep and as far left as possible, then the upper box).
  const std::size_t guard_limit =
      64 + 4 * base.boxes().size() * base.boxes().size();
  while (true) {
    std::vector<AdmissibleMove> moves = admissible_moves(res.result);
    if (moves.empty()) break;
    auto key = [&](const AdmissibleMove& m) {
      const BaseCell& ca = base.cells()[base.boxes()[m.a]];
      const BaseCell& cb = base.cells()[base.boxes()[m.b]];
      return std::make_tuple(-cb.row, cb.col, -ca.row, ca.col, m.kind);
    };
    const AdmissibleMove* best = &moves.front();
    for (const AdmissibleMove& m : moves)
      if (key(m) < key(*best)) best = &m;
    res.result = apply_move(res.result, *best);
    res.moves.push_back(*best);
    if (res.moves.size() > guard_limit)
      throw std::logic_error("reduction did not terminate");
  }
  return res;
}

std::string to_ascii(const PipeDream& d) {
  const Base& base = d.base();
  std::string out;
  for (int r = 1; r <= base.rows(); ++r) {
    std::string line;
    if (r >= base.entry(1).first) {
      int strand = r - base.entry(1).first + 1;
      std::string num = std::to_string(strand);
      line += std::string(num.size() > 2 ? 0 : 2 - num.size(), ' ') + num +
              "|";
    } else {
      line += "   ";
    }
    for (int c = 1; c <= base.rows() + base.n(); ++c) {
      std::size_t idx = base.cell_at(r, c);
      if (idx == Base::npos || base.cells()[idx].kind != CellKind::Box) {
        line += ' ';
        continue;
      }
      line += cell_content_glyph(
          d.content(base.box_ordinal_at(r, c)));
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line;
    out += '\n';
  }
  return out;
}

std::string to_latex(const PipeDream& d) {
  const Base& base = d.base();
  auto symbol = [](CellContent c) -> const char* {
    switch (c) {
      case CellContent::Elbow:
        return "\\cdot";
      case CellContent::ElbowUp:
        return "\\neg";
      case CellContent::SingleElbow:
        return "\\cdot";
      case CellContent::Cross:
        return "+";
      case CellContent::ElbowWithFaucet:
        return "\\circ";
      case CellContent::CrossWithFaucet:
        return "\\otimes";
      case CellContent::ElbowTwoFaucets:
        return "\\odot";
    }
    return "";
  };
  std::string out = "\\begin{ytableau}\n";
  for (int r = 1; r <= base.rows(); ++r) {
    if (r > 1) out += " \\\\\n";
    int max_col = 0;
    for (int c = 1; c <= base.rows() + base.n(); ++c)
      if (base.cell_at(r, c) != Base::npos) max_col = c;
    for (int c = 1; c <= max_col; ++c) {
      if (c > 1) out += " & ";
      std::size_t idx = base.cell_at(r, c);
      if (idx == Base::npos || base.cells()[idx].kind != CellKind::Box) {
        out += "\\none";
      } else {
        out += symbol(d.content(base.box_ordinal_at(r, c)));
      }
    }
  }
  out += "\n\\end{ytableau}\n";
  return out;
}

std::string to_json(const PipeDream& d) {
  const Base& base = d.base();
  std::ostringstream out;
  out << "{\"type\":\"" << group_type_name(base.type())
      << "\",\"n\":" << base.n() << ",\"k\":" << base.k() << ",\"double\":"
      << (base.is_double() ? "true" : "false") << ",\"cells\":[";
  for (std::size_t ord = 0; ord < base.boxes().size(); ++ord) {
    const BaseCell& cell = base.cells()[base.boxes()[ord]];
    if (ord) out << ",";
    out << "{\"block\":" << cell.block << ",\"row\":" << cell.row
        << ",\"col\":" << cell.col << ",\"content\":\""
        << cell_content_name(d.content(ord)) << "\"}";
  }
  out << "]}";
  return out.str();
}

}  // namespace pipedreams
