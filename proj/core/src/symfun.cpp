#include "pipedreams/symfun.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace pipedreams {

namespace {

Rational pow2(int e) {
  boost::multiprecision::cpp_int num = 1;
  num <<= (e >= 0 ? e : -e);
  return e >= 0 ? Rational(num) : Rational(1) / Rational(num);
}

void require_level(int k) {
  if (k < 0)
    throw std::invalid_argument("the truncation level cannot be negative");
}

// Occurrences of the two fork letters s_1 and s_1^.
int fork_letter_count(const std::vector<Letter>& a) {
  int o = 0;
  for (const Letter& l : a)
    if (l == Letter::simple(1) || l == Letter::s1hat()) ++o;
  return o;
}

}  // namespace

std::vector<int> peak_set(const std::vector<Letter>& a) {
  std::vector<int> peaks;
  const int l = static_cast<int>(a.size());
  for (int i = 2; i + 1 <= l; ++i)
    if (a[i - 2].height() < a[i - 1].height() &&
        a[i - 1].height() > a[i].height())
      peaks.push_back(i);
  return peaks;
}

std::vector<XAdmissible> x_admissible(const std::vector<Letter>& a, int k) {
  require_level(k);
  std::vector<XAdmissible> out;
  const int l = static_cast<int>(a.size());
  if (l == 0) {
    out.push_back({Monomial::one(), 0});
    return out;
  }
  if (k == 0) return out;
  std::vector<bool> peak(l + 1, false);
  for (int p : peak_set(a)) peak[p] = true;
  std::vector<int> j(l, 0);
  auto descend = [&](auto&& self, int i) -> void {
    if (i == l) {
      std::vector<int> exp(j[0], 0);
      int distinct = 0;
      for (int v : j) {
        if (exp[v - 1] == 0) ++distinct;
        ++exp[v - 1];
      }
      out.push_back({Monomial({}, std::move(exp), {}), distinct});
      return;
    }
    for (int v = i == 0 ? k : j[i - 1]; v >= 1; --v) {
      if (i >= 2 && j[i - 2] == v && j[i - 1] == v && peak[i]) continue;
      j[i] = v;
      self(self, i + 1);
    }
  };
  descend(descend, 0);
  std::sort(out.begin(), out.end(),
            [](const XAdmissible& lhs, const XAdmissible& rhs) {
              return lhs.monomial < rhs.monomial;
            });
  return out;
}

std::vector<Monomial> z_admissible(const std::vector<Letter>& b) {
  std::vector<Monomial> out;
  const int l = static_cast<int>(b.size());
  if (l == 0) {
    out.push_back(Monomial::one());
    return out;
  }
  std::vector<int> idx(l, 0);
  for (int i = 0; i < l; ++i) {
    if (!b[i].is_simple())
      throw std::invalid_argument("the word must use simple letters only");
    idx[i] = b[i].simple_index();
  }
  std::vector<int> j(l, 0);
  auto descend = [&](auto&& self, int i) -> void {
    if (i == l) {
      int width = 0;
      for (int v : j) width = std::max(width, v);
      std::vector<int> exp(width, 0);
      for (int v : j) ++exp[v - 1];
      out.push_back(Monomial(std::move(exp), {}, {}));
      return;
    }
    for (int v = i == 0 ? 1 : j[i - 1]; v <= idx[i]; ++v) {
      if (i >= 1 && j[i - 1] == v && idx[i - 1] <= idx[i]) continue;
      j[i] = v;
      self(self, i + 1);
    }
  };
  descend(descend, 0);
  std::sort(out.begin(), out.end());
  return out;
}

Polynomial stanley_F(const SignedPermutation& w, int k) {
  require_level(k);
  Polynomial f(Context{0, k, 0});
  for (const auto& a : reduced_words(w, GroupType::C))
    for (const auto& [mono, distinct] : x_admissible(a, k))
      f.add_term(mono, pow2(distinct));
  return f;
}

Polynomial stanley_E(const SignedPermutation& w, int k) {
  require_level(k);
  if (!w.valid_for(GroupType::D))
    throw std::invalid_argument("the window is not an element of the group");
  Polynomial f(Context{0, k, 0});
  for (const auto& a : reduced_words(w, GroupType::D)) {
    const int o = fork_letter_count(a);
    for (const auto& [mono, distinct] : x_admissible(a, k))
      f.add_term(mono, pow2(distinct - o));
  }
  return f;
}

SSYTableau::SSYTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() ||
        (r > 0 && rows_[r].size() > rows_[r - 1].size()))
      throw std::invalid_argument("tableau rows must form a partition shape");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int e = rows_[r][c];
      if (e < 1)
        throw std::invalid_argument("tableau entries must be positive");
      if (c > 0 && rows_[r][c - 1] > e)
        throw std::invalid_argument("tableau rows must weakly increase");
      if (r > 0 && c < rows_[r - 1].size() && rows_[r - 1][c] >= e)
        throw std::invalid_argument(
            "tableau columns must strictly increase");
    }
  }
}

std::vector<int> SSYTableau::shape() const {
  std::vector<int> lambda;
  lambda.reserve(rows_.size());
  for (const auto& row : rows_) lambda.push_back(static_cast<int>(row.size()));
  return lambda;
}

int SSYTableau::max_entry() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int e : row) m = std::max(m, e);
  return m;
}

Monomial SSYTableau::weight() const {
  std::vector<int> exp(max_entry(), 0);
  for (const auto& row : rows_)
    for (int e : row) ++exp[e - 1];
  return Monomial(std::move(exp), {}, {});
}

ShiftedTableau::ShiftedTableau(std::vector<std::vector<int>> rows)
    : rows_(std::move(rows)) {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    if (rows_[r].empty() ||
        (r > 0 && rows_[r].size() >= rows_[r - 1].size()))
      throw std::invalid_argument("the shape must be a strict partition");
    for (std::size_t c = 0; c < rows_[r].size(); ++c) {
      const int e = rows_[r][c];
      if (e < 1)
        throw std::invalid_argument("tableau entries must be positive");
      if (c > 0) {
        const int prev = rows_[r][c - 1];
        if (prev > e)
          throw std::invalid_argument("tableau rows must weakly increase");
        if (prev == e && is_circled(e))
          throw std::invalid_argument("a row cannot repeat a circled value");
      }
      // The box above (r, c) sits one step to the right in row-local
      // coordinates because each row is indented one box further.
      if (r > 0 && c + 1 < rows_[r - 1].size()) {
        const int above = rows_[r - 1][c + 1];
        if (above > e)
          throw std::invalid_argument("tableau columns must weakly increase");
        if (above == e && !is_circled(e))
          throw std::invalid_argument("a column cannot repeat a plain value");
      }
    }
  }
}

std::vector<int> ShiftedTableau::shape() const {
  std::vector<int> mu;
  mu.reserve(rows_.size());
  for (const auto& row : rows_) mu.push_back(static_cast<int>(row.size()));
  return mu;
}

int ShiftedTableau::max_value() const {
  int m = 0;
  for (const auto& row : rows_)
    for (int e : row) m = std::max(m, value(e));
  return m;
}

bool ShiftedTableau::is_primed() const {
  for (const auto& row : rows_)
    if (is_circled(row.front())) return false;
  return true;
}

Monomial ShiftedTableau::weight() const {
  std::vector<int> exp(max_value(), 0);
  for (const auto& row : rows_)
    for (int e : row) ++exp[value(e) - 1];
  return Monomial({}, std::move(exp), {});
}

namespace {

void require_partition(const std::vector<int>& lambda, bool strict) {
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const bool ordered = i == 0 || (strict ? lambda[i - 1] > lambda[i]
                                           : lambda[i - 1] >= lambda[i]);
    if (lambda[i] < 1 || !ordered)
      throw std::invalid_argument(strict
                                      ? "the shape must be a strict partition"
                                      : "the shape must be a partition");
  }
}

}  // namespace

std::vector<SSYTableau> all_ssyt(const std::vector<int>& lambda, int k) {
  require_partition(lambda, false);
  require_level(k);
  std::vector<SSYTableau> out;
  std::vector<std::vector<int>> rows;
  for (int len : lambda) rows.emplace_back(len, 0);
  if (rows.empty()) {
    out.push_back(SSYTableau({}));
    return out;
  }
  auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      out.push_back(SSYTableau(rows));
      return;
    }
    const std::size_t nr = c + 1 < rows[r].size() ? r : r + 1;
    const std::size_t nc = c + 1 < rows[r].size() ? c + 1 : 0;
    int lo = c > 0 ? rows[r][c - 1] : 1;
    if (r > 0 && c < rows[r - 1].size()) lo = std::max(lo, rows[r - 1][c] + 1);
    for (int v = lo; v <= k; ++v) {
      rows[r][c] = v;
      self(self, nr, nc);
    }
  };
  fill(fill, 0, 0);
  return out;
}

std::vector<ShiftedTableau> all_shifted(const std::vector<int>& mu, int k,
                                        bool primed_only) {
  require_partition(mu, true);
  require_level(k);
  std::vector<ShiftedTableau> out;
  std::vector<std::vector<int>> rows;
  for (int len : mu) rows.emplace_back(len, 0);
  if (rows.empty()) {
    out.push_back(ShiftedTableau({}));
    return out;
  }
  auto fill = [&](auto&& self, std::size_t r, std::size_t c) -> void {
    if (r == rows.size()) {
      out.push_back(ShiftedTableau(rows));
      return;
    }
    const std::size_t nr = c + 1 < rows[r].size() ? r : r + 1;
    const std::size_t nc = c + 1 < rows[r].size() ? c + 1 : 0;
    for (int e = 1; e <= 2 * k; ++e) {
      const bool circ = ShiftedTableau::is_circled(e);
      if (primed_only && c == 0 && circ) continue;
      if (c > 0) {
        const int prev = rows[r][c - 1];
        if (e < prev || (e == prev && circ)) continue;
      }
      if (r > 0 && c + 1 < rows[r - 1].size()) {
        const int above = rows[r - 1][c + 1];
        if (e < above || (e == above && !circ)) continue;
      }
      rows[r][c] = e;
      self(self, nr, nc);
    }
  };
  fill(fill, 0, 0);
  return out;
}

Polynomial schur(const std::vector<int>& lambda, int k) {
  Polynomial p(Context{k, 0, 0});
  for (const SSYTableau& t : all_ssyt(lambda, k)) p.add_term(t.weight(), 1);
  return p;
}

Polynomial schur_P(const std::vector<int>& mu, int k) {
  Polynomial p(Context{0, k, 0});
  for (const ShiftedTableau& t : all_shifted(mu, k, true))
    p.add_term(t.weight(), 1);
  return p;
}

Polynomial schur_Q(const std::vector<int>& mu, int k) {
  Polynomial p(Context{0, k, 0});
  for (const ShiftedTableau& t : all_shifted(mu, k, false))
    p.add_term(t.weight(), 1);
  return p;
}

namespace {

// Pushes a dream to its bottom while remembering, for every significant
// element of the bottom, the box it occupied in the input dream.  Every
// admissible move on the faucet-free and single-faucet bases relocates one
// significant element from the move's upper box to its lower box.
struct TrackedBottom {
  PipeDream bottom;
  std::map<std::size_t, std::size_t> origin;  // bottom ordinal -> original
};

TrackedBottom tracked_bottom(const PipeDream& d) {
  const Base& base = d.base();
  ReductionResult steps = reduce_to_bottom(d);
  std::map<std::size_t, std::size_t> origin;
  for (std::size_t o = 0; o < base.boxes().size(); ++o)
    if (d.content(o) !=
        Base::default_content(base.cells()[base.boxes()[o]].role))
      origin.emplace(o, o);
  for (const AdmissibleMove& m : steps.moves) {
    auto it = origin.find(m.a);
    if (it == origin.end() || origin.count(m.b))
      throw std::logic_error("a reduction move did not relocate one element");
    origin.emplace(m.b, it->second);
    origin.erase(it);
  }
  return {std::move(steps.result), std::move(origin)};
}

const BaseCell& box_cell(const Base& base, std::size_t ordinal) {
  return base.cells()[base.boxes()[ordinal]];
}

// Column of the shifted diagram box held by a block box, counted from the
// block corner along the shared anti-diagonal (both the horizontal and the
// vertical part advance one diagonal per box).
int diagonal_offset(GroupType t, const BoxKey& key) {
  if (t == GroupType::B) return key.dc == 0 ? key.dr : key.dc;
  return key.dc == -1 ? key.dr - 1 : key.dc;
}

// The vertical part of a block; corners count as horizontal.
bool in_vertical_part(GroupType t, const BoxKey& key) {
  if (t == GroupType::B) return key.dc == 0 && key.dr >= 1;
  return key.dc == -1;
}

}  // namespace

SSYTableau dream_to_ssyt(const PipeDream& d) {
  const Base& base = d.base();
  if (base.type() != GroupType::A || base.is_double())
    throw std::invalid_argument(
        "the tableau map needs a plain staircase base");
  const auto gd = grassmannian_data(shape(d), GroupType::A);
  if (!gd) throw std::invalid_argument("the shape is not Grassmannian");
  const int k = gd->descent;
  TrackedBottom tb = tracked_bottom(d);
  std::vector<std::vector<int>> rows(gd->partition.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].assign(gd->partition[i], 0);
  for (const auto& [bottom_ord, origin_ord] : tb.origin) {
    const BaseCell& at = box_cell(base, bottom_ord);
    const BaseCell& from = box_cell(base, origin_ord);
    rows.at(k - at.row).at(at.col - 1) = k + 1 - from.row;
  }
  return SSYTableau(std::move(rows));
}

PipeDream ssyt_to_dream(const SSYTableau& t, const SignedPermutation& w) {
  const auto gd = grassmannian_data(w, GroupType::A);
  if (!gd) throw std::invalid_argument("the shape is not Grassmannian");
  if (t.shape() != gd->partition)
    throw std::invalid_argument(
        "the tableau shape does not match the permutation");
  const int k = gd->descent;
  if (t.max_entry() > k)
    throw std::invalid_argument("the tableau entries exceed the descent");
  BasePtr base = build_base(GroupType::A, w.n(), 0);
  std::vector<CellContent> contents = empty_dream(base).contents();
  const auto& rows = t.rows();
  for (std::size_t j = 1; j <= rows.size(); ++j)
    for (std::size_t c = 1; c <= rows[j - 1].size(); ++c) {
      const int v = rows[j - 1][c - 1];
      const int row = k + 1 - v;
      const int col = static_cast<int>(c) + v - static_cast<int>(j);
      contents[base->box_ordinal_at(row, col)] = CellContent::Cross;
    }
  return PipeDream(std::move(base), std::move(contents));
}

ShiftedTableau dream_to_shifted(const PipeDream& d) {
  const Base& base = d.base();
  const GroupType t = base.type();
  if ((t != GroupType::B && t != GroupType::C) || base.is_double())
    throw std::invalid_argument(
        "the tableau map needs a one- or two-faucet block base");
  const auto gd = grassmannian_data(shape(d), t);
  if (!gd) throw std::invalid_argument("the shape is not Grassmannian");
  TrackedBottom tb = tracked_bottom(d);
  std::vector<std::vector<int>> rows(gd->partition.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    rows[i].assign(gd->partition[i], 0);
  for (const auto& [bottom_ord, origin_ord] : tb.origin) {
    const BaseCell& at = box_cell(base, bottom_ord);
    const BaseCell& from = box_cell(base, origin_ord);
    const int entry = in_vertical_part(t, from.key)
                          ? ShiftedTableau::circled(from.key.block)
                          : ShiftedTableau::plain(from.key.block);
    rows.at(at.key.block - 1).at(diagonal_offset(t, at.key)) = entry;
  }
  return ShiftedTableau(std::move(rows));
}

PipeDream shifted_to_dream(GroupType type, const ShiftedTableau& t,
                           const SignedPermutation& w, int k) {
  if (type != GroupType::B && type != GroupType::C)
    throw std::invalid_argument(
        "the tableau map needs a one- or two-faucet block base");
  const auto gd = grassmannian_data(w, type);
  if (!gd) throw std::invalid_argument("the shape is not Grassmannian");
  if (t.shape() != gd->partition)
    throw std::invalid_argument(
        "the tableau shape does not match the permutation");
  if (t.max_value() > k)
    throw std::invalid_argument(
        "the tableau entries exceed the number of blocks");
  if (type == GroupType::B && !t.is_primed())
    throw std::invalid_argument(
        "the tableau must have plain row-leading entries");
  BasePtr base = build_base(type, w.n(), k);
  std::map<BoxKey, std::size_t> by_key;
  for (std::size_t o = 0; o < base->boxes().size(); ++o)
    by_key.emplace(box_cell(*base, o).key, o);
  std::vector<CellContent> contents = empty_dream(base).contents();
  const auto& rows = t.rows();
  for (std::size_t i = 1; i <= rows.size(); ++i)
    for (std::size_t j = 1; j <= rows[i - 1].size(); ++j) {
      const int e = rows[i - 1][j - 1];
      const int block = ShiftedTableau::value(e);
      const int offset = static_cast<int>(j) - 1;
      BoxKey key{1, block, 0, offset};
      if (ShiftedTableau::is_circled(e))
        key = type == GroupType::B ? BoxKey{1, block, offset, 0}
                                   : BoxKey{1, block, 1 + offset, -1};
      const auto it = by_key.find(key);
      if (it == by_key.end())
        throw std::invalid_argument("the tableau does not fit the base");
      const BaseCell& cell = box_cell(*base, it->second);
      contents[it->second] = cell.role == CellRole::FaucetSpot
                                 ? CellContent::ElbowWithFaucet
                                 : CellContent::Cross;
    }
  return PipeDream(std::move(base), std::move(contents));
}

namespace {

std::string shape_json(const std::vector<int>& shape) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out << ",";
    out << shape[i];
  }
  out << "]";
  return out.str();
}

}  // namespace

std::string to_json(const SSYTableau& t) {
  std::ostringstream out;
  out << "{\"shape\":" << shape_json(t.shape()) << ",\"rows\":[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out << ",";
    out << "[";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out << ",";
      out << t.rows()[r][c];
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

std::string to_json(const ShiftedTableau& t) {
  std::ostringstream out;
  out << "{\"shape\":" << shape_json(t.shape()) << ",\"rows\":[";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out << ",";
    out << "[";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out << ",";
      const int e = t.rows()[r][c];
      if (ShiftedTableau::is_circled(e))
        out << "\"" << ShiftedTableau::value(e) << "'\"";
      else
        out << ShiftedTableau::value(e);
    }
    out << "]";
  }
  out << "]}";
  return out.str();
}

std::string to_latex(const SSYTableau& t) {
  std::string out = "\\begin{ytableau}\n";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += " \\\\\n";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out += " & ";
      out += std::to_string(t.rows()[r][c]);
    }
  }
  out += "\n\\end{ytableau}\n";
  return out;
}

std::string to_latex(const ShiftedTableau& t) {
  std::string out = "\\begin{ytableau}\n";
  for (std::size_t r = 0; r < t.rows().size(); ++r) {
    if (r) out += " \\\\\n";
    for (std::size_t c = 0; c < r; ++c) out += "\\none & ";
    for (std::size_t c = 0; c < t.rows()[r].size(); ++c) {
      if (c) out += " & ";
      const int e = t.rows()[r][c];
      out += std::to_string(ShiftedTableau::value(e));
      if (ShiftedTableau::is_circled(e)) out += "^\\circ";
    }
  }
  out += "\n\\end{ytableau}\n";
  return out;
}

}  // namespace pipedreams
