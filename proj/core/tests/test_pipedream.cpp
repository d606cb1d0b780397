#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pipedreams/pipedream.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

using namespace pipedreams;

namespace {

using CC = CellContent;

SignedPermutation perm(std::vector<int> w) { return SignedPermutation(std::move(w)); }

// Dream from (row, col, content) entries; unlisted boxes keep their default.
PipeDream make_dream(BasePtr base,
                     const std::vector<std::tuple<int, int, CC>>& entries) {
  std::vector<CC> contents = empty_dream(base).contents();
  for (const auto& [r, c, cc] : entries)
    contents[base->box_ordinal_at(r, c)] = cc;
  return PipeDream(std::move(base), std::move(contents));
}

Monomial mono(std::vector<int> z, std::vector<int> x = {},
              std::vector<int> t = {}) {
  return Monomial(std::move(z), std::move(x), std::move(t));
}

// Box coordinates in reading order.
std::vector<std::pair<int, int>> box_coords(const Base& base) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t i : base.boxes())
    out.emplace_back(base.cells()[i].row, base.cells()[i].col);
  return out;
}

int letter_count(CC c) {
  switch (c) {
    case CC::Cross:
    case CC::ElbowWithFaucet:
    case CC::CrossWithFaucet:
      return 1;
    case CC::ElbowTwoFaucets:
      return 2;
    default:
      return 0;
  }
}

// Sum of row * letters; every admissible move must strictly increase it.
int depth_score(const PipeDream& d) {
  const Base& base = d.base();
  int total = 0;
  for (std::size_t i = 0; i < base.boxes().size(); ++i)
    total += base.cells()[base.boxes()[i]].row * letter_count(d.content(i));
  return total;
}

// Visits every filling of the base's boxes with role-allowed contents.
template <typename F>
void for_each_filling(const BasePtr& base, F&& visit) {
  std::vector<CC> fill(base->boxes().size(), CC::Elbow);
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == fill.size()) {
      visit(PipeDream(base, fill));
      return;
    }
    for (CC c : base->allowed_contents(base->cells()[base->boxes()[i]].role)) {
      fill[i] = c;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
}

const std::array<std::array<CC, 4>, 10> kPatterns = {{
    {CC::Cross, CC::Elbow, CC::Elbow, CC::Cross},
    {CC::CrossWithFaucet, CC::Elbow, CC::Elbow, CC::Cross},
    {CC::Cross, CC::Elbow, CC::Elbow, CC::CrossWithFaucet},
    {CC::CrossWithFaucet, CC::Elbow, CC::Elbow, CC::CrossWithFaucet},
    {CC::ElbowWithFaucet, CC::ElbowUp, CC::ElbowUp, CC::ElbowWithFaucet},
    {CC::ElbowTwoFaucets, CC::Elbow, CC::CrossWithFaucet, CC::Cross},
    {CC::ElbowTwoFaucets, CC::Elbow, CC::Cross, CC::CrossWithFaucet},
    {CC::CrossWithFaucet, CC::Cross, CC::Elbow, CC::ElbowTwoFaucets},
    {CC::Cross, CC::CrossWithFaucet, CC::Elbow, CC::ElbowTwoFaucets},
    {CC::ElbowTwoFaucets, CC::Elbow, CC::Cross, CC::Cross},
}};

// All dreams that reach d by one admissible move, found by inverting the
// move patterns and validating through the public move interface.
std::vector<PipeDream> upward_neighbors(const PipeDream& d) {
  const Base& base = d.base();
  std::vector<PipeDream> out;
  for (std::size_t a = 0; a < base.boxes().size(); ++a) {
    for (std::size_t b = 0; b < base.boxes().size(); ++b) {
      const BaseCell& ca = base.cells()[base.boxes()[a]];
      const BaseCell& cb = base.cells()[base.boxes()[b]];
      if (ca.row >= cb.row) continue;
      for (int kind = 1; kind <= 10; ++kind) {
        const auto& p = kPatterns[kind - 1];
        if (d.content(a) != p[2] || d.content(b) != p[3]) continue;
        auto allowed_a = base.allowed_contents(ca.role);
        auto allowed_b = base.allowed_contents(cb.role);
        if (std::find(allowed_a.begin(), allowed_a.end(), p[0]) ==
            allowed_a.end())
          continue;
        if (std::find(allowed_b.begin(), allowed_b.end(), p[1]) ==
            allowed_b.end())
          continue;
        PipeDream up = d.with_content(a, p[0]).with_content(b, p[1]);
        AdmissibleMove m{a, b, kind};
        auto moves = admissible_moves(up);
        if (std::find(moves.begin(), moves.end(), m) == moves.end()) continue;
        if (!(apply_move(up, m) == d)) continue;
        out.push_back(std::move(up));
      }
    }
  }
  return out;
}

// The move graph restricted to one shape, explored upward from the bottom
// dream, must reach exactly the enumerated dream set.
void check_closure(GroupType t, const SignedPermutation& w, int k) {
  std::vector<PipeDream> expected = enumerate_dreams(t, w, k);
  PipeDream bottom = embed_dream(bottom_dream(t, w), k);
  std::vector<PipeDream> seen{bottom};
  std::vector<PipeDream> queue{bottom};
  while (!queue.empty()) {
    PipeDream d = queue.back();
    queue.pop_back();
    for (PipeDream& up : upward_neighbors(d)) {
      auto it = std::lower_bound(seen.begin(), seen.end(), up, dream_less);
      if (it != seen.end() && *it == up) continue;
      queue.push_back(up);
      seen.insert(it, std::move(up));
    }
  }
  REQUIRE(seen.size() == expected.size());
  for (std::size_t i = 0; i < seen.size(); ++i) CHECK(seen[i] == expected[i]);
}

// Every enumerated dream reduces to the embedded bottom, and the recorded
// move chain replays to the same endpoint.
void check_reduction_endpoints(GroupType t, const SignedPermutation& w,
                               int k) {
  PipeDream want = embed_dream(bottom_dream(t, w), k);
  CHECK(admissible_moves(want).empty());
  for (const PipeDream& d : enumerate_dreams(t, w, k)) {
    ReductionResult res = reduce_to_bottom(d);
    CHECK(res.result == want);
    PipeDream replay = d;
    for (const AdmissibleMove& m : res.moves) replay = apply_move(replay, m);
    CHECK(replay == want);
  }
}

void check_move_invariants(GroupType t, const SignedPermutation& w, int k) {
  for (const PipeDream& d : enumerate_dreams(t, w, k)) {
    const Monomial before = monomial(d);
    const int score = depth_score(d);
    auto moves = admissible_moves(d);
    auto key = [](const AdmissibleMove& m) {
      return std::make_tuple(m.a, m.b, m.kind);
    };
    CHECK(std::is_sorted(moves.begin(), moves.end(),
                         [&](const AdmissibleMove& l, const AdmissibleMove& r) {
                           return key(l) < key(r);
                         }));
    CHECK(std::adjacent_find(moves.begin(), moves.end()) == moves.end());
    for (const AdmissibleMove& m : moves) {
      PipeDream next = apply_move(d, m);
      CHECK(shape(next) == w);
      CHECK(is_reduced(next));
      CHECK(!dominance_less(monomial(next), before));
      CHECK(depth_score(next) > score);
    }
  }
}

}  // namespace

TEST_CASE("content names and glyphs") {
  CHECK(std::string(cell_content_name(CC::Elbow)) == "elbow");
  CHECK(std::string(cell_content_name(CC::ElbowUp)) == "elbow_up");
  CHECK(std::string(cell_content_name(CC::SingleElbow)) == "single_elbow");
  CHECK(std::string(cell_content_name(CC::Cross)) == "cross");
  CHECK(std::string(cell_content_name(CC::ElbowWithFaucet)) ==
        "elbow_with_faucet");
  CHECK(std::string(cell_content_name(CC::CrossWithFaucet)) ==
        "cross_with_faucet");
  CHECK(std::string(cell_content_name(CC::ElbowTwoFaucets)) ==
        "elbow_two_faucets");
  CHECK(cell_content_glyph(CC::Elbow) == '.');
  CHECK(cell_content_glyph(CC::ElbowUp) == '.');
  CHECK(cell_content_glyph(CC::SingleElbow) == ' ');
  CHECK(cell_content_glyph(CC::Cross) == '+');
  CHECK(cell_content_glyph(CC::ElbowWithFaucet) == 'o');
  CHECK(cell_content_glyph(CC::CrossWithFaucet) == '@');
  CHECK(cell_content_glyph(CC::ElbowTwoFaucets) == '%');
}

TEST_CASE("base geometry: type A staircase") {
  BasePtr base = build_base(GroupType::A, 4, 0);
  CHECK(base->type() == GroupType::A);
  CHECK(base->n() == 4);
  CHECK(base->k() == 0);
  CHECK(!base->is_double());
  CHECK(base->rows() == 4);
  CHECK(box_coords(*base) ==
        std::vector<std::pair<int, int>>{
            {1, 3}, {1, 2}, {1, 1}, {2, 2}, {2, 1}, {3, 1}});
  CHECK(base->exit_cols() == std::vector<int>{1, 2, 3, 4});
  CHECK(base->entry(2) == std::pair<int, int>{2, 1});
  CHECK(base->entry(4) == std::pair<int, int>{4, 1});
  CHECK_THROWS_AS(base->entry(0), std::invalid_argument);
  CHECK_THROWS_AS(base->entry(5), std::invalid_argument);

  const BaseCell& c12 = base->cells()[base->cell_at(1, 2)];
  CHECK(c12.region == CellRegion::Staircase);
  CHECK(c12.role == CellRole::Plain);
  CHECK(c12.letter == Letter::simple(2));
  CHECK(c12.var.kind == VariableTag::Kind::z);
  CHECK(c12.var.index == 1);
  CHECK(c12.key == BoxKey{0, 0, 1, 1});
  const BaseCell& c21 = base->cells()[base->cell_at(2, 1)];
  CHECK(c21.letter == Letter::simple(2));
  CHECK(c21.var.index == 2);
  // caps close each row one step left of the previous
  CHECK(base->cells()[base->cell_at(1, 4)].kind == CellKind::Cap);
  CHECK(base->cells()[base->cell_at(3, 2)].kind == CellKind::Cap);
  CHECK(base->cells()[base->cell_at(4, 1)].kind == CellKind::Cap);
  CHECK(base->cell_at(4, 2) == Base::npos);
}

TEST_CASE("base geometry: type B blocks") {
  BasePtr base = build_base(GroupType::B, 3, 2);
  CHECK(base->rows() == 9);
  CHECK(box_coords(*base) ==
        std::vector<std::pair<int, int>>{{1, 9},
                                         {1, 8},
                                         {1, 7},
                                         {2, 7},
                                         {3, 7},
                                         {4, 6},
                                         {4, 5},
                                         {4, 4},
                                         {5, 4},
                                         {6, 4},
                                         {7, 3},
                                         {7, 2},
                                         {8, 2}});
  CHECK(base->exit_cols() == std::vector<int>{8, 9, 10});
  CHECK(base->entry(1) == std::pair<int, int>{7, 2});
  CHECK(base->entry(3) == std::pair<int, int>{9, 2});

  const BaseCell& corner2 = base->cells()[base->cell_at(1, 7)];
  CHECK(corner2.role == CellRole::FaucetSpot);
  CHECK(corner2.block == 2);
  CHECK(corner2.letter == Letter::s0());
  CHECK(corner2.var.kind == VariableTag::Kind::x);
  CHECK(corner2.var.index == 2);
  CHECK(corner2.key == BoxKey{1, 2, 0, 0});
  const BaseCell& arm = base->cells()[base->cell_at(4, 5)];
  CHECK(arm.role == CellRole::Plain);
  CHECK(arm.block == 1);
  CHECK(arm.letter == Letter::simple(1));
  CHECK(arm.var.index == 1);
  const BaseCell& stair = base->cells()[base->cell_at(7, 3)];
  CHECK(stair.region == CellRegion::Staircase);
  CHECK(stair.letter == Letter::simple(2));
  CHECK(stair.var.kind == VariableTag::Kind::z);
  CHECK(stair.var.index == 1);
  // scenery around the blocks
  CHECK(base->cells()[base->cell_at(2, 6)].kind == CellKind::Boundary);
  CHECK(base->cells()[base->cell_at(2, 8)].kind == CellKind::Sea);
  CHECK(base->cells()[base->cell_at(1, 10)].kind == CellKind::Cap);
  CHECK(base->cell_at(1, 1) == Base::npos);
  CHECK_THROWS_WITH_AS(base->box_ordinal_at(1, 10), "no box at (1, 10)",
                       std::invalid_argument);
}

TEST_CASE("base geometry: type C blocks") {
  BasePtr base = build_base(GroupType::C, 3, 2);
  CHECK(base->rows() == 11);
  CHECK(box_coords(*base) ==
        std::vector<std::pair<int, int>>{{1, 11},
                                         {1, 10},
                                         {1, 9},
                                         {2, 8},
                                         {3, 8},
                                         {4, 8},
                                         {5, 7},
                                         {5, 6},
                                         {5, 5},
                                         {6, 4},
                                         {7, 4},
                                         {8, 4},
                                         {9, 3},
                                         {9, 2},
                                         {10, 2}});
  CHECK(base->exit_cols() == std::vector<int>{10, 11, 12});

  // the corner spot and the spot atop the vertical part both take faucets
  const BaseCell& corner2 = base->cells()[base->cell_at(1, 9)];
  CHECK(corner2.role == CellRole::FaucetSpot);
  CHECK(corner2.letter == Letter::s0());
  CHECK(corner2.key == BoxKey{1, 2, 0, 0});
  const BaseCell& vert0 = base->cells()[base->cell_at(2, 8)];
  CHECK(vert0.role == CellRole::FaucetSpot);
  CHECK(vert0.block == 2);
  CHECK(vert0.letter == Letter::s0());
  CHECK(vert0.key == BoxKey{1, 2, 1, -1});
  const BaseCell& vert1 = base->cells()[base->cell_at(3, 8)];
  CHECK(vert1.role == CellRole::Plain);
  CHECK(vert1.letter == Letter::simple(1));
}

TEST_CASE("base geometry: type D blocks") {
  BasePtr base = build_base(GroupType::D, 4, 2);
  CHECK(base->rows() == 10);
  CHECK(box_coords(*base) ==
        std::vector<std::pair<int, int>>{{1, 10},
                                         {1, 9},
                                         {1, 8},
                                         {2, 8},
                                         {3, 8},
                                         {4, 7},
                                         {4, 6},
                                         {4, 5},
                                         {5, 5},
                                         {6, 5},
                                         {7, 4},
                                         {7, 3},
                                         {7, 2},
                                         {8, 3},
                                         {8, 2},
                                         {9, 2}});
  CHECK(base->exit_cols() == std::vector<int>{8, 9, 10, 11});

  const BaseCell& corner2 = base->cells()[base->cell_at(1, 8)];
  CHECK(corner2.role == CellRole::SignCorner);
  CHECK(corner2.block == 2);
  CHECK(corner2.letter == Letter::simple(1));
  CHECK(corner2.var.index == 2);
  const BaseCell& corner1 = base->cells()[base->cell_at(4, 5)];
  CHECK(corner1.role == CellRole::SignCorner);
  CHECK(corner1.block == 1);
  // arm and vertical letters start at 2 in type D
  CHECK(base->cells()[base->cell_at(1, 9)].letter == Letter::simple(2));
  CHECK(base->cells()[base->cell_at(1, 10)].letter == Letter::simple(3));
  CHECK(base->cells()[base->cell_at(2, 8)].letter == Letter::simple(2));
  CHECK(base->cells()[base->cell_at(3, 8)].letter == Letter::simple(3));
}

TEST_CASE("base geometry: double bases add a northeast staircase") {
  BasePtr a2 = build_base(GroupType::A, 2, 0, true);
  CHECK(a2->rows() == 3);
  CHECK(box_coords(*a2) == std::vector<std::pair<int, int>>{{1, 2}, {2, 1}});
  CHECK(a2->exit_cols() == std::vector<int>{2, 3});
  const BaseCell& ne = a2->cells()[a2->cell_at(1, 2)];
  CHECK(ne.region == CellRegion::Northeast);
  CHECK(ne.role == CellRole::Plain);
  CHECK(ne.letter == Letter::simple(1));
  CHECK(ne.var.kind == VariableTag::Kind::t);
  CHECK(ne.var.index == 1);
  CHECK(ne.key == BoxKey{2, 0, 1, 1});
  // the northeast rows have open sea to their left, no boundary tile
  CHECK(a2->cells()[a2->cell_at(1, 1)].kind == CellKind::Sea);

  BasePtr b2 = build_base(GroupType::B, 2, 1, true);
  CHECK(b2->rows() == 5);
  CHECK(box_coords(*b2) == std::vector<std::pair<int, int>>{
                               {1, 5}, {2, 4}, {2, 3}, {3, 3}, {4, 2}});
  CHECK(b2->exit_cols() == std::vector<int>{5, 6});
  const BaseCell& tne = b2->cells()[b2->cell_at(1, 5)];
  CHECK(tne.region == CellRegion::Northeast);
  CHECK(tne.var.kind == VariableTag::Kind::t);
}

TEST_CASE("base construction errors") {
  CHECK_THROWS_WITH_AS(build_base(GroupType::B, 0, 1),
                       "the base needs at least one strand",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_base(GroupType::D, 1, 0),
                       "a type D base needs at least two strands",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(build_base(GroupType::C, 2, -1),
                       "the number of blocks cannot be negative",
                       std::invalid_argument);
}

TEST_CASE("content validation and defaults") {
  CHECK(Base::default_content(CellRole::Plain) == CC::Elbow);
  CHECK(Base::default_content(CellRole::FaucetSpot) == CC::ElbowUp);
  CHECK(Base::default_content(CellRole::SignCorner) == CC::Elbow);

  BasePtr base = build_base(GroupType::B, 2, 1);
  CHECK(base->allowed_contents(CellRole::Plain) ==
        std::vector<CC>{CC::Elbow, CC::Cross});
  CHECK(base->allowed_contents(CellRole::FaucetSpot) ==
        std::vector<CC>{CC::ElbowUp, CC::ElbowWithFaucet});
  BasePtr based = build_base(GroupType::D, 3, 1);
  CHECK(based->allowed_contents(CellRole::SignCorner) ==
        std::vector<CC>{CC::Elbow, CC::Cross, CC::CrossWithFaucet,
                        CC::ElbowTwoFaucets});

  // a cross cannot sit on a faucet spot: block 1 corner of B_2 is (1, 3)
  std::vector<CC> bad(base->boxes().size(), CC::Elbow);
  bad[base->box_ordinal_at(1, 3)] = CC::Cross;
  CHECK_THROWS_WITH_AS(PipeDream(base, bad),
                       "cell content cross not allowed at (1, 3)",
                       std::invalid_argument);
  std::vector<CC> wrong_size(base->boxes().size() + 1, CC::Elbow);
  CHECK_THROWS_WITH_AS(PipeDream(base, wrong_size),
                       "the content list does not match the number of boxes",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(PipeDream(nullptr, {}), "a pipe dream needs a base",
                       std::invalid_argument);

  PipeDream empty = empty_dream(base);
  CHECK(shape(empty) == SignedPermutation::identity(2));
  CHECK(is_reduced(empty));
  CHECK(monomial(empty).is_one());
  CHECK_THROWS_AS(empty.content(999), std::invalid_argument);
}

TEST_CASE("golden dream on the two-block C base") {
  BasePtr base = build_base(GroupType::C, 3, 2);
  PipeDream d = make_dream(base, {{1, 10, CC::Cross},
                                  {5, 7, CC::Cross},
                                  {5, 6, CC::Cross},
                                  {6, 4, CC::ElbowWithFaucet},
                                  {9, 2, CC::Cross},
                                  {10, 2, CC::Cross}});
  ReadWord rw = read_word(d);
  CHECK(word_str(rw.word) == "s1 s2 s1 s0 s1 s2");
  CHECK(rw.word.marked.empty());
  CHECK(rw.t_len == 0);
  CHECK(rw.x_len == 4);
  CHECK(rw.z_len == 2);
  CHECK(shape(d) == perm({2, 1, -3}));
  CHECK(is_reduced(d));
  CHECK(is_reduced_by_strands(d));
  CHECK(monomial(d) == mono({1, 1}, {3, 1}));
  CHECK(trace_strands(d) == std::vector<int>{2, 1, -3});
}

TEST_CASE("golden dreams on the two-block D base") {
  BasePtr base = build_base(GroupType::D, 4, 2);

  // reduced: a two-faucet corner next to a fauceted cross
  PipeDream d1 = make_dream(base, {{1, 9, CC::Cross},
                                   {1, 8, CC::ElbowTwoFaucets},
                                   {4, 7, CC::Cross},
                                   {4, 6, CC::Cross},
                                   {4, 5, CC::CrossWithFaucet},
                                   {7, 2, CC::Cross},
                                   {9, 2, CC::Cross}});
  ReadWord rw1 = read_word(d1);
  CHECK(word_str(rw1.word) == "s2 s1 s1^ s3 s2 s1^ s1 s3");
  CHECK(rw1.word.marked == std::vector<std::size_t>{1});
  CHECK(rw1.t_len == 0);
  CHECK(rw1.x_len == 6);
  CHECK(rw1.z_len == 2);
  auto readings = word_readings(rw1.word);
  REQUIRE(readings.size() == 2);
  CHECK(word_str(readings[0]) == "s2 s1^ s1 s3 s2 s1^ s1 s3");
  CHECK(word_str(readings[1]) == "s2 s1 s1^ s3 s2 s1^ s1 s3");
  for (const auto& reading : readings)
    CHECK(is_reduced_word(reading, GroupType::D, 4));
  CHECK(shape(d1) == perm({1, -4, 2, -3}));
  CHECK(is_reduced(d1));
  CHECK(is_reduced_by_strands(d1));
  CHECK(monomial(d1) == mono({1, 0, 1}, {3, 3}));
  CHECK(trace_strands(d1) == std::vector<int>{1, -4, 2, -3});

  // non-reduced: the strand picture still realizes the word's product
  PipeDream d2 = make_dream(base, {{1, 8, CC::CrossWithFaucet},
                                   {1, 9, CC::Cross},
                                   {2, 8, CC::Cross},
                                   {4, 5, CC::ElbowTwoFaucets},
                                   {7, 2, CC::Cross},
                                   {7, 3, CC::Cross},
                                   {9, 2, CC::Cross}});
  ReadWord rw2 = read_word(d2);
  CHECK(word_str(rw2.word) == "s2 s1^ s2 s1 s1^ s2 s1 s3");
  CHECK(rw2.word.marked == std::vector<std::size_t>{3});
  CHECK(!is_reduced(d2));
  CHECK(!is_reduced_by_strands(d2));
  for (const auto& reading : word_readings(rw2.word))
    CHECK(!is_reduced_word(reading, GroupType::D, 4));
  CHECK(monomial(d2) == mono({2, 0, 1}, {2, 3}));
  CHECK(shape(d2) == perm({-1, 3, 4, -2}));
  CHECK(trace_strands(d2) == std::vector<int>{-1, 3, 4, -2});
}

TEST_CASE("type A dreams of 1432") {
  auto dreams = enumerate_dreams(GroupType::A, perm({1, 4, 3, 2}), 0);
  REQUIRE(dreams.size() == 5);
  CHECK(std::is_sorted(dreams.begin(), dreams.end(), dream_less));
  std::multiset<Monomial> got;
  for (const PipeDream& d : dreams) {
    CHECK(is_reduced(d));
    CHECK(trace_strands(d) == std::vector<int>{1, 4, 3, 2});
    got.insert(monomial(d));
  }
  std::multiset<Monomial> want{mono({0, 2, 1}), mono({1, 2}), mono({1, 1, 1}),
                               mono({2, 0, 1}), mono({2, 1})};
  CHECK(got == want);
}

TEST_CASE("dream multisets match the closed forms on the rank-3 D group") {
  // sums decoded elsewhere: the multiset of weights is a complete check
  auto collect = [](std::vector<int> w, int k) {
    std::multiset<Monomial> out;
    for (const PipeDream& d :
         enumerate_dreams(GroupType::D, perm(std::move(w)), k))
      out.insert(monomial(d));
    return out;
  };
  // w = (3,1,2): z1^2 + 2 z1 (x1+x2) + (x1+x2)^2
  CHECK(collect({3, 1, 2}, 2) ==
        std::multiset<Monomial>{mono({2}), mono({1}, {1}), mono({1}, {1}),
                                mono({1}, {0, 1}), mono({1}, {0, 1}),
                                mono({}, {2}), mono({}, {1, 1}),
                                mono({}, {1, 1}), mono({}, {0, 2})});
  // w = (-2,3,-1): (z1+z2)(x1+x2) + (x1+x2)^2
  CHECK(collect({-2, 3, -1}, 2) ==
        std::multiset<Monomial>{mono({1}, {1}), mono({1}, {0, 1}),
                                mono({0, 1}, {1}), mono({0, 1}, {0, 1}),
                                mono({}, {2}), mono({}, {1, 1}),
                                mono({}, {1, 1}), mono({}, {0, 2})});
  // w = (-1,-3,2): z1 (x1+x2)^2 + (x1^3+x2^3) + 2 x1 x2 (x1+x2)
  CHECK(collect({-1, -3, 2}, 2) ==
        std::multiset<Monomial>{mono({1}, {2}), mono({1}, {1, 1}),
                                mono({1}, {1, 1}), mono({1}, {0, 2}),
                                mono({}, {3}), mono({}, {2, 1}),
                                mono({}, {2, 1}), mono({}, {1, 2}),
                                mono({}, {1, 2}), mono({}, {0, 3})});
  CHECK(collect({-1, -3, 2}, 1) ==
        std::multiset<Monomial>{mono({1}, {2}), mono({}, {3})});
}

TEST_CASE("small hand counts") {
  CHECK(enumerate_dreams(GroupType::B, perm({-1}), 1).size() == 1);
  auto c1 = enumerate_dreams(GroupType::C, perm({-1}), 1);
  REQUIRE(c1.size() == 2);
  CHECK(monomial(c1[0]) == mono({}, {1}));
  CHECK(monomial(c1[1]) == mono({}, {1}));
  auto bid = enumerate_dreams(GroupType::B, SignedPermutation::identity(2), 1);
  REQUIRE(bid.size() == 1);
  CHECK(monomial(bid[0]).is_one());
  CHECK_THROWS_WITH_AS(enumerate_dreams(GroupType::A, perm({-1, 2}), 0),
                       "the window is not an element of the group",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(bottom_dream(GroupType::D, perm({-1, 2})),
                       "the window is not an element of the group",
                       std::invalid_argument);
}

TEST_CASE("reducedness by strands agrees with the word criterion") {
  auto sweep = [](GroupType t, int n, int k, bool dbl) {
    for_each_filling(build_base(t, n, k, dbl), [&](const PipeDream& d) {
      CHECK(is_reduced(d) == is_reduced_by_strands(d));
      CHECK(trace_strands(d) == shape(d).window());
    });
  };
  sweep(GroupType::A, 3, 0, false);
  sweep(GroupType::B, 2, 1, false);
  sweep(GroupType::C, 2, 1, false);
  sweep(GroupType::D, 2, 2, false);
  sweep(GroupType::D, 3, 1, false);
  sweep(GroupType::A, 3, 0, true);
  sweep(GroupType::B, 2, 1, true);
  sweep(GroupType::C, 2, 1, true);
  sweep(GroupType::D, 3, 1, true);
}

TEST_CASE("moves preserve shape and reducedness and push content down") {
  check_move_invariants(GroupType::A, perm({1, 4, 3, 2}), 0);
  check_move_invariants(GroupType::B, perm({-2, -1}), 2);
  check_move_invariants(GroupType::C, perm({-1, -2}), 2);
  check_move_invariants(GroupType::D, perm({-1, -3, 2}), 2);
}

TEST_CASE("move application errors") {
  BasePtr base = build_base(GroupType::A, 3, 0);
  PipeDream d = make_dream(base, {{1, 1, CC::Cross}});
  std::size_t a11 = base->box_ordinal_at(1, 1);
  std::size_t a21 = base->box_ordinal_at(2, 1);
  std::size_t a12 = base->box_ordinal_at(1, 2);

  CHECK_THROWS_WITH_AS(apply_move(d, {a11, a21, 0}), "move kind out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_move(d, {a11, a21, 11}), "move kind out of range",
                       std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_move(d, {a11, a11, 1}),
                       "move box ordinals out of range", std::invalid_argument);
  CHECK_THROWS_WITH_AS(
      apply_move(d, {a21, a11, 1}),
      "the move's upper box must lie strictly above the lower one",
      std::invalid_argument);
  CHECK_THROWS_WITH_AS(apply_move(d, {a12, a21, 1}),
                       "the boxes do not match the move pattern",
                       std::invalid_argument);
  // a fauceted result cannot land on a plain type A box
  CHECK_THROWS_WITH_AS(apply_move(d, {a11, a21, 3}),
                       "the move target is not allowed at this box",
                       std::invalid_argument);
  // pushing the cross from (1,1) to (2,1) would turn s1 into s2
  CHECK_THROWS_WITH_AS(apply_move(d, {a11, a21, 1}),
                       "the move does not preserve the shape",
                       std::invalid_argument);
  CHECK(admissible_moves(d).empty());
}

TEST_CASE("splitting move on a two-faucet corner") {
  // The dream below is reduced with no other applicable move; only the
  // splitting kind 10 connects it to the rest of its shape's dream set.
  BasePtr base = build_base(GroupType::D, 3, 2);
  PipeDream stuck = make_dream(base, {{1, 6, CC::ElbowTwoFaucets},
                                      {3, 4, CC::CrossWithFaucet},
                                      {3, 5, CC::Cross}});
  SignedPermutation w = perm({-3, 1, -2});
  CHECK(shape(stuck) == w);
  CHECK(is_reduced(stuck));

  auto moves = admissible_moves(stuck);
  REQUIRE(moves.size() == 3);
  std::vector<std::pair<int, int>> targets;
  for (const AdmissibleMove& m : moves) {
    CHECK(m.kind == 10);
    CHECK(m.a == base->box_ordinal_at(1, 6));
    const BaseCell& cb = base->cells()[base->boxes()[m.b]];
    targets.emplace_back(cb.row, cb.col);
  }
  CHECK(targets == std::vector<std::pair<int, int>>{{4, 4}, {5, 3}, {6, 2}});

  ReductionResult res = reduce_to_bottom(stuck);
  REQUIRE(res.moves.size() == 1);
  CHECK(res.moves[0].kind == 10);
  CHECK(res.result == bottom_dream(GroupType::D, w));
  CHECK(monomial(res.result) == mono({0, 1}, {2, 1}));
}

TEST_CASE("reduction follows the classical chain in type A") {
  BasePtr base = build_base(GroupType::A, 6, 0);
  PipeDream d = make_dream(base, {{1, 3, CC::Cross},
                                  {2, 2, CC::Cross},
                                  {2, 3, CC::Cross},
                                  {3, 1, CC::Cross},
                                  {3, 2, CC::Cross},
                                  {3, 3, CC::Cross}});
  SignedPermutation w = perm({1, 2, 6, 5, 4, 3});
  CHECK(shape(d) == w);
  CHECK(is_reduced(d));
  CHECK(lehmer_code(w).L == std::vector<int>{0, 0, 3, 2, 1, 0});

  ReductionResult res = reduce_to_bottom(d);
  REQUIRE(res.moves.size() == 4);
  auto coords = [&](const AdmissibleMove& m) {
    const BaseCell& ca = base->cells()[base->boxes()[m.a]];
    const BaseCell& cb = base->cells()[base->boxes()[m.b]];
    return std::array<int, 5>{ca.row, ca.col, cb.row, cb.col, m.kind};
  };
  CHECK(coords(res.moves[0]) == std::array<int, 5>{2, 2, 4, 1, 1});
  CHECK(coords(res.moves[1]) == std::array<int, 5>{2, 3, 4, 2, 1});
  CHECK(coords(res.moves[2]) == std::array<int, 5>{1, 3, 2, 2, 1});
  CHECK(coords(res.moves[3]) == std::array<int, 5>{2, 2, 5, 1, 1});

  PipeDream want = make_dream(base, {{3, 1, CC::Cross},
                                     {3, 2, CC::Cross},
                                     {3, 3, CC::Cross},
                                     {4, 1, CC::Cross},
                                     {4, 2, CC::Cross},
                                     {5, 1, CC::Cross}});
  CHECK(res.result == want);
  CHECK(res.result == bottom_dream(GroupType::A, w));
}

TEST_CASE("reduction errors") {
  BasePtr based = build_base(GroupType::D, 4, 2);
  PipeDream nonreduced = make_dream(based, {{1, 8, CC::CrossWithFaucet},
                                            {1, 9, CC::Cross},
                                            {2, 8, CC::Cross},
                                            {4, 5, CC::ElbowTwoFaucets},
                                            {7, 2, CC::Cross},
                                            {7, 3, CC::Cross},
                                            {9, 2, CC::Cross}});
  CHECK_THROWS_WITH_AS(reduce_to_bottom(nonreduced),
                       "reduction requires a reduced pipe dream",
                       std::invalid_argument);
  PipeDream dbl = empty_dream(build_base(GroupType::B, 2, 1, true));
  CHECK_THROWS_WITH_AS(reduce_to_bottom(dbl),
                       "reduction requires a single base",
                       std::invalid_argument);
}

TEST_CASE("reduction reaches the bottom dream of every shape") {
  for (GroupType t : {GroupType::B, GroupType::C})
    for (const SignedPermutation& w : all_elements(t, 2)) {
      int s = w.negative_count();
      check_reduction_endpoints(t, w, s);
      check_reduction_endpoints(t, w, s + 1);
    }
  for (const SignedPermutation& w : all_elements(GroupType::D, 3))
    if (length(w, GroupType::D) <= 4)
      check_reduction_endpoints(GroupType::D, w, 2);
}

TEST_CASE("move closure generates exactly the enumerated dreams") {
  check_closure(GroupType::A, perm({1, 4, 3, 2}), 0);
  for (GroupType t : {GroupType::B, GroupType::C})
    for (const SignedPermutation& w : all_elements(t, 2))
      check_closure(t, w, w.negative_count() + 1);
  check_closure(GroupType::D, perm({-3, 1, -2}), 2);
  check_closure(GroupType::D, perm({-1, -3, 2}), 2);
}

TEST_CASE("embedding into more blocks") {
  PipeDream b = bottom_dream(GroupType::B, perm({-2, 1}));
  CHECK(b.base().k() == 1);
  PipeDream grown = embed_dream(b, 3);
  CHECK(grown.base().k() == 3);
  CHECK(shape(grown) == perm({-2, 1}));
  CHECK(monomial(grown) == monomial(b));
  CHECK(word_str(read_word(grown).word) == word_str(read_word(b).word));
  CHECK(embed_dream(grown, 1) == b);
  CHECK_THROWS_WITH_AS(embed_dream(grown, 0),
                       "cannot drop a non-empty block while embedding",
                       std::invalid_argument);

  // dreams at level k reappear embedded at level k+1
  auto at1 = enumerate_dreams(GroupType::B, perm({-2, 1}), 1);
  auto at2 = enumerate_dreams(GroupType::B, perm({-2, 1}), 2);
  for (const PipeDream& d : at1) {
    PipeDream e = embed_dream(d, 2);
    CHECK(std::find(at2.begin(), at2.end(), e) != at2.end());
  }
  CHECK(at1.size() < at2.size());
}

TEST_CASE("bottom dream goldens") {
  // rank-2 D group: four elements, four bottoms
  PipeDream b1 = bottom_dream(GroupType::D, SignedPermutation::identity(2));
  CHECK(b1.base().k() == 0);
  CHECK(monomial(b1).is_one());
  PipeDream b2 = bottom_dream(GroupType::D, perm({2, 1}));
  CHECK(b2.base().k() == 0);
  CHECK(monomial(b2) == mono({1}));
  PipeDream b3 = bottom_dream(GroupType::D, perm({-2, -1}));
  CHECK(b3.base().k() == 1);
  CHECK(monomial(b3) == mono({}, {1}));
  PipeDream b4 = bottom_dream(GroupType::D, perm({-1, -2}));
  CHECK(b4.base().k() == 1);
  CHECK(monomial(b4) == mono({1}, {1}));
  for (const PipeDream* b : {&b1, &b2, &b3, &b4}) {
    CHECK(is_reduced(*b));
    CHECK(admissible_moves(*b).empty());
    CHECK(admissible_moves(embed_dream(*b, 2)).empty());
  }

  PipeDream bb = bottom_dream(GroupType::B, perm({-2, 1}));
  CHECK(word_str(read_word(bb).word) == "s1 s0");
  CHECK(monomial(bb) == mono({}, {2}));

  PipeDream bc = bottom_dream(GroupType::C, perm({-1, -2}));
  CHECK(bc.base().k() == 2);
  CHECK(word_str(read_word(bc).word) == "s0 s1 s0 s1");
  CHECK(monomial(bc) == mono({1}, {2, 1}));

  PipeDream bd = bottom_dream(GroupType::D, perm({-3, 1, -2}));
  CHECK(bd.base().k() == 2);
  CHECK(word_str(read_word(bd).word) == "s1 s2 s1^ s2");
  CHECK(bd.content(bd.base().box_ordinal_at(3, 4)) == CC::CrossWithFaucet);
  CHECK(bd.content(bd.base().box_ordinal_at(1, 6)) == CC::Cross);
}

TEST_CASE("renderers") {
  PipeDream bb = bottom_dream(GroupType::B, perm({-2, 1}));
  CHECK(to_ascii(bb) == "     o+\n     .\n 1| .\n 2|\n");
  CHECK(to_json(bb) ==
        "{\"type\":\"B\",\"n\":2,\"k\":1,\"double\":false,\"cells\":"
        "[{\"block\":1,\"row\":1,\"col\":4,\"content\":\"cross\"},"
        "{\"block\":1,\"row\":1,\"col\":3,\"content\":\"elbow_with_faucet\"},"
        "{\"block\":1,\"row\":2,\"col\":3,\"content\":\"elbow\"},"
        "{\"block\":0,\"row\":3,\"col\":2,\"content\":\"elbow\"}]}");

  PipeDream bc = bottom_dream(GroupType::C, perm({-1}));
  CHECK(to_ascii(bc) == "     .\n    o\n 1|\n");
  CHECK(to_latex(bc) ==
        "\\begin{ytableau}\n"
        "\\none & \\none & \\neg & \\none \\\\\n"
        "\\none & \\circ & \\none \\\\\n"
        "\\none & \\none\n"
        "\\end{ytableau}\n");

  PipeDream bd = bottom_dream(GroupType::D, perm({-3, 1, -2}));
  std::string latex = to_latex(bd);
  CHECK(latex.find("\\begin{ytableau}") != std::string::npos);
  CHECK(latex.find("\\otimes") != std::string::npos);
}

TEST_CASE("double dreams") {
  auto ad = enumerate_dreams(GroupType::A, perm({2, 1}), 0, true);
  REQUIRE(ad.size() == 2);
  std::multiset<Monomial> amonos{monomial(ad[0]), monomial(ad[1])};
  CHECK(amonos == std::multiset<Monomial>{mono({1}), mono({}, {}, {1})});
  for (const PipeDream& d : ad) {
    CHECK(trace_strands(d) == std::vector<int>{2, 1});
    CHECK(is_reduced(d));
  }
  // the t-only dream reads its letter from the northeast staircase
  for (const PipeDream& d : ad)
    if (!monomial(d).t().empty()) {
      ReadWord rw = read_word(d);
      CHECK(rw.t_len == 1);
      CHECK(rw.x_len == 0);
      CHECK(rw.z_len == 0);
    }

  auto bd = enumerate_dreams(GroupType::B, perm({2, 1}), 1, true);
  REQUIRE(bd.size() == 4);
  std::multiset<Monomial> bmonos;
  for (const PipeDream& d : bd) {
    bmonos.insert(monomial(d));
    CHECK(trace_strands(d) == std::vector<int>{2, 1});
  }
  CHECK(bmonos == std::multiset<Monomial>{mono({1}), mono({}, {1}),
                                          mono({}, {1}), mono({}, {}, {1})});

  CHECK(enumerate_dreams(GroupType::B, SignedPermutation::identity(2), 1, true)
            .size() == 1);
  auto b0 = enumerate_dreams(GroupType::B, perm({-1, 2}), 1, true);
  REQUIRE(b0.size() == 1);
  CHECK(monomial(b0[0]) == mono({}, {1}));
}

TEST_CASE("threaded enumeration is deterministic") {
  auto run = [](const char* threads) {
    if (threads)
      setenv("PIPEDREAMS_THREADS", threads, 1);
    else
      unsetenv("PIPEDREAMS_THREADS");
    return std::make_pair(
        enumerate_dreams(GroupType::C, perm({2, 1, -3}), 2),
        enumerate_dreams(GroupType::D, perm({-1, -3, 2}), 2));
  };
  auto single = run(nullptr);
  auto threaded = run("4");
  unsetenv("PIPEDREAMS_THREADS");
  REQUIRE(single.first.size() == threaded.first.size());
  REQUIRE(single.second.size() == threaded.second.size());
  for (std::size_t i = 0; i < single.first.size(); ++i)
    CHECK(single.first[i] == threaded.first[i]);
  for (std::size_t i = 0; i < single.second.size(); ++i)
    CHECK(single.second[i] == threaded.second[i]);
}
