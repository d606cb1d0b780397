#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "pipedreams/schubert.hpp"

#include <set>
#include <string>
#include <vector>

#include "pipedreams/symfun.hpp"

using namespace pipedreams;

namespace {

SignedPermutation perm(const std::string& s) { return parse_one_line(s); }

Polynomial zv(int i, Context c) {
  return Polynomial::term(Monomial::z_var(i), 1, c);
}
Polynomial xv(int i, Context c) {
  return Polynomial::term(Monomial::x_var(i), 1, c);
}
Polynomial tv(int i, Context c) {
  return Polynomial::term(Monomial::t_var(i), 1, c);
}
Polynomial ps(int d, Context c) { return power_sum(d, c.k).with_context(c); }

}  // namespace

TEST_CASE("finite Schubert polynomials of sign-free permutations") {
  Context c{3, 0, 0};
  Polynomial want = Polynomial::zero(c);
  auto zm = [](int a, int b, int d) {
    return Monomial::z_var(1, a) * Monomial::z_var(2, b) * Monomial::z_var(3, d);
  };
  want.add_term(zm(2, 1, 0), 1);
  want.add_term(zm(2, 0, 1), 1);
  want.add_term(zm(1, 2, 0), 1);
  want.add_term(zm(1, 1, 1), 1);
  want.add_term(zm(0, 2, 1), 1);
  CHECK(schubert_A(perm("1 4 3 2")) == want);
  CHECK(schubert_A(perm("1 4 3 2")).term_count() == 5);

  for (int i = 1; i <= 4; ++i) {
    std::vector<int> win{1, 2, 3, 4, 5};
    std::swap(win[i - 1], win[i]);
    Context c5{4, 0, 0};
    Polynomial sum = Polynomial::zero(c5);
    for (int j = 1; j <= i; ++j) sum += zv(j, c5);
    CHECK(schubert_A(SignedPermutation(win)) == sum);
  }

  CHECK(schubert_A(perm("1 2 3")) == Polynomial::constant(1, Context{2, 0, 0}));
  CHECK_THROWS_AS(schubert_A(perm("-1 2")), std::invalid_argument);
}

TEST_CASE("signed dream sums match closed forms") {
  for (int k = 2; k <= 3; ++k) {
    Context c{1, k, 0};
    Polynomial p1 = ps(1, c), p3 = ps(3, c), z1 = zv(1, c);
    CHECK(schubert_BCD(GroupType::B, perm("-1 2"), k) == p1);
    CHECK(schubert_BCD(GroupType::C, perm("-1 2"), k) == Rational(2) * p1);
    CHECK(schubert_BCD(GroupType::B, perm("2 1"), k) == z1 + Rational(2) * p1);
    CHECK(schubert_BCD(GroupType::B, perm("-2 1"), k) == p1 * p1);
    CHECK(schubert_BCD(GroupType::B, perm("-2 -1"), k) ==
          Rational(1, 3) * (p1 * p1 * p1) - Rational(1, 3) * p3);
    CHECK(schubert_BCD(GroupType::B, perm("-1 -2"), k) ==
          Rational(1, 3) * (z1 * p1 * p1 * p1) - Rational(1, 3) * (z1 * p3) +
              Rational(1, 3) * (p1 * p1 * p1 * p1) - Rational(1, 3) * (p1 * p3));
  }
  for (int k = 2; k <= 3; ++k) {
    Context c{2, k, 0};
    Polynomial p1 = ps(1, c), p3 = ps(3, c), z1 = zv(1, c), z2 = zv(2, c);
    CHECK(schubert_BCD(GroupType::D, perm("-1 -2 3"), k) == z1 * p1 + p1 * p1);
    CHECK(schubert_BCD(GroupType::D, perm("3 1 2"), k) ==
          z1 * z1 + Rational(2) * (z1 * p1) + p1 * p1);
    CHECK(schubert_BCD(GroupType::D, perm("-2 3 -1"), k) ==
          (z1 + z2) * p1 + p1 * p1);
    CHECK(schubert_BCD(GroupType::D, perm("-1 -3 2"), k) ==
          z1 * p1 * p1 + Rational(2, 3) * (p1 * p1 * p1) + Rational(1, 3) * p3);
  }
}

TEST_CASE("factorizations split length-additively with a sign-free factor") {
  auto fid = factorizations(perm("1 2"), GroupType::B);
  REQUIRE(fid.size() == 1);
  CHECK(fid[0].u.is_identity());
  CHECK(fid[0].v.is_identity());

  auto f0 = factorizations(perm("-1 2"), GroupType::B);
  REQUIRE(f0.size() == 1);
  CHECK(f0[0].u == perm("-1 2"));
  CHECK(f0[0].v.is_identity());

  auto f01 = factorizations(perm("2 -1"), GroupType::B);
  REQUIRE(f01.size() == 2);
  CHECK(f01[0].u == perm("2 -1"));
  CHECK(f01[0].v.is_identity());
  CHECK(f01[1].u == perm("-1 2"));
  CHECK(f01[1].v == perm("2 1"));

  auto left = factorizations(perm("-1 -2"), GroupType::D, FactorSide::left);
  REQUIRE(left.size() == 2);
  CHECK(left[0].v.is_identity());
  CHECK(left[1].u == perm("-2 -1"));
  CHECK(left[1].v == perm("2 1"));

  for (const SignedPermutation& w : all_elements(GroupType::B, 3))
    for (const Factorization& f : factorizations(w, GroupType::B)) {
      CHECK(!f.v.has_negative());
      CHECK(f.u * f.v == w);
      CHECK(length(f.u, GroupType::B) + length(f.v, GroupType::B) ==
            length(w, GroupType::B));
    }
}

TEST_CASE("factorization sums agree with dream sums") {
  for (GroupType t : {GroupType::B, GroupType::C})
    for (const SignedPermutation& w : all_elements(t, 2))
      for (int k = 0; k <= 2; ++k)
        CHECK(schubert_via_BH(t, w, k) == schubert_BCD(t, w, k));
  for (const SignedPermutation& w : all_elements(GroupType::D, 2))
    for (int k = 0; k <= 2; ++k)
      CHECK(schubert_via_BH(GroupType::D, w, k) ==
            schubert_BCD(GroupType::D, w, k));
  CHECK(schubert_via_BH(GroupType::D, perm("-2 3 -1"), 2) ==
        schubert_BCD(GroupType::D, perm("-2 3 -1"), 2));
}

TEST_CASE("hyperoctahedral normalizations differ by a sign-count power of two") {
  using boost::multiprecision::cpp_int;
  for (const SignedPermutation& w : all_elements(GroupType::B, 2))
    for (int k = 0; k <= 2; ++k) {
      Rational scale(1, cpp_int(1) << w.negative_count());
      CHECK(schubert_BCD(GroupType::B, w, k) ==
            scale * schubert_BCD(GroupType::C, w, k));
    }
}

TEST_CASE("double polynomials: closed forms and route consistency") {
  Context c{1, 2, 1};
  auto d1 = double_schubert(GroupType::D, perm("2 1"), 2, 1);
  CHECK(d1.consistent);
  CHECK(d1.via_factorizations == zv(1, c) - tv(1, c) + ps(1, c));
  auto b1 = double_schubert(GroupType::B, perm("2 1"), 2, 1);
  CHECK(b1.consistent);
  CHECK(b1.via_factorizations == zv(1, c) - tv(1, c) + Rational(2) * ps(1, c));
  auto did = double_schubert(GroupType::B, perm("1 2"), 2, 1);
  CHECK(did.consistent);
  CHECK(did.via_factorizations == Polynomial::constant(1, c));
  auto dhat = double_schubert(GroupType::D, perm("-2 -1"), 2, 1);
  CHECK(dhat.consistent);
  CHECK(dhat.via_factorizations == ps(1, c));
  auto dboth = double_schubert(GroupType::D, perm("-1 -2"), 2, 1);
  CHECK(dboth.consistent);
  CHECK(dboth.via_factorizations ==
        (zv(1, c) - tv(1, c)) * ps(1, c) + ps(1, c) * ps(1, c));

  for (GroupType t : {GroupType::B, GroupType::C, GroupType::D})
    for (const SignedPermutation& w : all_elements(t, 2))
      for (int k = 0; k <= 2; ++k)
        for (int m = 0; m <= 2; ++m) {
          auto d = double_schubert(t, w, k, m);
          CHECK(d.consistent);
          CHECK(d.via_factorizations.context() == Context{1, k, m});
          CHECK(d.via_dreams.context() == Context{1, k, m});
        }

  // m = 0 kills every t term and recovers the single polynomial
  auto flat = double_schubert(GroupType::B, perm("2 -1"), 2, 0);
  CHECK(flat.consistent);
  CHECK(flat.via_dreams ==
        schubert_BCD(GroupType::B, perm("2 -1"), 2).with_context(Context{1, 2, 0}));
}

TEST_CASE("divided-difference relations") {
  auto r = verify_divided_difference(GroupType::A, perm("1 4 3 2"),
                                     Letter::simple(1), VarFamily::z, 0);
  CHECK(r.passed);
  CHECK(!r.length_drops);
  r = verify_divided_difference(GroupType::A, perm("1 4 3 2"), Letter::simple(3),
                                VarFamily::z, 0);
  CHECK(r.passed);
  CHECK(r.length_drops);

  r = verify_divided_difference(GroupType::B, perm("-1 2"), Letter::s0(),
                                VarFamily::z, 2);
  CHECK(r.passed);
  CHECK(r.length_drops);
  r = verify_divided_difference(GroupType::B, perm("-1 2"), Letter::simple(1),
                                VarFamily::z, 2);
  CHECK(r.passed);
  CHECK(!r.length_drops);

  for (GroupType t : {GroupType::B, GroupType::C, GroupType::D})
    for (const SignedPermutation& w : all_elements(t, 2))
      for (Letter s : generators(t, 2)) {
        CHECK(verify_divided_difference(t, w, s, VarFamily::z, 2).passed);
        CHECK(verify_divided_difference(t, w, s, VarFamily::t, 1).passed);
      }

  CHECK_THROWS_AS(verify_divided_difference(GroupType::B, perm("-1 2"),
                                            Letter::s0(), VarFamily::z, -1),
                  std::invalid_argument);
}

TEST_CASE("trapezoid diagrams: boxes, letters, and weights") {
  auto boxes = eyd_boxes(3);
  CHECK(boxes.size() == 12);  // three added rows of three, staircase 2 + 1
  CHECK(boxes.front() == EydBox{false, 1, 2});
  CHECK(boxes.back() == EydBox{true, 2, 0});

  Context c{2, 3, 2};
  CHECK(eyd_letter(3, {false, 1, 0}) == Letter::s0());
  CHECK(eyd_letter(3, {false, 1, 2}) == Letter::simple(2));
  CHECK(eyd_letter(3, {true, 1, 1}) == Letter::simple(2));
  CHECK(eyd_weight(3, {false, 1, 0}) == xv(3, c));
  CHECK(eyd_weight(3, {false, 2, 0}) == xv(2, c));
  CHECK(eyd_weight(3, {false, 2, 1}) == xv(2, c) + xv(3, c));
  CHECK(eyd_weight(3, {false, 1, 2}) == xv(3, c) - tv(2, c));
  CHECK(eyd_weight(3, {true, 1, 0}) == zv(1, c) + xv(1, c));

  CHECK(enumerate_eyds(perm("1 2")).size() == 1);
  CHECK(enumerate_eyds(perm("1 2"))[0].marked.empty());

  // every enumerated diagram reads to a reduced word for its element
  for (const ExtendedEYD& d : enumerate_eyds(perm("2 -1"))) {
    auto word = eyd_word(d);
    CHECK(is_reduced_word(word, GroupType::B, 2));
    CHECK(word_product(word, 2) == perm("2 -1"));
  }
}

TEST_CASE("trapezoid sums equal double polynomials") {
  Context c2{1, 2, 1};
  CHECK(kirillov_naruse_B(perm("-1 2")) == xv(1, c2) + xv(2, c2));
  for (const SignedPermutation& w : all_elements(GroupType::B, 2))
    CHECK(kirillov_naruse_B(w) ==
          double_schubert(GroupType::B, w, 2, 1).via_factorizations);

  // the pinned five-box diagram for w = 2 -3 1
  SignedPermutation w = perm("2 -3 1");
  ExtendedEYD fig{3,
                  {{false, 1, 2}, {false, 1, 1}, {false, 2, 2}, {false, 2, 0},
                   {true, 1, 0}}};
  CHECK(is_reduced_word(eyd_word(fig), GroupType::B, 3));
  CHECK(word_product(eyd_word(fig), 3) == w);
  Context c{2, 3, 2};
  CHECK(eyd_weight_product(fig) ==
        (xv(3, c) - tv(2, c)) * (xv(3, c) - tv(1, c)) * (xv(2, c) - tv(1, c)) *
            xv(2, c) * (zv(1, c) + xv(1, c)));
  bool found = false;
  for (const ExtendedEYD& d : enumerate_eyds(w))
    if (std::set<EydBox>(d.marked.begin(), d.marked.end()) ==
        std::set<EydBox>(fig.marked.begin(), fig.marked.end()))
      found = true;
  CHECK(found);

  // moving the staircase box down a row breaks reducedness
  ExtendedEYD lower{3,
                    {{false, 1, 2}, {false, 1, 1}, {false, 2, 2}, {false, 2, 0},
                     {true, 2, 0}}};
  CHECK(!is_reduced_word(eyd_word(lower), GroupType::B, 3));
}

TEST_CASE("window growth and truncation leave sums unchanged") {
  for (GroupType t : {GroupType::B, GroupType::C})
    for (const SignedPermutation& w : all_elements(t, 2))
      for (int k = 0; k <= 2; ++k) {
        std::vector<int> win = w.window();
        win.push_back(3);
        Polynomial big = schubert_BCD(t, SignedPermutation(win), k);
        CHECK(schubert_BCD(t, w, k).with_context(big.context()) == big);
        CHECK(schubert_BCD(t, w, k + 1).truncate_x(k) == schubert_BCD(t, w, k));
      }
}

TEST_CASE("Grassmannian elements reduce to classical bases") {
  for (const SignedPermutation& w : all_elements(GroupType::B, 3)) {
    auto gd = grassmannian_data(w, GroupType::B);
    if (!gd) continue;
    Context c{2, 2, 0};
    CHECK(schubert_BCD(GroupType::B, w, 2) ==
          schur_P(gd->partition, 2).with_context(c));
    CHECK(schubert_BCD(GroupType::C, w, 2) ==
          schur_Q(gd->partition, 2).with_context(c));
  }
  for (const SignedPermutation& w : all_elements(GroupType::D, 3)) {
    auto gd = grassmannian_data(w, GroupType::D);
    if (!gd) continue;
    CHECK(schubert_BCD(GroupType::D, w, 2) ==
          schur_P(gd->partition, 2).with_context(Context{2, 2, 0}));
  }
  int swept = 0;
  for (const SignedPermutation& w : all_elements(GroupType::A, 5)) {
    auto gd = grassmannian_data(w, GroupType::A);
    if (!gd || w.is_identity()) continue;
    ++swept;
    CHECK(schubert_A(w) ==
          schur(gd->partition, gd->descent).with_context(Context{4, 0, 0}));
  }
  CHECK(swept == 26);
}
