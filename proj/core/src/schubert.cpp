#include "pipedreams/schubert.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "pipedreams/symfun.hpp"

namespace pipedreams {

namespace {

Rational pow2(int e) {
  using boost::multiprecision::cpp_int;
  if (e >= 0) return Rational(cpp_int(1) << e);
  return Rational(1, cpp_int(1) << (-e));
}

// Finite Schubert polynomial of v^{-1} with every z_i replaced by -t_i,
// truncated to m t-variables.  Context {0, 0, m}.
Polynomial schubert_negative_t(const SignedPermutation& v, int m) {
  Polynomial s = schubert_A(v.inverse());
  Context c{0, 0, std::max(m, s.context().n)};
  Polynomial out(c);
  for (const auto& [mono, coeff] : s.terms()) {
    std::vector<int> t(mono.z());
    int deg = mono.degree();
    out.add_term(Monomial({}, {}, std::move(t)), deg % 2 == 0 ? coeff : -coeff);
  }
  return out.context().m == m ? out : out.truncate_t(m);
}

Polynomial cauchy_sum(GroupType t, const SignedPermutation& w, int k, int m) {
  Context c{w.n() - 1, k, m};
  Polynomial out(c);
  for (const Factorization& f : factorizations(w, t, FactorSide::left))
    out += schubert_negative_t(f.v, m).with_context(c) *
           schubert_BCD(t, f.u, k).with_context(c);
  return out;
}

// How many x-slots the insertion step of the letter's action consumes.
int consumed_slots(Letter s) { return s.is_simple() ? 0 : s.is_s0() ? 1 : 2; }

// Highest z- or t-index the letter's action touches.
int letter_reach(Letter s) {
  return s.is_simple() ? s.simple_index() + 1 : s.is_s0() ? 1 : 2;
}

}  // namespace

std::vector<Factorization> factorizations(const SignedPermutation& w, GroupType t,
                                          FactorSide side) {
  std::vector<Factorization> out;
  int lw = length(w, t);
  for (const SignedPermutation& v : all_elements(GroupType::A, w.n())) {
    SignedPermutation u =
        side == FactorSide::right ? w * v.inverse() : v.inverse() * w;
    if (length(u, t) + length(v, t) == lw) out.push_back({std::move(u), v});
  }
  return out;
}

Polynomial schubert_A(const SignedPermutation& w) {
  if (w.has_negative())
    throw std::invalid_argument("schubert_A requires a sign-free permutation");
  Context c{w.n() - 1, 0, 0};
  Polynomial out(c);
  for (const PipeDream& d : enumerate_dreams(GroupType::A, w, 0))
    out.add_term(monomial(d), 1);
  return out;
}

Polynomial schubert_BCD(GroupType t, const SignedPermutation& w, int k) {
  Context c{w.n() - 1, k, 0};
  Polynomial out(c);
  for (const PipeDream& d : enumerate_dreams(t, w, k)) out.add_term(monomial(d), 1);
  return out;
}

Polynomial schubert_via_BH(GroupType t, const SignedPermutation& w, int k) {
  Context c{w.n() - 1, k, 0};
  Polynomial out(c);
  for (const Factorization& f : factorizations(w, t, FactorSide::right)) {
    Polynomial stanley = t == GroupType::D ? stanley_E(f.u, k) : stanley_F(f.u, k);
    out += stanley.with_context(c) * schubert_A(f.v).with_context(c);
  }
  if (t == GroupType::B) out *= pow2(-w.negative_count());
  if (t == GroupType::D)
    for (const auto& [mono, coeff] : out.terms())
      if (denominator(coeff) != 1)
        throw std::logic_error("factorization sum is not integral");
  return out;
}

DoubleSchubert double_schubert(GroupType t, const SignedPermutation& w, int k,
                               int m) {
  DoubleSchubert result;
  result.via_factorizations = cauchy_sum(t, w, k, m);

  int mt = w.n() - 1;  // t-width of the double base
  Context full{w.n() - 1, k, std::max(m, mt)};
  Polynomial dreams(full);
  for (const PipeDream& d : enumerate_dreams(t, w, k, /*is_double=*/true)) {
    Monomial mono = monomial(d);
    int tdeg = 0;
    for (int e : mono.t()) tdeg += e;
    dreams.add_term(mono, tdeg % 2 == 0 ? Rational(1) : Rational(-1));
  }
  result.via_dreams = m < mt ? dreams.truncate_t(m) : std::move(dreams);
  result.consistent = result.via_factorizations == result.via_dreams;
  return result;
}

DividedDifferenceReport verify_divided_difference(GroupType t,
                                                  const SignedPermutation& w,
                                                  Letter s, VarFamily family,
                                                  int k) {
  if (k < 0) throw std::invalid_argument("insufficient truncation");
  DividedDifferenceReport rep;
  int eat = consumed_slots(s);
  auto single = [&](const SignedPermutation& v, int level) {
    return t == GroupType::A ? schubert_A(v) : schubert_BCD(t, v, level);
  };
  if (family == VarFamily::z) {
    Polynomial f = single(w, k + eat);
    int reach = letter_reach(s);
    if (f.context().n < reach)
      f = f.with_context(Context{reach, f.context().k, f.context().m});
    Polynomial lhs = divided_difference(f, VarFamily::z, s, t);
    SignedPermutation ws = apply_letter(w, s, Side::right);
    rep.length_drops = length(ws, t) < length(w, t);
    Polynomial rhs = rep.length_drops ? single(ws, k)
                                      : Polynomial::zero(lhs.context());
    rep.difference = lhs - rhs.with_context(lhs.context());
  } else {
    int m = std::max(w.n() - 1, letter_reach(s));
    Polynomial f = cauchy_sum(t, w, k + eat, m);
    Polynomial lhs = divided_difference(f, VarFamily::t, s, t);
    SignedPermutation sw = apply_letter(w, s, Side::left);
    rep.length_drops = length(sw, t) < length(w, t);
    Polynomial rhs = rep.length_drops ? cauchy_sum(t, sw, k, m)
                                      : Polynomial::zero(lhs.context());
    rep.difference = lhs - rhs.with_context(lhs.context());
  }
  rep.passed = rep.difference.is_zero();
  return rep;
}

std::vector<EydBox> eyd_boxes(int n) {
  std::vector<EydBox> out;
  for (int r = 1; r <= n; ++r)
    for (int c = n - 1; c >= 0; --c) out.push_back({false, r, c});
  for (int r = 1; r <= n - 1; ++r)
    for (int c = n - 1 - r; c >= 0; --c) out.push_back({true, r, c});
  return out;
}

Letter eyd_letter(int, const EydBox& box) {
  if (box.staircase) return Letter::simple(box.row + box.offset);
  return box.offset == 0 ? Letter::s0() : Letter::simple(box.offset);
}

Polynomial eyd_weight(int n, const EydBox& box) {
  Context c{n - 1, n, n - 1};
  auto var = [&](Monomial m) { return Polynomial::term(std::move(m), 1, c); };
  if (box.staircase)
    return var(Monomial::z_var(box.row)) + var(Monomial::x_var(box.offset + 1));
  int base = n + 1 - box.row;
  if (box.offset == 0) return var(Monomial::x_var(base));
  int q = base + box.offset;
  if (q <= n) return var(Monomial::x_var(base)) + var(Monomial::x_var(q));
  return var(Monomial::x_var(base)) - var(Monomial::t_var(q - n));
}

std::vector<Letter> eyd_word(const ExtendedEYD& d) {
  std::vector<Letter> out;
  out.reserve(d.marked.size());
  for (const EydBox& b : d.marked) out.push_back(eyd_letter(d.n, b));
  return out;
}

Polynomial eyd_weight_product(const ExtendedEYD& d) {
  Context c{d.n - 1, d.n, d.n - 1};
  Polynomial out = Polynomial::constant(1, c);
  for (const EydBox& b : d.marked) out = out * eyd_weight(d.n, b);
  return out;
}

std::vector<ExtendedEYD> enumerate_eyds(const SignedPermutation& w) {
  int n = w.n();
  std::vector<EydBox> boxes = eyd_boxes(n);
  int target = length(w, GroupType::B);
  std::vector<ExtendedEYD> out;
  std::vector<EydBox> marked;
  auto dfs = [&](auto&& self, std::size_t idx, const SignedPermutation& cur,
                 int len) -> void {
    if (len + static_cast<int>(boxes.size() - idx) < target) return;
    if (idx == boxes.size()) {
      if (len == target && cur == w) out.push_back({n, marked});
      return;
    }
    self(self, idx + 1, cur, len);
    SignedPermutation next =
        apply_letter(cur, eyd_letter(n, boxes[idx]), Side::right);
    if (length(next, GroupType::B) == len + 1) {
      marked.push_back(boxes[idx]);
      self(self, idx + 1, next, len + 1);
      marked.pop_back();
    }
  };
  dfs(dfs, 0, SignedPermutation::identity(n), 0);
  return out;
}

Polynomial kirillov_naruse_B(const SignedPermutation& w) {
  Context c{w.n() - 1, w.n(), w.n() - 1};
  Polynomial out(c);
  for (const ExtendedEYD& d : enumerate_eyds(w)) out += eyd_weight_product(d);
  return out;
}

}  // namespace pipedreams
