#include "pipedreams/poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace pipedreams {

namespace {

void strip_trailing_zeros(std::vector<int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

int get_exp(const std::vector<int>& v, int i) {
  return (i >= 1 && i <= static_cast<int>(v.size())) ? v[i - 1] : 0;
}

void set_exp(std::vector<int>& v, int i, int e) {
  if (static_cast<int>(v.size()) < i) v.resize(i, 0);
  v[i - 1] = e;
  strip_trailing_zeros(v);
}

std::vector<int> drop_front(const std::vector<int>& v, int count) {
  if (static_cast<int>(v.size()) <= count) return {};
  return std::vector<int>(v.begin() + count, v.end());
}

std::vector<int> single(int i, int exp) {
  if (i < 1) throw std::invalid_argument("variable index must be >= 1");
  if (exp < 0) throw std::invalid_argument("negative exponent");
  std::vector<int> v(i, 0);
  v[i - 1] = exp;
  return v;
}

// Ascending-index comparison of one family: first differing slot decides,
// larger exponent wins (returns <0, 0, >0 like a three-way compare with
// "greater" meaning dominance-greater).
int compare_ascending(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t width = std::max(a.size(), b.size());
  for (std::size_t i = 0; i < width; ++i) {
    int ea = i < a.size() ? a[i] : 0;
    int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

int compare_descending(const std::vector<int>& a, const std::vector<int>& b) {
  std::size_t width = std::max(a.size(), b.size());
  for (std::size_t i = width; i-- > 0;) {
    int ea = i < a.size() ? a[i] : 0;
    int eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::vector<int> z, std::vector<int> x, std::vector<int> t)
    : z_(std::move(z)), x_(std::move(x)), t_(std::move(t)) {
  for (const auto* v : {&z_, &x_, &t_})
    for (int e : *v)
      if (e < 0) throw std::invalid_argument("negative exponent");
  strip_trailing_zeros(z_);
  strip_trailing_zeros(x_);
  strip_trailing_zeros(t_);
}

Monomial Monomial::z_var(int i, int exp) { return Monomial(single(i, exp), {}, {}); }
Monomial Monomial::x_var(int i, int exp) { return Monomial({}, single(i, exp), {}); }
Monomial Monomial::t_var(int i, int exp) { return Monomial({}, {}, single(i, exp)); }

int Monomial::z_exp(int i) const { return get_exp(z_, i); }
int Monomial::x_exp(int i) const { return get_exp(x_, i); }
int Monomial::t_exp(int i) const { return get_exp(t_, i); }

int Monomial::degree() const {
  int d = 0;
  for (const auto* v : {&z_, &x_, &t_})
    for (int e : *v) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  auto merge = [](const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
    return out;
  };
  return Monomial(merge(z_, other.z_), merge(x_, other.x_), merge(t_, other.t_));
}

bool dominance_less(const Monomial& a, const Monomial& b) {
  if (int c = compare_descending(a.z(), b.z()); c != 0) return c < 0;
  if (int c = compare_ascending(a.x(), b.x()); c != 0) return c < 0;
  return compare_ascending(a.t(), b.t()) < 0;
}

Polynomial Polynomial::constant(const Rational& c, Context ctx) {
  Polynomial p(ctx);
  p.add_term(Monomial::one(), c);
  return p;
}

Polynomial Polynomial::term(const Monomial& mono, const Rational& c, Context ctx) {
  Polynomial p(ctx);
  p.add_term(mono, c);
  return p;
}

Rational Polynomial::coefficient(const Monomial& mono) const {
  auto it = terms_.find(mono);
  return it == terms_.end() ? Rational(0) : it->second;
}

Polynomial& Polynomial::add_term(const Monomial& mono, const Rational& c) {
  if (static_cast<int>(mono.z().size()) > ctx_.n ||
      static_cast<int>(mono.x().size()) > ctx_.k ||
      static_cast<int>(mono.t().size()) > ctx_.m)
    throw std::invalid_argument("monomial exceeds declared variable widths");
  if (c == 0) return *this;
  auto [it, inserted] = terms_.emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(ctx_);
  for (const auto& [mono, c] : terms_) out.terms_.emplace(mono, -c);
  return out;
}

namespace {
void require_same_context(const Context& a, const Context& b) {
  if (!(a == b))
    throw std::invalid_argument("polynomial contexts differ (n/k/m mismatch)");
}
}  // namespace

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_context(ctx_, other.ctx_);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
  require_same_context(ctx_, other.ctx_);
  Polynomial out(ctx_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  return out;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, coeff] : terms_) coeff *= c;
  return *this;
}

Polynomial Polynomial::truncate_x(int new_k) const {
  if (new_k < 0 || new_k > ctx_.k)
    throw std::invalid_argument("truncate_x level out of range");
  Polynomial out(Context{ctx_.n, new_k, ctx_.m});
  for (const auto& [mono, c] : terms_)
    if (static_cast<int>(mono.x().size()) <= new_k) out.terms_.emplace(mono, c);
  return out;
}

Polynomial Polynomial::truncate_t(int new_m) const {
  if (new_m < 0 || new_m > ctx_.m)
    throw std::invalid_argument("truncate_t level out of range");
  Polynomial out(Context{ctx_.n, ctx_.k, new_m});
  for (const auto& [mono, c] : terms_)
    if (static_cast<int>(mono.t().size()) <= new_m) out.terms_.emplace(mono, c);
  return out;
}

Polynomial Polynomial::with_context(Context ctx) const {
  Polynomial out(ctx);
  for (const auto& [mono, c] : terms_) out.add_term(mono, c);
  return out;
}

Polynomial power_sum(int d, Context ctx) {
  if (d < 1) throw std::invalid_argument("power sum degree must be >= 1");
  Polynomial p(ctx);
  for (int i = 1; i <= ctx.k; ++i) p.add_term(Monomial::x_var(i, d), 1);
  return p;
}

Polynomial power_sum(int d, int k) { return power_sum(d, Context{0, k, 0}); }

namespace {

// One substituted term: the image of a monomial under a generator action is
// again a single signed monomial, so every action maps term lists to term
// lists.
struct TermImage {
  Monomial mono;
  int sign = 1;
};

TermImage act_on_monomial(const Monomial& mono, VarFamily family, Letter s,
                          const Context& ctx) {
  std::vector<int> z = mono.z();
  std::vector<int> x = mono.x();
  std::vector<int> t = mono.t();
  TermImage out;
  if (s.is_simple()) {
    int i = s.simple_index();
    if (family == VarFamily::z) {
      if (i + 1 > ctx.n) throw std::invalid_argument("swap index exceeds z width");
      int a = get_exp(z, i), b = get_exp(z, i + 1);
      set_exp(z, i, b);
      set_exp(z, i + 1, a);
    } else {
      if (i + 1 > ctx.m) throw std::invalid_argument("swap index exceeds t width");
      int a = get_exp(t, i), b = get_exp(t, i + 1);
      set_exp(t, i, b);
      set_exp(t, i + 1, a);
    }
    out.mono = Monomial(std::move(z), std::move(x), std::move(t));
    return out;
  }
  if (s.is_s0()) {
    if (family == VarFamily::z) {
      // z_1 -> -z_1, old x_1 -> z_1, remaining x indices shift down.
      int a1 = get_exp(z, 1), b1 = get_exp(x, 1);
      set_exp(z, 1, a1 + b1);
      out.sign = (a1 % 2 == 0) ? 1 : -1;
      x = drop_front(x, 1);
    } else {
      // t_1 -> -t_1, old x_1 -> -t_1.
      int c1 = get_exp(t, 1), b1 = get_exp(x, 1);
      set_exp(t, 1, c1 + b1);
      out.sign = ((c1 + b1) % 2 == 0) ? 1 : -1;
      x = drop_front(x, 1);
    }
    out.mono = Monomial(std::move(z), std::move(x), std::move(t));
    return out;
  }
  // s_1hat
  if (family == VarFamily::z) {
    // (z_1, z_2) -> (-z_2, -z_1), old (x_1, x_2) -> (z_1, z_2).
    int a1 = get_exp(z, 1), a2 = get_exp(z, 2);
    int b1 = get_exp(x, 1), b2 = get_exp(x, 2);
    set_exp(z, 1, a2 + b1);
    set_exp(z, 2, a1 + b2);
    out.sign = ((a1 + a2) % 2 == 0) ? 1 : -1;
    x = drop_front(x, 2);
  } else {
    // (t_1, t_2) -> (-t_2, -t_1), old (x_1, x_2) -> (-t_1, -t_2).
    int c1 = get_exp(t, 1), c2 = get_exp(t, 2);
    int b1 = get_exp(x, 1), b2 = get_exp(x, 2);
    set_exp(t, 1, c2 + b1);
    set_exp(t, 2, c1 + b2);
    out.sign = ((c1 + c2 + b1 + b2) % 2 == 0) ? 1 : -1;
    x = drop_front(x, 2);
  }
  out.mono = Monomial(std::move(z), std::move(x), std::move(t));
  return out;
}

Context acted_context(const Context& ctx, VarFamily family, Letter s) {
  if (s.is_simple()) return ctx;
  int consumed = s.is_s0() ? 1 : 2;
  if (ctx.k < consumed)
    throw std::runtime_error(
        "insertion overflow: the inserting action needs the input supplied at "
        "level k+" +
        std::to_string(consumed));
  if (family == VarFamily::z) {
    if (ctx.n < consumed)
      throw std::invalid_argument("z width too small for the inserting action");
  } else {
    if (ctx.m < consumed)
      throw std::invalid_argument("t width too small for the inserting action");
  }
  return Context{ctx.n, ctx.k - consumed, ctx.m};
}

}  // namespace

Polynomial act_generator(const Polynomial& f, VarFamily family, Letter s) {
  Context out_ctx = acted_context(f.context(), family, s);
  Polynomial out(out_ctx);
  for (const auto& [mono, c] : f.terms()) {
    TermImage image = act_on_monomial(mono, family, s, f.context());
    out.add_term(image.mono, image.sign > 0 ? c : -c);
  }
  return out;
}

namespace {

int var_exp(const Monomial& mono, VarFamily family, int index) {
  return family == VarFamily::z ? mono.z_exp(index) : mono.t_exp(index);
}

Monomial with_var_exp(const Monomial& mono, VarFamily family, int index, int e) {
  std::vector<int> z = mono.z();
  std::vector<int> x = mono.x();
  std::vector<int> t = mono.t();
  if (family == VarFamily::z)
    set_exp(z, index, e);
  else
    set_exp(t, index, e);
  return Monomial(std::move(z), std::move(x), std::move(t));
}

// Exact division by (Y - A) where Y is one variable and A is a signed
// variable, via synthetic division on the Y-degree decomposition.  Throws
// when a nonzero remainder appears.
Polynomial divide_by_linear(const Polynomial& num, VarFamily y_family, int y_index,
                            VarFamily a_family, int a_index, int a_sign) {
  if (num.is_zero()) return Polynomial::zero(num.context());
  // Decompose by the Y-exponent.
  std::map<int, std::vector<std::pair<Monomial, Rational>>> slices;
  int top = 0;
  for (const auto& [mono, c] : num.terms()) {
    int e = var_exp(mono, y_family, y_index);
    top = std::max(top, e);
    slices[e].emplace_back(with_var_exp(mono, y_family, y_index, 0), c);
  }
  auto slice_poly = [&](int e) {
    Polynomial p(num.context());
    auto it = slices.find(e);
    if (it != slices.end())
      for (const auto& [mono, c] : it->second) p.add_term(mono, c);
    return p;
  };
  auto times_a = [&](const Polynomial& p) {
    Polynomial out(p.context());
    Monomial a = a_family == VarFamily::z ? Monomial::z_var(a_index)
                                          : Monomial::t_var(a_index);
    for (const auto& [mono, c] : p.terms())
      out.add_term(mono * a, a_sign > 0 ? c : -c);
    return out;
  };
  if (top == 0) throw std::runtime_error("non-divisible numerator");
  // num = sum_e c_e Y^e; quotient q satisfies q_{top-1} = c_top,
  // q_{e-1} = c_e + A q_e, and remainder c_0 + A q_0 must vanish.
  Polynomial out(num.context());
  Polynomial q = slice_poly(top);
  for (int e = top - 1; e >= 1; --e) {
    Monomial ye = y_family == VarFamily::z ? Monomial::z_var(y_index, e)
                                           : Monomial::t_var(y_index, e);
    for (const auto& [mono, c] : q.terms()) out.add_term(mono * ye, c);
    q = slice_poly(e) + times_a(q);
  }
  for (const auto& [mono, c] : q.terms()) out.add_term(mono, c);
  Polynomial remainder = slice_poly(0) + times_a(q);
  if (!remainder.is_zero()) throw std::runtime_error("non-divisible numerator");
  return out;
}

// Exact division by c * V for a single variable V: every term must contain V.
Polynomial divide_by_monomial(const Polynomial& num, VarFamily family, int index,
                              const Rational& c) {
  Polynomial out(num.context());
  for (const auto& [mono, coeff] : num.terms()) {
    int e = var_exp(mono, family, index);
    if (e < 1) throw std::runtime_error("non-divisible numerator");
    out.add_term(with_var_exp(mono, family, index, e - 1), coeff / c);
  }
  return out;
}

}  // namespace

Polynomial divided_difference(const Polynomial& f, VarFamily family, Letter s,
                              GroupType type) {
  if (s.is_s0() && !allows_s0(type))
    throw std::invalid_argument("the sign letter s0 is not a generator of this type");
  if (s.is_s1hat() && !allows_s1hat(type))
    throw std::invalid_argument("the letter s1^ is not a generator of this type");
  Polynomial sf = act_generator(f, family, s);
  Polynomial num =
      (s.is_simple() ? f : f.truncate_x(sf.context().k)) - sf;
  if (s.is_simple()) {
    int i = s.simple_index();
    return family == VarFamily::z
               // (f - s_i f) / (z_i - z_{i+1})
               ? divide_by_linear(num, VarFamily::z, i, VarFamily::z, i + 1, 1)
               // (f - s_i f) / (t_{i+1} - t_i)
               : divide_by_linear(num, VarFamily::t, i + 1, VarFamily::t, i, 1);
  }
  if (s.is_s0()) {
    bool b_norm = type == GroupType::B;
    return family == VarFamily::z
               // (f - s_0 f) / (-2 z_1), doubled for type B
               ? divide_by_monomial(num, VarFamily::z, 1, b_norm ? Rational(-1)
                                                                 : Rational(-2))
               // (f - s_0 f) / (2 t_1), denominator t_1 for type B
               : divide_by_monomial(num, VarFamily::t, 1,
                                    b_norm ? Rational(1) : Rational(2));
  }
  // s_1hat
  if (family == VarFamily::z) {
    // (f - s f) / (-z_1 - z_2) = -[(f - s f) / (z_1 - (-z_2))]
    Polynomial q = divide_by_linear(num, VarFamily::z, 1, VarFamily::z, 2, -1);
    return -q;
  }
  // (f - s f) / (t_1 + t_2)
  return divide_by_linear(num, VarFamily::t, 1, VarFamily::t, 2, -1);
}

Monomial leading_monomial(const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  const Monomial* best = nullptr;
  for (const auto& [mono, c] : f.terms())
    if (!best || dominance_less(*best, mono)) best = &mono;
  return *best;
}

namespace {

std::vector<std::pair<Monomial, Rational>> canonical_terms(const Polynomial& f) {
  std::vector<std::pair<Monomial, Rational>> terms(f.terms().begin(), f.terms().end());
  std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return dominance_less(b.first, a.first);
  });
  return terms;
}

std::string rational_str(const Rational& c) { return c.str(); }

void append_vars(std::ostringstream& os, const char* name,
                 const std::vector<int>& exps, bool latex, bool& first) {
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] == 0) continue;
    if (!first) os << (latex ? " " : "*");
    first = false;
    if (latex) {
      os << name << "_";
      if (i + 1 < 10)
        os << (i + 1);
      else
        os << "{" << (i + 1) << "}";
      if (exps[i] > 1) {
        os << "^";
        if (exps[i] < 10)
          os << exps[i];
        else
          os << "{" << exps[i] << "}";
      }
    } else {
      os << name << (i + 1);
      if (exps[i] > 1) os << "^" << exps[i];
    }
  }
}

std::string render(const Polynomial& f, bool latex) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first_term = true;
  for (const auto& [mono, c] : canonical_terms(f)) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (first_term) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first_term = false;
    bool coeff_shown = false;
    if (mono.is_one() || mag != 1) {
      if (latex) {
        if (denominator(mag) == 1) {
          os << numerator(mag);
        } else {
          os << "\\frac{" << numerator(mag) << "}{" << denominator(mag) << "}";
        }
      } else {
        os << rational_str(mag);
      }
      coeff_shown = true;
    }
    if (!mono.is_one()) {
      if (coeff_shown) os << (latex ? " " : "*");
      bool first_var = true;
      std::ostringstream vars;
      append_vars(vars, "z", mono.z(), latex, first_var);
      append_vars(vars, "x", mono.x(), latex, first_var);
      append_vars(vars, "t", mono.t(), latex, first_var);
      os << vars.str();
    }
  }
  return os.str();
}

}  // namespace

std::string to_text(const Polynomial& f) { return render(f, false); }

std::string to_latex(const Polynomial& f) { return render(f, true); }

std::string to_json(const Polynomial& f) {
  nlohmann::ordered_json root;
  root["terms"] = nlohmann::ordered_json::array();
  auto widened = [](const std::vector<int>& v, int width) {
    std::vector<int> out(v);
    out.resize(width, 0);
    return out;
  };
  for (const auto& [mono, c] : canonical_terms(f)) {
    nlohmann::ordered_json term;
    term["c"] = rational_str(c);
    term["z"] = widened(mono.z(), f.context().n);
    term["x"] = widened(mono.x(), f.context().k);
    term["t"] = widened(mono.t(), f.context().m);
    root["terms"].push_back(std::move(term));
  }
  return root.dump();
}

}  // namespace pipedreams
