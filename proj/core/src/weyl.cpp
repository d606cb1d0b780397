#include "pipedreams/weyl.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace pipedreams {

const char* group_type_name(GroupType t) {
  switch (t) {
    case GroupType::A: return "A";
    case GroupType::B: return "B";
    case GroupType::C: return "C";
    case GroupType::D: return "D";
  }
  return "?";
}

GroupType group_type_from_name(std::string_view name) {
  if (name == "A" || name == "a") return GroupType::A;
  if (name == "B" || name == "b") return GroupType::B;
  if (name == "C" || name == "c") return GroupType::C;
  if (name == "D" || name == "d") return GroupType::D;
  throw std::invalid_argument("unknown group type: " + std::string(name));
}

std::string Letter::str() const {
  if (is_s0()) return "s0";
  if (is_s1hat()) return "s1^";
  return "s" + std::to_string(simple_index());
}

std::string word_str(const std::vector<Letter>& letters) {
  std::string out;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (i) out += ' ';
    out += letters[i].str();
  }
  return out.empty() ? "e" : out;
}

std::string word_str(const Word& a) { return word_str(a.letters); }

std::vector<std::vector<Letter>> word_readings(const Word& a) {
  std::vector<std::vector<Letter>> out{a.letters};
  for (std::size_t start : a.marked) {
    assert(start + 1 < a.letters.size());
    std::size_t count = out.size();
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Letter> flipped = out[i];
      std::swap(flipped[start], flipped[start + 1]);
      out.push_back(std::move(flipped));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool letter_valid(Letter s, GroupType t, int n) {
  if (s.is_s0()) return allows_s0(t) && n >= 1;
  if (s.is_s1hat()) return allows_s1hat(t) && n >= 2;
  return s.simple_index() <= n - 1;
}

std::vector<Letter> generators(GroupType t, int n) {
  std::vector<Letter> out;
  if (allows_s0(t)) out.push_back(Letter::s0());
  if (allows_s1hat(t) && n >= 2) out.push_back(Letter::s1hat());
  for (int i = 1; i <= n - 1; ++i) out.push_back(Letter::simple(i));
  return out;
}

SignedPermutation::SignedPermutation(std::vector<int> window) : window_(std::move(window)) {
  std::vector<char> seen(window_.size(), 0);
  for (int v : window_) {
    int a = v < 0 ? -v : v;
    if (v == 0 || a > n() || seen[a - 1])
      throw std::invalid_argument("not a signed permutation window");
    seen[a - 1] = 1;
  }
}

SignedPermutation SignedPermutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return SignedPermutation(std::move(w));
}

int SignedPermutation::negative_count() const {
  return static_cast<int>(std::count_if(window_.begin(), window_.end(), [](int v) { return v < 0; }));
}

bool SignedPermutation::is_identity() const {
  for (int i = 0; i < n(); ++i)
    if (window_[i] != i + 1) return false;
  return true;
}

bool SignedPermutation::valid_for(GroupType t) const {
  switch (t) {
    case GroupType::A: return negative_count() == 0;
    case GroupType::B:
    case GroupType::C: return true;
    case GroupType::D: return negative_count() % 2 == 0;
  }
  return false;
}

SignedPermutation SignedPermutation::inverse() const {
  std::vector<int> w(n());
  for (int i = 1; i <= n(); ++i) {
    int v = window_[i - 1];
    if (v > 0)
      w[v - 1] = i;
    else
      w[-v - 1] = -i;
  }
  return SignedPermutation(std::move(w));
}

SignedPermutation operator*(const SignedPermutation& u, const SignedPermutation& v) {
  if (u.n() != v.n()) throw std::invalid_argument("window size mismatch in product");
  std::vector<int> w(v.n());
  for (int i = 1; i <= v.n(); ++i) w[i - 1] = u.map(v.map(i));
  return SignedPermutation(std::move(w));
}

SignedPermutation letter_permutation(Letter s, int n) {
  return apply_letter(SignedPermutation::identity(n), s, Side::right);
}

SignedPermutation apply_letter(const SignedPermutation& w, Letter s, Side side) {
  int n = w.n();
  if (side == Side::right) {
    std::vector<int> v = w.window();
    if (s.is_s0()) {
      if (n < 1) throw std::invalid_argument("s0 needs n >= 1");
      v[0] = -v[0];
    } else if (s.is_s1hat()) {
      if (n < 2) throw std::invalid_argument("s1^ needs n >= 2");
      int a = v[0], b = v[1];
      v[0] = -b;
      v[1] = -a;
    } else {
      int i = s.simple_index();
      if (i + 1 > n) throw std::invalid_argument("letter out of range for window");
      std::swap(v[i - 1], v[i]);
    }
    return SignedPermutation(std::move(v));
  }
  // Left action: relabel values by the letter's own permutation.
  SignedPermutation g = letter_permutation(s, n);
  return g * w;
}

int length(const SignedPermutation& w, GroupType t) {
  const auto& v = w.window();
  int n = w.n();
  int inv = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) ++inv;
  if (t == GroupType::A) {
    if (!w.valid_for(GroupType::A))
      throw std::invalid_argument("type A element must have a sign-free window");
    return inv;
  }
  int sign_sum = 0;
  for (int x : v)
    if (x < 0) sign_sum += (t == GroupType::D) ? (-x - 1) : -x;
  if (t == GroupType::D && !w.valid_for(GroupType::D))
    throw std::invalid_argument("type D element must have an even sign count");
  return inv + sign_sum;
}

SignedPermutation word_product(const std::vector<Letter>& letters, int n) {
  SignedPermutation w = SignedPermutation::identity(n);
  for (Letter s : letters) w = apply_letter(w, s, Side::right);
  return w;
}

SignedPermutation word_product(const Word& a, int n) { return word_product(a.letters, n); }

bool is_reduced_word(const std::vector<Letter>& letters, GroupType t, int n) {
  SignedPermutation w = SignedPermutation::identity(n);
  int len = 0;
  for (Letter s : letters) {
    if (!letter_valid(s, t, n)) throw std::invalid_argument("letter invalid for group type");
    w = apply_letter(w, s, Side::right);
    int now = length(w, t);
    if (now != len + 1) return false;
    len = now;
  }
  return true;
}

bool is_reduced_word(const Word& a, GroupType t, int n) {
  return is_reduced_word(a.letters, t, n);
}

std::vector<Letter> right_descents(const SignedPermutation& w, GroupType t) {
  std::vector<Letter> out;
  int len = length(w, t);
  for (Letter s : generators(t, w.n()))
    if (length(apply_letter(w, s, Side::right), t) < len) out.push_back(s);
  return out;
}

namespace {

using WordList = std::vector<std::vector<Letter>>;

const WordList& reduced_words_memo(const SignedPermutation& w, GroupType t,
                                   std::map<std::vector<int>, WordList>& memo) {
  auto it = memo.find(w.window());
  if (it != memo.end()) return it->second;
  WordList result;
  if (w.is_identity()) {
    result.push_back({});
  } else {
    for (Letter s : right_descents(w, t)) {
      const WordList& shorter = reduced_words_memo(apply_letter(w, s, Side::right), t, memo);
      for (const auto& word : shorter) {
        auto extended = word;
        extended.push_back(s);
        result.push_back(std::move(extended));
      }
    }
    std::sort(result.begin(), result.end());
  }
  return memo.emplace(w.window(), std::move(result)).first->second;
}

}  // namespace

WordList reduced_words(const SignedPermutation& w, GroupType t) {
  if (!w.valid_for(t)) throw std::invalid_argument("element not valid for group type");
  std::map<std::vector<int>, WordList> memo;
  return reduced_words_memo(w, t, memo);
}

LehmerCode lehmer_code(const SignedPermutation& w) {
  const auto& v = w.window();
  int n = w.n();
  LehmerCode code;
  code.L.resize(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (v[i] > v[j]) ++code.L[i];
  for (int x : v)
    if (x < 0) code.N.push_back(-x);
  std::sort(code.N.rbegin(), code.N.rend());
  return code;
}

SignedPermutation from_lehmer_code(const LehmerCode& code, int n) {
  if (static_cast<int>(code.L.size()) != n)
    throw std::invalid_argument("Lehmer code length must equal n");
  std::vector<int> available;
  for (int v = 1; v <= n; ++v) {
    bool negated = std::find(code.N.begin(), code.N.end(), v) != code.N.end();
    available.push_back(negated ? -v : v);
  }
  std::sort(available.begin(), available.end());
  std::vector<int> window;
  for (int i = 0; i < n; ++i) {
    int idx = code.L[i];
    if (idx < 0 || idx >= static_cast<int>(available.size()))
      throw std::invalid_argument("Lehmer code entry out of range");
    window.push_back(available[idx]);
    available.erase(available.begin() + idx);
  }
  return SignedPermutation(std::move(window));
}

std::optional<GrassmannianData> grassmannian_data(const SignedPermutation& w, GroupType t) {
  const auto& v = w.window();
  int n = w.n();
  if (t == GroupType::A) {
    int descent = 0;
    for (int i = 1; i < n; ++i)
      if (v[i - 1] > v[i]) {
        if (descent) return std::nullopt;
        descent = i;
      }
    if (!descent) return std::nullopt;  // the identity is excluded
    GrassmannianData data;
    data.descent = descent;
    for (int i = 1; i <= descent; ++i) data.partition.push_back(v[descent - i] - (descent + 1 - i));
    while (!data.partition.empty() && data.partition.back() == 0) data.partition.pop_back();
    return data;
  }
  if (!w.valid_for(t)) return std::nullopt;
  for (int i = 1; i < n; ++i)
    if (v[i - 1] > v[i]) return std::nullopt;
  GrassmannianData data;
  for (int x : v)
    if (x < 0) data.partition.push_back(-x);
  std::sort(data.partition.rbegin(), data.partition.rend());
  if (t == GroupType::D) {
    for (int& part : data.partition) --part;
    if (!data.partition.empty() && data.partition.back() == 0) data.partition.pop_back();
  }
  return data;
}

std::vector<SignedPermutation> all_elements(GroupType t, int n) {
  std::vector<int> base(n);
  std::iota(base.begin(), base.end(), 1);
  std::vector<SignedPermutation> out;
  do {
    if (t == GroupType::A) {
      out.push_back(SignedPermutation(base));
      continue;
    }
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      if (t == GroupType::D && std::popcount(mask) % 2 != 0) continue;
      std::vector<int> window = base;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) window[i] = -window[i];
      out.push_back(SignedPermutation(std::move(window)));
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::sort(out.begin(), out.end());
  return out;
}

SignedPermutation parse_one_line(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<int> window;
  std::string token;
  while (in >> token) {
    bool overline = false;
    if (token.size() > 1 && token.back() == '~') {
      overline = true;
      token.pop_back();
    }
    std::size_t used = 0;
    int value;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad one-line entry: " + token);
    }
    if (used != token.size()) throw std::invalid_argument("bad one-line entry: " + token);
    if (overline) {
      if (value <= 0) throw std::invalid_argument("overline marker on a non-positive entry: " + token);
      value = -value;
    }
    window.push_back(value);
  }
  if (window.empty()) throw std::invalid_argument("empty one-line notation");
  return SignedPermutation(std::move(window));
}

std::string to_one_line(const SignedPermutation& w) {
  std::string out;
  for (int i = 0; i < w.n(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w.window()[i]);
  }
  return out;
}

}  // namespace pipedreams
