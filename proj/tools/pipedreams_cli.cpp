// Command-line surface: compute polynomials, enumerate dreams, run the
// property suites, and inspect bottom reductions.  All output is
// byte-deterministic for a fixed request; JSON outputs carry "schema": 1.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "pipedreams/pipedream.hpp"
#include "pipedreams/poly.hpp"
#include "pipedreams/schubert.hpp"
#include "pipedreams/symfun.hpp"
#include "pipedreams/weyl.hpp"

using namespace pipedreams;
using json = nlohmann::ordered_json;

namespace {

GroupType parse_type(const std::string& s) {
  if (s == "A") return GroupType::A;
  if (s == "B") return GroupType::B;
  if (s == "C") return GroupType::C;
  if (s == "D") return GroupType::D;
  throw CLI::ValidationError("--type", "expected one of A, B, C, D");
}

SignedPermutation parse_perm(const std::string& s, GroupType t) {
  SignedPermutation w = parse_one_line(s);
  if (!w.valid_for(t))
    throw std::invalid_argument("permutation \"" + s + "\" is not valid for type " +
                                group_type_name(t));
  return w;
}

std::string polynomial_out(const Polynomial& f, const std::string& render) {
  if (render == "latex") return to_latex(f);
  if (render == "json") return to_json(f);
  return to_text(f);
}

// ---------------------------------------------------------------------------
// compute

struct ComputeArgs {
  std::string type = "B";
  std::string perm;
  int k = 2;
  std::optional<int> m;
  std::string method = "dream";
  std::string render = "text";
};

int run_compute(const ComputeArgs& a) {
  GroupType t = parse_type(a.type);
  SignedPermutation w = parse_perm(a.perm, t);
  Polynomial f = [&] {
    if (a.method == "dream")
      return t == GroupType::A ? schubert_A(w) : schubert_BCD(t, w, a.k);
    if (a.method == "bh") {
      if (t == GroupType::A)
        throw std::invalid_argument("--method bh applies to types B, C, D");
      return schubert_via_BH(t, w, a.k);
    }
    if (a.method == "cauchy") {
      if (t == GroupType::A)
        throw std::invalid_argument("--method cauchy applies to types B, C, D");
      return double_schubert(t, w, a.k, a.m.value_or(w.n() - 1))
          .via_factorizations;
    }
    if (a.method == "eyd") {
      if (t != GroupType::B)
        throw std::invalid_argument("--method eyd applies to type B only");
      return kirillov_naruse_B(w);
    }
    throw std::invalid_argument("unknown method \"" + a.method + "\"");
  }();
  if (a.render == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "compute";
    out["type"] = a.type;
    out["perm"] = to_one_line(w);
    out["k"] = a.k;
    if (a.m) out["m"] = *a.m;
    out["method"] = a.method;
    out["polynomial"] = json::parse(to_json(f));
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << polynomial_out(f, a.render) << "\n";
  }
  return 0;
}

// ---------------------------------------------------------------------------
// enumerate / bottom / reduce

struct EnumerateArgs {
  std::string type = "B";
  std::string perm;
  int k = 2;
  std::string render = "ascii";
};

int run_enumerate(const EnumerateArgs& a) {
  GroupType t = parse_type(a.type);
  SignedPermutation w = parse_perm(a.perm, t);
  std::vector<PipeDream> dreams = enumerate_dreams(t, w, a.k);
  if (a.render == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "enumerate";
    out["type"] = a.type;
    out["perm"] = to_one_line(w);
    out["k"] = a.k;
    out["count"] = dreams.size();
    out["dreams"] = json::array();
    for (const PipeDream& d : dreams) out["dreams"].push_back(json::parse(to_json(d)));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << dreams.size() << "\n";
  for (const PipeDream& d : dreams) {
    std::cout << "\n" << (a.render == "latex" ? to_latex(d) : to_ascii(d));
    std::cout << "monomial: " << to_text(Polynomial::term(monomial(d), 1,
                                                          Context{w.n() - 1, a.k,
                                                                  0}))
              << "\n";
  }
  return 0;
}

int run_bottom(const EnumerateArgs& a) {
  GroupType t = parse_type(a.type);
  SignedPermutation w = parse_perm(a.perm, t);
  PipeDream d = bottom_dream(t, w);
  int k = d.base().k;
  if (a.render == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "bottom";
    out["type"] = a.type;
    out["perm"] = to_one_line(w);
    out["dream"] = json::parse(to_json(d));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  std::cout << (a.render == "latex" ? to_latex(d) : to_ascii(d));
  std::cout << "monomial: "
            << to_text(Polynomial::term(monomial(d), 1, Context{w.n() - 1, k, 0}))
            << "\n";
  return 0;
}

struct ReduceArgs {
  std::string type = "B";
  std::string perm;
  int k = 2;
  std::size_t index = 0;
  std::string render = "ascii";
};

int run_reduce(const ReduceArgs& a) {
  GroupType t = parse_type(a.type);
  SignedPermutation w = parse_perm(a.perm, t);
  std::vector<PipeDream> dreams = enumerate_dreams(t, w, a.k);
  if (a.index >= dreams.size())
    throw std::invalid_argument("--index " + std::to_string(a.index) +
                                " out of range: fiber has " +
                                std::to_string(dreams.size()) + " dreams");
  const PipeDream& start = dreams[a.index];
  ReductionResult red = reduce_to_bottom(start);
  auto cell_of = [&](const PipeDream& d, std::size_t box) {
    const BaseCell& c = d.base().cells()[d.base().boxes()[box]];
    return std::pair<int, int>(c.row, c.col);
  };
  if (a.render == "json") {
    json out;
    out["schema"] = 1;
    out["command"] = "reduce";
    out["type"] = a.type;
    out["perm"] = to_one_line(w);
    out["k"] = a.k;
    out["index"] = a.index;
    out["start"] = json::parse(to_json(start));
    out["moves"] = json::array();
    for (const AdmissibleMove& m : red.moves) {
      auto [ar, ac] = cell_of(start, m.a);
      auto [br, bc] = cell_of(start, m.b);
      out["moves"].push_back({{"kind", m.kind},
                              {"upper", {ar, ac}},
                              {"lower", {br, bc}}});
    }
    out["result"] = json::parse(to_json(red.result));
    std::cout << out.dump(2) << "\n";
    return 0;
  }
  auto show = [&](const PipeDream& d) {
    std::cout << (a.render == "latex" ? to_latex(d) : to_ascii(d));
  };
  show(start);
  for (const AdmissibleMove& m : red.moves) {
    auto [ar, ac] = cell_of(start, m.a);
    auto [br, bc] = cell_of(start, m.b);
    std::cout << "move kind=" << m.kind << " upper=(" << ar << "," << ac
              << ") lower=(" << br << "," << bc << ")\n";
  }
  std::cout << "moves: " << red.moves.size() << "\n";
  show(red.result);
  return 0;
}

// ---------------------------------------------------------------------------
// verify

struct VerifyArgs {
  std::string suite;
  std::vector<std::string> types;
  int n = 2;
  int k = 2;
  std::optional<std::string> perm;
  int max_length = -1;
  std::string family = "both";
  std::string render = "text";
  std::string seed_report;
};

struct CheckList {
  json checks = json::array();
  int passed = 0;
  int failed = 0;
  void add(const std::string& name, bool ok) {
    checks.push_back({{"name", name}, {"passed", ok}});
    ++(ok ? passed : failed);
  }
};

std::vector<GroupType> bounds_types(const VerifyArgs& a, bool signed_only) {
  std::vector<GroupType> out;
  std::vector<std::string> names =
      a.types.empty() ? (signed_only ? std::vector<std::string>{"B", "C", "D"}
                                     : std::vector<std::string>{"A", "B", "C", "D"})
                      : a.types;
  for (const std::string& s : names) {
    GroupType t = parse_type(s);
    if (signed_only && t == GroupType::A)
      throw std::invalid_argument("suite applies to signed types only");
    out.push_back(t);
  }
  return out;
}

std::vector<SignedPermutation> bounded_elements(GroupType t, const VerifyArgs& a) {
  std::vector<SignedPermutation> out;
  if (a.perm) {
    out.push_back(parse_perm(*a.perm, t));
    return out;
  }
  for (const SignedPermutation& w : all_elements(t, a.n))
    if (a.max_length < 0 || length(w, t) <= a.max_length) out.push_back(w);
  return out;
}

std::string check_tag(GroupType t, const SignedPermutation& w) {
  return std::string(group_type_name(t)) + "." + to_one_line(w);
}

void suite_oracles(const VerifyArgs& a, CheckList& list) {
  for (GroupType t : bounds_types(a, true)) {
    if (t == GroupType::D && a.n < 2) continue;
    for (const SignedPermutation& w : bounded_elements(t, a)) {
      list.add("bh." + check_tag(t, w) + ".k" + std::to_string(a.k),
               schubert_via_BH(t, w, a.k) == schubert_BCD(t, w, a.k));
      if (t == GroupType::B) {
        using boost::multiprecision::cpp_int;
        Rational scale(1, cpp_int(1) << w.negative_count());
        list.add("normalization." + to_one_line(w),
                 schubert_BCD(GroupType::B, w, a.k) ==
                     scale * schubert_BCD(GroupType::C, w, a.k));
      }
      DoubleSchubert d = double_schubert(t, w, a.k, w.n() - 1);
      list.add("double." + check_tag(t, w), d.consistent);
      if (t == GroupType::B && w.n() <= 3)
        list.add("triangle." + to_one_line(w),
                 kirillov_naruse_B(w) ==
                     double_schubert(GroupType::B, w, w.n(), w.n() - 1)
                         .via_factorizations);
    }
  }
}

void suite_divided_diff(const VerifyArgs& a, CheckList& list) {
  for (GroupType t : bounds_types(a, true)) {
    if (t == GroupType::D && a.n < 2) continue;
    for (const SignedPermutation& w : bounded_elements(t, a))
      for (Letter s : generators(t, a.n)) {
        if (a.family != "t")
          list.add("dd.z." + check_tag(t, w) + "." + s.str(),
                   verify_divided_difference(t, w, s, VarFamily::z, a.k).passed);
        if (a.family != "z")
          list.add("dd.t." + check_tag(t, w) + "." + s.str(),
                   verify_divided_difference(t, w, s, VarFamily::t, a.k).passed);
      }
  }
}

void suite_bottom(const VerifyArgs& a, CheckList& list) {
  for (GroupType t : bounds_types(a, true)) {
    if (t == GroupType::D && a.n < 2) continue;
    std::set<std::string> monomials;
    std::vector<SignedPermutation> elements = bounded_elements(t, a);
    for (const SignedPermutation& w : elements) {
      PipeDream bottom = bottom_dream(t, w);
      monomials.insert(to_ascii(bottom));
      bool all_ok = true;
      for (const PipeDream& d : enumerate_dreams(t, w, a.k)) {
        ReductionResult red = reduce_to_bottom(d);
        if (to_ascii(red.result) != to_ascii(embed_dream(bottom, a.k)))
          all_ok = false;
      }
      list.add("reduce." + check_tag(t, w) + ".k" + std::to_string(a.k), all_ok);
    }
    if (!a.perm)
      list.add("distinct." + std::string(group_type_name(t)),
               monomials.size() == elements.size());
  }
}

void suite_grassmannian(const VerifyArgs& a, CheckList& list) {
  for (GroupType t : bounds_types(a, false)) {
    if (t == GroupType::D && a.n < 2) continue;
    for (const SignedPermutation& w : bounded_elements(t, a)) {
      auto gd = grassmannian_data(w, t);
      if (!gd) continue;
      if (t == GroupType::A) {
        if (w.is_identity()) continue;
        list.add("grass.A." + to_one_line(w),
                 schubert_A(w) == schur(gd->partition, gd->descent)
                                      .with_context(Context{w.n() - 1, 0, 0}));
        continue;
      }
      Context c{w.n() - 1, a.k, 0};
      bool ok =
          t == GroupType::C
              ? schubert_BCD(t, w, a.k) == schur_Q(gd->partition, a.k).with_context(c)
              : schubert_BCD(t, w, a.k) ==
                    schur_P(gd->partition, a.k).with_context(c);
      list.add("grass." + check_tag(t, w) + ".k" + std::to_string(a.k), ok);
    }
  }
}

void suite_appendix(CheckList& list) {
  auto zv = [](int i, Context c) {
    return Polynomial::term(Monomial::z_var(i), 1, c);
  };
  auto ps = [](int d, Context c) { return power_sum(d, c.k).with_context(c); };
  struct Row {
    const char* name;
    const char* w;
    Polynomial value;
  };
  for (int k = 2; k <= 4; ++k) {
    Context c{1, k, 0};
    Polynomial p1 = ps(1, c), p3 = ps(3, c), z1 = zv(1, c);
    std::vector<Row> rows;
    rows.push_back({"row1", "-1 2", p1});
    rows.push_back({"row2", "2 1", z1 + Rational(2) * p1});
    rows.push_back({"row3", "-2 1", p1 * p1});
    rows.push_back({"row4", "2 -1", z1 * p1 + p1 * p1});
    rows.push_back({"row5", "-2 -1",
                    Rational(1, 3) * (p1 * p1 * p1) - Rational(1, 3) * p3});
    rows.push_back({"row6", "1 -2",
                    z1 * p1 * p1 + Rational(2, 3) * (p1 * p1 * p1) +
                        Rational(1, 3) * p3});
    rows.push_back({"row7", "-1 -2",
                    Rational(1, 3) * (z1 * p1 * p1 * p1) -
                        Rational(1, 3) * (z1 * p3) +
                        Rational(1, 3) * (p1 * p1 * p1 * p1) -
                        Rational(1, 3) * (p1 * p3)});
    for (const Row& r : rows)
      list.add("table1." + std::string(r.name) + ".k" + std::to_string(k),
               schubert_BCD(GroupType::B, parse_one_line(r.w), k) == r.value);
  }
  for (int k = 2; k <= 3; ++k) {
    Context c{2, k, 0};
    Polynomial p1 = ps(1, c), p3 = ps(3, c), z1 = zv(1, c), z2 = zv(2, c);
    std::vector<Row> rows;
    rows.push_back({"row1", "-1 -2 3", z1 * p1 + p1 * p1});
    rows.push_back({"row2", "3 1 2", z1 * z1 + Rational(2) * (z1 * p1) + p1 * p1});
    rows.push_back({"row3", "-2 3 -1", (z1 + z2) * p1 + p1 * p1});
    rows.push_back({"row4", "-1 -3 2",
                    z1 * p1 * p1 + Rational(2, 3) * (p1 * p1 * p1) +
                        Rational(1, 3) * p3});
    for (const Row& r : rows)
      list.add("table2." + std::string(r.name) + ".k" + std::to_string(k),
               schubert_BCD(GroupType::D, parse_one_line(r.w), k) == r.value);
  }
}

int run_verify(const VerifyArgs& a) {
  CheckList list;
  if (a.suite == "oracles")
    suite_oracles(a, list);
  else if (a.suite == "divided-diff")
    suite_divided_diff(a, list);
  else if (a.suite == "bottom")
    suite_bottom(a, list);
  else if (a.suite == "grassmannian")
    suite_grassmannian(a, list);
  else if (a.suite == "appendix")
    suite_appendix(list);
  else
    throw std::invalid_argument("unknown suite \"" + a.suite + "\"");

  json report;
  report["schema"] = 1;
  report["command"] = "verify";
  report["suite"] = a.suite;
  json bounds;
  if (!a.types.empty()) bounds["types"] = a.types;
  bounds["n"] = a.n;
  bounds["k"] = a.k;
  if (a.perm) bounds["perm"] = *a.perm;
  if (a.max_length >= 0) bounds["max_length"] = a.max_length;
  if (a.suite == "divided-diff") bounds["family"] = a.family;
  report["bounds"] = bounds;
  report["checks"] = list.checks;
  report["passed"] = list.passed;
  report["failed"] = list.failed;
  report["ok"] = list.failed == 0;

  if (!a.seed_report.empty()) {
    std::ofstream out(a.seed_report);
    out << report.dump(2) << "\n";
  }
  if (a.render == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    for (const auto& c : list.checks)
      std::cout << (c["passed"].get<bool>() ? "ok   " : "FAIL ")
                << c["name"].get<std::string>() << "\n";
    std::cout << "suite " << a.suite << ": " << list.passed << " passed, "
              << list.failed << " failed\n";
  }
  return list.failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pipe-dream Schubert calculator for the classical groups.\n"
      "Set PIPEDREAMS_THREADS to cap enumeration workers."};
  app.require_subcommand(1);

  ComputeArgs ca;
  CLI::App* compute = app.add_subcommand(
      "compute", "Print a Schubert polynomial (single or double)");
  compute->add_option("--type", ca.type, "Group type: A, B, C, or D")->required();
  compute->add_option("--perm", ca.perm, "One-line window, e.g. \"-1 2\"")
      ->required();
  compute->add_option("--k", ca.k, "Truncation level (ignored for type A)")
      ->check(CLI::NonNegativeNumber);
  compute->add_option("--m", ca.m, "Number of t variables (cauchy method)");
  compute->add_option("--method", ca.method,
                      "dream (default), bh, cauchy, or eyd")
      ->check(CLI::IsMember({"dream", "bh", "cauchy", "eyd"}));
  compute->add_option("--render", ca.render, "text (default), latex, or json")
      ->check(CLI::IsMember({"text", "latex", "json"}));

  EnumerateArgs ea;
  CLI::App* enumerate =
      app.add_subcommand("enumerate", "List the dream fiber of a permutation");
  enumerate->add_option("--type", ea.type, "Group type")->required();
  enumerate->add_option("--perm", ea.perm, "One-line window")->required();
  enumerate->add_option("--k", ea.k, "Truncation level")
      ->check(CLI::NonNegativeNumber);
  enumerate->add_option("--render", ea.render, "ascii (default), latex, or json")
      ->check(CLI::IsMember({"ascii", "latex", "json"}));

  EnumerateArgs ba;
  CLI::App* bottom =
      app.add_subcommand("bottom", "Print the bottom dream of a permutation");
  bottom->add_option("--type", ba.type, "Group type")->required();
  bottom->add_option("--perm", ba.perm, "One-line window")->required();
  bottom->add_option("--render", ba.render, "ascii (default), latex, or json")
      ->check(CLI::IsMember({"ascii", "latex", "json"}));

  ReduceArgs ra;
  CLI::App* reduce = app.add_subcommand(
      "reduce", "Reduce one fiber element to the bottom dream, move by move");
  reduce->add_option("--type", ra.type, "Group type")->required();
  reduce->add_option("--perm", ra.perm, "One-line window")->required();
  reduce->add_option("--k", ra.k, "Truncation level")
      ->check(CLI::NonNegativeNumber);
  reduce->add_option("--index", ra.index, "Fiber element (canonical order)");
  reduce->add_option("--render", ra.render, "ascii (default), latex, or json")
      ->check(CLI::IsMember({"ascii", "latex", "json"}));

  VerifyArgs va;
  CLI::App* verify = app.add_subcommand(
      "verify",
      "Run a property suite: divided-diff, bottom, oracles, grassmannian, or "
      "appendix");
  verify->add_option("suite", va.suite, "Suite name")->required();
  verify->add_option("--type", va.types, "Restrict to group types");
  verify->add_option("--n", va.n, "Window size")->check(CLI::PositiveNumber);
  verify->add_option("--k", va.k, "Truncation level")
      ->check(CLI::NonNegativeNumber);
  verify->add_option("--perm", va.perm, "Restrict to one permutation");
  verify->add_option("--max-length", va.max_length,
                     "Restrict to elements of at most this length");
  verify->add_option("--family", va.family, "divided-diff side: z, t, or both")
      ->check(CLI::IsMember({"z", "t", "both"}));
  verify->add_option("--render", va.render, "text (default) or json")
      ->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--seed-report", va.seed_report,
                     "Also write the JSON report to this path");

  CLI11_PARSE(app, argc, argv);

  try {
    if (compute->parsed()) return run_compute(ca);
    if (enumerate->parsed()) return run_enumerate(ea);
    if (bottom->parsed()) return run_bottom(ba);
    if (reduce->parsed()) return run_reduce(ra);
    if (verify->parsed()) return run_verify(va);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
