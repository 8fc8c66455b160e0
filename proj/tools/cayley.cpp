// Command-line front end: counting, series evaluation, identity verification,
// equivalence classification, bijection application and conjecture scans.
//
// Exit codes: 0 success, 1 verification failure or internal mismatch between
// backends, 2 usage error. Worker count comes from CAYLEY_WORKERS (value 1
// forces sequential mode); the default is the available parallelism.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <cayley/cayley.hpp>

using nlohmann::json;
using namespace cayley;

namespace {

struct OutputTarget {
  std::unique_ptr<std::ofstream> file;
  std::ostream* os = &std::cout;

  void open(const std::string& path) {
    if (path.empty()) return;
    file = std::make_unique<std::ofstream>(path);
    if (!*file) throw std::runtime_error("cannot open output file: " + path);
    os = file.get();
  }
  std::ostream& out() { return *os; }
};

Pattern parse_pattern_arg(const std::string& text) {
  try {
    return parse_pattern(text);
  } catch (const std::exception& e) {
    throw CLI::ValidationError(
        "pattern",
        "'" + text + "' is not a Cayley permutation (its distinct letters must be exactly "
                     "{1,...,k} for some k): " + e.what());
  }
}

json witness_json(const EquivWitness& w) {
  json j{{"n", w.n}};
  if (w.k >= 0) j["k"] = w.k;
  if (!w.content.empty()) j["content"] = to_string(w.content);
  j["count_p"] = w.count_p;
  j["count_q"] = w.count_q;
  return j;
}

json check_json(const CheckResult& r) {
  json j{{"name", r.name},
         {"bound", r.bound},
         {"verdict", r.pass ? "PASS" : "FAIL"},
         {"identity", r.statement}};
  if (r.conjecture) j["conjecture"] = true;
  if (!r.note.empty()) j["note"] = r.note;
  if (r.mismatch) {
    json m{{"n", r.mismatch->n},
           {"left", r.mismatch->left_label},
           {"right", r.mismatch->right_label},
           {"left_value", r.mismatch->left_value},
           {"right_value", r.mismatch->right_value}};
    if (r.mismatch->k >= 0) m["k"] = r.mismatch->k;
    j["mismatch"] = m;
  }
  return j;
}

void print_check_text(std::ostream& os, const CheckResult& r) {
  os << (r.pass ? "PASS" : "FAIL") << "  " << r.name << " (N=" << r.bound << ")";
  if (r.conjecture) os << " [CONJECTURE]";
  os << "  " << r.statement;
  if (!r.note.empty()) os << "  -- " << r.note;
  if (r.mismatch) {
    os << "  first mismatch at n=" << r.mismatch->n;
    if (r.mismatch->k >= 0) os << ", k=" << r.mismatch->k;
    os << ": " << r.mismatch->left_label << " = " << r.mismatch->left_value << " vs "
       << r.mismatch->right_label << " = " << r.mismatch->right_value;
  }
  os << "\n";
}

// Closed-form backend for patterns the catalog knows; produces the counts up
// to the requested order.
struct FormulaBackend {
  std::string label;
  std::function<CountSeq(int)> produce;
};

std::optional<FormulaBackend> formula_for(const Pattern& p) {
  const Letters& ls = p.letters();
  const bool all_ones = std::all_of(ls.begin(), ls.end(), [](int v) { return v == 1; });
  if (all_ones && p.size() == 1) {
    return FormulaBackend{"only the empty word avoids 1", [](int N) {
                            CountSeq r = CountSeq::zeros(N);
                            r.at(0) = 1;
                            return r;
                          }};
  }
  if (all_ones && p.size() == 2) {
    return FormulaBackend{"n!", [](int N) { return series::make_L(N); }};
  }
  if (all_ones && p.size() == 3) {
    return FormulaBackend{"n! ((1+s)^{n+1}-(1-s)^{n+1})/(2^{n+1} s), s = sqrt 3", [](int N) {
                            CountSeq r = CountSeq::zeros(N);
                            for (int n = 0; n <= N; ++n) r.at(n) = cay111_closed_form(n);
                            return r;
                          }};
  }
  if (all_ones) {
    const int k = p.size();
    return FormulaBackend{"L(E_1 + ... + E_" + std::to_string(k - 1) + ") series",
                          [k](int N) { return cay_1k(k, N); }};
  }
  if (p.size() == 2) {  // 12 or 21
    return FormulaBackend{"2^{n-1}", [](int N) {
                            CountSeq r = CountSeq::zeros(N);
                            r.at(0) = 1;
                            for (int n = 1; n <= N; ++n) r.at(n) = pow2(n - 1);
                            return r;
                          }};
  }
  if (p.size() == 3 && p.max() == 2) {  // the 112 class
    return FormulaBackend{"(n+1)!/2", [](int N) {
                            CountSeq r = CountSeq::zeros(N);
                            for (int n = 0; n <= N; ++n) r.at(n) = cay112_count(n);
                            return r;
                          }};
  }
  if (p.size() == 3 && p.max() == 3) {  // S3 patterns
    return FormulaBackend{"alternating Catalan sum", [](int N) {
                            CountSeq r = CountSeq::zeros(N);
                            for (int n = 0; n <= N; ++n) r.at(n) = cay123_birmajer(n);
                            return r;
                          }};
  }
  return std::nullopt;
}

void write_counts_line(std::ostream& os, const CountSeq& seq) {
  for (int n = 0; n <= seq.order(); ++n) {
    if (n) os << ' ';
    os << seq.at(n);
  }
  os << "\n";
}

json counts_json(const CountSeq& seq) {
  json arr = json::array();
  for (int n = 0; n <= seq.order(); ++n) arr.push_back(seq.at(n).str());
  return arr;
}

void write_bfile(std::ostream& os, const CountSeq& seq) {
  for (int n = 0; n <= seq.order(); ++n) os << n << ' ' << seq.at(n) << '\n';
}

// ---- count ----------------------------------------------------------------------

int run_count(const std::string& pattern_text, int max_n, int max_k, const std::string& mode,
              const std::string& format, OutputTarget& target) {
  std::optional<Pattern> pattern;
  if (!pattern_text.empty()) pattern = parse_pattern_arg(pattern_text);
  std::ostream& os = target.out();

  if (mode == "by-max" || mode == "kary") {
    const int K = max_k > 0 ? max_k : max_n;
    if (mode == "kary" && max_k <= 0)
      throw CLI::ValidationError("--max-k", "k-ary counting needs --max-k");
    CountTable t = build_count_table(pattern, mode == "by-max" ? "max-exactly-k" : "k-ary", max_n,
                                     K);
    if (format == "tsv") {
      t.write_tsv(os);
    } else if (format == "bfile") {
      t.write_bfile(os);
    } else if (format == "json") {
      json rows = json::array();
      for (int n = 0; n <= t.max_n; ++n)
        for (size_t k = 0; k < t.counts[static_cast<size_t>(n)].size(); ++k)
          rows.push_back(json{{"n", n}, {"k", k},
                              {"count", t.counts[static_cast<size_t>(n)][k].str()}});
      os << json{{"pattern", pattern_text}, {"mode", t.mode}, {"counts", rows}}.dump(2) << "\n";
    } else {
      t.write_tsv(os);
    }
    return 0;
  }

  // single sequence modes: all | primitive
  CountSeq enumerated = CountSeq::zeros(max_n);
  const int enum_cap = std::min(max_n, 9);  // enumeration cross-check bound
  std::optional<FormulaBackend> backend;
  if (mode == "all" && pattern) backend = formula_for(*pattern);
  if (mode == "all" && !pattern)
    backend = FormulaBackend{"L(E+) series", [](int N) { return fubini(N); }};

  CountSeq result = CountSeq::zeros(max_n);
  std::string backend_note;
  if (backend) {
    result = backend->produce(max_n);
    for (int n = 0; n <= enum_cap; ++n) {
      Int e = mode == "primitive"
                  ? (pattern ? count_primitive_avoiders(*pattern, n) : count_primitive(n))
                  : (pattern ? count_avoiders(*pattern, n) : count_cayley(n));
      if (e != result.at(n)) {
        std::cerr << "internal mismatch for pattern '" << pattern_text << "' at n = " << n
                  << ": formula [" << backend->label << "] gives " << result.at(n)
                  << " but enumeration gives " << e << "\n";
        return 1;
      }
    }
    backend_note = "formula [" + backend->label + "]";
    if (enum_cap >= 0)
      backend_note += ", cross-checked against enumeration for n <= " + std::to_string(enum_cap);
    if (enum_cap < max_n) backend_note += "; formula only beyond";
  } else {
    if (max_n > 11)
      throw CLI::ValidationError("--max-n", "enumeration-only counting is limited to n <= 11");
    for (int n = 0; n <= max_n; ++n)
      result.at(n) = mode == "primitive"
                         ? (pattern ? count_primitive_avoiders(*pattern, n) : count_primitive(n))
                         : (pattern ? count_avoiders(*pattern, n) : count_cayley(n));
    backend_note = "enumeration";
  }

  if (format == "json") {
    os << json{{"pattern", pattern_text},
               {"mode", mode},
               {"max_n", max_n},
               {"counts", counts_json(result)},
               {"backend", backend_note}}
              .dump(2)
       << "\n";
  } else if (format == "bfile") {
    write_bfile(os, result);
  } else if (format == "tsv") {
    os << "n\tcount\n";
    for (int n = 0; n <= max_n; ++n) os << n << '\t' << result.at(n) << '\n';
  } else {
    write_counts_line(os, result);
    os << "# backend: " << backend_note << "\n";
  }
  return 0;
}

// ---- verify ---------------------------------------------------------------------

int run_verify(const std::string& name, bool all, int max_n, const std::string& format,
               OutputTarget& target) {
  std::ostream& os = target.out();
  std::vector<CheckResult> results;
  if (all) {
    for (const auto& def : identity_registry()) {
      int bound = max_n > 0 ? max_n : def.default_bound();
      results.push_back(def.run(bound));
    }
  } else {
    if (!find_check(name)) {
      std::cerr << "unknown identity '" << name << "'; available:";
      for (const auto& def : identity_registry()) std::cerr << ' ' << def.name;
      std::cerr << "\n";
      return 2;
    }
    results.push_back(verify_identity(name, max_n));
  }
  bool hard_fail = false;
  for (const auto& r : results) {
    if (!r.pass && !r.conjecture) hard_fail = true;
    if (format == "json")
      os << check_json(r).dump() << "\n";
    else
      print_check_text(os, r);
  }
  return hard_fail ? 1 : 0;
}

// ---- series ---------------------------------------------------------------------

int run_series(const std::string& expr_text, int max_n, const std::string& format,
               OutputTarget& target) {
  std::ostream& os = target.out();
  CountSeq seq;
  try {
    seq = expr::evaluate(expr_text, max_n);
  } catch (const expr::ParseError& e) {
    std::cerr << "series: " << e.what() << "\n";
    return 2;
  }
  if (format == "json") {
    os << json{{"expr", expr_text}, {"max_n", max_n}, {"counts", counts_json(seq)}}.dump(2)
       << "\n";
  } else if (format == "bfile") {
    write_bfile(os, seq);
  } else if (format == "tsv") {
    os << "n\tcount\n";
    for (int n = 0; n <= seq.order(); ++n) os << n << '\t' << seq.at(n) << '\n';
  } else {
    write_counts_line(os, seq);
  }
  return 0;
}

// ---- equiv ----------------------------------------------------------------------

int run_equiv(std::vector<std::string> pattern_texts, int length, const std::string& relation,
              int max_n, int max_k, const std::string& format, OutputTarget& target) {
  std::ostream& os = target.out();
  Relation rel = parse_relation(relation);
  std::vector<Pattern> patterns;
  if (length > 0) {
    auto s = gen_cayley(length);
    while (auto w = s.next()) patterns.push_back(Pattern(CayleyWord(*w)));
  } else {
    for (const auto& t : pattern_texts) patterns.push_back(parse_pattern_arg(t));
  }
  if (patterns.empty())
    throw CLI::ValidationError("--patterns", "give patterns or --length");

  if (patterns.size() == 2) {
    EquivReport rep = test_relation(patterns[0], patterns[1], rel, max_n, max_k);
    if (format == "json") {
      json j{{"p", to_compact_string(rep.p.letters())},
             {"q", to_compact_string(rep.q.letters())},
             {"relation", to_string(rel)},
             {"max_n", max_n},
             {"max_k", max_k},
             {"verdict", rep.verdict()}};
      if (rep.witness) j["witness"] = witness_json(*rep.witness);
      os << j.dump(2) << "\n";
    } else {
      os << rep.verdict();
      if (rep.witness) {
        os << " at n=" << rep.witness->n;
        if (rep.witness->k >= 0) os << ", k=" << rep.witness->k;
        if (!rep.witness->content.empty()) os << ", content {" << to_string(rep.witness->content)
                                              << "}";
        os << ": " << rep.witness->count_p << " vs " << rep.witness->count_q;
      }
      os << "\n";
    }
    return 0;
  }

  Classification cls = classify(patterns, rel, max_n, max_k);
  if (format == "json") {
    json classes = json::array();
    for (const auto& c : cls.classes) {
      json members = json::array();
      for (const auto& p : c) members.push_back(to_compact_string(p.letters()));
      classes.push_back(members);
    }
    os << json{{"relation", to_string(rel)},
               {"max_n", max_n},
               {"max_k", max_k},
               {"classes", classes}}
              .dump(2)
       << "\n";
  } else {
    for (const auto& c : cls.classes) {
      for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << to_compact_string(c[i].letters());
      os << "\n";
    }
  }
  return 0;
}

// ---- bij ------------------------------------------------------------------------

int run_bij(const std::string& name, const std::string& input, const std::string& slots_text,
            int size, const std::string& suite, int suite_n, const std::string& format,
            OutputTarget& target) {
  std::ostream& os = target.out();
  if (!suite.empty()) {
    BijectionReport rep = bijection_suite(suite, suite_n);
    if (format == "json") {
      json j{{"name", rep.name},
             {"n", rep.n},
             {"checked", rep.checked.str()},
             {"round_trip_ok", rep.round_trip_ok},
             {"property_ok", rep.property_ok}};
      if (rep.first_failure) j["first_failure"] = *rep.first_failure;
      os << j.dump(2) << "\n";
    } else {
      os << rep.name << " n=" << rep.n << ": checked " << rep.checked << ", "
         << (rep.ok() ? "all round trips and properties hold"
                      : "FAILED: " + rep.first_failure.value_or("unknown"))
         << "\n";
    }
    return rep.ok() ? 0 : 1;
  }

  if (name == "cay2bal") {
    os << to_string(cay_to_ballot(CayleyWord(parse_letters(input)))) << "\n";
  } else if (name == "bal2cay") {
    os << to_string(ballot_to_cay(parse_ballot(input))) << "\n";
  } else if (name == "to123") {
    os << to_string(to_123_rep(CayleyWord(parse_letters(input)))) << "\n";
  } else if (name == "to132") {
    os << to_string(to_132_rep(CayleyWord(parse_letters(input)))) << "\n";
  } else if (name == "simion_schmidt") {
    os << to_string(simion_schmidt(CayleyWord(parse_letters(input)))) << "\n";
  } else if (name == "simion_schmidt_inv") {
    os << to_string(simion_schmidt_inverse(CayleyWord(parse_letters(input)))) << "\n";
  } else if (name == "prim_contract") {
    auto [slots, v] = prim_contract(CayleyWord(parse_letters(input)));
    std::string s;
    for (int x : slots) s += (s.empty() ? "" : ",") + std::to_string(x);
    os << "S={" << s << "} v=" << to_string(v) << "\n";
  } else if (name == "prim_expand") {
    std::set<int> slots;
    if (!slots_text.empty())
      for (int v : parse_letters(slots_text)) slots.insert(v);
    CayleyWord v(parse_letters(input));
    int n = size > 0 ? size : v.size() + static_cast<int>(slots.size());
    os << to_string(prim_expand(slots, v, n)) << "\n";
  } else {
    throw CLI::ValidationError("--name", "unknown bijection '" + name + "'");
  }
  return 0;
}

// ---- conjecture -------------------------------------------------------------------

int run_conjecture(const std::string& which, int max_len, int max_n, int max_k,
                   const std::string& format, OutputTarget& target) {
  std::ostream& os = target.out();
  if (which == "fixed_point") {
    CheckResult r = verify_identity("fixpoint_conj", max_n);
    if (format == "json")
      os << check_json(r).dump(2) << "\n";
    else
      print_check_text(os, r);
    return 0;
  }
  ConjectureReport rep = conjecture_scan(which, max_len, max_n, max_k);
  if (format == "json") {
    json cands = json::array();
    for (const auto& c : rep.candidates) {
      json j{{"p", to_compact_string(c.p.letters())},
             {"q", to_compact_string(c.q.letters())},
             {"detail", c.detail}};
      if (c.witness) j["witness"] = witness_json(*c.witness);
      cands.push_back(j);
    }
    os << json{{"which", rep.which},
               {"max_len", rep.max_len},
               {"max_n", rep.max_n},
               {"max_k", rep.max_k},
               {"pairs_tested", rep.pairs_tested},
               {"verdict", rep.verdict()},
               {"candidates", cands},
               {"notes", rep.notes}}
              .dump(2)
       << "\n";
  } else {
    os << rep.which << " (len<=" << rep.max_len << ", N=" << rep.max_n << ", K=" << rep.max_k
       << "): " << rep.verdict() << " over " << rep.pairs_tested << " pairs\n";
    for (const auto& c : rep.candidates) {
      os << "  candidate: " << to_compact_string(c.p.letters()) << " vs "
         << to_compact_string(c.q.letters()) << " -- " << c.detail;
      if (c.witness) {
        os << " at n=" << c.witness->n;
        if (c.witness->k >= 0) os << ", k=" << c.witness->k;
        os << ": " << c.witness->count_p << " vs " << c.witness->count_q;
      }
      os << "\n";
    }
    for (const auto& n : rep.notes) os << "  note: " << n << "\n";
  }
  return 0;
}

// ---- table ---------------------------------------------------------------------

int run_table(int max_n, const std::string& format, OutputTarget& target) {
  std::ostream& os = target.out();
  struct Row {
    std::string patterns, formula;
    std::function<Int(int)> value;
  };
  const std::vector<Row> rows = {
      {"11", "n!", [](int n) { return factorial(n); }},
      {"12 21", "2^{n-1}", [](int n) { return n == 0 ? Int(1) : pow2(n - 1); }},
      {"111", "n! ((1+s)^{n+1}-(1-s)^{n+1})/(2^{n+1} s)",
       [](int n) { return cay111_closed_form(n); }},
      {"112 121 122 211 212 221", "(n+1)!/2", [](int n) { return cay112_count(n); }},
      {"123 132 213 231 312 321", "alternating Catalan sum",
       [](int n) { return cay123_birmajer(n); }},
  };
  json jrows = json::array();
  for (const auto& r : rows) {
    CountSeq seq = CountSeq::zeros(max_n);
    for (int n = 0; n <= max_n; ++n) seq.at(n) = r.value(n);
    if (format == "json") {
      jrows.push_back(json{{"patterns", r.patterns},
                           {"formula", r.formula},
                           {"counts", counts_json(seq)}});
    } else if (format == "tsv") {
      os << r.patterns << '\t' << r.formula;
      for (int n = 0; n <= max_n; ++n) os << '\t' << seq.at(n);
      os << '\n';
    } else {
      os << r.patterns << "  [" << r.formula << "]\n  ";
      write_counts_line(os, seq);
    }
  }
  if (format == "json") os << jrows.dump(2) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Pattern-avoiding Cayley permutations: exact enumeration, species-style series calculus, "
      "bijections and equivalence scans.\n"
      "Set CAYLEY_WORKERS to control parallelism (1 = sequential)."};
  app.require_subcommand(1);
  std::string format = "text", output_path;
  app.add_option("--format", format, "output format: text, json, tsv or bfile")
      ->check(CLI::IsMember({"text", "json", "tsv", "bfile"}));
  app.add_option("--output", output_path, "write to a file instead of standard output");

  // count
  auto* count_cmd = app.add_subcommand("count", "count pattern-avoiding Cayley words");
  std::string count_pattern, count_mode = "all";
  int count_max_n = 8, count_max_k = 0;
  count_cmd->add_option("--pattern", count_pattern, "pattern (digits, or comma-separated letters)");
  count_cmd->add_option("--max-n", count_max_n, "largest length n")->required();
  count_cmd->add_option("--max-k", count_max_k, "alphabet bound for k-ary/by-max modes");
  count_cmd->add_option("--mode", count_mode, "all, by-max, kary or primitive")
      ->check(CLI::IsMember({"all", "by-max", "kary", "primitive"}));

  // series
  auto* series_cmd = app.add_subcommand(
      "series",
      "evaluate a species expression; atoms E E+ Eeven Eodd E[k] X 1 L C Cat Fub; "
      "operators: postfix ' (derivative) and ptg (pointing), int(...) (integral), "
      "o (composition), then . (product), ** (convolution), odot (ordinal product) "
      "at one level (parenthesize when mixing), then + (sum)");
  std::string series_expr;
  int series_max_n = 10;
  series_cmd->add_option("--expr", series_expr, "expression, e.g. \"L o E+\"")->required();
  series_cmd->add_option("--max-n", series_max_n, "truncation order");

  // verify
  auto* verify_cmd = app.add_subcommand("verify", "run named identity checks");
  std::string verify_name;
  bool verify_all_flag = false;
  int verify_max_n = 0;
  verify_cmd->add_option("--name", verify_name, "check name");
  verify_cmd->add_flag("--all", verify_all_flag, "run the whole registry");
  verify_cmd->add_option("--max-n", verify_max_n,
                         "bound override (default 8 enumeration-backed, 12 series-only)");

  // equiv
  auto* equiv_cmd = app.add_subcommand("equiv", "equivalence tests and classification");
  std::vector<std::string> equiv_patterns;
  std::string equiv_relation = "c";
  int equiv_length = 0, equiv_max_n = 8, equiv_max_k = 6;
  equiv_cmd->add_option("--patterns", equiv_patterns, "patterns to compare or classify");
  equiv_cmd->add_option("--length", equiv_length, "classify all patterns of this length");
  equiv_cmd->add_option("--relation", equiv_relation, "c, cm, sc, w, sw or e");
  equiv_cmd->add_option("--max-n", equiv_max_n, "length bound");
  equiv_cmd->add_option("--max-k", equiv_max_k, "alphabet bound (cm, sc, w, sw)");

  // bij
  auto* bij_cmd = app.add_subcommand("bij", "apply a bijection or run an exhaustive suite");
  std::string bij_name, bij_input, bij_slots, bij_suite;
  int bij_size = 0, bij_suite_n = 5;
  bij_cmd->add_option("--name", bij_name,
                      "cay2bal, bal2cay, to123, to132, simion_schmidt, simion_schmidt_inv, "
                      "prim_contract or prim_expand");
  bij_cmd->add_option("--input", bij_input, "word (or ballot for bal2cay)");
  bij_cmd->add_option("--slots", bij_slots, "duplicate slots for prim_expand, e.g. 2,3,7");
  bij_cmd->add_option("--size", bij_size, "target length for prim_expand");
  bij_cmd->add_option("--suite", bij_suite, "exhaustive suite: cay_bal, simion_schmidt or prim");
  bij_cmd->add_option("--suite-n", bij_suite_n, "size for --suite");

  // conjecture
  auto* conj_cmd = app.add_subcommand("conjecture", "bounded scans of the open problems");
  std::string conj_which;
  int conj_max_len = 3, conj_max_n = 7, conj_max_k = 5;
  conj_cmd
      ->add_option("--which", conj_which,
                   "cm_implies_sc, c_implies_cm, c_implies_equal_max, max_monotonicity or "
                   "fixed_point")
      ->required();
  conj_cmd->add_option("--max-len", conj_max_len, "largest pattern length");
  conj_cmd->add_option("--max-n", conj_max_n, "length bound");
  conj_cmd->add_option("--max-k", conj_max_k, "alphabet bound");

  // table
  auto* table_cmd = app.add_subcommand("table", "closed-form counts for short patterns");
  int table_max_n = 8;
  table_cmd->add_option("--max-n", table_max_n, "largest length n");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  OutputTarget target;
  try {
    target.open(output_path);
    if (count_cmd->parsed())
      return run_count(count_pattern, count_max_n, count_max_k, count_mode, format, target);
    if (series_cmd->parsed()) return run_series(series_expr, series_max_n, format, target);
    if (verify_cmd->parsed()) {
      if (!verify_all_flag && verify_name.empty()) {
        std::cerr << "verify: give --name or --all\n";
        return 2;
      }
      return run_verify(verify_name, verify_all_flag, verify_max_n, format, target);
    }
    if (equiv_cmd->parsed())
      return run_equiv(equiv_patterns, equiv_length, equiv_relation, equiv_max_n, equiv_max_k,
                       format, target);
    if (bij_cmd->parsed())
      return run_bij(bij_name, bij_input, bij_slots, bij_size, bij_suite, bij_suite_n, format,
                     target);
    if (conj_cmd->parsed())
      return run_conjecture(conj_which, conj_max_len, conj_max_n, conj_max_k, format, target);
    if (table_cmd->parsed()) return run_table(table_max_n, format, target);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
