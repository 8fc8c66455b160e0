#pragma once

#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "enumerate.hpp"
#include "word.hpp"

namespace cayley {

/// The six count-comparison relations, ordered by strength sc => cm => c
/// and sw => w => e.
enum class Relation { c, cm, sc, w, sw, e };

inline std::string to_string(Relation r) {
  switch (r) {
    case Relation::c: return "c";
    case Relation::cm: return "cm";
    case Relation::sc: return "sc";
    case Relation::w: return "w";
    case Relation::sw: return "sw";
    case Relation::e: return "e";
  }
  return "?";
}

inline Relation parse_relation(const std::string& s) {
  if (s == "c") return Relation::c;
  if (s == "cm") return Relation::cm;
  if (s == "sc") return Relation::sc;
  if (s == "w") return Relation::w;
  if (s == "sw") return Relation::sw;
  if (s == "e") return Relation::e;
  throw std::invalid_argument("unknown relation: " + s + " (expected c, cm, sc, w, sw or e)");
}

/// Orbit of p under reverse and complement; size 1, 2 or 4.
inline std::vector<Pattern> symmetry_class(const Pattern& p) {
  std::vector<Pattern> out{p};
  auto push = [&](const Pattern& q) {
    for (const auto& r : out)
      if (r == q) return;
    out.push_back(q);
  };
  push(reverse(p));
  push(complement(p));
  push(reverse(complement(p)));
  std::sort(out.begin(), out.end());
  return out;
}

// ---- count families --------------------------------------------------------------

namespace detail {

// A relation's full count family, keyed by (n, k, content); k = -1 and an
// empty content mark unused coordinates. Two patterns are related (within
// bounds) iff their families are equal; zero counts are omitted, so lookups
// treat missing keys as 0.
using FamilyKey = std::tuple<int, int, Letters>;
using Family = std::map<FamilyKey, Int>;

inline Family count_family(const Pattern& p, Relation rel, int N, int K) {
  Family fam;
  for (int n = 0; n <= N; ++n) {
    switch (rel) {
      case Relation::c:
        fam[{n, -1, {}}] = count_avoiders(p, n);
        break;
      case Relation::e:
        fam[{n, n, {}}] = count_kary_avoiders(p, n, n);
        break;
      case Relation::cm: {
        auto by_max = counts_by_max({n, WordMode::cayley, 0, p});
        for (int k = 0; k <= std::min(n, K); ++k) fam[{n, k, {}}] = by_max[static_cast<size_t>(k)];
        break;
      }
      case Relation::w: {
        auto by_max = counts_by_max({n, WordMode::kary, K, p});
        Int cum = 0;
        for (int k = 0; k <= K; ++k) {
          cum += by_max[static_cast<size_t>(k)];
          fam[{n, k, {}}] = cum;
        }
        break;
      }
      case Relation::sc: {
        for (int k = 0; k <= std::min(n, K); ++k)
          for (auto& [content, cnt] : content_indexed_counts_cayley(p, n, k))
            fam[{n, k, content}] = cnt;
        break;
      }
      case Relation::sw: {
        // One pass over [K]^n; a content with max letter m occurs identically
        // in [k]^n for every k >= m, so keying by m covers all k <= K.
        for_each_word({n, WordMode::kary, K, p}, [&](const int* w, int len, int mx) {
          Letters c(w, w + len);
          std::sort(c.begin(), c.end());
          fam[{n, mx, std::move(c)}] += 1;
        });
        break;
      }
    }
  }
  return fam;
}

struct FamilyDiff {
  FamilyKey key;
  Int left, right;
};

inline std::optional<FamilyDiff> first_difference(const Family& a, const Family& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
      if (ia->second != 0) return FamilyDiff{ia->first, ia->second, 0};
      ++ia;
    } else if (ia == a.end() || ib->first < ia->first) {
      if (ib->second != 0) return FamilyDiff{ib->first, 0, ib->second};
      ++ib;
    } else {
      if (ia->second != ib->second) return FamilyDiff{ia->first, ia->second, ib->second};
      ++ia;
      ++ib;
    }
  }
  return std::nullopt;
}

}  // namespace detail

// ---- pairwise tests ----------------------------------------------------------------

struct EquivWitness {
  int n = -1;
  int k = -1;  // -1 when the relation does not refine by alphabet
  Letters content;
  std::string count_p, count_q;
};

/// Verdict of one bounded equivalence test; DISTINGUISHED always carries a
/// reproducible witness. "Equivalent" is only ever claimed up to the bounds.
struct EquivReport {
  Pattern p, q;
  Relation relation = Relation::c;
  int max_n = 0;
  int max_k = 0;
  bool equivalent = false;
  std::optional<EquivWitness> witness;

  std::string verdict() const { return equivalent ? "EQUIVALENT-UP-TO-BOUNDS" : "DISTINGUISHED"; }
};

inline EquivReport test_relation(const Pattern& p, const Pattern& q, Relation rel, int max_n,
                                 int max_k) {
  EquivReport rep{p, q, rel, max_n, max_k, true, std::nullopt};
  auto fp = detail::count_family(p, rel, max_n, max_k);
  auto fq = detail::count_family(q, rel, max_n, max_k);
  if (auto diff = detail::first_difference(fp, fq)) {
    rep.equivalent = false;
    rep.witness = EquivWitness{std::get<0>(diff->key), std::get<1>(diff->key),
                               std::get<2>(diff->key), diff->left.str(), diff->right.str()};
  }
  return rep;
}

// ---- classification -----------------------------------------------------------------

struct Classification {
  Relation relation = Relation::c;
  int max_n = 0;
  int max_k = 0;
  std::vector<std::vector<Pattern>> classes;  // each sorted; ordered by representative
};

/// Groups patterns whose count families agree within bounds; the class
/// representative is the lexicographically least member.
inline Classification classify(const std::vector<Pattern>& patterns, Relation rel, int max_n,
                               int max_k) {
  std::map<detail::Family, std::vector<Pattern>> groups;
  for (const auto& p : patterns) groups[detail::count_family(p, rel, max_n, max_k)].push_back(p);
  Classification out{rel, max_n, max_k, {}};
  for (auto& [fam, members] : groups) {
    std::sort(members.begin(), members.end());
    out.classes.push_back(members);
  }
  std::sort(out.classes.begin(), out.classes.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// ---- the unequal-max witness ----------------------------------------------------------

/// If max(p) != max(q), the pair is distinguished at (n, k) = (|shorter-max
/// pattern|, min(max)): that word class contains exactly one word containing
/// the smaller-max pattern (itself) and none containing the other. Returns the
/// enumeration-validated witness, or nothing when the maxima agree.
inline std::optional<EquivWitness> max_distinguisher(const Pattern& p, const Pattern& q) {
  if (p.max() == q.max()) return std::nullopt;
  const Pattern& small = p.max() < q.max() ? p : q;
  const int m = small.max();
  const int n = small.size();
  Int cp = count_avoiders_with_max(p, n, m);
  Int cq = count_avoiders_with_max(q, n, m);
  if (cp == cq) throw std::logic_error("max_distinguisher: counts unexpectedly agree");
  return EquivWitness{n, m, {}, cp.str(), cq.str()};
}

// ---- conjecture scans ------------------------------------------------------------------

struct ConjectureCandidate {
  Pattern p, q;
  std::string detail;
  std::optional<EquivWitness> witness;
};

/// Bounded implication scan; a candidate is only evidence against the
/// conjecture (the premise was itself tested within bounds).
struct ConjectureReport {
  std::string which;
  int max_len = 0;
  int max_n = 0;
  int max_k = 0;
  long pairs_tested = 0;
  std::vector<ConjectureCandidate> candidates;
  std::vector<std::string> notes;

  bool counterexample_found() const { return !candidates.empty(); }
  std::string verdict() const {
    return counterexample_found() ? "CANDIDATE-COUNTEREXAMPLE" : "NO-COUNTEREXAMPLE-FOUND";
  }
};

namespace detail {

inline std::vector<Pattern> all_patterns_of_length(int len) {
  std::vector<Pattern> out;
  auto s = gen_cayley(len);
  while (auto w = s.next()) out.push_back(Pattern(CayleyWord(*w)));
  return out;
}

}  // namespace detail

/// which: cm_implies_sc | c_implies_cm | c_implies_equal_max | max_monotonicity.
/// Tests same-length pattern pairs up to max_len (the source statements are
/// about equal-length patterns; across lengths the premises fail trivially).
inline ConjectureReport conjecture_scan(const std::string& which, int max_len, int max_n,
                                        int max_k) {
  ConjectureReport rep{which, max_len, max_n, max_k, 0, {}, {}};
  const bool premise_cm = which == "cm_implies_sc";
  const bool known_pair_note = which == "c_implies_cm" && max_len >= 5;
  if (which != "cm_implies_sc" && which != "c_implies_cm" && which != "c_implies_equal_max" &&
      which != "max_monotonicity")
    throw std::invalid_argument("unknown conjecture: " + which);

  for (int len = 1; len <= max_len; ++len) {
    auto patterns = detail::all_patterns_of_length(len);
    if (which == "max_monotonicity") {
      std::vector<detail::Family> fams;
      fams.reserve(patterns.size());
      for (const auto& p : patterns)
        fams.push_back(detail::count_family(p, Relation::c, max_n, max_k));
      for (size_t i = 0; i < patterns.size(); ++i)
        for (size_t j = 0; j < patterns.size(); ++j) {
          if (i == j || patterns[i].max() > patterns[j].max()) continue;
          ++rep.pairs_tested;
          for (int n = 0; n <= max_n; ++n) {
            const Int& ci = fams[i].at({n, -1, {}});
            const Int& cj = fams[j].at({n, -1, {}});
            if (ci < cj) {
              rep.candidates.push_back(ConjectureCandidate{
                  patterns[i], patterns[j],
                  "max(p) <= max(q) but |Cay(p)[" + std::to_string(n) + "]| < |Cay(q)[" +
                      std::to_string(n) + "]|",
                  EquivWitness{n, -1, {}, ci.str(), cj.str()}});
              break;
            }
          }
        }
      continue;
    }

    // Group by the premise family, then probe the conclusion inside groups.
    std::map<detail::Family, std::vector<size_t>> groups;
    for (size_t i = 0; i < patterns.size(); ++i)
      groups[detail::count_family(patterns[i], premise_cm ? Relation::cm : Relation::c, max_n,
                                  max_k)]
          .push_back(i);
    rep.pairs_tested += static_cast<long>(patterns.size() * (patterns.size() - 1) / 2);
    for (auto& [fam, members] : groups) {
      for (size_t a = 0; a < members.size(); ++a)
        for (size_t b = a + 1; b < members.size(); ++b) {
          const Pattern& p = patterns[members[a]];
          const Pattern& q = patterns[members[b]];
          if (which == "c_implies_equal_max") {
            if (p.max() != q.max()) {
              auto w = max_distinguisher(p, q);
              rep.candidates.push_back(ConjectureCandidate{
                  p, q, "Cayley-equivalent within bounds but maxima differ", w});
            }
          } else {
            Relation conclusion = premise_cm ? Relation::sc : Relation::cm;
            auto res = test_relation(p, q, conclusion, max_n, max_k);
            if (!res.equivalent) {
              rep.candidates.push_back(ConjectureCandidate{
                  p, q,
                  std::string(premise_cm ? "cm" : "c") + "-equivalent within bounds but " +
                      to_string(conclusion) + "-distinguished",
                  res.witness});
            }
          }
        }
    }
  }

  if (known_pair_note) {
    // The smallest candidate pair: Cayley counts agree to n <= 9 while the
    // max-refined counts split at (n, k) = (9, 5). Verified live.
    Pattern p{1, 3, 4, 4, 2}, q{1, 4, 2, 3, 3};
    auto cm = test_relation(p, q, Relation::cm, 9, 5);
    auto c = test_relation(p, q, Relation::c, 9, 0);
    std::string note = "closest known candidate 13442 vs 14233: Cayley counts " +
                       std::string(c.equivalent ? "agree" : "DIFFER") + " for n <= 9; ";
    if (!cm.equivalent && cm.witness) {
      note += "max-refined counts first differ at (n,k) = (" + std::to_string(cm.witness->n) +
              "," + std::to_string(cm.witness->k) + "): " + cm.witness->count_p + " vs " +
              cm.witness->count_q;
    } else {
      note += "max-refined counts agree within (9,5)";
    }
    rep.notes.push_back(note);
  }
  return rep;
}

}  // namespace cayley
