#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "arith.hpp"
#include "enumerate.hpp"
#include "word.hpp"

namespace cayley {

// ---- Cayley words <-> ballots -------------------------------------------------

/// Block i collects the positions carrying letter i.
inline Ballot cay_to_ballot(const CayleyWord& w) {
  std::vector<std::vector<int>> blocks(static_cast<size_t>(w.max()));
  for (int j = 0; j < w.size(); ++j) blocks[static_cast<size_t>(w.at(j)) - 1].push_back(j + 1);
  return Ballot(std::move(blocks));
}

/// Position j receives the index of the block containing j.
inline CayleyWord ballot_to_cay(const Ballot& b) {
  const int n = b.ground_size();
  Letters ls(static_cast<size_t>(n), 0);
  for (int i = 0; i < b.block_count(); ++i)
    for (int v : b.blocks()[static_cast<size_t>(i)]) ls[static_cast<size_t>(v) - 1] = i + 1;
  return CayleyWord(std::move(ls));
}

// ---- class representatives (extended Simion-Schmidt) ---------------------------

/// The 123-avoiding member of w's class: weak left-to-right minima stay put and
/// the filling is laid out in weakly decreasing order.
inline CayleyWord to_123_rep(const CayleyWord& w) {
  Letters fill = filling(w);  // ascending
  Letters out(w.letters());
  int next = static_cast<int>(fill.size()) - 1;
  int running = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (i == 0 || w.at(i) <= running) {
      running = w.at(i);
    } else {
      out[static_cast<size_t>(i)] = fill[static_cast<size_t>(next--)];
    }
  }
  return CayleyWord(std::move(out));
}

/// The 132-avoiding member of w's class: each non-minimum position takes the
/// smallest unused filling letter strictly greater than the running minimum.
inline CayleyWord to_132_rep(const CayleyWord& w) {
  Letters fill = filling(w);  // ascending
  std::vector<bool> used(fill.size(), false);
  Letters out(w.letters());
  int running = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (i == 0 || w.at(i) <= running) {
      running = w.at(i);
      continue;
    }
    bool placed = false;
    for (size_t t = 0; t < fill.size(); ++t) {
      if (!used[t] && fill[t] > running) {
        used[t] = true;
        out[static_cast<size_t>(i)] = fill[t];
        placed = true;
        break;
      }
    }
    if (!placed) throw std::logic_error("to_132_rep: no eligible filling letter");
  }
  return CayleyWord(std::move(out));
}

/// Bijection Cay(123)[n] -> Cay(132)[n]; rejects inputs containing 123.
inline CayleyWord simion_schmidt(const CayleyWord& u) {
  if (contains(u, Pattern{1, 2, 3}))
    throw std::invalid_argument("simion_schmidt: input contains 123");
  return to_132_rep(u);
}

inline CayleyWord simion_schmidt_inverse(const CayleyWord& v) {
  if (contains(v, Pattern{1, 3, 2}))
    throw std::invalid_argument("simion_schmidt_inverse: input contains 132");
  return to_123_rep(v);
}

// ---- primitive expansion/contraction -------------------------------------------

/// Writes v's letters on the slots outside S (in order) and fills each slot in
/// S with a copy of the letter to its left. S must be a subset of {2,...,n} and
/// v a primitive word on the remaining |[n] \ S| slots.
inline CayleyWord prim_expand(const std::set<int>& slots, const CayleyWord& v, int n) {
  if (static_cast<int>(slots.size()) + v.size() != n)
    throw std::invalid_argument("prim_expand: |S| + |v| must equal n");
  if (n > 0 && !is_primitive(v)) throw std::invalid_argument("prim_expand: v must be primitive");
  for (int s : slots)
    if (s < 2 || s > n) throw std::invalid_argument("prim_expand: slots must lie in {2,...,n}");
  Letters out(static_cast<size_t>(n), 0);
  int vi = 0;
  for (int pos = 1; pos <= n; ++pos) {
    if (slots.count(pos)) {
      out[static_cast<size_t>(pos) - 1] = out[static_cast<size_t>(pos) - 2];
    } else {
      out[static_cast<size_t>(pos) - 1] = v.at(vi++);
    }
  }
  return CayleyWord(std::move(out));
}

/// Records the flat-step slots as S and deletes them; slot 1 never lies in S.
inline std::pair<std::set<int>, CayleyWord> prim_contract(const CayleyWord& w) {
  if (w.empty()) throw std::invalid_argument("prim_contract: word must be nonempty");
  std::set<int> slots;
  Letters kept;
  for (int i = 0; i < w.size(); ++i) {
    if (i > 0 && w.at(i) == w.at(i - 1))
      slots.insert(i + 1);
    else
      kept.push_back(w.at(i));
  }
  return {std::move(slots), CayleyWord(std::move(kept))};
}

// ---- exhaustive suites ----------------------------------------------------------

/// Outcome of an exhaustive round-trip/property run at one size.
struct BijectionReport {
  std::string name;
  int n = 0;
  Int checked = 0;
  bool round_trip_ok = true;
  bool property_ok = true;
  std::optional<std::string> first_failure;

  bool ok() const { return round_trip_ok && property_ok; }
};

namespace detail {

// Ordered set partitions of {1..n}, enumerated independently of Cayley words
// (first block runs over nonempty subsets, then recurse).
template <class Visit>
void enum_ballots_rec(const std::vector<int>& remaining, std::vector<std::vector<int>>& acc,
                      Visit&& visit) {
  if (remaining.empty()) {
    visit(acc);
    return;
  }
  const int m = static_cast<int>(remaining.size());
  for (unsigned long mask = 1; mask < (1UL << m); ++mask) {
    std::vector<int> block, rest;
    for (int i = 0; i < m; ++i) {
      if (mask & (1UL << i))
        block.push_back(remaining[static_cast<size_t>(i)]);
      else
        rest.push_back(remaining[static_cast<size_t>(i)]);
    }
    acc.push_back(std::move(block));
    enum_ballots_rec(rest, acc, visit);
    acc.pop_back();
  }
}

template <class Visit>
void for_each_ballot(int n, Visit&& visit) {
  std::vector<int> ground(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) ground[static_cast<size_t>(i)] = i + 1;
  std::vector<std::vector<int>> acc;
  enum_ballots_rec(ground, acc, visit);
}

}  // namespace detail

inline BijectionReport suite_cay_bal(int n) {
  BijectionReport rep;
  rep.name = "cay_bal";
  rep.n = n;
  for_each_word({n, WordMode::cayley, 0, std::nullopt}, [&](const int* ws, int len, int) {
    if (!rep.ok()) return;
    CayleyWord w{Letters(ws, ws + len)};
    rep.checked += 1;
    Ballot b = cay_to_ballot(w);
    if (b.block_count() != w.max()) {
      rep.property_ok = false;
      rep.first_failure = "block count differs from max at " + to_string(w);
      return;
    }
    if (ballot_to_cay(b) != w) {
      rep.round_trip_ok = false;
      rep.first_failure = "round trip failed at " + to_string(w);
    }
  });
  if (rep.ok()) {
    detail::for_each_ballot(n, [&](const std::vector<std::vector<int>>& blocks) {
      if (!rep.ok()) return;
      Ballot b{blocks};
      if (cay_to_ballot(ballot_to_cay(b)) != b) {
        rep.round_trip_ok = false;
        rep.first_failure = "ballot round trip failed at " + to_string(b);
      }
    });
  }
  return rep;
}

inline BijectionReport suite_simion_schmidt(int n) {
  BijectionReport rep;
  rep.name = "simion_schmidt";
  rep.n = n;
  std::set<Letters> image;
  for_each_word({n, WordMode::cayley, 0, Pattern{1, 2, 3}}, [&](const int* ws, int len, int) {
    if (!rep.ok()) return;
    CayleyWord u{Letters(ws, ws + len)};
    rep.checked += 1;
    CayleyWord v = simion_schmidt(u);
    if (contains(v, Pattern{1, 3, 2})) {
      rep.property_ok = false;
      rep.first_failure = "image contains 132 at " + to_string(u);
      return;
    }
    if (wlmin(v) != wlmin(u) || filling(v) != filling(u)) {
      rep.property_ok = false;
      rep.first_failure = "minima or filling not preserved at " + to_string(u);
      return;
    }
    if (simion_schmidt_inverse(v) != u) {
      rep.round_trip_ok = false;
      rep.first_failure = "round trip failed at " + to_string(u);
      return;
    }
    if (!image.insert(v.letters()).second) {
      rep.property_ok = false;
      rep.first_failure = "image collision at " + to_string(u);
    }
  });
  if (rep.ok() && Int(static_cast<long>(image.size())) !=
                      count_avoiders(Pattern{1, 3, 2}, n)) {
    rep.property_ok = false;
    rep.first_failure = "image does not exhaust Cay(132)[" + std::to_string(n) + "]";
  }
  return rep;
}

inline BijectionReport suite_prim(int n) {
  BijectionReport rep;
  rep.name = "prim";
  rep.n = n;
  for_each_word({n, WordMode::cayley, 0, std::nullopt}, [&](const int* ws, int len, int) {
    if (!rep.ok() || len == 0) return;
    CayleyWord w{Letters(ws, ws + len)};
    rep.checked += 1;
    auto [slots, v] = prim_contract(w);
    if (!is_primitive(v)) {
      rep.property_ok = false;
      rep.first_failure = "contracted word not primitive at " + to_string(w);
      return;
    }
    if (prim_expand(slots, v, n) != w) {
      rep.round_trip_ok = false;
      rep.first_failure = "round trip failed at " + to_string(w);
    }
  });
  if (rep.ok() && n >= 1) {
    // The decomposition realizes |Cay[n]| = sum_j C(n-1, j-1) |Prim[j]|.
    Int total = 0;
    for (int j = 1; j <= n; ++j) total += binomial(n - 1, j - 1) * count_primitive(j);
    if (total != count_cayley(n)) {
      rep.property_ok = false;
      rep.first_failure = "pair count does not match |Cay[n]|";
    }
  }
  return rep;
}

inline BijectionReport bijection_suite(const std::string& name, int n) {
  if (name == "cay_bal") return suite_cay_bal(n);
  if (name == "simion_schmidt") return suite_simion_schmidt(n);
  if (name == "prim") return suite_prim(n);
  throw std::invalid_argument("unknown bijection suite: " + name);
}

}  // namespace cayley
