#pragma once

// Reference implementations used as independent oracles. These deliberately
// avoid the library's matcher and generation recursions: containment checks
// every index subset, and word families are built by filtering [n]^n.

#include <algorithm>
#include <vector>

#include <cayley/word.hpp>

namespace oracles {

inline int sgn3(int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); }

/// All-subsets containment: tries every strictly increasing index sequence.
inline bool naive_contains(const std::vector<int>& w, const std::vector<int>& p) {
  const int n = static_cast<int>(w.size());
  const int k = static_cast<int>(p.size());
  if (k == 0) return true;
  if (k > n) return false;
  std::vector<int> idx(static_cast<size_t>(k));
  for (int i = 0; i < k; ++i) idx[static_cast<size_t>(i)] = i;
  for (;;) {
    bool iso = true;
    for (int a = 0; a < k && iso; ++a)
      for (int b = a + 1; b < k && iso; ++b)
        if (sgn3(w[static_cast<size_t>(idx[static_cast<size_t>(a)])],
                 w[static_cast<size_t>(idx[static_cast<size_t>(b)])]) !=
            sgn3(p[static_cast<size_t>(a)], p[static_cast<size_t>(b)]))
          iso = false;
    if (iso) return true;
    // next combination
    int i = k - 1;
    while (i >= 0 && idx[static_cast<size_t>(i)] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[static_cast<size_t>(i)];
    for (int j = i + 1; j < k; ++j)
      idx[static_cast<size_t>(j)] = idx[static_cast<size_t>(j - 1)] + 1;
  }
}

/// Cayley words of length n obtained by filtering all of [n]^n (n small).
inline std::vector<std::vector<int>> naive_cayley_words(int n) {
  std::vector<std::vector<int>> out;
  if (n == 0) {
    out.push_back({});
    return out;
  }
  std::vector<int> w(static_cast<size_t>(n), 1);
  for (;;) {
    if (cayley::is_cayley(w)) out.push_back(w);
    int i = n - 1;
    while (i >= 0 && w[static_cast<size_t>(i)] == n) {
      w[static_cast<size_t>(i)] = 1;
      --i;
    }
    if (i < 0) break;
    ++w[static_cast<size_t>(i)];
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline long naive_count_avoiders(const std::vector<int>& p, int n) {
  long c = 0;
  for (const auto& w : naive_cayley_words(n))
    if (!naive_contains(w, p)) ++c;
  return c;
}

}  // namespace oracles
