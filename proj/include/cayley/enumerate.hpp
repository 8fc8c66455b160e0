#pragma once

#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <thread>
#include <vector>

#include "arith.hpp"
#include "word.hpp"

namespace cayley {

// Word families handled by the enumerator. All generation is lexicographic by
// letter sequence and duplicate-free.
enum class WordMode {
  cayley,           // image exactly [k] for some k <= n
  cayley_with_max,  // image exactly [k] for the given k (surjections onto [k])
  kary,             // all words over the alphabet [k]
  primitive,        // Cayley words with no flat steps (nonempty)
};

struct EnumSpec {
  int n = 0;
  WordMode mode = WordMode::cayley;
  int k = 0;  // alphabet bound; used by cayley_with_max and kary
  std::optional<Pattern> avoid;
};

namespace detail {

// Prefix bookkeeping for the image condition: which letters occur, the prefix
// max, and how many values in {1..max} are still absent. A prefix extends to a
// word whose letter set is an initial segment iff the gaps fit into the
// remaining positions.
struct EnumState {
  std::uint64_t present = 0;  // bit l marks letter l (letters stay below 64)
  int max = 0;
  int missing = 0;

  bool has(int l) const { return (present >> l) & 1u; }

  EnumState with(int l) const {
    EnumState s = *this;
    if (l > s.max) {
      s.missing += l - 1 - s.max;
      s.max = l;
    } else if (!s.has(l)) {
      --s.missing;
    }
    s.present |= std::uint64_t(1) << l;
    return s;
  }
};

// Largest letter worth trying at this position; individual letters below it
// still go through letter_admissible.
inline int letter_bound(const EnumSpec& spec, const EnumState& st, int pos) {
  const int remaining = spec.n - pos - 1;
  switch (spec.mode) {
    case WordMode::cayley:
    case WordMode::primitive:
      return std::min(spec.n, st.max + 1 + (remaining - st.missing));
    case WordMode::cayley_with_max:
      return std::min(spec.k, st.max + 1 + (remaining - st.missing));
    case WordMode::kary:
      return spec.k;
  }
  return 0;
}

inline bool letter_admissible(const EnumSpec& spec, const EnumState& st, const int* w, int pos,
                              int l) {
  if (spec.mode == WordMode::kary) return true;
  if (spec.mode == WordMode::primitive && pos > 0 && w[pos - 1] == l) return false;
  const int remaining = spec.n - pos - 1;
  EnumState next = st.with(l);
  int deficit = next.missing;
  if (spec.mode == WordMode::cayley_with_max) deficit += spec.k - next.max;
  return deficit <= remaining;
}

inline bool spec_admits_empty(const EnumSpec& spec) {
  if (spec.mode == WordMode::primitive) return false;
  if (spec.mode == WordMode::cayley_with_max && spec.k != 0) return false;
  return true;
}

template <class Visit>
void enum_rec(const EnumSpec& spec, int* w, int pos, const EnumState& st, Visit&& visit) {
  if (pos == spec.n) {
    visit(const_cast<const int*>(w), spec.n, st.max);
    return;
  }
  const int hi = letter_bound(spec, st, pos);
  for (int l = 1; l <= hi; ++l) {
    if (!letter_admissible(spec, st, w, pos, l)) continue;
    w[pos] = l;
    if (spec.avoid && contains_at_last(w, pos + 1, *spec.avoid)) continue;
    enum_rec(spec, w, pos + 1, st.with(l), visit);
  }
}

}  // namespace detail

/// Visits every word of the family once, in lexicographic order. The visitor
/// receives (letters, n, max). Prefixes containing the avoided pattern are
/// never extended.
template <class Visit>
void for_each_word(const EnumSpec& spec, Visit&& visit) {
  if (spec.n < 0) throw std::invalid_argument("enumeration length must be >= 0");
  if (spec.n >= 60 || spec.k >= 60) throw std::invalid_argument("enumeration bound too large");
  if (spec.n == 0) {
    if (detail::spec_admits_empty(spec)) visit(static_cast<const int*>(nullptr), 0, 0);
    return;
  }
  std::vector<int> w(static_cast<size_t>(spec.n));
  detail::enum_rec(spec, w.data(), 0, detail::EnumState{}, visit);
}

/// Enumerates the admissible prefixes of the given depth (work partitioning).
template <class Visit>
void for_each_word_prefixes(const EnumSpec& spec, int depth, Visit&& visit) {
  if (depth > spec.n) depth = spec.n;
  if (depth <= 0) {
    visit(static_cast<const int*>(nullptr), 0);
    return;
  }
  std::vector<int> w(static_cast<size_t>(depth));
  auto rec = [&](auto&& self, int pos, const detail::EnumState& st) -> void {
    if (pos == depth) {
      visit(const_cast<const int*>(w.data()), depth);
      return;
    }
    const int hi = detail::letter_bound(spec, st, pos);
    for (int l = 1; l <= hi; ++l) {
      if (!detail::letter_admissible(spec, st, w.data(), pos, l)) continue;
      w[pos] = l;
      if (spec.avoid && contains_at_last(w.data(), pos + 1, *spec.avoid)) continue;
      self(self, pos + 1, st.with(l));
    }
  };
  rec(rec, 0, detail::EnumState{});
}

/// Continues enumeration below a fixed admissible prefix.
template <class Visit>
void for_each_word_below(const EnumSpec& spec, const std::vector<int>& prefix, Visit&& visit) {
  if (spec.n == 0 || prefix.empty()) {
    for_each_word(spec, visit);
    return;
  }
  std::vector<int> w(static_cast<size_t>(spec.n));
  detail::EnumState st;
  for (size_t i = 0; i < prefix.size(); ++i) {
    w[i] = prefix[i];
    st = st.with(prefix[i]);
  }
  detail::enum_rec(spec, w.data(), static_cast<int>(prefix.size()), st, visit);
}

// ---- workers ----------------------------------------------------------------

/// Worker count from CAYLEY_WORKERS (1 forces sequential); defaults to the
/// available hardware parallelism.
inline int default_workers() {
  if (const char* env = std::getenv("CAYLEY_WORKERS")) {
    int v = std::atoi(env);
    if (v >= 1) return v;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

namespace detail {

// Partitions the search tree by fixed-length prefix; a pool of workers folds
// the subtrees into per-job partials which are then combined in prefix order,
// so the result is independent of scheduling and worker count.
template <class R, class Fold>
R parallel_over_prefixes(const EnumSpec& spec, int workers, R zero, Fold&& fold_subtree) {
  const int depth = (workers > 1 && spec.n >= 3) ? 2 : 0;
  if (depth == 0) {
    R acc = zero;
    fold_subtree(std::vector<int>{}, acc);
    return acc;
  }

  std::vector<std::vector<int>> jobs;
  for_each_word_prefixes(spec, depth,
                         [&](const int* w, int len) { jobs.emplace_back(w, w + len); });

  std::vector<R> partial(jobs.size(), zero);
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= jobs.size()) break;
      fold_subtree(jobs[i], partial[i]);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < workers; ++t) pool.emplace_back(run);
  for (auto& th : pool) th.join();

  R acc = zero;
  for (auto& p : partial) acc += p;
  return acc;
}

}  // namespace detail

// ---- counting ---------------------------------------------------------------

/// Exact number of words in the family; workers = 0 picks the default.
/// Deterministic for any worker count.
inline Int count_words(const EnumSpec& spec, int workers = 0) {
  if (workers == 0) workers = default_workers();
  struct Tally {
    Int total = 0;
    Tally& operator+=(const Tally& o) {
      total += o.total;
      return *this;
    }
  };
  auto out = detail::parallel_over_prefixes<Tally>(
      spec, workers, Tally{}, [&](const std::vector<int>& prefix, Tally& acc) {
        long local = 0;
        for_each_word_below(spec, prefix, [&](const int*, int, int) { ++local; });
        acc.total += local;
      });
  return out.total;
}

inline Int count_cayley(int n, int workers = 0) {
  return count_words({n, WordMode::cayley, 0, std::nullopt}, workers);
}
inline Int count_avoiders(const Pattern& p, int n, int workers = 0) {
  return count_words({n, WordMode::cayley, 0, p}, workers);
}
inline Int count_cayley_with_max(int n, int k, int workers = 0) {
  return count_words({n, WordMode::cayley_with_max, k, std::nullopt}, workers);
}
inline Int count_avoiders_with_max(const Pattern& p, int n, int k, int workers = 0) {
  return count_words({n, WordMode::cayley_with_max, k, p}, workers);
}
inline Int count_kary(int n, int k, int workers = 0) {
  return count_words({n, WordMode::kary, k, std::nullopt}, workers);
}
inline Int count_kary_avoiders(const Pattern& p, int n, int k, int workers = 0) {
  return count_words({n, WordMode::kary, k, p}, workers);
}
inline Int count_primitive(int n, int workers = 0) {
  return count_words({n, WordMode::primitive, 0, std::nullopt}, workers);
}
inline Int count_primitive_avoiders(const Pattern& p, int n, int workers = 0) {
  return count_words({n, WordMode::primitive, 0, p}, workers);
}

/// Counts bucketed by the word's maximum letter: result[k] = number of words
/// in the family with max exactly k (the empty word lands in bucket 0).
/// One pass serves every k at once.
inline std::vector<Int> counts_by_max(const EnumSpec& spec, int workers = 0) {
  struct Buckets {
    std::vector<Int> v;
    Buckets& operator+=(const Buckets& o) {
      for (size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
      return *this;
    }
  };
  const int kmax = spec.mode == WordMode::kary ? spec.k : spec.n;
  if (workers == 0) workers = default_workers();
  Buckets zero{std::vector<Int>(static_cast<size_t>(std::max(kmax, 0)) + 1, Int(0))};
  auto out = detail::parallel_over_prefixes<Buckets>(
      spec, workers, zero, [&](const std::vector<int>& prefix, Buckets& acc) {
        for_each_word_below(spec, prefix, [&](const int*, int, int mx) {
          acc.v[static_cast<size_t>(mx)] += 1;
        });
      });
  return out.v;
}

/// Per-content counts: for each letter multiset (sorted), the number of
/// p-avoiding words in [k]^n with that content. Summing the map gives
/// count_kary_avoiders(p, n, k).
inline std::map<Letters, Int> content_indexed_counts(const std::optional<Pattern>& p, int n,
                                                     int k) {
  std::map<Letters, Int> out;
  EnumSpec spec{n, WordMode::kary, k, p};
  for_each_word(spec, [&](const int* w, int len, int) {
    Letters c(w, w + len);
    std::sort(c.begin(), c.end());
    out[c] += 1;
  });
  return out;
}

/// Same, over Cayley words with max exactly k.
inline std::map<Letters, Int> content_indexed_counts_cayley(const std::optional<Pattern>& p, int n,
                                                            int k) {
  std::map<Letters, Int> out;
  EnumSpec spec{n, WordMode::cayley_with_max, k, p};
  for_each_word(spec, [&](const int* w, int len, int) {
    Letters c(w, w + len);
    std::sort(c.begin(), c.end());
    out[c] += 1;
  });
  return out;
}

// ---- streams ----------------------------------------------------------------

/// Pull-based lexicographic stream over a word family. Single-consumer.
class WordStream {
 public:
  explicit WordStream(EnumSpec spec) : spec_(std::move(spec)) {
    if (spec_.n < 0) throw std::invalid_argument("enumeration length must be >= 0");
    if (spec_.n >= 60 || spec_.k >= 60) throw std::invalid_argument("enumeration bound too large");
    w_.resize(static_cast<size_t>(spec_.n));
    states_.resize(static_cast<size_t>(spec_.n) + 1);
  }

  std::optional<Letters> next() {
    if (done_) return std::nullopt;
    if (spec_.n == 0) {
      done_ = true;
      if (detail::spec_admits_empty(spec_)) return Letters{};
      return std::nullopt;
    }
    if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return Letters(w_.begin(), w_.end());
  }

 private:
  // Depth-first successor: after a full word, backtrack and take the next
  // admissible letter; letters are tried in ascending order, which makes the
  // stream lexicographic.
  bool advance() {
    int pos;
    if (!started_) {
      started_ = true;
      pos = 0;
      w_[0] = 0;
      states_[0] = detail::EnumState{};
    } else {
      pos = spec_.n - 1;
    }
    while (pos >= 0) {
      const detail::EnumState& st = states_[static_cast<size_t>(pos)];
      const int hi = detail::letter_bound(spec_, st, pos);
      int l = w_[static_cast<size_t>(pos)] + 1;
      bool placed = false;
      for (; l <= hi; ++l) {
        if (!detail::letter_admissible(spec_, st, w_.data(), pos, l)) continue;
        w_[static_cast<size_t>(pos)] = l;
        if (spec_.avoid && contains_at_last(w_.data(), pos + 1, *spec_.avoid)) continue;
        placed = true;
        break;
      }
      if (!placed) {
        --pos;
        continue;
      }
      states_[static_cast<size_t>(pos) + 1] = st.with(w_[static_cast<size_t>(pos)]);
      if (pos == spec_.n - 1) return true;
      ++pos;
      w_[static_cast<size_t>(pos)] = 0;
    }
    return false;
  }

  EnumSpec spec_;
  std::vector<int> w_;
  std::vector<detail::EnumState> states_;
  bool started_ = false;
  bool done_ = false;
};

inline WordStream gen_cayley(int n) { return WordStream({n, WordMode::cayley, 0, std::nullopt}); }
inline WordStream gen_cayley_with_max(int n, int k) {
  return WordStream({n, WordMode::cayley_with_max, k, std::nullopt});
}
inline WordStream gen_kary(int n, int k) {
  return WordStream({n, WordMode::kary, k, std::nullopt});
}
inline WordStream gen_primitive(int n) {
  return WordStream({n, WordMode::primitive, 0, std::nullopt});
}
inline WordStream gen_avoiders(const Pattern& p, int n) {
  return WordStream({n, WordMode::cayley, 0, p});
}

/// Materializes a stream; meant for small n.
inline std::vector<Letters> collect(WordStream s) {
  std::vector<Letters> out;
  while (auto w = s.next()) out.push_back(std::move(*w));
  return out;
}

// ---- count tables -----------------------------------------------------------

/// Counts indexed by (n, k). Modes "all", "primitive" and "max-exactly-k"
/// bucket Cayley words by their max letter (row sums give the unrestricted
/// totals); mode "k-ary" stores |[k]^n(p)| cumulatively over the alphabet.
struct CountTable {
  std::optional<Pattern> pattern;
  std::string mode;  // all | max-exactly-k | k-ary | primitive
  int max_n = 0;
  int max_k = 0;
  std::vector<std::vector<Int>> counts;  // counts[n][k]

  Int row_total(int n) const {
    Int t = 0;
    for (const auto& v : counts[static_cast<size_t>(n)]) t += v;
    return t;
  }

  /// TSV with header, columns n, k, count.
  void write_tsv(std::ostream& os) const {
    os << "n\tk\tcount\n";
    for (int n = 0; n <= max_n; ++n)
      for (size_t k = 0; k < counts[static_cast<size_t>(n)].size(); ++k)
        os << n << '\t' << k << '\t' << counts[static_cast<size_t>(n)][k] << '\n';
  }

  /// OEIS b-file: "n a(n)" per line. For the k-ary mode a(n) is the count at
  /// the largest alphabet; otherwise the k-marginal (row sum).
  void write_bfile(std::ostream& os) const {
    for (int n = 0; n <= max_n; ++n) {
      Int a = mode == "k-ary" ? counts[static_cast<size_t>(n)].back() : row_total(n);
      os << n << ' ' << a << '\n';
    }
  }
};

inline CountTable build_count_table(const std::optional<Pattern>& p, const std::string& mode,
                                    int max_n, int max_k, int workers = 0) {
  CountTable t;
  t.pattern = p;
  t.mode = mode;
  t.max_n = max_n;
  t.max_k = max_k;
  t.counts.resize(static_cast<size_t>(max_n) + 1);
  for (int n = 0; n <= max_n; ++n) {
    auto& row = t.counts[static_cast<size_t>(n)];
    if (mode == "all" || mode == "primitive") {
      EnumSpec spec{n, mode == "all" ? WordMode::cayley : WordMode::primitive, 0, p};
      row = counts_by_max(spec, workers);
    } else if (mode == "max-exactly-k") {
      EnumSpec spec{n, WordMode::cayley, 0, p};
      auto by_max = counts_by_max(spec, workers);
      row.assign(static_cast<size_t>(std::min(n, max_k)) + 1, Int(0));
      for (size_t k = 0; k < row.size(); ++k) row[k] = by_max[k];
    } else if (mode == "k-ary") {
      EnumSpec spec{n, WordMode::kary, max_k, p};
      auto by_max = counts_by_max(spec, workers);
      row.assign(static_cast<size_t>(max_k) + 1, Int(0));
      Int running = 0;
      for (int k = 0; k <= max_k; ++k) {
        running += by_max[static_cast<size_t>(k)];
        row[static_cast<size_t>(k)] = running;
      }
    } else {
      throw std::invalid_argument("unknown count table mode: " + mode);
    }
  }
  return t;
}

}  // namespace cayley
