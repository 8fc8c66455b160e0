#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

// Letters are 1-based positive integers. The empty word is valid and has max 0.
using Letters = std::vector<int>;

namespace detail {

inline int cmp(int a, int b) { return a < b ? -1 : (a == b ? 0 : 1); }

inline void check_letters(const Letters& ls) {
  for (int v : ls)
    if (v < 1) throw std::invalid_argument("word letters must be positive");
}

inline int max_letter(const Letters& ls) {
  int m = 0;
  for (int v : ls) m = std::max(m, v);
  return m;
}

// True iff the set of distinct letters is exactly {1,...,k} for some k.
inline bool image_is_initial_segment(const Letters& ls) {
  int m = max_letter(ls);
  if (m > static_cast<int>(ls.size())) return false;
  std::vector<bool> seen(static_cast<size_t>(m) + 1, false);
  for (int v : ls) seen[static_cast<size_t>(v)] = true;
  for (int v = 1; v <= m; ++v)
    if (!seen[static_cast<size_t>(v)]) return false;
  return true;
}

// Backtracking search for a subsequence of w order isomorphic to p
// (strictly increasing indices; both < and = relations preserved).
// With anchor_last set, the occurrence must end at the last position of w.
inline bool occurs_rec(const int* w, int n, const int* p, int k, int j, int start,
                       int* chosen, bool anchor_last) {
  if (j == k) return true;
  int hi = n - (k - j);  // last index leaving room for the remaining letters
  int lo = start;
  if (anchor_last && j == k - 1) lo = std::max(lo, n - 1);
  for (int i = lo; i <= hi; ++i) {
    bool ok = true;
    for (int a = 0; a < j; ++a) {
      if (cmp(w[chosen[a]], w[i]) != cmp(p[a], p[j])) {
        ok = false;
        break;
      }
    }
    if (ok) {
      chosen[j] = i;
      if (occurs_rec(w, n, p, k, j + 1, i + 1, chosen, anchor_last)) return true;
    }
  }
  return false;
}

inline bool occurs(const int* w, int n, const int* p, int k, bool anchor_last) {
  if (k == 0) return true;
  if (k > n) return false;
  int chosen[16];
  if (k > 16) throw std::invalid_argument("pattern longer than supported (16)");
  return occurs_rec(w, n, p, k, 0, 0, chosen, anchor_last);
}

}  // namespace detail

/// A finite word of positive integers.
class Word {
 public:
  Word() = default;
  explicit Word(Letters ls) : letters_(std::move(ls)) { detail::check_letters(letters_); }
  Word(std::initializer_list<int> ls) : Word(Letters(ls)) {}

  const Letters& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int at(int i) const { return letters_.at(static_cast<size_t>(i)); }  // 0-based

  friend bool operator==(const Word& a, const Word& b) = default;
  friend auto operator<=>(const Word& a, const Word& b) = default;

 private:
  Letters letters_;
};

inline bool is_cayley(const Letters& ls) { return detail::image_is_initial_segment(ls); }
inline bool is_cayley(const Word& w) { return is_cayley(w.letters()); }

/// A word whose image is exactly {1,...,k}; max() returns that k (0 iff empty).
class CayleyWord {
 public:
  CayleyWord() = default;
  explicit CayleyWord(Letters ls) : letters_(std::move(ls)) {
    detail::check_letters(letters_);
    if (!detail::image_is_initial_segment(letters_))
      throw std::invalid_argument("not a Cayley word: image is not an initial segment");
    max_ = detail::max_letter(letters_);
  }
  CayleyWord(std::initializer_list<int> ls) : CayleyWord(Letters(ls)) {}

  const Letters& letters() const { return letters_; }
  int size() const { return static_cast<int>(letters_.size()); }
  bool empty() const { return letters_.empty(); }
  int max() const { return max_; }
  int at(int i) const { return letters_.at(static_cast<size_t>(i)); }

  Word word() const { return Word(letters_); }

  friend bool operator==(const CayleyWord& a, const CayleyWord& b) {
    return a.letters_ == b.letters_;
  }
  friend auto operator<=>(const CayleyWord& a, const CayleyWord& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  Letters letters_;
  int max_ = 0;
};

/// A nonempty Cayley word used as a pattern.
class Pattern {
 public:
  explicit Pattern(CayleyWord w) : word_(std::move(w)) {
    if (word_.empty()) throw std::invalid_argument("pattern must be nonempty");
  }
  explicit Pattern(Letters ls) : Pattern(CayleyWord(std::move(ls))) {}
  Pattern(std::initializer_list<int> ls) : Pattern(Letters(ls)) {}

  const CayleyWord& cayley() const { return word_; }
  const Letters& letters() const { return word_.letters(); }
  int size() const { return word_.size(); }
  int max() const { return word_.max(); }
  int at(int i) const { return word_.at(i); }

  friend bool operator==(const Pattern& a, const Pattern& b) = default;
  friend auto operator<=>(const Pattern& a, const Pattern& b) = default;

 private:
  CayleyWord word_;
};

// ---- containment -----------------------------------------------------------

inline bool contains(const Letters& w, const Pattern& p) {
  return detail::occurs(w.data(), static_cast<int>(w.size()), p.letters().data(), p.size(),
                        /*anchor_last=*/false);
}
inline bool contains(const Word& w, const Pattern& p) { return contains(w.letters(), p); }
inline bool contains(const CayleyWord& w, const Pattern& p) { return contains(w.letters(), p); }
inline bool avoids(const Letters& w, const Pattern& p) { return !contains(w, p); }

// Occurrence that uses the last position of w; if every proper prefix of w
// avoids p, this decides containment for w itself.
inline bool contains_at_last(const int* w, int n, const Pattern& p) {
  return detail::occurs(w, n, p.letters().data(), p.size(), /*anchor_last=*/true);
}

// ---- symmetries ------------------------------------------------------------

inline Word reverse(const Word& w) {
  Letters ls(w.letters().rbegin(), w.letters().rend());
  return Word(std::move(ls));
}

inline CayleyWord reverse(const CayleyWord& w) {
  Letters ls(w.letters().rbegin(), w.letters().rend());
  return CayleyWord(std::move(ls));
}

// Maps each letter a to max(w)+1-a; preserves the Cayley property.
inline CayleyWord complement(const CayleyWord& w) {
  Letters ls;
  ls.reserve(w.letters().size());
  for (int v : w.letters()) ls.push_back(w.max() + 1 - v);
  return CayleyWord(std::move(ls));
}

inline Pattern reverse(const Pattern& p) { return Pattern(reverse(p.cayley())); }
inline Pattern complement(const Pattern& p) { return Pattern(complement(p.cayley())); }

// ---- statistics and maps ---------------------------------------------------

inline int image_max(const Word& w) { return detail::max_letter(w.letters()); }
inline int image_max(const CayleyWord& w) { return w.max(); }

/// Letter multiset, sorted ascending.
inline Letters content(const Letters& w) {
  Letters c = w;
  std::sort(c.begin(), c.end());
  return c;
}
inline Letters content(const Word& w) { return content(w.letters()); }
inline Letters content(const CayleyWord& w) { return content(w.letters()); }

/// Replaces every copy of the i-th smallest letter of w with the i-th smallest
/// element of A. Requires |A| = number of distinct letters of w.
inline Word standardize(const Word& w, const std::set<int>& target) {
  std::set<int> img(w.letters().begin(), w.letters().end());
  if (img.size() != target.size())
    throw std::invalid_argument("standardize: target size differs from image size");
  std::map<int, int> rel;
  auto it = target.begin();
  for (int v : img) rel[v] = *it++;
  Letters out;
  out.reserve(w.letters().size());
  for (int v : w.letters()) out.push_back(rel.at(v));
  return Word(std::move(out));
}

/// Indices i (1-based) with w_i = i.
inline std::vector<int> fixed_points(const Word& w) {
  std::vector<int> fix;
  for (int i = 0; i < w.size(); ++i)
    if (w.at(i) == i + 1) fix.push_back(i + 1);
  return fix;
}
inline std::vector<int> fixed_points(const CayleyWord& w) { return fixed_points(w.word()); }

/// Nonempty and free of flat steps (no two equal adjacent letters).
inline bool is_primitive(const CayleyWord& w) {
  if (w.empty()) return false;
  for (int i = 0; i + 1 < w.size(); ++i)
    if (w.at(i) == w.at(i + 1)) return false;
  return true;
}

/// Weak left-to-right minima: (index, value) pairs with w_j >= w_i for all j < i.
/// Indices are 1-based.
inline std::vector<std::pair<int, int>> wlmin(const CayleyWord& w) {
  std::vector<std::pair<int, int>> mins;
  int running = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (i == 0 || w.at(i) <= running) {
      mins.emplace_back(i + 1, w.at(i));
      running = w.at(i);
    } else {
      running = std::min(running, w.at(i));
    }
  }
  return mins;
}

/// Multiset (sorted) of letters at non-weak-minimum positions.
inline Letters filling(const CayleyWord& w) {
  Letters fill;
  int running = 0;
  for (int i = 0; i < w.size(); ++i) {
    if (i == 0 || w.at(i) <= running)
      running = w.at(i);
    else
      fill.push_back(w.at(i));
  }
  std::sort(fill.begin(), fill.end());
  return fill;
}

// ---- ballots ----------------------------------------------------------------

/// An ordered sequence of disjoint nonempty blocks partitioning {1,...,n}.
class Ballot {
 public:
  Ballot() = default;
  explicit Ballot(std::vector<std::vector<int>> blocks) : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    validate();
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int block_count() const { return static_cast<int>(blocks_.size()); }
  int ground_size() const {
    size_t n = 0;
    for (const auto& b : blocks_) n += b.size();
    return static_cast<int>(n);
  }

  friend bool operator==(const Ballot& a, const Ballot& b) = default;

 private:
  void validate() const {
    std::set<int> seen;
    for (const auto& b : blocks_) {
      if (b.empty()) throw std::invalid_argument("ballot: empty block");
      for (int v : b) {
        if (v < 1) throw std::invalid_argument("ballot: elements must be positive");
        if (!seen.insert(v).second) throw std::invalid_argument("ballot: blocks overlap");
      }
    }
    int n = static_cast<int>(seen.size());
    if (!seen.empty() && *seen.rbegin() != n)
      throw std::invalid_argument("ballot: ground set is not {1..n}");
  }

  std::vector<std::vector<int>> blocks_;
};

// ---- text forms -------------------------------------------------------------

/// Canonical form: decimal letters joined by single spaces.
inline std::string to_string(const Letters& ls) {
  std::string s;
  for (size_t i = 0; i < ls.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(ls[i]);
  }
  return s;
}
inline std::string to_string(const Word& w) { return to_string(w.letters()); }
inline std::string to_string(const CayleyWord& w) { return to_string(w.letters()); }
inline std::string to_string(const Pattern& p) { return to_string(p.letters()); }

/// Compact form: undelimited digits, only valid when all letters are <= 9.
inline std::string to_compact_string(const Letters& ls) {
  std::string s;
  for (int v : ls) {
    if (v > 9) return to_string(ls);
    s += static_cast<char>('0' + v);
  }
  return s;
}

/// Accepts space-separated, comma-separated, or (all-digit input) undelimited
/// letters; "121" reads as 1,2,1. Letters above 9 need separators.
inline Letters parse_letters(const std::string& text) {
  Letters out;
  const bool has_space = text.find_first_of(" \t") != std::string::npos;
  const bool has_comma = text.find(',') != std::string::npos;
  if (has_space || has_comma) {
    std::string norm = text;
    std::replace(norm.begin(), norm.end(), ',', ' ');
    std::istringstream in(norm);
    std::string tok;
    while (in >> tok) {
      size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception&) {
        throw std::invalid_argument("cannot parse letter '" + tok + "'");
      }
      if (pos != tok.size()) throw std::invalid_argument("cannot parse letter '" + tok + "'");
      out.push_back(v);
    }
  } else {
    for (char ch : text) {
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument(std::string("unexpected character '") + ch + "' in word");
      out.push_back(ch - '0');
    }
  }
  detail::check_letters(out);
  return out;
}

inline Word parse_word(const std::string& text) { return Word(parse_letters(text)); }
inline CayleyWord parse_cayley(const std::string& text) { return CayleyWord(parse_letters(text)); }
inline Pattern parse_pattern(const std::string& text) { return Pattern(parse_letters(text)); }

/// Renders blocks in braces separated by vertical bars, e.g. {2}|{5,6,7}|{1,3}|{4,8}.
inline std::string to_string(const Ballot& b) {
  std::string s;
  for (size_t i = 0; i < b.blocks().size(); ++i) {
    if (i) s += '|';
    s += '{';
    const auto& blk = b.blocks()[i];
    for (size_t j = 0; j < blk.size(); ++j) {
      if (j) s += ',';
      s += std::to_string(blk[j]);
    }
    s += '}';
  }
  return s;
}

inline Ballot parse_ballot(const std::string& text) {
  std::vector<std::vector<int>> blocks;
  size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '{') throw std::invalid_argument("ballot: expected '{'");
    ++i;
    std::vector<int> block;
    while (true) {
      skip_ws();
      size_t start = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (start == i) throw std::invalid_argument("ballot: expected element");
      block.push_back(std::stoi(text.substr(start, i - start)));
      skip_ws();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      break;
    }
    if (i >= text.size() || text[i] != '}') throw std::invalid_argument("ballot: expected '}'");
    ++i;
    blocks.push_back(std::move(block));
    skip_ws();
    if (i < text.size()) {
      if (text[i] != '|') throw std::invalid_argument("ballot: expected '|'");
      ++i;
      skip_ws();
    }
  }
  return Ballot(std::move(blocks));
}

}  // namespace cayley
