#include <catch2/catch_amalgamated.hpp>

#include <cayley/enumerate.hpp>

#include "oracles.hpp"

using namespace cayley;

namespace {

std::vector<Letters> naive(int n) { return oracles::naive_cayley_words(n); }

const long kFubini[] = {1, 1, 3, 13, 75, 541, 4683, 47293, 545835};

}  // namespace

TEST_CASE("cayley generation, small sizes") {
  CHECK(collect(gen_cayley(0)) == std::vector<Letters>{{}});
  CHECK(collect(gen_cayley(2)) == std::vector<Letters>{{1, 1}, {1, 2}, {2, 1}});
  auto three = collect(gen_cayley(3));
  REQUIRE(three.size() == 13);
  CHECK(three.front() == Letters{1, 1, 1});
  CHECK(three.back() == Letters{3, 2, 1});
}

TEST_CASE("streams are sorted, duplicate-free, and match the naive filter") {
  for (int n = 0; n <= 6; ++n) {
    auto got = collect(gen_cayley(n));
    auto want = naive(n);
    REQUIRE(got == want);  // naive list is sorted and unique
    for (size_t i = 1; i < got.size(); ++i) REQUIRE(got[i - 1] < got[i]);
  }
}

TEST_CASE("fubini counts") {
  for (int n = 0; n <= 8; ++n) REQUIRE(count_cayley(n) == kFubini[n]);
}

TEST_CASE("generation with fixed max and k-ary words") {
  CHECK(collect(gen_cayley_with_max(3, 2)) ==
        std::vector<Letters>{{1, 1, 2}, {1, 2, 1}, {1, 2, 2}, {2, 1, 1}, {2, 1, 2}, {2, 2, 1}});
  CHECK(collect(gen_kary(2, 3)).size() == 9);
  CHECK(collect(gen_cayley_with_max(3, 5)).empty());  // k > n
  CHECK(collect(gen_cayley_with_max(0, 0)) == std::vector<Letters>{{}});
  CHECK(count_cayley_with_max(3, 2) == 6);

  // surjection counts by inclusion-exclusion as an oracle
  for (int n = 0; n <= 6; ++n)
    for (int k = 0; k <= n; ++k) {
      Int want = 0;
      for (int i = 0; i <= k; ++i) {
        Int term = binomial(k, i);
        Int p = 1;
        for (int j = 0; j < n; ++j) p *= i;
        term *= p;
        want += ((k - i) % 2 == 0) ? term : -term;
      }
      if (n == 0 && k == 0) want = 1;
      REQUIRE(count_cayley_with_max(n, k) == want);
    }
}

TEST_CASE("avoidance counts against the naive oracle") {
  for (const char* pat : {"11", "21", "112", "212", "231", "1212", "1342"}) {
    Pattern p = parse_pattern(pat);
    for (int n = 0; n <= 6; ++n)
      REQUIRE(count_avoiders(p, n) == oracles::naive_count_avoiders(p.letters(), n));
  }
}

TEST_CASE("paper counts") {
  CHECK(count_avoiders(Pattern{2, 1}, 5) == 16);
  CHECK(count_avoiders(Pattern{2, 3, 1}, 5) == 284);
  CHECK(count_avoiders(Pattern{2, 3, 1}, 6) == 1516);
}

TEST_CASE("primitive words") {
  CHECK(count_primitive(0) == 0);
  CHECK(count_primitive(1) == 1);
  CHECK(count_primitive(2) == 2);
  CHECK(count_primitive(3) == 8);
  CHECK(count_primitive(4) == 44);
  CHECK(collect(gen_primitive(3)).size() == 8);
  for (auto& w : collect(gen_primitive(4))) {
    CayleyWord c{w};
    REQUIRE(is_primitive(c));
  }
  for (int n = 1; n <= 6; ++n) REQUIRE(count_primitive_avoiders(Pattern{2, 1}, n) == 1);
  CHECK(count_primitive_avoiders(Pattern{2, 3, 1}, 5) == 121);
  CHECK(count_primitive_avoiders(Pattern{2, 3, 1}, 6) == 550);
}

TEST_CASE("row sums over max equal the plain counts") {
  std::vector<Pattern> pats;
  for (int len = 1; len <= 4; ++len) {
    auto s = gen_cayley(len);
    while (auto w = s.next()) pats.push_back(Pattern(CayleyWord(*w)));
  }
  for (const auto& p : pats) {
    const int cap = p.size() <= 3 ? 8 : 7;
    for (int n = 0; n <= cap; ++n) {
      auto by_max = counts_by_max({n, WordMode::cayley, 0, p});
      Int total = 0;
      for (const auto& c : by_max) total += c;
      REQUIRE(total == count_avoiders(p, n));
    }
  }
}

TEST_CASE("alphabet refinement identity") {
  // |[k]^n(p)| = sum_i C(k,i) |Cay^i(p)[n]| for all k, n <= 7 and |p| <= 3
  std::vector<Pattern> pats;
  for (int len = 1; len <= 3; ++len) {
    auto s = gen_cayley(len);
    while (auto w = s.next()) pats.push_back(Pattern(CayleyWord(*w)));
  }
  for (const auto& p : pats) {
    for (int n = 0; n <= 7; ++n) {
      auto cay_by_max = counts_by_max({n, WordMode::cayley, 0, p});
      auto kary_by_max = counts_by_max({n, WordMode::kary, 7, p});
      for (int k = 0; k <= 7; ++k) {
        Int kary = 0;
        for (int m = 0; m <= k; ++m) kary += kary_by_max[static_cast<size_t>(m)];
        Int rhs = 0;
        for (int i = 0; i <= std::min(k, n); ++i)
          rhs += binomial(k, i) * cay_by_max[static_cast<size_t>(i)];
        REQUIRE(kary == rhs);
      }
    }
  }
}

TEST_CASE("content-indexed counts") {
  auto m = content_indexed_counts(Pattern{1, 1}, 2, 2);
  REQUIRE(m.at(Letters{1, 2}) == 2);
  CHECK(m.find(Letters{1, 1}) == m.end());
  CHECK(m.find(Letters{2, 2}) == m.end());

  auto empty = content_indexed_counts(Pattern{1, 2}, 0, 3);
  REQUIRE(empty.size() == 1);
  CHECK(empty.at(Letters{}) == 1);

  // all three words with content {1,1,2} avoid 212 (112, 121, 211)
  auto m212 = content_indexed_counts(Pattern{2, 1, 2}, 3, 2);
  REQUIRE(m212.at(Letters{1, 1, 2}) == 3);
  for (const Letters& w : {Letters{1, 1, 2}, Letters{1, 2, 1}, Letters{2, 1, 1}})
    CHECK_FALSE(oracles::naive_contains(w, {2, 1, 2}));

  // summing the map reproduces the k-ary avoider count
  for (int n = 0; n <= 5; ++n)
    for (int k = 0; k <= 4; ++k) {
      auto counts = content_indexed_counts(Pattern{1, 2, 3}, n, k);
      Int total = 0;
      for (auto& [c, v] : counts) total += v;
      REQUIRE(total == count_kary_avoiders(Pattern{1, 2, 3}, n, k));
    }
}

TEST_CASE("counts are independent of the worker count") {
  Pattern p{2, 1, 2};
  for (int workers : {1, 2, 3, 7}) {
    REQUIRE(count_avoiders(p, 7, workers) == count_avoiders(p, 7, 1));
    REQUIRE(count_cayley(7, workers) == kFubini[7]);
    auto by_max = counts_by_max({6, WordMode::cayley, 0, p}, workers);
    REQUIRE(by_max == counts_by_max({6, WordMode::cayley, 0, p}, 1));
  }
}

TEST_CASE("count tables serialize to tsv and b-file") {
  CountTable t = build_count_table(Pattern{2, 1}, "max-exactly-k", 3, 3);
  std::ostringstream tsv;
  t.write_tsv(tsv);
  CHECK(tsv.str() ==
        "n\tk\tcount\n"
        "0\t0\t1\n"
        "1\t0\t0\n1\t1\t1\n"
        "2\t0\t0\n2\t1\t1\n2\t2\t1\n"
        "3\t0\t0\n3\t1\t1\n3\t2\t2\n3\t3\t1\n");
  std::ostringstream bfile;
  t.write_bfile(bfile);
  CHECK(bfile.str() == "0 1\n1 1\n2 2\n3 4\n");

  CountTable kary = build_count_table(std::nullopt, "k-ary", 2, 2);
  std::ostringstream k2;
  kary.write_tsv(k2);
  CHECK(k2.str() ==
        "n\tk\tcount\n"
        "0\t0\t1\n0\t1\t1\n0\t2\t1\n"
        "1\t0\t0\n1\t1\t1\n1\t2\t2\n"
        "2\t0\t0\n2\t1\t1\n2\t2\t4\n");
}

TEST_CASE("specific large avoider value with bounded alphabet") {
  // |Cay^4(1342)[7]|: cross-check the bounded-alphabet counter against the
  // by-max bucketing of the plain counter.
  Pattern p{1, 3, 4, 2};
  auto by_max = counts_by_max({7, WordMode::cayley, 0, p});
  REQUIRE(count_avoiders_with_max(p, 7, 4) == by_max[4]);
}
