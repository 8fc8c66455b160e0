#include <catch2/catch_amalgamated.hpp>

#include <map>

#include <cayley/bijections.hpp>

using namespace cayley;

TEST_CASE("cayley word to ballot") {
  CHECK(to_string(cay_to_ballot(parse_cayley("31342224"))) == "{2}|{5,6,7}|{1,3}|{4,8}");
  CHECK(to_string(cay_to_ballot(CayleyWord{1})) == "{1}");
  CHECK(to_string(cay_to_ballot(CayleyWord{1, 2})) == "{1}|{2}");
  CHECK(to_string(cay_to_ballot(CayleyWord{2, 1})) == "{2}|{1}");
  CHECK(ballot_to_cay(parse_ballot("{2}|{5,6,7}|{1,3}|{4,8}")) == parse_cayley("31342224"));
}

TEST_CASE("class representatives, worked example") {
  CayleyWord w = parse_cayley("7 7 9 8 5 9 9 5 6 7 4 1 2 6 3 1 3 3");
  CHECK(to_123_rep(w) == parse_cayley("7 7 9 9 5 9 8 5 7 6 4 1 6 3 3 1 3 2"));
  CHECK(to_132_rep(w) == parse_cayley("7 7 8 9 5 6 6 5 7 9 4 1 2 3 3 1 3 9"));

  // weakly decreasing words are fixed by both maps
  CayleyWord dec{3, 2, 1};
  CHECK(to_123_rep(dec) == dec);
  CHECK(to_132_rep(dec) == dec);
}

TEST_CASE("representative maps preserve minima and filling") {
  for (int n = 0; n <= 7; ++n) {
    for_each_word({n, WordMode::cayley, 0, std::nullopt}, [&](const int* ws, int len, int) {
      CayleyWord w{Letters(ws, ws + len)};
      CayleyWord u = to_123_rep(w), v = to_132_rep(w);
      REQUIRE(wlmin(u) == wlmin(w));
      REQUIRE(wlmin(v) == wlmin(w));
      REQUIRE(filling(u) == filling(w));
      REQUIRE(filling(v) == filling(w));
      REQUIRE(avoids(u.letters(), Pattern{1, 2, 3}));
      REQUIRE(avoids(v.letters(), Pattern{1, 3, 2}));
    });
  }
}

TEST_CASE("each class holds exactly one representative of either kind") {
  for (int n = 0; n <= 5; ++n) {
    std::map<std::pair<std::vector<std::pair<int, int>>, Letters>, std::pair<int, int>> classes;
    for_each_word({n, WordMode::cayley, 0, std::nullopt}, [&](const int* ws, int len, int) {
      CayleyWord w{Letters(ws, ws + len)};
      auto key = std::make_pair(wlmin(w), filling(w));
      auto& [n123, n132] = classes[key];
      if (avoids(w.letters(), Pattern{1, 2, 3})) {
        ++n123;
        REQUIRE(to_123_rep(w) == w);
      }
      if (avoids(w.letters(), Pattern{1, 3, 2})) ++n132;
    });
    for (const auto& [key, counts] : classes) {
      REQUIRE(counts.first == 1);
      REQUIRE(counts.second == 1);
    }
  }
}

TEST_CASE("simion-schmidt rejects wrong inputs") {
  CHECK_THROWS_AS(simion_schmidt(CayleyWord{1, 2, 3}), std::invalid_argument);
  CHECK_THROWS_AS(simion_schmidt_inverse(CayleyWord{1, 3, 2}), std::invalid_argument);
}

TEST_CASE("primitive expansion and contraction") {
  std::set<int> slots{2, 3, 7};
  CHECK(prim_expand(slots, parse_cayley("325154"), 9) == parse_cayley("333251154"));
  CHECK(prim_expand({}, parse_cayley("121"), 3) == parse_cayley("121"));

  auto [s, v] = prim_contract(CayleyWord{1, 1, 1});
  CHECK(s == std::set<int>{2, 3});
  CHECK(v == CayleyWord{1});

  CHECK_THROWS_AS(prim_contract(CayleyWord{}), std::invalid_argument);
  CHECK_THROWS_AS(prim_expand({1}, parse_cayley("12"), 3), std::invalid_argument);
  CHECK_THROWS_AS(prim_expand({2}, parse_cayley("11"), 3), std::invalid_argument);
  CHECK_THROWS_AS(prim_expand({2, 3}, parse_cayley("1"), 9), std::invalid_argument);
}

TEST_CASE("suites") {
  BijectionReport cb = bijection_suite("cay_bal", 5);
  CHECK(cb.ok());
  CHECK(cb.checked == 541);

  BijectionReport ss = bijection_suite("simion_schmidt", 6);
  CHECK(ss.ok());
  CHECK(ss.checked == 284);

  BijectionReport pr = bijection_suite("prim", 4);
  CHECK(pr.ok());
  CHECK(pr.checked == 75);

  for (int n = 0; n <= 4; ++n) {
    CHECK(bijection_suite("cay_bal", n).ok());
    CHECK(bijection_suite("simion_schmidt", n).ok());
    CHECK(bijection_suite("prim", n).ok());
  }
  CHECK_THROWS_AS(bijection_suite("nope", 3), std::invalid_argument);
}
