#include <catch2/catch_amalgamated.hpp>

#include <cayley/catalog.hpp>

using namespace cayley;

namespace {

CountSeq seq(std::vector<long> v) {
  CountSeq r;
  for (long x : v) r.a.emplace_back(x);
  return r;
}

}  // namespace

TEST_CASE("fubini") {
  CountSeq f = fubini(7);
  CHECK(f == seq({1, 1, 3, 13, 75, 541, 4683, 47293}));
}

TEST_CASE("blocks of bounded size") {
  CHECK(cay_1k(2, 5) == series::make_L(5));
  CHECK(cay_1k(3, 4).at(4) == 66);
  CHECK(cay_1k(3, 2).at(2) == 3);
  CHECK_THROWS_AS(cay_1k(1, 4), std::invalid_argument);
}

TEST_CASE("111 closed form") {
  CHECK(cay111_closed_form(0) == 1);
  CHECK(cay111_closed_form(3) == 12);
  CHECK(cay111_closed_form(5) == 450);
  CountSeq rec = cay_1k(3, 12);
  for (int n = 0; n <= 12; ++n) REQUIRE(cay111_closed_form(n) == rec.at(n));
}

TEST_CASE("112 count") {
  CHECK(cay112_count(0) == 1);
  CHECK(cay112_count(3) == 12);
  CHECK(cay112_count(4) == 60);
  CHECK(series::derivative(alt_counts(7)) == seq({1, 1, 3, 12, 60, 360, 2520}));
}

TEST_CASE("231 recurrence") {
  CountSeq a = cay231_recurrence(9);
  CHECK(a == seq({1, 1, 3, 12, 56, 284, 1516, 8384, 47600, 275808}));
}

TEST_CASE("alternating Catalan sum") {
  CHECK(cay123_birmajer(1) == 1);
  CHECK(cay123_birmajer(4) == 56);
  CHECK(cay123_birmajer(6) == 1516);
  CountSeq rec = cay231_recurrence(9);
  for (int n = 0; n <= 9; ++n) REQUIRE(cay123_birmajer(n) == rec.at(n));
}

TEST_CASE("word counts over a fixed alphabet") {
  for (int n = 0; n <= 6; ++n) REQUIRE(kary_burstein(2, n) == pow2(n));
  CHECK(kary_burstein(3, 3) == 26);
  CHECK(kary_burstein(5, 0) == 1);
  CHECK(kary_burstein(0, 0) == 1);
  CHECK(kary_burstein(0, 3) == 0);
  CHECK(kary_burstein(1, 5) == 1);

  // enumeration cross-check for two representatives of S3
  for (const char* pat : {"123", "231"}) {
    Pattern p = parse_pattern(pat);
    for (int k = 0; k <= 4; ++k)
      for (int n = 0; n <= 6; ++n) REQUIRE(count_kary_avoiders(p, n, k) == kary_burstein(k, n));
  }
}

TEST_CASE("inclusion-exclusion over alphabets") {
  CHECK(cay_s3_kasraoui(2) == 3);
  CHECK(cay_s3_kasraoui(4) == 56);
  CHECK(cay_s3_kasraoui(5) == 284);
  for (int n = 0; n <= 8; ++n) REQUIRE(cay_s3_kasraoui(n) == cay123_birmajer(n));
}

TEST_CASE("OGF expansions") {
  CHECK(series::counts_of(s3_ogf(6)) == seq({1, 1, 3, 12, 56, 284, 1516}));
  CountSeq prim = series::counts_of(prim231_ogf(6));
  REQUIRE(prim.order() >= 6);
  CHECK(series::truncate(prim, 6) == seq({0, 1, 2, 7, 28, 121, 550}));
  CHECK(prim212_series(6) == seq({0, 1, 2, 7, 32, 181, 1214}));
}

TEST_CASE("transform chain from Cay(231) to Prim(231)") {
  CountSeq cay231 = cay231_recurrence(9);
  CountSeq prim = prim231_transform_chain(cay231);
  CHECK(series::truncate(prim, 9) ==
        seq({0, 1, 2, 7, 28, 121, 550, 2591, 12536, 61921}));
}

TEST_CASE("registry names") {
  const std::vector<std::string> required = {
      "cay_eq_bal", "cay21",      "cay1k",    "cay111",    "cay112_ode", "cay112_alt",
      "cay212_eq",  "cay212_alt", "cay231_eq", "cay231_rec", "sym_conv",   "altc_conv",
      "alt_decomp", "alt_closed", "catalan",  "eeven_sq",  "prim_sq",    "prim_lemma",
      "prim_21",    "prim_212",   "prim_123", "prim_132",  "prim_213",   "prim_231",
      "prim_312",   "prim_321",   "prim231_ogf_guess",     "s3_ogf_check",
      "eqwilf",     "fixpoint_conj",          "table1"};
  for (const auto& name : required) {
    INFO(name);
    REQUIRE(find_check(name) != nullptr);
  }
  CHECK_THROWS_AS(verify_identity("no_such_check"), std::invalid_argument);
}

TEST_CASE("every check passes at reduced bounds") {
  for (const auto& def : identity_registry()) {
    int bound = def.enumeration_backed ? 6 : 10;
    CheckResult r = def.run(bound);
    INFO(r.name << " " << (r.mismatch ? "mismatch at n=" + std::to_string(r.mismatch->n) : ""));
    REQUIRE(r.pass);
  }
}

TEST_CASE("spot checks at the spec bounds") {
  CHECK(verify_identity("prim_sq", 8).pass);
  CheckResult alt112 = verify_identity("cay112_alt", 8);
  CHECK(alt112.pass);
  CheckResult fix = verify_identity("fixpoint_conj", 5);
  CHECK(fix.pass);
  CHECK(fix.conjecture);
}
