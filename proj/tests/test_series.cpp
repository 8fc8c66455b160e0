#include <catch2/catch_amalgamated.hpp>

#include <random>

#include <cayley/series.hpp>

using namespace cayley;
using namespace cayley::series;

namespace {

CountSeq seq(std::vector<long> v) {
  CountSeq r;
  for (long x : v) r.a.emplace_back(x);
  return r;
}

CountSeq random_seq(int order, std::mt19937& rng, long lo = -9, long hi = 9) {
  std::uniform_int_distribution<long> dist(lo, hi);
  CountSeq r = CountSeq::zeros(order);
  for (int i = 0; i <= order; ++i) r.at(i) = dist(rng);
  return r;
}

}  // namespace

TEST_CASE("addition and scalar multiples") {
  CountSeq e = make_E(5);
  CHECK(add(e, e).at(3) == 2);
  CHECK(add(make_E_even(5), make_E_odd(5)) == e);
  CHECK(scalar_mul(-3, make_X(4)).at(1) == -3);
  // truncation is the minimum of the operand orders
  CHECK(add(make_E(3), make_E(7)).order() == 3);
}

TEST_CASE("species product") {
  // Eeven * E counts 2^{n-1} for n >= 1
  CountSeq p = species_product(make_E_even(6), make_E(6));
  CHECK(p == seq({1, 1, 2, 4, 8, 16, 32}));
  CHECK(species_product(make_one(6), p) == p);

  // Cay^2 at n = 3 from the Fubini prefix
  CountSeq fub = seq({1, 1, 3, 13, 75, 541});
  CHECK(species_product(fub, fub).at(3) == 44);
}

TEST_CASE("composition") {
  CountSeq bal = compose(make_L(5), make_E_plus(5));
  CHECK(bal == seq({1, 1, 3, 13, 75, 541}));

  CountSeq a = seq({1, 4, 2, 7});
  CHECK(compose(a, make_X(3)) == a);

  // blocks of size one or two: a_n = n a_{n-1} + (n(n-1)/2) a_{n-2}
  CountSeq blocks = add(make_E_exactly(1, 6), make_E_exactly(2, 6));
  CountSeq got = compose(make_L(6), blocks);
  CountSeq want = CountSeq::zeros(6);
  want.at(0) = 1;
  want.at(1) = 1;
  for (int n = 2; n <= 6; ++n)
    want.at(n) = n * want.at(n - 1) + Int(n) * (n - 1) / 2 * want.at(n - 2);
  CHECK(got == want);
  CHECK(got.at(4) == 66);

  CHECK_THROWS_AS(compose(a, make_E(3)), std::invalid_argument);  // inner constant term
}

TEST_CASE("derivative, integral, pointing") {
  std::mt19937 rng(7);
  CountSeq a = random_seq(9, rng);
  CountSeq recovered = integral(derivative(a));
  for (int n = 1; n <= 9; ++n) REQUIRE(recovered.at(n) == a.at(n));
  CHECK(recovered.at(0) == 0);

  CHECK(pointing(make_E(6)) == seq({0, 1, 2, 3, 4, 5, 6}));
  CHECK_THROWS_AS(derivative(make_one(0)), std::invalid_argument);
}

TEST_CASE("ordinal product and convolution") {
  CountSeq l = make_L(6);
  CHECK(ordinal_product(make_one(6), l) == l);

  // S = E + E*S^ptg at the counting level
  CountSeq rhs = add(make_E(6), convolution(make_E(6), pointing(l)));
  CHECK(rhs == l);
  CHECK(rhs.at(2) == 2);

  // F = 1 + F*F converges to the Catalan numbers
  CountSeq f = make_one(6);
  for (int i = 0; i <= 6; ++i) f = add(make_one(6), convolution(f, f));
  CHECK(f == seq({1, 1, 2, 5, 14, 42, 132}));
}

TEST_CASE("Leibniz rule for convolution") {
  std::mt19937 rng(11);
  for (int round = 0; round < 20; ++round) {
    CountSeq a = random_seq(10, rng), b = random_seq(10, rng);
    CountSeq lhs = derivative(convolution(a, b));
    CountSeq rhs = add(scalar_mul(a.at(0), truncate(b, 9)),
                       convolution(derivative(a), truncate(b, 9)));
    REQUIRE(lhs == rhs);
  }
}

TEST_CASE("reciprocal and division") {
  CountSeq e = make_E(8);
  CountSeq r = reciprocal(e);
  for (int n = 0; n <= 8; ++n) REQUIRE(r.at(n) == (n % 2 == 0 ? 1 : -1));
  CHECK(species_product(e, r) == make_one(8));

  CHECK(reciprocal(make_one(5)) == make_one(5));
  CHECK(reciprocal(make_L(5)) == seq({1, -1, 0, 0, 0, 0}));

  CHECK_THROWS_AS(reciprocal(make_X(3)), std::invalid_argument);       // a_0 = 0
  CHECK_THROWS_AS(reciprocal(scalar_mul(2, make_E(3))), std::invalid_argument);

  std::mt19937 rng(13);
  for (int round = 0; round < 10; ++round) {
    CountSeq a = random_seq(8, rng);
    CountSeq b = random_seq(8, rng);
    b.at(0) = 1;
    REQUIRE(divide(species_product(a, b), b) == a);
  }
  CHECK_THROWS_AS(divide(make_X(3), scalar_mul(2, make_E(3))), std::domain_error);
}

TEST_CASE("transform pair between a sequence and its primitive part") {
  // applied to the 231-avoider counts, the inverse transform yields the
  // primitive 231-avoider counts
  CountSeq cay231 = seq({1, 1, 3, 12, 56, 284, 1516});
  CHECK(inverse_binomial_transform(cay231) == seq({0, 1, 2, 7, 28, 121, 550}));

  // and forward from the primitive 212-avoider counts to the 212-avoider counts
  CountSeq prim212 = seq({0, 1, 2, 7, 32, 181});
  CHECK(binomial_transform(prim212) == seq({1, 1, 3, 12, 60, 360}));

  // round trip on sequences with a_0 = 1
  std::mt19937 rng(17);
  for (int round = 0; round < 10; ++round) {
    CountSeq f = random_seq(10, rng);
    f.at(0) = 1;
    REQUIRE(binomial_transform(inverse_binomial_transform(f)) == f);
    CountSeq g = random_seq(10, rng);
    CountSeq round_g = inverse_binomial_transform(binomial_transform(g));
    for (int n = 1; n <= 10; ++n) REQUIRE(round_g.at(n) == g.at(n));
    REQUIRE(round_g.at(0) == 0);
  }
}

TEST_CASE("generating-series views") {
  std::mt19937 rng(19);
  CountSeq a = random_seq(9, rng);
  CHECK(counts_of(to_egf(a)) == a);
  CHECK(counts_of(to_ogf(a)) == a);
  CHECK(ogf_to_egf(egf_to_ogf(to_egf(a))) == to_egf(a));

  RatSeries shifted = ogf_shift(to_ogf(seq({1, 1, 3, 12})));
  CHECK(counts_of(shifted) == seq({0, 1, 1, 3, 12}));
  CHECK(counts_of(ogf_divshift(shifted)) == seq({1, 1, 3, 12}));
}

TEST_CASE("substitution x -> x/(1+x)") {
  // L(x) = 1/(1-x) collapses to the constant series 1
  RatSeries l = to_ogf(make_E(6));  // all-ones OGF coefficients
  CountSeq collapsed = counts_of(ogf_substitute_x_over_1px(l));
  CHECK(collapsed == seq({1, 0, 0, 0, 0, 0, 0}));

  // inverse binomial transform at the OGF level: matches the coefficient map
  // b_n = sum_j (-1)^{n-j} C(n,j) a_j
  std::mt19937 rng(23);
  CountSeq a = random_seq(8, rng);
  CountSeq got = counts_of(ogf_substitute_x_over_1px(to_ogf(a)));
  for (int n = 0; n <= 8; ++n) {
    Int want = 0;
    for (int j = 0; j <= n; ++j) {
      Int term = binomial(n, j) * a.at(j);
      want += ((n - j) % 2 == 0) ? term : -term;
    }
    REQUIRE(got.at(n) == want);
  }
}

TEST_CASE("series square root") {
  RatSeries one = to_ogf(make_one(5));
  CHECK(series_sqrt(one) == one);

  std::vector<Rat> poly{1, -8, 8, 0, 0, 0};
  RatSeries s{poly, SeriesView::ogf};
  RatSeries root = series_sqrt(s);
  CHECK(counts_of(RatSeries{{root.c.begin(), root.c.begin() + 5}, SeriesView::ogf}) ==
        seq({1, -4, -4, -16, -72}));
  CHECK(rat_mul(root, root) == s);

  CHECK_THROWS_AS(series_sqrt(to_ogf(make_X(3))), std::invalid_argument);
}

TEST_CASE("builders") {
  CHECK(make_E_even(4).at(4) == 1);
  CHECK(make_E_even(4).at(3) == 0);
  CHECK(make_E_exactly(2, 4) == seq({0, 0, 1, 0, 0}));
  CHECK(make_cyc(4) == seq({0, 1, 1, 2, 6}));

  // S = E(C) and Par = E(E+)
  CHECK(compose(make_E(7), make_cyc(7)) == make_L(7));
  CHECK(compose(make_E(4), make_E_plus(4)) == seq({1, 1, 2, 5, 15}));
}

TEST_CASE("L-species identity Eeven^2 = 1 + Eodd^2") {
  CountSeq lhs = species_product(make_E_even(10), make_E_even(10));
  CountSeq rhs = add(make_one(10), species_product(make_E_odd(10), make_E_odd(10)));
  CHECK(lhs == rhs);
}
