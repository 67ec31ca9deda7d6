#include <congsum/binomial_sums.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace congsum;

namespace {

BigRational rand_rational(std::mt19937_64& rng, bool nonzero) {
    while (true) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 10) + 1;
        if (nonzero && num == 0) continue;
        return make_rational(num, den);
    }
}

}  // namespace

TEST_CASE("generalized binomial coefficients") {
    CHECK(gen_binom(make_rational(1, 2), 0) == 1);
    CHECK(gen_binom(make_rational(1, 2), 2) == make_rational(-1, 8));
    CHECK(gen_binom(make_rational(-1, 2), 3) == make_rational(-5, 16));
    CHECK(gen_binom(BigRational(7), 3) == 35);
    CHECK(gen_binom(BigRational(2), 5) == 0);  // integer x below k
    // Pascal rule at rational arguments
    std::mt19937_64 rng(5);
    for (int t = 0; t < 30; ++t) {
        const BigRational x = rand_rational(rng, false);
        for (unsigned long k = 1; k <= 8; ++k)
            CHECK(gen_binom(x, k) == gen_binom(x - 1, k) + gen_binom(x - 1, k - 1));
    }
}

TEST_CASE("shifted integer binomial clamps out-of-range indices") {
    CHECK(shifted_binom(6, 2) == 15);
    CHECK(shifted_binom(0, -1) == 0);
    CHECK(shifted_binom(3, 4) == 0);
    CHECK(shifted_binom(-1, 0) == 0);
}

TEST_CASE("bridge identities") {
    for (Family f : {Family::Two, Family::Three, Family::Four, Family::Six}) {
        for (unsigned long k = 0; k <= 30; ++k) {
            const auto [closed, gen] = bridge(f, k);
            CHECK(closed == gen);
        }
    }
    // the 6k family's two candidate products differ already at k = 1
    CHECK(bridge(Family::Six, 1).first == 30);
    CHECK(make_rational(binom_uu(4, 2) * binom_uu(6, 3), binom_uu(2, 1)) == 60);
}

TEST_CASE("weighted sums match their closed forms") {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 40; ++t) {
        const BigRational x = rand_rational(rng, false);
        const BigRational d = rand_rational(rng, true);
        const unsigned long n = rng() % 12 + 1;
        for (SumVariant v : {SumVariant::Full, SumVariant::Odd, SumVariant::Catalan})
            CHECK(weighted_sum(v, x, d, n) == closed_form(v, x, d, n));
    }
}

TEST_CASE("weighted sum anchors") {
    CHECK(weighted_sum(SumVariant::Full, make_rational(-1, 2), make_rational(-1, 16), 5) ==
          make_rational(-2835, 2));
    CHECK_THROWS_AS(weighted_sum(SumVariant::Full, BigRational(1), BigRational(0), 3), zero_d);
    CHECK_THROWS_AS(closed_form(SumVariant::Odd, BigRational(1), BigRational(0), 3), zero_d);
    CHECK_THROWS_AS(weighted_sum(SumVariant::Full, BigRational(1), BigRational(1), 0), error);
}

TEST_CASE("corollary left-hand sums") {
    CHECK(corollary_lhs(Family::Two, BigRational(1), 5) == 5670);
    CHECK(corollary_lhs(Family::Six, BigRational(1), 2, SixReading::Bridge) == 462);
    CHECK(corollary_lhs(Family::Six, BigRational(1), 2, SixReading::Printed) == 923);
    CHECK(corollary_lhs(Family::Three, BigRational(2), 1) == 1);
    CHECK_THROWS_AS(corollary_lhs(Family::Two, BigRational(0), 3), zero_d);
}

TEST_CASE("family constants") {
    CHECK(family_base_point(Family::Two) == make_rational(-1, 2));
    CHECK(family_base_point(Family::Six) == make_rational(-1, 6));
    CHECK(family_scale(Family::Three) == -27);
    CHECK(family_scale(Family::Four) == -64);
}
