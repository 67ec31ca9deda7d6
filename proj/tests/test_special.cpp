#include <congsum/special_values.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace congsum;

TEST_CASE("harmonic numbers") {
    CHECK(harmonic(0) == 0);
    CHECK(harmonic(1) == 1);
    CHECK(harmonic(4) == make_rational(25, 12));
    CHECK(harmonic(4, 2) == make_rational(205, 144));
    CHECK(harmonic(2, 2) == make_rational(5, 4));
    CHECK_THROWS_AS(harmonic(3, 3), error);
}

TEST_CASE("double harmonic sum and its closed form") {
    CHECK(h11(0) == 0);
    CHECK(h11(1) == 0);
    CHECK(h11(10) == make_rational(177133, 50400));
    for (std::size_t n = 0; n <= 200; ++n) {
        const BigRational h = harmonic(n);
        CHECK(h11(n) == (h * h - harmonic(n, 2)) / 2);
    }
}

TEST_CASE("fermat quotient") {
    CHECK(fermat_quotient(2, 5) == 3);
    CHECK(fermat_quotient(3, 7) == 104);
    CHECK(fermat_quotient(-1, 5) == 0);
    CHECK_THROWS_AS(fermat_quotient(10, 5), not_coprime);
    CHECK_THROWS_AS(fermat_quotient(2, 4), error);
}

TEST_CASE("bernoulli numbers") {
    CHECK(bernoulli(0) == 1);
    CHECK(bernoulli(1) == make_rational(-1, 2));
    CHECK(bernoulli(2) == make_rational(1, 6));
    CHECK(bernoulli(12) == make_rational(-691, 2730));
    for (std::size_t n = 3; n <= 21; n += 2) CHECK(bernoulli(n) == 0);
    // defining recurrence: sum_k C(m+1,k) B_k = 0 for m >= 1
    for (std::size_t m = 1; m <= 20; ++m) {
        BigRational acc(0);
        for (std::size_t k = 0; k <= m; ++k)
            acc += BigRational(binom_uu(m + 1, k)) * bernoulli(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("bernoulli polynomials") {
    CHECK(bernoulli_poly(0, make_rational(3, 7)) == 1);
    CHECK(bernoulli_poly(1, BigRational(0)) == make_rational(-1, 2));
    CHECK(bernoulli_poly(3, make_rational(1, 2)) == 0);
    // difference property B_n(x+1) - B_n(x) = n x^{n-1}
    std::mt19937_64 rng(3);
    for (int t = 0; t < 20; ++t) {
        const long num = static_cast<long>(rng() % 41) - 20;
        const long den = static_cast<long>(rng() % 9) + 1;
        const BigRational x = make_rational(num, den);
        for (std::size_t n = 1; n <= 12; ++n) {
            CHECK(bernoulli_poly(n, x + 1) - bernoulli_poly(n, x) ==
                  BigRational(static_cast<unsigned long>(n)) *
                      pow_rational(x, static_cast<long>(n) - 1));
        }
    }
}

TEST_CASE("euler numbers") {
    const long expected[] = {1, 0, -1, 0, 5, 0, -61, 0, 1385, 0, -50521, 0, 2702765};
    for (std::size_t n = 0; n <= 12; ++n) CHECK(euler_number(n) == expected[n]);
    // secant series division: sum_{k even} C(2m,k) E_k = 0 for m >= 1
    for (std::size_t m = 1; m <= 10; ++m) {
        BigInt acc(0);
        for (std::size_t k = 0; k <= 2 * m; k += 2) acc += binom_uu(2 * m, k) * euler_number(k);
        CHECK(acc == 0);
    }
}

TEST_CASE("euler polynomials") {
    CHECK(euler_poly(0, make_rational(2, 3)) == 1);
    CHECK(euler_poly(1, make_rational(1, 4)) == make_rational(-1, 4));
    // E_n(1/2) = E_n / 2^n
    for (std::size_t n = 0; n <= 12; ++n)
        CHECK(euler_poly(n, make_rational(1, 2)) ==
              make_rational(euler_number(n), pow_int(BigInt(2), n)));
    // boundary value ties Euler polynomials to Bernoulli numbers:
    // E_n(0) = -2 (2^{n+1} - 1) B_{n+1} / (n+1)
    for (std::size_t n = 0; n <= 12; ++n) {
        const BigRational expected = BigRational(-2) *
                                     BigRational(pow_int(BigInt(2), n + 1) - 1) *
                                     bernoulli(n + 1) / BigRational(static_cast<unsigned long>(n + 1));
        CHECK(euler_poly(n, BigRational(0)) == expected);
    }
    // reflection E_n(1-x) = (-1)^n E_n(x)
    const BigRational x = make_rational(3, 7);
    for (std::size_t n = 0; n <= 10; ++n) {
        const BigRational sign = n % 2 == 0 ? BigRational(1) : BigRational(-1);
        CHECK(euler_poly(n, 1 - x) == sign * euler_poly(n, x));
    }
}

TEST_CASE("integer binomial helper") {
    CHECK(binom_uu(0, 0) == 1);
    CHECK(binom_uu(13, 6) == 1716);
    CHECK(binom_uu(5, 9) == 0);
}
