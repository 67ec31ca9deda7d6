#pragma once

#include <congsum/rational.hpp>
#include <congsum/special_values.hpp>

#include <cstdint>
#include <utility>

namespace congsum {

/// C(x,k) = x(x-1)...(x-k+1)/k! for rational x; C(x,0) = 1.
inline BigRational gen_binom(const BigRational& x, unsigned long k) {
    BigRational r(1);
    for (unsigned long i = 0; i < k; ++i) {
        r *= x - BigRational(static_cast<unsigned long>(i));
        r /= BigRational(i + 1);
    }
    return r;
}

/// Ordinary integer binomial with out-of-range indices mapped to 0
/// (needed for the shifted C(3k, k+d) sums with d = +-1).
inline BigInt shifted_binom(long n, long k) {
    if (k < 0 || k > n || n < 0) return BigInt(0);
    return binom_uu(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

/// The three weighted-sum shapes of the telescoping identity family.
enum class SumVariant { Full, Odd, Catalan };

/// The four central-binomial families reachable from x0 in {-1/2,-1/3,-1/4,-1/6}.
enum class Family { Two, Three, Four, Six };

inline BigRational family_base_point(Family f) {
    switch (f) {
        case Family::Two: return make_rational(-1, 2);
        case Family::Three: return make_rational(-1, 3);
        case Family::Four: return make_rational(-1, 4);
        case Family::Six: return make_rational(-1, 6);
    }
    throw error("bad family");
}

inline long family_scale(Family f) {
    switch (f) {
        case Family::Two: return -16;
        case Family::Three: return -27;
        case Family::Four: return -64;
        case Family::Six: return -432;
    }
    throw error("bad family");
}

/// Both sides of the family's bridge identity at index k:
/// first the closed binomial product, then C(x0,k) C(x0+k,k) c^k / C(2k,k).
inline std::pair<BigRational, BigRational> bridge(Family f, unsigned long k) {
    BigRational closed;
    switch (f) {
        case Family::Two: closed = BigRational(binom_uu(2 * k, k)); break;
        case Family::Three: closed = BigRational(binom_uu(3 * k, k)); break;
        case Family::Four: closed = BigRational(binom_uu(4 * k, 2 * k)); break;
        case Family::Six:
            closed = make_rational(binom_uu(6 * k, 3 * k) * binom_uu(3 * k, k), binom_uu(2 * k, k));
            break;
    }
    const BigRational x0 = family_base_point(f);
    const BigRational gen = gen_binom(x0, k) * gen_binom(x0 + BigRational(k), k) *
                            pow_rational(BigRational(family_scale(f)), static_cast<long>(k)) /
                            BigRational(binom_uu(2 * k, k));
    return {closed, gen};
}

/// sum_{k=0}^{n-1} weight_v(k) d^{-k} C(x,k) C(x+k,k) / (denom_v(k) C(2k,k)).
/// The common term is updated incrementally:
///   t_{k+1}/t_k = (x-k)(x+k+1) / (2 d (k+1)(2k+1)).
inline BigRational weighted_sum(SumVariant v, const BigRational& x, const BigRational& d, unsigned long n) {
    if (d == 0) throw zero_d();
    if (n < 1) throw error("weighted_sum: n must be positive");
    const BigRational xx = x * x + x;
    const BigRational c2 = BigRational(1) + BigRational(4) * d;  // 1+4d
    BigRational acc(0);
    BigRational term(1);
    for (unsigned long k = 0; k < n; ++k) {
        const BigRational kq(static_cast<unsigned long>(k));
        BigRational w;
        BigRational den(1);
        switch (v) {
            case SumVariant::Full:
                w = xx - c2 * kq * kq - (BigRational(1) - BigRational(2) * d) * kq;
                break;
            case SumVariant::Odd:
                w = xx - c2 * kq * kq - (BigRational(1) + BigRational(2) * d) * kq;
                den = BigRational(2 * k + 1);
                break;
            case SumVariant::Catalan:
                w = xx + BigRational(2) * d - c2 * kq * kq - (BigRational(1) + BigRational(2) * d) * kq;
                den = BigRational(k + 1);
                break;
        }
        if (w != 0) acc += w * term / den;
        term *= (x - kq) * (x + kq + 1);
        term /= BigRational(2) * d * BigRational(k + 1) * BigRational(2 * k + 1);
    }
    return acc;
}

/// The matching closed forms: all share C(x,n) C(x+n,n) / (d^{n-1} C(2n,n)).
inline BigRational closed_form(SumVariant v, const BigRational& x, const BigRational& d, unsigned long n) {
    if (d == 0) throw zero_d();
    if (n < 1) throw error("closed_form: n must be positive");
    const BigRational base = gen_binom(x, n) * gen_binom(x + BigRational(n), n) /
                             (pow_rational(d, static_cast<long>(n) - 1) * BigRational(binom_uu(2 * n, n)));
    switch (v) {
        case SumVariant::Full: return BigRational(2 * n) * BigRational(2 * n - 1) * base;
        case SumVariant::Odd: return BigRational(2 * n) * base;
        case SumVariant::Catalan: return BigRational(2) * d + BigRational(2) * BigRational(2 * n - 1) * base;
    }
    throw error("bad variant");
}

/// Which product the 6k-family sum uses: the corollary as typeset
/// (C(4k,2k)C(6k,3k)/C(2k,k)) or the bridge product (C(6k,3k)C(3k,k)/C(2k,k)).
/// They differ (60 vs 30 already at k = 1); both are evaluated so the reports
/// can document which one the congruences actually hold for.
enum class SixReading { Printed, Bridge };

/// The corollaries' left-hand sums, weights exactly as typeset.
inline BigRational corollary_lhs(Family f, const BigRational& d, unsigned long n,
                                 SixReading reading = SixReading::Bridge) {
    if (d == 0) throw zero_d();
    BigRational acc(0);
    const BigRational dinv = BigRational(1) / d;
    BigRational dpow(1);
    for (unsigned long k = 0; k < n; ++k) {
        const BigRational kq(static_cast<unsigned long>(k));
        BigRational w, prod;
        switch (f) {
            case Family::Two:
                w = BigRational(1) + (BigRational(4) - d) * kq * kq + (BigRational(8) + d) / 2 * kq;
                prod = BigRational(binom_uu(2 * k, k));
                break;
            case Family::Three:
                w = BigRational(1) + (BigRational(27) - BigRational(4) * d) / 6 * kq * kq +
                    (BigRational(27) + BigRational(2) * d) / 6 * kq;
                prod = BigRational(binom_uu(3 * k, k));
                break;
            case Family::Four:
                w = BigRational(1) + (BigRational(16) - d) / 3 * kq * kq +
                    (BigRational(32) + d) / 6 * kq;
                prod = BigRational(binom_uu(4 * k, 2 * k));
                break;
            case Family::Six:
                w = BigRational(1) + (BigRational(108) - d) / 15 * kq * kq +
                    (BigRational(216) + d) / 30 * kq;
                prod = reading == SixReading::Printed
                           ? make_rational(binom_uu(4 * k, 2 * k) * binom_uu(6 * k, 3 * k), binom_uu(2 * k, k))
                           : make_rational(binom_uu(6 * k, 3 * k) * binom_uu(3 * k, k), binom_uu(2 * k, k));
                break;
        }
        acc += w * prod * dpow;
        dpow *= dinv;
    }
    return acc;
}

}  // namespace congsum
