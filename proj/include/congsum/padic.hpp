#pragma once

#include <congsum/rational.hpp>

#include <cstdint>

namespace congsum {

/// Deterministic Miller-Rabin, valid for all n < 2^64 (fixed witness set).
inline bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n == q) return true;
        if (n % q == 0) return false;
    }
    std::uint64_t d = n - 1;
    unsigned r = 0;
    while (d % 2 == 0) { d /= 2; ++r; }
    const BigInt m(static_cast<unsigned long>(n));
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        BigInt x;
        mpz_powm_ui(x.get_mpz_t(), BigInt(static_cast<unsigned long>(a)).get_mpz_t(),
                    static_cast<unsigned long>(d), m.get_mpz_t());
        if (x == 1 || x == m - 1) continue;
        bool composite = true;
        for (unsigned i = 1; i < r; ++i) {
            x = x * x % m;
            if (x == m - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

/// An odd prime p together with the exponent e of the working modulus p^e.
struct PrimeContext {
    std::uint64_t p;
    unsigned e;

    PrimeContext(std::uint64_t p_, unsigned e_) : p(p_), e(e_) {
        if (p < 3 || !is_prime(p)) throw error("PrimeContext: p must be an odd prime >= 3");
        if (e < 1) throw error("PrimeContext: e must be >= 1");
    }

    BigInt modulus() const { return pow_int(BigInt(static_cast<unsigned long>(p)), e); }

    friend bool operator==(const PrimeContext&, const PrimeContext&) = default;
};

struct Residue {
    BigInt value;  // in [0, p^e)
    PrimeContext context;
};

/// p-adic valuation of a nonzero rational; negative when p divides the denominator.
inline long vp(const BigRational& q, std::uint64_t p) {
    if (q == 0) throw zero_input();
    BigInt scratch;
    const long vn = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_num().get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t()));
    const long vd = static_cast<long>(
        mpz_remove(scratch.get_mpz_t(), q.get_den().get_mpz_t(), BigInt(static_cast<unsigned long>(p)).get_mpz_t()));
    return vn - vd;
}

/// num * den^{-1} mod p^e. Requires vp(q) >= 0.
inline Residue residue(const BigRational& q, const PrimeContext& ctx) {
    const BigInt m = ctx.modulus();
    if (q == 0) return {BigInt(0), ctx};
    BigInt inv;
    if (mpz_invert(inv.get_mpz_t(), q.get_den().get_mpz_t(), m.get_mpz_t()) == 0)
        throw negative_valuation();
    BigInt r = q.get_num() * inv % m;
    if (r < 0) r += m;
    return {r, ctx};
}

/// Rational congruence: a == b or vp(a-b) >= e. This is the p-adic meaning
/// needed when either side may individually have p in a sub-term denominator.
inline bool congruent(const BigRational& a, const BigRational& b, const PrimeContext& ctx) {
    if (a == b) return true;
    return vp(a - b, ctx.p) >= static_cast<long>(ctx.e);
}

inline bool congruent(const BigRational& a, const BigRational& b, std::uint64_t p, unsigned e) {
    return congruent(a, b, PrimeContext(p, e));
}

/// Jacobi symbol (a/n) by quadratic reciprocity; n odd positive.
inline int jacobi(BigInt a, BigInt n) {
    if (n <= 0 || mpz_even_p(n.get_mpz_t())) throw even_modulus();
    a %= n;
    if (a < 0) a += n;
    int sign = 1;
    while (a != 0) {
        while (mpz_even_p(a.get_mpz_t())) {
            a /= 2;
            const unsigned long n8 = mpz_fdiv_ui(n.get_mpz_t(), 8);
            if (n8 == 3 || n8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(n.get_mpz_t(), 4) == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

inline int jacobi(long a, std::uint64_t n) {
    return jacobi(BigInt(a), BigInt(static_cast<unsigned long>(n)));
}

/// The paper's x = <x>_p + m p splitting of a p-adic integer.
struct CanonicalDecomposition {
    std::uint64_t residue_part;  // <x>_p in {0,...,p-1}
    BigRational m;               // (x - <x>_p)/p, vp(m) >= 0
};

inline CanonicalDecomposition decompose(const BigRational& x, std::uint64_t p) {
    if (!is_prime(p) || p < 3) throw error("decompose: p must be an odd prime");
    if (x != 0 && vp(x, p) < 0) throw not_padic_integer();
    const std::uint64_t r = residue(x, PrimeContext(p, 1)).value.get_ui();
    BigRational m = (x - BigRational(static_cast<unsigned long>(r))) / BigRational(static_cast<unsigned long>(p));
    m.canonicalize();
    return {r, m};
}

}  // namespace congsum
