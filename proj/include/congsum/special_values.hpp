#pragma once

#include <congsum/padic.hpp>
#include <congsum/rational.hpp>

#include <cstddef>
#include <mutex>
#include <vector>

namespace congsum {

inline BigInt binom_uu(unsigned long n, unsigned long k) {
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// H_k, H_k^(2) and H(1,1;k) = sum_{j<=k} H_{j-1}/j, grown monotonically and
/// shared: verification sweeps hit the same indices over and over.
class HarmonicTable {
public:
    static HarmonicTable& instance() {
        static HarmonicTable t;
        return t;
    }

    void ensure(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (h1_.size() <= n) {
            const auto k = h1_.size();
            const BigRational inv_k = make_rational(1, static_cast<long>(k));
            h11_.push_back(h11_.back() + h1_.back() * inv_k);  // H_{k-1}/k
            h1_.push_back(h1_.back() + inv_k);
            h2_.push_back(h2_.back() + inv_k * inv_k);
        }
    }

    BigRational h1(std::size_t k) { ensure(k); std::lock_guard<std::mutex> l(mu_); return h1_[k]; }
    BigRational h2(std::size_t k) { ensure(k); std::lock_guard<std::mutex> l(mu_); return h2_[k]; }
    BigRational h11(std::size_t k) { ensure(k); std::lock_guard<std::mutex> l(mu_); return h11_[k]; }

private:
    HarmonicTable() : h1_{BigRational(0)}, h2_{BigRational(0)}, h11_{BigRational(0)} {}
    std::mutex mu_;
    std::vector<BigRational> h1_, h2_, h11_;
};

/// H_n (order 1) or H_n^(2) (order 2); empty sum is 0.
inline BigRational harmonic(std::size_t n, int order = 1) {
    if (order != 1 && order != 2) throw error("harmonic: order must be 1 or 2");
    auto& t = HarmonicTable::instance();
    return order == 1 ? t.h1(n) : t.h2(n);
}

inline BigRational h11(std::size_t n) { return HarmonicTable::instance().h11(n); }

/// q_p(a) = (a^{p-1} - 1)/p, an exact integer when gcd(a, p) = 1.
inline BigInt fermat_quotient(const BigInt& a, std::uint64_t p) {
    if (!is_prime(p) || p < 3) throw error("fermat_quotient: p must be an odd prime");
    if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) throw not_coprime();
    const BigInt num = pow_int(a, static_cast<unsigned long>(p - 1)) - 1;
    return num / BigInt(static_cast<unsigned long>(p));
}

inline BigInt fermat_quotient(long a, std::uint64_t p) { return fermat_quotient(BigInt(a), p); }

/// B_0..B_n via sum_{k=0}^{m-1} C(m,k) B_k = 0 (so B_1 = -1/2).
class BernoulliTable {
public:
    static BernoulliTable& instance() {
        static BernoulliTable t;
        return t;
    }

    void ensure(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (b_.size() <= n) {
            const auto m = b_.size();  // computing B_m from the recurrence at index m+1
            if (m % 2 == 1 && m > 1) {
                b_.push_back(BigRational(0));
                continue;
            }
            BigRational acc(0);
            for (std::size_t k = 0; k < m; ++k) {
                if (b_[k] == 0) continue;
                acc += BigRational(binom_uu(m + 1, k)) * b_[k];
            }
            b_.push_back(-acc / BigRational(static_cast<unsigned long>(m + 1)));
        }
    }

    BigRational at(std::size_t n) { ensure(n); std::lock_guard<std::mutex> l(mu_); return b_[n]; }

private:
    BernoulliTable() : b_{BigRational(1)} {}
    std::mutex mu_;
    std::vector<BigRational> b_;
};

inline BigRational bernoulli(std::size_t n) { return BernoulliTable::instance().at(n); }

/// B_n(x) = sum C(n,k) B_k x^{n-k}, exact.
inline BigRational bernoulli_poly(std::size_t n, const BigRational& x) {
    BernoulliTable::instance().ensure(n);
    BigRational acc(0);
    BigRational xpow(1);  // x^{n-k} built from the k = n term downward
    for (std::size_t k = n + 1; k-- > 0;) {
        const BigRational bk = bernoulli(k);
        if (bk != 0) acc += BigRational(binom_uu(n, k)) * bk * xpow;
        xpow *= x;
    }
    return acc;
}

/// Euler (secant) numbers: E_0 = 1, E_odd = 0, sum_{k=0}^{n/2} C(n,2k) E_{2k} = 0 for even n >= 2.
class EulerTable {
public:
    static EulerTable& instance() {
        static EulerTable t;
        return t;
    }

    void ensure(std::size_t n) {
        std::lock_guard<std::mutex> lock(mu_);
        while (e_.size() <= n) {
            const auto m = e_.size();
            if (m % 2 == 1) {
                e_.push_back(BigInt(0));
                continue;
            }
            BigInt acc(0);
            for (std::size_t k = 0; k < m; k += 2) acc += binom_uu(m, k) * e_[k];
            e_.push_back(-acc);
        }
    }

    BigInt at(std::size_t n) { ensure(n); std::lock_guard<std::mutex> l(mu_); return e_[n]; }

private:
    EulerTable() : e_{BigInt(1)} {}
    std::mutex mu_;
    std::vector<BigInt> e_;
};

inline BigInt euler_number(std::size_t n) { return EulerTable::instance().at(n); }

/// E_n(x) through the half-shift expansion E_n(x) = sum C(n,k) (E_k / 2^k) (x - 1/2)^{n-k}.
/// Denominators stay powers of 2, invertible mod every odd p.
inline BigRational euler_poly(std::size_t n, const BigRational& x) {
    EulerTable::instance().ensure(n);
    const BigRational shift = x - make_rational(1, 2);
    BigRational acc(0);
    BigRational spow(1);
    for (std::size_t k = n + 1; k-- > 0;) {
        const BigInt ek = euler_number(k);
        if (ek != 0)
            acc += BigRational(binom_uu(n, k)) * make_rational(ek, pow_int(BigInt(2), k)) * spow;
        spow *= shift;
    }
    return acc;
}

}  // namespace congsum
