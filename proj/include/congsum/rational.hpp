#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace congsum {

using BigInt = mpz_class;
using BigRational = mpq_class;  // always stored canonical: den > 0, gcd(num,den) = 1

struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct zero_input : error { zero_input() : error("ZeroInput: value must be nonzero") {} };
struct negative_valuation : error { negative_valuation() : error("NegativeValuation: denominator not invertible mod p^e") {} };
struct even_modulus : error { even_modulus() : error("EvenModulus: Jacobi symbol requires odd modulus") {} };
struct not_padic_integer : error { not_padic_integer() : error("NotPAdicInteger: p divides the denominator") {} };
struct not_coprime : error { not_coprime() : error("NotCoprime: p divides the base") {} };
struct zero_d : error { zero_d() : error("ZeroD: d must be nonzero") {} };
struct d_not_unit : error { d_not_unit() : error("DNotUnit: d must have p-adic valuation 0") {} };
struct out_of_range_prime : error { explicit out_of_range_prime(const std::string& why) : error("OutOfRangePrime: " + why) {} };
struct invalid_config : error { explicit invalid_config(const std::string& why) : error("InvalidConfig: " + why) {} };
struct io_failure : error { explicit io_failure(const std::string& why) : error("IoFailure: " + why) {} };

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
    if (den == 0) throw error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1) {
    return make_rational(BigInt(num), BigInt(den));
}

/// Parses "num", "num/den", or "-num/den". Throws invalid_config on malformed input.
inline BigRational parse_rational(const std::string& s) {
    if (s.empty()) throw invalid_config("empty rational literal");
    const auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return make_rational(BigInt(s), BigInt(1));
        const BigInt den(s.substr(slash + 1));
        if (den == 0) throw invalid_config("zero denominator in rational literal: " + s);
        return make_rational(BigInt(s.substr(0, slash)), den);
    } catch (const std::invalid_argument&) {
        throw invalid_config("malformed rational literal: " + s);
    }
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }
inline std::string to_string(const BigInt& z) { return z.get_str(); }

/// q^e for any integer exponent; throws zero_input on 0^negative.
inline BigRational pow_rational(const BigRational& q, long e) {
    if (e == 0) return BigRational(1);
    if (q == 0 && e < 0) throw zero_input();
    BigRational r;
    const unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(r.get_num_mpz_t(), q.get_num().get_mpz_t(), a);
    mpz_pow_ui(r.get_den_mpz_t(), q.get_den().get_mpz_t(), a);
    if (e < 0) {
        mpq_inv(r.get_mpq_t(), r.get_mpq_t());
        r.canonicalize();
    }
    return r;
}

inline BigInt pow_int(const BigInt& z, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), z.get_mpz_t(), e);
    return r;
}

inline bool is_integer(const BigRational& q) { return q.get_den() == 1; }

}  // namespace congsum
