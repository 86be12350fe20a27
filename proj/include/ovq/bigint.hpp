#pragma once

#include <gmpxx.h>

#include <limits>
#include <string>

namespace ovq {

using BigInt = mpz_class;
using BigRat = mpq_class;

// mpz_class has no long long constructor.
inline BigInt to_bigint(long long v) {
    if (v >= std::numeric_limits<long>::min() && v <= std::numeric_limits<long>::max())
        return BigInt(static_cast<long>(v));
    return BigInt(std::to_string(v));
}

inline BigInt int_gcd(const BigInt& a, const BigInt& b) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

// Exact division; aborts in GMP if not exact, so only call when divisibility holds.
inline BigInt int_divexact(const BigInt& a, const BigInt& b) {
    BigInt q;
    mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline bool int_divisible(const BigInt& a, const BigInt& b) {
    return mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t()) != 0;
}

inline BigInt int_pow(const BigInt& base, unsigned long e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline std::string to_string(const BigInt& v) { return v.get_str(); }

inline BigRat make_rat(BigInt num, BigInt den) {
    BigRat r(std::move(num), std::move(den));
    r.canonicalize();
    return r;
}

}  // namespace ovq
