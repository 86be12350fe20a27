#pragma once

#include <functional>
#include <string>
#include <vector>

#include "ovq/bigint.hpp"

namespace ovq {

// Laurent polynomial in u with arbitrary-precision integer coefficients.
// The exponent e of u encodes the half-integer power q^{e/2}; pure-q objects
// live on even exponents. Stored dense over the support window
// [min_exp, max_exp] with nonzero end coefficients; the zero polynomial has
// an empty window. Values are immutable in spirit: every operation returns
// a fresh object, so sharing across threads is safe.
class IntLaurent {
public:
    IntLaurent() = default;  // zero
    explicit IntLaurent(long c) { *this = monomial(BigInt(c), 0); }
    explicit IntLaurent(BigInt c) { *this = monomial(std::move(c), 0); }

    static IntLaurent monomial(BigInt c, int e);
    // coeffs[i] is the coefficient of u^{min_exp+i}.
    static IntLaurent from_coeffs(int min_exp, std::vector<BigInt> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;

    int min_exp() const;      // requires nonzero
    int max_exp() const;      // requires nonzero
    int term_count() const;   // number of nonzero coefficients

    // Coefficient of u^e (zero if outside the window).
    const BigInt& coeff(int e) const;

    void for_each_term(const std::function<void(int, const BigInt&)>& f) const;

    IntLaurent operator-() const;
    IntLaurent& operator+=(const IntLaurent& o);
    IntLaurent& operator-=(const IntLaurent& o);
    friend IntLaurent operator+(IntLaurent a, const IntLaurent& b) { return a += b; }
    friend IntLaurent operator-(IntLaurent a, const IntLaurent& b) { return a -= b; }
    friend IntLaurent operator*(const IntLaurent& a, const IntLaurent& b);

    bool operator==(const IntLaurent& o) const { return min_ == o.min_ && coeffs_ == o.coeffs_; }
    bool operator!=(const IntLaurent& o) const { return !(*this == o); }

    IntLaurent shifted(int k) const;            // multiply by u^k
    IntLaurent scaled_exponents(int d) const;   // u -> u^d, d >= 1
    IntLaurent mirrored() const;                // u -> u^{-1}
    IntLaurent scaled(const BigInt& c) const;   // multiply by the constant c

    BigInt content() const;   // gcd of all coefficients, >= 0 (0 for the zero polynomial)
    BigInt eval_one() const;  // sum of coefficients
    const BigInt& leading() const;  // coefficient of u^{max_exp}

    // Rendering in q-powers, e.g. "-q^(-1/2) + 2*q + q^(3/2)".
    std::string to_string() const;

private:
    void normalize();  // trim zero ends

    std::vector<BigInt> coeffs_;
    int min_ = 0;
};

// gcd over Z[u^{+-1}], defined up to units +-u^k; returned with min_exp 0 and
// positive leading coefficient, integer content included. gcd(0,0) = 0.
IntLaurent laurent_gcd(const IntLaurent& a, const IntLaurent& b);

// Exact division; throws std::logic_error if b does not divide a.
IntLaurent laurent_divexact(const IntLaurent& a, const IntLaurent& b);

}  // namespace ovq
