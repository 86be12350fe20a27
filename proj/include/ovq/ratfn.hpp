#pragma once

#include <map>
#include <string>

#include "ovq/bigint.hpp"
#include "ovq/laurent.hpp"

namespace ovq {

// Quotient of two IntLaurent in canonical form:
//   * den is never zero; gcd(num, den) is a unit;
//   * den is a genuine polynomial (min exponent 0) with nonzero constant
//     term and positive leading coefficient; u-monomial content sits in num.
// Canonical forms are equal iff their fields are equal.
class RationalFn {
public:
    RationalFn() : num_(), den_(1) {}                       // zero
    RationalFn(IntLaurent num) : num_(std::move(num)), den_(1) {}  // NOLINT: implicit by design
    RationalFn(IntLaurent num, IntLaurent den);             // canonicalizes, throws DivisionByZero
    explicit RationalFn(long n) : num_(n), den_(1) {}

    static RationalFn from_rat(const BigRat& r);
    static RationalFn monomial(BigInt c, int e) { return RationalFn(IntLaurent::monomial(std::move(c), e)); }

    const IntLaurent& num() const { return num_; }
    const IntLaurent& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);  // throws DivisionByZero
    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

    bool operator==(const RationalFn& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const RationalFn& o) const { return !(*this == o); }

    RationalFn adams(int d) const;     // u -> u^d, d >= 1
    RationalFn inverted_u() const;     // u -> u^{-1}
    RationalFn reciprocal() const;     // 1/f, throws DivisionByZero on 0
    RationalFn scaled(const BigRat& r) const;

    bool is_laurent() const { return den_.is_one(); }
    // The Laurent polynomial equal to this value; throws NotLaurent when the
    // canonical denominator is not 1. Sole gate for integrality assertions.
    IntLaurent to_laurent() const;

    // Ascending u-power expansion up to exponent max_e inclusive, with the
    // 1/(1-q) = 1+q+q^2+... convention (well defined since den(0) != 0).
    // Keys start at the true lowest exponent of the value.
    std::map<int, BigRat> u_expansion(int max_e) const;

    std::string to_string() const;

private:
    void canonicalize();

    IntLaurent num_, den_;
};

inline RationalFn ratfn_add(const RationalFn& a, const RationalFn& b) { return a + b; }
inline RationalFn ratfn_sub(const RationalFn& a, const RationalFn& b) { return a - b; }
inline RationalFn ratfn_mul(const RationalFn& a, const RationalFn& b) { return a * b; }
inline RationalFn ratfn_div(const RationalFn& a, const RationalFn& b) { return a / b; }

inline RationalFn adams_subst(const RationalFn& f, int d) { return f.adams(d); }
inline IntLaurent to_laurent(const RationalFn& f) { return f.to_laurent(); }
inline BigInt eval_at_one(const IntLaurent& p) { return p.eval_one(); }

}  // namespace ovq
