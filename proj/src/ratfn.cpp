#include "ovq/ratfn.hpp"

#include <stdexcept>

#include "ovq/errors.hpp"

namespace ovq {

RationalFn::RationalFn(IntLaurent num, IntLaurent den)
    : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw DivisionByZero("rational function with zero denominator");
    canonicalize();
}

RationalFn RationalFn::from_rat(const BigRat& r) {
    return RationalFn(IntLaurent(BigInt(r.get_num())), IntLaurent(BigInt(r.get_den())));
}

void RationalFn::canonicalize() {
    if (num_.is_zero()) {
        den_ = IntLaurent(1);
        return;
    }
    // Move the denominator's u-monomial content into the numerator.
    int shift = den_.min_exp();
    if (shift != 0) {
        den_ = den_.shifted(-shift);
        num_ = num_.shifted(-shift);
    }
    IntLaurent g = laurent_gcd(num_, den_);
    if (!g.is_one()) {
        num_ = laurent_divexact(num_, g);
        den_ = laurent_divexact(den_, g);
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
}

// a/b + c/d with b, d canonical: let g = gcd(b,d), b = g*b1, d = g*d1.
// Then num = a*d1 + c*b1 is coprime to b1 and d1, and only gcd(num, g)
// still needs to be cleared.
RationalFn& RationalFn::operator+=(const RationalFn& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    if (den_ == o.den_) {
        IntLaurent n = num_ + o.num_;
        if (n.is_zero()) {
            *this = RationalFn();
            return *this;
        }
        IntLaurent g = laurent_gcd(n, den_);
        if (!g.is_one()) {
            num_ = laurent_divexact(n, g);
            den_ = laurent_divexact(den_, g);
        } else {
            num_ = std::move(n);
        }
        return *this;
    }
    IntLaurent g = laurent_gcd(den_, o.den_);
    IntLaurent b1 = g.is_one() ? den_ : laurent_divexact(den_, g);
    IntLaurent d1 = g.is_one() ? o.den_ : laurent_divexact(o.den_, g);
    IntLaurent n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) {
        *this = RationalFn();
        return *this;
    }
    IntLaurent den = den_ * d1;  // = g * b1 * d1
    if (!g.is_one()) {
        IntLaurent h = laurent_gcd(n, g);
        if (!h.is_one()) {
            n = laurent_divexact(n, h);
            den = laurent_divexact(den, h);
        }
    }
    num_ = std::move(n);
    den_ = std::move(den);
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) { return *this += -o; }

// (a/b)*(c/d): cross-cancel gcd(a,d) and gcd(c,b); the remaining parts are
// pairwise coprime, so no further gcd is needed.
RationalFn& RationalFn::operator*=(const RationalFn& o) {
    if (is_zero() || o.is_zero()) {
        *this = RationalFn();
        return *this;
    }
    IntLaurent a = num_, d = o.den_;
    IntLaurent g1 = laurent_gcd(a, d);
    if (!g1.is_one()) {
        a = laurent_divexact(a, g1);
        d = laurent_divexact(d, g1);
    }
    IntLaurent c = o.num_, b = den_;
    IntLaurent g2 = laurent_gcd(c, b);
    if (!g2.is_one()) {
        c = laurent_divexact(c, g2);
        b = laurent_divexact(b, g2);
    }
    num_ = a * c;
    den_ = b * d;
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) { return *this *= o.reciprocal(); }

RationalFn RationalFn::reciprocal() const {
    if (is_zero()) throw DivisionByZero("reciprocal of zero");
    RationalFn r;
    r.num_ = den_;
    r.den_ = num_;
    int shift = r.den_.min_exp();
    if (shift != 0) {
        r.den_ = r.den_.shifted(-shift);
        r.num_ = r.num_.shifted(-shift);
    }
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

// Exponent scaling is a ring automorphism-like substitution that preserves
// coprimality and the canonical denominator shape, so no re-gcd is needed.
RationalFn RationalFn::adams(int d) const {
    if (d < 1) throw std::logic_error("adams substitution requires d >= 1");
    RationalFn r;
    r.num_ = num_.scaled_exponents(d);
    r.den_ = den_.scaled_exponents(d);
    return r;
}

RationalFn RationalFn::inverted_u() const {
    if (is_zero()) return RationalFn();
    RationalFn r;
    r.num_ = num_.mirrored();
    r.den_ = den_.mirrored();
    int shift = r.den_.min_exp();
    if (shift != 0) {
        r.den_ = r.den_.shifted(-shift);
        r.num_ = r.num_.shifted(-shift);
    }
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RationalFn RationalFn::scaled(const BigRat& s) const {
    if (s == 0 || is_zero()) return RationalFn();
    RationalFn r;
    r.num_ = num_.scaled(BigInt(s.get_num()));
    r.den_ = den_.scaled(BigInt(s.get_den()));
    BigInt g = int_gcd(r.num_.content(), r.den_.content());
    if (g != 1) {
        r.num_ = laurent_divexact(r.num_, IntLaurent(g));
        r.den_ = laurent_divexact(r.den_, IntLaurent(g));
    }
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

IntLaurent RationalFn::to_laurent() const {
    if (!den_.is_one())
        throw NotLaurent("canonical denominator is not 1: " + to_string());
    return num_;
}

std::map<int, BigRat> RationalFn::u_expansion(int max_e) const {
    std::map<int, BigRat> out;
    if (is_zero()) return out;
    const int lo = num_.min_exp();
    const BigInt& d0 = den_.coeff(0);  // nonzero by canonical form
    const int dmax = den_.max_exp();
    std::map<int, BigRat> c;
    for (int e = lo; e <= max_e; ++e) {
        BigRat acc(num_.coeff(e));
        for (int j = 1; j <= dmax && e - j >= lo; ++j) {
            const BigInt& dj = den_.coeff(j);
            if (dj == 0) continue;
            acc -= BigRat(dj) * c[e - j];
        }
        acc /= BigRat(d0);
        c[e] = acc;
        if (acc != 0) out[e] = acc;
    }
    return out;
}

std::string RationalFn::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

}  // namespace ovq
