#include "ovq/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace ovq {

namespace {
const BigInt kZero = 0;
}

IntLaurent IntLaurent::monomial(BigInt c, int e) {
    IntLaurent p;
    if (c != 0) {
        p.min_ = e;
        p.coeffs_.push_back(std::move(c));
    }
    return p;
}

IntLaurent IntLaurent::from_coeffs(int min_exp, std::vector<BigInt> coeffs) {
    IntLaurent p;
    p.min_ = min_exp;
    p.coeffs_ = std::move(coeffs);
    p.normalize();
    return p;
}

void IntLaurent::normalize() {
    std::size_t lo = 0, hi = coeffs_.size();
    while (hi > lo && coeffs_[hi - 1] == 0) --hi;
    while (lo < hi && coeffs_[lo] == 0) ++lo;
    if (lo == hi) {
        coeffs_.clear();
        min_ = 0;
        return;
    }
    if (hi != coeffs_.size()) coeffs_.resize(hi);
    if (lo != 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lo));
        min_ += static_cast<int>(lo);
    }
}

bool IntLaurent::is_one() const {
    return coeffs_.size() == 1 && min_ == 0 && coeffs_[0] == 1;
}

int IntLaurent::min_exp() const {
    if (is_zero()) throw std::logic_error("min_exp of zero polynomial");
    return min_;
}

int IntLaurent::max_exp() const {
    if (is_zero()) throw std::logic_error("max_exp of zero polynomial");
    return min_ + static_cast<int>(coeffs_.size()) - 1;
}

int IntLaurent::term_count() const {
    int n = 0;
    for (const auto& c : coeffs_)
        if (c != 0) ++n;
    return n;
}

const BigInt& IntLaurent::coeff(int e) const {
    if (coeffs_.empty() || e < min_ || e >= min_ + static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[static_cast<std::size_t>(e - min_)];
}

void IntLaurent::for_each_term(const std::function<void(int, const BigInt&)>& f) const {
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        if (coeffs_[i] != 0) f(min_ + static_cast<int>(i), coeffs_[i]);
}

IntLaurent IntLaurent::operator-() const {
    IntLaurent r = *this;
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntLaurent& IntLaurent::operator+=(const IntLaurent& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) {
        *this = o;
        return *this;
    }
    int new_min = std::min(min_, o.min_);
    int new_max = std::max(max_exp(), o.max_exp());
    std::vector<BigInt> out(static_cast<std::size_t>(new_max - new_min + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        out[static_cast<std::size_t>(min_ - new_min) + i] = std::move(coeffs_[i]);
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i)
        out[static_cast<std::size_t>(o.min_ - new_min) + i] += o.coeffs_[i];
    coeffs_ = std::move(out);
    min_ = new_min;
    normalize();
    return *this;
}

IntLaurent& IntLaurent::operator-=(const IntLaurent& o) { return *this += -o; }

IntLaurent operator*(const IntLaurent& a, const IntLaurent& b) {
    if (a.is_zero() || b.is_zero()) return IntLaurent();
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            if (b.coeffs_[j] == 0) continue;
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntLaurent::from_coeffs(a.min_ + b.min_, std::move(out));
}

IntLaurent IntLaurent::shifted(int k) const {
    IntLaurent r = *this;
    if (!r.is_zero()) r.min_ += k;
    return r;
}

IntLaurent IntLaurent::scaled_exponents(int d) const {
    if (d < 1) throw std::logic_error("scaled_exponents requires d >= 1");
    if (d == 1 || is_zero()) return *this;
    std::vector<BigInt> out(static_cast<std::size_t>((coeffs_.size() - 1) * d + 1));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * d] = coeffs_[i];
    return from_coeffs(min_ * d, std::move(out));
}

IntLaurent IntLaurent::mirrored() const {
    if (is_zero()) return *this;
    std::vector<BigInt> out(coeffs_.rbegin(), coeffs_.rend());
    return from_coeffs(-max_exp(), std::move(out));
}

IntLaurent IntLaurent::scaled(const BigInt& c) const {
    if (c == 0) return IntLaurent();
    IntLaurent r = *this;
    for (auto& x : r.coeffs_) x *= c;
    return r;
}

BigInt IntLaurent::content() const {
    BigInt g = 0;
    for (const auto& c : coeffs_) {
        if (c == 0) continue;
        g = int_gcd(g, c);
        if (g == 1) break;
    }
    return g;
}

BigInt IntLaurent::eval_one() const {
    BigInt s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

const BigInt& IntLaurent::leading() const {
    if (is_zero()) throw std::logic_error("leading of zero polynomial");
    return coeffs_.back();
}

std::string IntLaurent::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for_each_term([&](int e, const BigInt& c) {
        BigInt a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        if (a != 1 || e == 0) os << a.get_str();
        if (e != 0) {
            if (a != 1) os << "*";
            if (e == 2) {
                os << "q";
            } else if (e % 2 == 0) {
                os << "q^" << e / 2;
            } else {
                os << "q^(" << e << "/2)";
            }
        }
    });
    return os.str();
}

namespace {

// Pseudo-remainder of a by b (both with min_exp 0, b nonzero):
// lc(b)^(deg a - deg b + 1) * a  mod  b, computed in place.
IntLaurent pseudo_rem(IntLaurent a, const IntLaurent& b) {
    const int db = b.max_exp();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.max_exp() >= db) {
        int k = a.max_exp() - db;
        BigInt la = a.leading();
        a = a.scaled(lb) - b.shifted(k).scaled(la);
    }
    return a;
}

IntLaurent primitive_part(const IntLaurent& a) {
    if (a.is_zero()) return a;
    BigInt c = a.content();
    if (a.leading() < 0) c = -c;
    return laurent_divexact(a, IntLaurent(c));
}

}  // namespace

IntLaurent laurent_gcd(const IntLaurent& a0, const IntLaurent& b0) {
    if (a0.is_zero() && b0.is_zero()) return IntLaurent();
    if (a0.is_zero()) return primitive_part(b0.shifted(-b0.min_exp())).scaled(b0.content());
    if (b0.is_zero()) return primitive_part(a0.shifted(-a0.min_exp())).scaled(a0.content());

    BigInt cont = int_gcd(a0.content(), b0.content());
    IntLaurent a = primitive_part(a0.shifted(-a0.min_exp()));
    IntLaurent b = primitive_part(b0.shifted(-b0.min_exp()));
    if (a.max_exp() < b.max_exp()) std::swap(a, b);

    // Primitive polynomial remainder sequence.
    while (!b.is_zero()) {
        IntLaurent r = pseudo_rem(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return a.scaled(cont);
}

IntLaurent laurent_divexact(const IntLaurent& a, const IntLaurent& b) {
    if (b.is_zero()) throw std::logic_error("laurent_divexact by zero");
    if (a.is_zero()) return IntLaurent();

    // Strip the unit u^{min_exp(b)}; divide polynomial parts top-down.
    IntLaurent rem = a.shifted(-a.min_exp());
    IntLaurent den = b.shifted(-b.min_exp());
    const int db = den.max_exp();
    const BigInt& lb = den.leading();
    int out_deg = rem.max_exp() - db;
    if (out_deg < 0) throw std::logic_error("laurent_divexact: not divisible (degree)");
    std::vector<BigInt> q(static_cast<std::size_t>(out_deg) + 1);
    while (!rem.is_zero() && rem.max_exp() >= db) {
        int k = rem.max_exp() - db;
        if (!int_divisible(rem.leading(), lb))
            throw std::logic_error("laurent_divexact: not divisible (coefficient)");
        BigInt c = int_divexact(rem.leading(), lb);
        rem -= den.shifted(k).scaled(c);
        q[static_cast<std::size_t>(k)] = std::move(c);
    }
    if (!rem.is_zero()) throw std::logic_error("laurent_divexact: nonzero remainder");
    return IntLaurent::from_coeffs(a.min_exp() - b.min_exp(), std::move(q));
}

}  // namespace ovq
