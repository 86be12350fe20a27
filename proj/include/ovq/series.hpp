#pragma once

#include <map>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "ovq/errors.hpp"
#include "ovq/partitions.hpp"
#include "ovq/ratfn.hpp"

namespace ovq {

// Truncated series with RationalFn coefficients over a graded monoid of
// keys. Three key regimes are used:
//   XSeries -- powers of one formal variable x (key: the exponent);
//   PSeries -- power-sum monomials p_mu (key: the partition mu);
//   TSeries -- monomials prod T_i^{v_i} (key: the dimension vector v).
// The policy fixes the truncation: degree cap for X/P, componentwise bound
// for T. Multiplication drops keys outside the cap, which is consistent
// because a key inside the cap only factors through keys inside the cap.

struct XPolicy {
    using Key = int;
    int cap;
    Key unit() const { return 0; }
    static int degree(const Key& k) { return k; }
    bool contains(const Key& k) const { return 0 <= k && k <= cap; }
    static Key combine(const Key& a, const Key& b) { return a + b; }
    static Key scale(const Key& k, int d) { return k * d; }
    int max_degree() const { return cap; }
    bool operator==(const XPolicy&) const = default;
};

struct PPolicy {
    using Key = Partition;
    int cap;
    Key unit() const { return Partition(); }
    static int degree(const Key& k) { return k.weight(); }
    bool contains(const Key& k) const { return k.weight() <= cap; }
    static Key combine(const Key& a, const Key& b) { return a.merged(b); }
    static Key scale(const Key& k, int d) { return k.stretched(d); }
    int max_degree() const { return cap; }
    bool operator==(const PPolicy&) const = default;
};

struct TPolicy {
    using Key = std::vector<int>;
    std::vector<int> bound;
    Key unit() const { return Key(bound.size(), 0); }
    static int degree(const Key& k) { return std::accumulate(k.begin(), k.end(), 0); }
    bool contains(const Key& k) const {
        if (k.size() != bound.size()) return false;
        for (std::size_t i = 0; i < k.size(); ++i)
            if (k[i] < 0 || k[i] > bound[i]) return false;
        return true;
    }
    static Key combine(const Key& a, const Key& b) {
        Key r = a;
        for (std::size_t i = 0; i < r.size(); ++i) r[i] += b[i];
        return r;
    }
    static Key scale(const Key& k, int d) {
        Key r = k;
        for (int& x : r) x *= d;
        return r;
    }
    int max_degree() const { return std::accumulate(bound.begin(), bound.end(), 0); }
    bool operator==(const TPolicy&) const = default;
};

template <class P>
class BasicSeries {
public:
    using Key = typename P::Key;
    using Policy = P;

    explicit BasicSeries(P policy) : pol_(std::move(policy)) {}
    BasicSeries(P policy, RationalFn constant) : pol_(std::move(policy)) {
        if (!constant.is_zero()) coeffs_.emplace(pol_.unit(), std::move(constant));
    }

    const P& policy() const { return pol_; }
    const std::map<Key, RationalFn>& terms() const { return coeffs_; }

    const RationalFn& coeff(const Key& k) const {
        static const RationalFn kZero;
        auto it = coeffs_.find(k);
        return it == coeffs_.end() ? kZero : it->second;
    }
    RationalFn constant_term() const { return coeff(pol_.unit()); }

    void set_coeff(const Key& k, RationalFn v) {
        if (!pol_.contains(k)) throw CapExceeded("series key outside truncation cap");
        if (v.is_zero())
            coeffs_.erase(k);
        else
            coeffs_[k] = std::move(v);
    }

    void add_coeff(const Key& k, const RationalFn& v) {
        if (v.is_zero()) return;
        if (!pol_.contains(k)) throw CapExceeded("series key outside truncation cap");
        auto [it, fresh] = coeffs_.emplace(k, v);
        if (!fresh) {
            it->second += v;
            if (it->second.is_zero()) coeffs_.erase(it);
        }
    }

    BasicSeries operator-() const {
        BasicSeries r(pol_);
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, -c);
        return r;
    }

    friend BasicSeries operator+(const BasicSeries& a, const BasicSeries& b) {
        a.check_same_policy(b);
        BasicSeries r = a;
        for (const auto& [k, c] : b.coeffs_) r.add_coeff(k, c);
        return r;
    }
    friend BasicSeries operator-(const BasicSeries& a, const BasicSeries& b) {
        a.check_same_policy(b);
        BasicSeries r = a;
        for (const auto& [k, c] : b.coeffs_) r.add_coeff(k, -c);
        return r;
    }
    friend BasicSeries operator*(const BasicSeries& a, const BasicSeries& b) {
        a.check_same_policy(b);
        BasicSeries r(a.pol_);
        for (const auto& [ka, ca] : a.coeffs_)
            for (const auto& [kb, cb] : b.coeffs_) {
                Key k = P::combine(ka, kb);
                if (!a.pol_.contains(k)) continue;
                r.add_coeff(k, ca * cb);
            }
        return r;
    }

    BasicSeries scaled(const BigRat& s) const {
        BasicSeries r(pol_);
        if (s == 0) return r;
        for (const auto& [k, c] : coeffs_) r.coeffs_.emplace(k, c.scaled(s));
        return r;
    }

    bool operator==(const BasicSeries& o) const {
        return pol_ == o.pol_ && coeffs_ == o.coeffs_;
    }
    bool operator!=(const BasicSeries& o) const { return !(*this == o); }

    // Terms grouped by total degree 0..max_degree().
    std::vector<std::vector<std::pair<Key, RationalFn>>> slices() const {
        std::vector<std::vector<std::pair<Key, RationalFn>>> out(
            static_cast<std::size_t>(pol_.max_degree()) + 1);
        for (const auto& [k, c] : coeffs_)
            out[static_cast<std::size_t>(P::degree(k))].emplace_back(k, c);
        return out;
    }

private:
    void check_same_policy(const BasicSeries& o) const {
        if (!(pol_ == o.pol_)) throw std::logic_error("series truncation caps differ");
    }

    P pol_;
    std::map<Key, RationalFn> coeffs_;
};

using XSeries = BasicSeries<XPolicy>;
using PSeries = BasicSeries<PPolicy>;
using TSeries = BasicSeries<TPolicy>;

// ---- formal power-series log/exp in the grading -----------------------
//
// With theta the grading derivation (theta g_d = d g_d), F = exp(L) gives
// theta F = F theta L, hence the degree-d recursions
//   L_d = F_d - (1/d) sum_{j=1}^{d-1} j L_j F_{d-j}        (log, F_0 = 1)
//   E_d = (1/d) sum_{j=1}^{d}   j A_j E_{d-j}              (exp, A_0 = 0)
// which stay exact under truncation.

template <class S>
S formal_log(const S& f) {
    if (!f.constant_term().is_one())
        throw BadConstantTerm("formal_log requires constant term 1");
    const auto& pol = f.policy();
    const int D = pol.max_degree();
    auto fs = f.slices();
    S out(pol);
    std::vector<std::vector<std::pair<typename S::Key, RationalFn>>> ls(
        static_cast<std::size_t>(D) + 1);
    for (int d = 1; d <= D; ++d) {
        S acc(pol);
        for (const auto& [k, c] : fs[static_cast<std::size_t>(d)]) acc.add_coeff(k, c);
        for (int j = 1; j < d; ++j) {
            const BigRat w = make_rat(BigInt(-j), BigInt(d));
            for (const auto& [k1, c1] : ls[static_cast<std::size_t>(j)])
                for (const auto& [k2, c2] : fs[static_cast<std::size_t>(d - j)]) {
                    auto k = S::Policy::combine(k1, k2);
                    if (!pol.contains(k)) continue;
                    acc.add_coeff(k, (c1 * c2).scaled(w));
                }
        }
        for (const auto& [k, c] : acc.terms()) {
            ls[static_cast<std::size_t>(d)].emplace_back(k, c);
            out.add_coeff(k, c);
        }
    }
    return out;
}

template <class S>
S formal_exp(const S& f) {
    if (!f.constant_term().is_zero())
        throw BadConstantTerm("formal_exp requires constant term 0");
    const auto& pol = f.policy();
    const int D = pol.max_degree();
    auto fs = f.slices();
    S out(pol, RationalFn(IntLaurent(1)));
    std::vector<std::vector<std::pair<typename S::Key, RationalFn>>> es(
        static_cast<std::size_t>(D) + 1);
    es[0].emplace_back(pol.unit(), RationalFn(IntLaurent(1)));
    for (int d = 1; d <= D; ++d) {
        S acc(pol);
        for (int j = 1; j <= d; ++j) {
            const BigRat w = make_rat(BigInt(j), BigInt(d));
            for (const auto& [k1, c1] : fs[static_cast<std::size_t>(j)])
                for (const auto& [k2, c2] : es[static_cast<std::size_t>(d - j)]) {
                    auto k = S::Policy::combine(k1, k2);
                    if (!pol.contains(k)) continue;
                    acc.add_coeff(k, (c1 * c2).scaled(w));
                }
        }
        for (const auto& [k, c] : acc.terms()) {
            es[static_cast<std::size_t>(d)].emplace_back(k, c);
            out.add_coeff(k, c);
        }
    }
    return out;
}

// Adams operator Psi_d: u -> u^d on coefficients together with the d-th
// power map on series variables (x -> x^d, p_j -> p_{jd}, T_i -> T_i^d).
// Keys leaving the cap are dropped.
template <class S>
S adams_series(const S& f, int d) {
    const auto& pol = f.policy();
    S out(pol);
    for (const auto& [k, c] : f.terms()) {
        auto kd = S::Policy::scale(k, d);
        if (!pol.contains(kd)) continue;
        out.add_coeff(kd, c.adams(d));
    }
    return out;
}

// Log(f) = sum_{d>=1} mu(d)/d Psi_d(log f); zero constant term.
template <class S>
S pleth_log(const S& f) {
    if (!f.constant_term().is_one())
        throw BadConstantTerm("pleth_log requires constant term 1");
    S l = formal_log(f);
    const int D = f.policy().max_degree();
    S out(f.policy());
    for (int d = 1; d <= D; ++d) {
        int mu = mobius(d);
        if (mu == 0) continue;
        S term = adams_series(l, d).scaled(BigRat(mu, d));
        for (const auto& [k, c] : term.terms()) out.add_coeff(k, c);
    }
    return out;
}

// Exp(f) = exp(sum_{d>=1} Psi_d(f)/d); constant term 1.
template <class S>
S pleth_exp(const S& f) {
    if (!f.constant_term().is_zero())
        throw BadConstantTerm("pleth_exp requires constant term 0");
    const int D = f.policy().max_degree();
    S arg(f.policy());
    for (int d = 1; d <= D; ++d) {
        S term = adams_series(f, d).scaled(BigRat(1, d));
        for (const auto& [k, c] : term.terms()) arg.add_coeff(k, c);
    }
    return formal_exp(arg);
}

// Specialization x = (x, 0, 0, ...): p_mu |-> x^{|mu|}.
XSeries specialize_single(const PSeries& f);

// Hall pairing <f, s_mu> = sum_nu chi_mu(nu) [p_nu] f, using <p_nu, p_nu> = z_nu
// and the power-sum expansion of the Schur function.
RationalFn schur_pairing(const PSeries& f, const Partition& mu);

// True when every coefficient involves only even u-exponents (pure q).
bool pure_q(const RationalFn& f);
void assert_pure_q(const TSeries& f);

}  // namespace ovq
