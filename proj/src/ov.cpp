#include "ovq/ov.hpp"

#include <algorithm>
#include <limits>

#include "ovq/errors.hpp"

namespace ovq {

IntLaurent OVTable::row_poly(int m) const {
    IntLaurent p;
    for (auto it = entries.lower_bound({m, std::numeric_limits<int>::min()});
         it != entries.end() && it->first.first == m; ++it)
        p += IntLaurent::monomial(it->second, it->first.second);
    return p;
}

BigInt OVTable::row_sum(int m) const { return row_poly(m).eval_one(); }

std::vector<int> OVTable::row_support(int m) const {
    std::vector<int> ks;
    for (auto it = entries.lower_bound({m, std::numeric_limits<int>::min()});
         it != entries.end() && it->first.first == m; ++it)
        ks.push_back(it->first.second);
    return ks;
}

namespace {

bool odd(long long v) { return v % 2 != 0; }

int checked_exp(long long e) {
    if (e > std::numeric_limits<int>::max() / 2 || e < std::numeric_limits<int>::min() / 2)
        throw InputError("u-exponent out of range");
    return static_cast<int>(e);
}

const RationalFn& u_minus_uinv() {
    static const RationalFn v(IntLaurent::monomial(1, 1) - IntLaurent::monomial(1, -1));
    return v;
}

}  // namespace

RationalFn marino_vafa(const Partition& lambda, long tau) {
    long long sign = odd(static_cast<long long>(lambda.weight()) * tau) ? -1 : 1;
    long long num_exp = lambda.kappa() * tau;
    IntLaurent den(1);
    for (int hl : lambda.hooks())
        den = den * (IntLaurent::monomial(1, hl) - IntLaurent::monomial(1, -hl));
    for (int cn : lambda.contents()) num_exp += cn;
    return RationalFn(IntLaurent::monomial(to_bigint(sign), checked_exp(num_exp)), std::move(den));
}

XSeries z_series(long tau, int max_degree) {
    if (max_degree < 1) throw InputError("z_series requires max_degree >= 1");
    XSeries z(XPolicy{max_degree});
    z.set_coeff(0, RationalFn(IntLaurent(1)));
    IntLaurent qpoch(1);  // (q;q)_n in u
    for (int n = 1; n <= max_degree; ++n) {
        qpoch = qpoch * (IntLaurent(1) - IntLaurent::monomial(1, 2 * n));
        long long e = static_cast<long long>(n) * (n - 1) * tau + static_cast<long long>(n) * n;
        long long sign = odd(static_cast<long long>(n) * (tau - 1)) ? -1 : 1;
        z.set_coeff(n, RationalFn(IntLaurent::monomial(to_bigint(sign), checked_exp(e)), qpoch));
    }
    return z;
}

OVTable ov_table(long tau, int max_degree) {
    XSeries lg = pleth_log(z_series(tau, max_degree));
    OVTable t;
    t.tau = tau;
    t.max_degree = max_degree;
    for (int m = 1; m <= max_degree; ++m) {
        RationalFn f = u_minus_uinv() * lg.coeff(m);
        IntLaurent p;
        try {
            p = f.to_laurent();
        } catch (const NotLaurent&) {
            auto err = IntegralityViolation("f_m is not a Laurent polynomial in q^{1/2}");
            err.with("tau", std::to_string(tau))
                .with("m", std::to_string(m))
                .with("value", f.to_string());
            throw err;
        }
        p.for_each_term([&](int k, const BigInt& c) { t.entries[{m, k}] = c; });
    }
    return t;
}

IntLaurent ov_f_mu(long tau, const Partition& mu, int cap) {
    if (mu.weight() > cap) throw CapExceeded("ov_f_mu: |mu| exceeds cap");
    if (mu.weight() == 0) throw InputError("ov_f_mu: mu must be a partition of a positive integer");

    // Z = sum_lambda H_lambda s_lambda expanded over the power-sum basis via
    // the Frobenius formula s_lambda = sum_nu chi_lambda(nu)/z_nu p_nu.
    PSeries z(PPolicy{cap}, RationalFn(IntLaurent(1)));
    for (int w = 1; w <= cap; ++w) {
        auto parts = enumerate_partitions(w);
        for (const Partition& nu : parts) {
            RationalFn c;
            BigRat zinv(1);
            zinv /= BigRat(nu.z());
            for (const Partition& lambda : parts) {
                long long chi = mn_character(lambda, nu);
                if (chi == 0) continue;
                c += marino_vafa(lambda, tau).scaled(BigRat(to_bigint(chi)) * zinv);
            }
            z.set_coeff(nu, std::move(c));
        }
    }
    RationalFn f = u_minus_uinv() * schur_pairing(pleth_log(z), mu);
    try {
        return f.to_laurent();
    } catch (const NotLaurent&) {
        auto err = IntegralityViolation("f_mu is not a Laurent polynomial in q^{1/2}");
        err.with("tau", std::to_string(tau)).with("mu", mu.to_string()).with("value", f.to_string());
        throw err;
    }
}

namespace {

// Lower bound for the u-exponent reachable at x-degree j by any product of
// factor monomials u^{k+1+2l} x^m drawn from the table (l >= 0). Unreachable
// degrees get the sentinel max().
std::vector<long long> min_exponent_profile(const OVTable& t, int max_degree) {
    const long long inf = std::numeric_limits<long long>::max();
    std::map<int, int> kmin;  // per x-degree m
    for (const auto& [mk, c] : t.entries) {
        auto it = kmin.find(mk.first);
        if (it == kmin.end() || mk.second < it->second) kmin[mk.first] = mk.second;
    }
    std::vector<long long> emin(static_cast<std::size_t>(max_degree) + 1, inf);
    emin[0] = 0;
    for (int j = 1; j <= max_degree; ++j) {
        for (const auto& [m, k] : kmin) {
            if (m > j || emin[static_cast<std::size_t>(j - m)] == inf) continue;
            long long cand = emin[static_cast<std::size_t>(j - m)] + k + 1;
            emin[static_cast<std::size_t>(j)] = std::min(emin[static_cast<std::size_t>(j)], cand);
        }
    }
    return emin;
}

}  // namespace

int min_l_trunc(const OVTable& t, int max_degree, int u_trunc) {
    auto emin = min_exponent_profile(t, max_degree);
    std::map<int, int> kmin;
    for (const auto& [mk, c] : t.entries) {
        auto it = kmin.find(mk.first);
        if (it == kmin.end() || mk.second < it->second) kmin[mk.first] = mk.second;
    }
    long long need = 1;
    for (const auto& [m, k] : kmin) {
        if (m > max_degree) continue;
        for (int n = m; n <= max_degree; ++n) {
            long long rest = emin[static_cast<std::size_t>(n - m)];
            if (rest == std::numeric_limits<long long>::max()) continue;
            // dropped factor exponent k+1+2L plus rest must exceed u_trunc:
            // 2L >= u_trunc - k - rest
            long long gap = u_trunc - k - rest;
            if (gap > 0) need = std::max(need, (gap + 1) / 2);
        }
    }
    return static_cast<int>(need);
}

// A factor (1 - u^a x^m)^N enters |N| times as multiplication (N > 0,
// descending degrees) or division (N < 0, ascending degrees; T = S/(1-y)
// satisfies T = S + yT degree by degree).
std::vector<IntLaurent> expand_ov_product(const OVTable& table, int max_degree, int l_trunc) {
    std::vector<IntLaurent> prod(static_cast<std::size_t>(max_degree) + 1);
    prod[0] = IntLaurent(1);
    for (const auto& [mk, N] : table.entries) {
        const auto [m, k] = mk;
        if (m > max_degree) continue;
        for (int l = 0; l < l_trunc; ++l) {
            int a = k + 1 + 2 * l;
            unsigned long reps = mpz_class(abs(N)).get_ui();
            for (unsigned long r = 0; r < reps; ++r) {
                if (N > 0) {
                    for (int n = max_degree; n >= m; --n)
                        prod[static_cast<std::size_t>(n)] -=
                            prod[static_cast<std::size_t>(n - m)].shifted(a);
                } else {
                    for (int n = m; n <= max_degree; ++n)
                        prod[static_cast<std::size_t>(n)] +=
                            prod[static_cast<std::size_t>(n - m)].shifted(a);
                }
            }
        }
    }
    return prod;
}

ProductReport product_verify(const OVTable& table, int max_degree, int u_trunc, int l_trunc) {
    if (max_degree < 1 || max_degree > table.max_degree)
        throw InputError("product_verify: table does not cover the requested degree");
    int l_needed = min_l_trunc(table, max_degree, u_trunc);
    if (l_trunc < l_needed) {
        auto err = TruncationTooTight("l-truncation cannot reproduce the requested u window");
        err.with("l_trunc", std::to_string(l_trunc))
            .with("l_needed", std::to_string(l_needed))
            .with("u_trunc", std::to_string(u_trunc));
        throw err;
    }

    std::vector<IntLaurent> prod = expand_ov_product(table, max_degree, l_trunc);

    ProductReport rep;
    rep.tau = table.tau;
    rep.max_degree = max_degree;
    rep.u_trunc = u_trunc;
    rep.l_trunc = l_trunc;

    XSeries z = z_series(table.tau, max_degree);
    for (int n = 0; n <= max_degree; ++n) {
        const IntLaurent& ppoly = prod[static_cast<std::size_t>(n)];
        auto series = z.coeff(n).u_expansion(u_trunc);
        int lo = u_trunc + 1;
        if (!ppoly.is_zero()) lo = std::min(lo, ppoly.min_exp());
        if (!series.empty()) lo = std::min(lo, series.begin()->first);
        for (int e = lo; e <= u_trunc; ++e) {
            BigRat ps(ppoly.coeff(e));
            auto it = series.find(e);
            BigRat zs = it == series.end() ? BigRat(0) : it->second;
            if (ps != zs) {
                rep.ok = false;
                rep.mismatch.n = n;
                rep.mismatch.exponent = e;
                rep.mismatch.product_coeff = ps.get_str();
                rep.mismatch.series_coeff = zs.get_str();
                return rep;
            }
        }
    }
    rep.ok = true;
    return rep;
}

BigInt f_at_one(int m, long tau) {
    if (m < 1) throw InputError("f_at_one requires m >= 1");
    BigInt sum = 0;
    for (int d = 1; d <= m; ++d) {
        if (m % d != 0) continue;
        BigInt term = binomial(static_cast<long long>(d) * (tau + 1) - 1, d - 1);
        if (odd(static_cast<long long>(d) * tau)) term = -term;
        sum += mobius(m / d) * term;
    }
    BigInt m2 = BigInt(m) * m;
    if (!int_divisible(sum, m2)) {
        auto err = NonIntegerResult("f_m(1) sum is not divisible by m^2");
        err.with("m", std::to_string(m))
            .with("tau", std::to_string(tau))
            .with("sum", sum.get_str());
        throw err;
    }
    return int_divexact(sum, m2);
}

BigRat disk_gw(int m, long tau) {
    if (m < 1) throw InputError("disk_gw requires m >= 1");
    BigInt num = binomial(static_cast<long long>(m) * (tau + 1) - 1, m - 1);
    if (odd(static_cast<long long>(m) * tau)) num = -num;
    return make_rat(num, BigInt(m) * m);
}

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

BigInt fp_function(long long n, long long p) {
    if (!is_prime(p)) throw NotPrime("fp_function: p = " + std::to_string(p));
    if (n < 0) throw InputError("fp_function requires n >= 0");
    BigInt r = 1;
    for (long long i = 1; i <= n; ++i)
        if (i % p != 0) r *= to_bigint(i);
    return r;
}

DivisibilityReport divisibility_checks(long long p, int alpha, long long a, long tau) {
    if (!is_prime(p)) throw NotPrime("divisibility_checks: p = " + std::to_string(p));
    if (alpha < 1) throw InputError("divisibility_checks requires alpha >= 1");
    if (a < 1) throw InputError("divisibility_checks requires a >= 1");

    DivisibilityReport rep;
    rep.p = p;
    rep.alpha = alpha;
    rep.a = a;
    rep.tau = tau;

    long long pa = 1;
    for (int i = 0; i < alpha; ++i) pa *= p;
    BigInt mod = int_pow(to_bigint(p), 2 * static_cast<unsigned long>(alpha));

    rep.fp_checked = true;
    if (p == 2 && alpha == 1) {
        rep.fp_congruence_form = true;
        BigInt lhs = fp_function(2 * a, 2);
        BigInt want = (a / 2) % 2 == 0 ? 1 : -1;
        rep.fp_holds = int_divisible(lhs - want, BigInt(4));
    } else {
        BigInt lhs = fp_function(pa * a, p);
        BigInt rhs = int_pow(fp_function(pa, p), static_cast<unsigned long>(a));
        rep.fp_holds = int_divisible(lhs - rhs, mod);
    }

    if (tau < 0) {
        rep.binom_skip_reason = "binomial lemma requires tau >= 0";
    } else if (a % p == 0) {
        rep.binom_skip_reason = "binomial lemma requires p coprime to a";
    } else {
        rep.binom_checked = true;
        long long n = pa * a;
        BigInt big = binomial((tau + 1) * n - 1, n - 1);
        if (odd(tau * n)) big = -big;
        BigInt small = binomial((tau + 1) * (n / p) - 1, n / p - 1);
        if (odd(tau * (n / p))) small = -small;
        rep.binom_holds = int_divisible(big - small, mod);
    }
    return rep;
}

}  // namespace ovq
