#include "ovq/rr.hpp"

#include <algorithm>
#include <vector>

#include "ovq/errors.hpp"

namespace ovq {

bool in_support_set(int m, int k) {
    if (m == 1) return k == 0;
    if (m == 2) return k == 1;
    if (m == 3) return k == 4;
    if (k == (m - 1) * (m - 1)) return true;
    return k >= m + 1 && k <= m * m - 2 * m - 3 && (k - m - 1) % 2 == 0;
}

GPoly g_poly_from_table(const OVTable& table, int m) {
    if (table.tau != 1) throw InputError("g_poly needs a framing-1 table");
    if (m < 1 || m > table.max_degree) throw InputError("g_poly: row m not in table");
    GPoly g;
    g.m = m;
    bool odd_m = m % 2 != 0;
    for (int k : table.row_support(m)) {
        BigInt n = table.entries.at({m, k});
        if (odd_m) n = -n;
        if (n < 0) {
            auto err = SignViolation("n_{m,k} = (-1)^m N_{m,k}(1) is negative");
            err.with("m", std::to_string(m)).with("k", std::to_string(k)).with("n", n.get_str());
            throw err;
        }
        if (!in_support_set(m, k)) {
            auto err = SupportViolation("nonzero n_{m,k} outside I_m");
            err.with("m", std::to_string(m)).with("k", std::to_string(k)).with("n", n.get_str());
            throw err;
        }
        g.poly += IntLaurent::monomial(n, 2 * k);
    }
    return g;
}

GPoly g_poly(int m, int max_m) {
    if (m < 1) throw InputError("g_poly requires m >= 1");
    if (m > max_m)
        throw InputError("g_poly: m = " + std::to_string(m) + " exceeds the cost guard " +
                         std::to_string(max_m));
    return g_poly_from_table(ov_table(1, m), m);
}

std::map<int, RRExponent> rr_exponents(int variant, const OVTable& table) {
    if (variant != 1 && variant != 2) throw InputError("rr variant must be 1 or 2");
    if (table.tau != 1) throw InputError("rr_exponents needs a framing-1 table");
    if (table.max_degree < 3) throw InputError("rr_exponents needs rows m <= 3 at least");
    const int M = table.max_degree;
    const int mult = variant == 1 ? 1 : 3;

    std::map<int, RRExponent> out;
    int max_i = 0;
    for (const auto& [mk, N] : table.entries) {
        const auto [m, k] = mk;
        long long two_i = static_cast<long long>(mult) * m + k + 1;
        if (two_i % 2 != 0) {
            auto err = ParityViolation("m + k has the wrong parity for the specialization");
            err.with("m", std::to_string(m)).with("k", std::to_string(k));
            throw err;
        }
        int i = static_cast<int>(two_i / 2);
        BigInt n = N;  // (-1)^m n_{m,k} = N_{m,k}(1)
        out[i].value += n;
        max_i = std::max(max_i, i);
    }
    // completeness: rows above M could only land at i with m <= i-1 (variant 1)
    // or m <= (i-1)/2 (variant 2), via the I_m bound k >= m+1
    auto complete = [&](int i) {
        long long need = variant == 1 ? static_cast<long long>(i) - 1 : (static_cast<long long>(i) - 1) / 2;
        return need <= M;
    };
    for (auto& [i, e] : out) e.complete = complete(i);
    for (int i = 1; i <= max_i; ++i)
        if (!out.count(i) && complete(i)) out[i] = RRExponent{BigInt(0), true};
    return out;
}

namespace {

// Dense integer q-series on exponents 0..order.
using QDense = std::vector<BigInt>;

void mul_one_minus_q(QDense& s, int a) {
    for (int j = static_cast<int>(s.size()) - 1; j >= a; --j)
        s[static_cast<std::size_t>(j)] -= s[static_cast<std::size_t>(j - a)];
}

void div_one_minus_q(QDense& s, int a) {
    for (int j = a; j < static_cast<int>(s.size()); ++j)
        s[static_cast<std::size_t>(j)] += s[static_cast<std::size_t>(j - a)];
}

void apply_power(QDense& s, int a, const BigInt& e) {
    unsigned long reps = mpz_class(abs(e)).get_ui();
    for (unsigned long r = 0; r < reps; ++r)
        e > 0 ? mul_one_minus_q(s, a) : div_one_minus_q(s, a);
}

// sum_{n >= 0} q^{n^2 + shift*n} / (q;q)_n truncated at order.
QDense rr_sum_side(int order, int shift) {
    QDense acc(static_cast<std::size_t>(order) + 1);
    for (long long n = 0;; ++n) {
        long long e = n * n + static_cast<long long>(shift) * n;
        if (e > order) break;
        QDense term(static_cast<std::size_t>(order) + 1);
        term[static_cast<std::size_t>(e)] = 1;
        for (int j = 1; j <= n; ++j) div_one_minus_q(term, j);
        for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += term[i];
    }
    return acc;
}

QDense classical_product_side(int order, int variant) {
    QDense s(static_cast<std::size_t>(order) + 1);
    s[0] = 1;
    int r1 = variant == 1 ? 1 : 2;
    int r2 = variant == 1 ? 4 : 3;
    for (int j = 1; j <= order; ++j)
        if (j % 5 == r1 || j % 5 == r2) div_one_minus_q(s, j);
    return s;
}

bool first_difference(const QDense& a, const QDense& b, int& at) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[i]) {
            at = static_cast<int>(i);
            return true;
        }
    return false;
}

}  // namespace

RRReport rr_verify(int variant, int order, const OVTable& table) {
    if (order < 1) throw InputError("rr_verify requires order >= 1");
    auto exps = rr_exponents(variant, table);
    for (int i = 1; i <= order; ++i) {
        auto it = exps.find(i);
        bool complete = it != exps.end() ? it->second.complete
                                         : (variant == 1 ? i - 1 <= table.max_degree
                                                         : (i - 1) / 2 <= table.max_degree);
        if (!complete) {
            auto err = IncompleteExponents("table rows cannot certify exponent index");
            err.with("variant", std::to_string(variant)).with("i", std::to_string(i))
                .with("rows", std::to_string(table.max_degree));
            throw err;
        }
    }

    QDense sum = rr_sum_side(order, variant == 1 ? 0 : 1);
    QDense collapsed(static_cast<std::size_t>(order) + 1);
    collapsed[0] = 1;
    for (const auto& [i, e] : exps) {
        if (i > order || e.value == 0) continue;
        for (int j = i; j <= order; ++j) apply_power(collapsed, j, e.value);
    }
    QDense classical = classical_product_side(order, variant);

    RRReport rep;
    rep.variant = variant;
    rep.order = order;
    int at = 0;
    if (first_difference(sum, collapsed, at)) {
        rep.ok = false;
        rep.status = "mismatch";
        rep.mismatch = {"sum/collapsed-product", at, sum[static_cast<std::size_t>(at)].get_str(),
                        collapsed[static_cast<std::size_t>(at)].get_str()};
        return rep;
    }
    if (first_difference(sum, classical, at)) {
        rep.ok = false;
        rep.status = "mismatch";
        rep.mismatch = {"sum/classical-product", at, sum[static_cast<std::size_t>(at)].get_str(),
                        classical[static_cast<std::size_t>(at)].get_str()};
        return rep;
    }
    rep.ok = true;
    rep.status = "verified";
    return rep;
}

RRReport classical_rr_check(int variant, int order) {
    if (variant != 1 && variant != 2) throw InputError("rr variant must be 1 or 2");
    if (order < 1) throw InputError("classical_rr_check requires order >= 1");
    QDense sum = rr_sum_side(order, variant == 1 ? 0 : 1);
    QDense classical = classical_product_side(order, variant);
    RRReport rep;
    rep.variant = variant;
    rep.order = order;
    int at = 0;
    if (first_difference(sum, classical, at)) {
        rep.ok = false;
        rep.status = "mismatch";
        rep.mismatch = {"sum/classical-product", at, sum[static_cast<std::size_t>(at)].get_str(),
                        classical[static_cast<std::size_t>(at)].get_str()};
        return rep;
    }
    rep.ok = true;
    rep.status = "verified";
    return rep;
}

DeformedReport deformed_product_check(const OVTable& table, int max_degree, int u_trunc) {
    if (table.tau != 1) throw InputError("deformed_product_check needs a framing-1 table");
    if (max_degree < 1 || max_degree > table.max_degree)
        throw InputError("deformed_product_check: table does not cover the requested degree");

    const int L = min_l_trunc(table, max_degree, u_trunc);

    DeformedReport rep;
    rep.max_degree = max_degree;
    rep.u_trunc = u_trunc;
    rep.l_trunc = L;

    // Flat arrangement against the series side.
    ProductReport flat = product_verify(table, max_degree, u_trunc, L);
    if (!flat.ok) {
        auto err = MismatchAt("flat product disagrees with the series side");
        err.with("m", std::to_string(flat.mismatch.n))
            .with("exponent", std::to_string(flat.mismatch.exponent))
            .with("product", flat.mismatch.product_coeff)
            .with("series", flat.mismatch.series_coeff);
        throw err;
    }

    // Parity-split arrangement: rows regrouped as
    //   (1 - a^{2m} q^{k+l+2m})^{n_{2m, 2k+2m-1}}
    //   (1 - a^{2m-1} q^{k+l+2m-1})^{-n_{2m-1, 2k+2m-2}}
    // under a = q^{-1/2} x; the k index is recovered per entry and the
    // u-exponent rebuilt through the split formula.
    std::vector<IntLaurent> split(static_cast<std::size_t>(max_degree) + 1);
    split[0] = IntLaurent(1);
    for (const auto& [mk, N] : table.entries) {
        const auto [m, k_table] = mk;
        if (m > max_degree) continue;
        if ((k_table + 1 - m) % 2 != 0) {
            auto err = ParityViolation("table entry does not fit the parity-split arrangement");
            err.with("m", std::to_string(m)).with("k", std::to_string(k_table));
            throw err;
        }
        const int k = (k_table + 1 - m) / 2;
        const bool even_row = m % 2 == 0;
        // n_{m,k_table} = (-1)^m N; split exponent is +n on even rows, -n on odd
        BigInt n = even_row ? N : -N;
        BigInt exponent = even_row ? n : -n;
        unsigned long reps = mpz_class(abs(exponent)).get_ui();
        for (int l = 0; l < L; ++l) {
            // u-exponent of a^m q^{k+l+m} with a = u^{-1} x
            int a = 2 * (k + l + m) - m;
            for (unsigned long r = 0; r < reps; ++r) {
                if (exponent > 0) {
                    for (int nn = max_degree; nn >= m; --nn)
                        split[static_cast<std::size_t>(nn)] -=
                            split[static_cast<std::size_t>(nn - m)].shifted(a);
                } else {
                    for (int nn = m; nn <= max_degree; ++nn)
                        split[static_cast<std::size_t>(nn)] +=
                            split[static_cast<std::size_t>(nn - m)].shifted(a);
                }
            }
        }
    }

    std::vector<IntLaurent> flat_prod = expand_ov_product(table, max_degree, L);
    for (int n = 0; n <= max_degree; ++n) {
        if (flat_prod[static_cast<std::size_t>(n)] != split[static_cast<std::size_t>(n)]) {
            const IntLaurent& a = flat_prod[static_cast<std::size_t>(n)];
            const IntLaurent& b = split[static_cast<std::size_t>(n)];
            int lo = std::min(a.is_zero() ? 0 : a.min_exp(), b.is_zero() ? 0 : b.min_exp());
            int hi = std::max(a.is_zero() ? 0 : a.max_exp(), b.is_zero() ? 0 : b.max_exp());
            for (int e = lo; e <= hi; ++e)
                if (a.coeff(e) != b.coeff(e)) {
                    auto err = MismatchAt("parity-split arrangement differs from the flat product");
                    err.with("m", std::to_string(n)).with("exponent", std::to_string(e))
                        .with("flat", a.coeff(e).get_str()).with("split", b.coeff(e).get_str());
                    throw err;
                }
        }
    }
    rep.arrangements_equal = true;
    rep.ok = true;
    return rep;
}

}  // namespace ovq
