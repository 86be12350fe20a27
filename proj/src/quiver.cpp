#include "ovq/quiver.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "ovq/errors.hpp"
#include "ovq/series.hpp"

namespace ovq {

void Quiver::validate() const {
    if (vertex_count <= 0) throw InputError("quiver must have a positive vertex count");
    for (const auto& [t, h] : edges)
        if (t < 1 || t > vertex_count || h < 1 || h > vertex_count)
            throw InputError("quiver edge endpoint out of range: (" + std::to_string(t) + "," +
                             std::to_string(h) + ")");
}

Quiver Quiver::reversed() const {
    Quiver r = *this;
    for (auto& [t, h] : r.edges) std::swap(t, h);
    return r;
}

long long partition_pairing(const Partition& lambda, const Partition& mu) {
    long long s = 0;
    auto ml = lambda.multiplicities();
    auto mm = mu.multiplicities();
    for (std::size_t i = 1; i < ml.size(); ++i) {
        if (ml[i] == 0) continue;
        for (std::size_t j = 1; j < mm.size(); ++j) {
            if (mm[j] == 0) continue;
            s += static_cast<long long>(std::min(i, j)) * ml[i] * mm[j];
        }
    }
    return s;
}

namespace {

std::string vec_str(const std::vector<int>& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s;
}

// prod_{k>=1} prod_{j=1}^{m_k(pi)} (1-q^{-j}) as an IntLaurent in u.
IntLaurent hook_denominator(const Partition& pi) {
    IntLaurent d(1);
    auto m = pi.multiplicities();
    for (std::size_t k = 1; k < m.size(); ++k)
        for (int j = 1; j <= m[k]; ++j)
            d = d * (IntLaurent(1) - IntLaurent::monomial(1, -2 * j));
    return d;
}

void tuples_rec(const std::vector<std::vector<std::vector<Partition>>>& per_vertex_by_weight,
                const std::vector<int>& v, std::size_t i, std::vector<Partition>& acc,
                const std::function<void(const std::vector<Partition>&)>& f) {
    if (i == v.size()) {
        f(acc);
        return;
    }
    for (const Partition& p : per_vertex_by_weight[i][static_cast<std::size_t>(v[i])]) {
        acc.push_back(p);
        tuples_rec(per_vertex_by_weight, v, i + 1, acc, f);
        acc.pop_back();
    }
}

// Odometer over all v with 0 <= v <= bound componentwise, ascending.
void for_each_dim_vector(const std::vector<int>& bound,
                         const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> v(bound.size(), 0);
    for (;;) {
        f(v);
        std::size_t i = 0;
        while (i < v.size()) {
            if (v[i] < bound[i]) {
                ++v[i];
                std::fill(v.begin(), v.begin() + static_cast<long>(i), 0);
                break;
            }
            ++i;
        }
        if (i == v.size()) break;
    }
}

}  // namespace

KacTable hua_kac(const Quiver& gamma, const std::vector<int>& bound, int max_total) {
    gamma.validate();
    if (static_cast<int>(bound.size()) != gamma.vertex_count)
        throw InputError("dimension bound length does not match the vertex count");
    for (int b : bound)
        if (b < 0) throw InputError("dimension bound must be componentwise nonnegative");
    int total = std::accumulate(bound.begin(), bound.end(), 0);
    if (total > max_total)
        throw InputError("|bound| = " + std::to_string(total) + " exceeds the cost guard " +
                         std::to_string(max_total));

    const int r = gamma.vertex_count;
    std::vector<std::vector<std::vector<Partition>>> parts(static_cast<std::size_t>(r));
    for (int i = 0; i < r; ++i)
        for (int w = 0; w <= bound[static_cast<std::size_t>(i)]; ++w)
            parts[static_cast<std::size_t>(i)].push_back(enumerate_partitions(w));

    // Hua series over the dimension-vector lattice.
    TSeries series(TPolicy{bound});
    for_each_dim_vector(bound, [&](const std::vector<int>& v) {
        RationalFn coeff;
        std::vector<Partition> acc;
        tuples_rec(parts, v, 0, acc, [&](const std::vector<Partition>& tuple) {
            long long num_exp = 0;
            for (const auto& [t, h] : gamma.edges)
                num_exp += partition_pairing(tuple[static_cast<std::size_t>(t - 1)],
                                             tuple[static_cast<std::size_t>(h - 1)]);
            IntLaurent den(1);
            long long den_exp = 0;
            for (const Partition& pi : tuple) {
                den_exp += partition_pairing(pi, pi);
                den = den * hook_denominator(pi);
            }
            coeff += RationalFn(IntLaurent::monomial(1, static_cast<int>(2 * num_exp)),
                                den.shifted(static_cast<int>(2 * den_exp)));
        });
        series.set_coeff(v, std::move(coeff));
    });
    assert_pure_q(series);

    TSeries lg = pleth_log(series);
    RationalFn q_minus_1(IntLaurent::monomial(1, 2) - IntLaurent(1));

    KacTable table;
    table.quiver = gamma;
    table.bound = bound;
    for_each_dim_vector(bound, [&](const std::vector<int>& dim) {
        if (TPolicy::degree(dim) == 0) return;
        RationalFn a = q_minus_1 * lg.coeff(dim);
        IntLaurent poly;
        try {
            poly = a.to_laurent();
        } catch (const NotLaurent&) {
            auto err = IntegralityViolation("Kac value is not a polynomial");
            err.with("dimension_vector", vec_str(dim)).with("value", a.to_string());
            throw err;
        }
        if (!poly.is_zero()) {
            bool bad = poly.min_exp() < 0;
            poly.for_each_term([&](int e, const BigInt& cc) {
                if (e < 0 || e % 2 != 0 || cc < 0) bad = true;
            });
            if (bad) {
                auto err = IntegralityViolation(
                    "Kac value is not a q-polynomial with nonnegative coefficients");
                err.with("dimension_vector", vec_str(dim)).with("value", poly.to_string());
                throw err;
            }
        }
        table.values[dim] = std::move(poly);
    });
    return table;
}

long long leg_quiver_dim(int n, int k) {
    if (n < 1 || k < 1) throw InputError("leg_quiver_dim requires n, k >= 1");
    // Star-shaped quiver: center of dimension n, k legs with dimensions
    // (n-1, ..., 1). v^t C v = 2 sum v_i^2 - 2 sum_{edges} v_i v_j.
    std::vector<long long> dims;
    dims.push_back(n);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (int leg = 0; leg < k; ++leg) {
        std::size_t prev = 0;
        for (int d = n - 1; d >= 1; --d) {
            dims.push_back(d);
            edges.emplace_back(prev, dims.size() - 1);
            prev = dims.size() - 1;
        }
    }
    long long quad = 0;
    for (long long d : dims) quad += 2 * d * d;
    for (const auto& [a, b] : edges) quad -= 2 * dims[a] * dims[b];
    if (quad % 2 != 0) throw std::logic_error("Cartan form must be even");
    long long d = 1 - quad / 2;
    long long closed = 1 - static_cast<long long>(n) * n +
                       static_cast<long long>(k) * n * (n - 1) / 2;
    if (d != closed) throw std::logic_error("leg_quiver_dim: quadratic form != closed form");
    return d;
}

std::vector<std::pair<int, BigInt>> betti_extract(int n, long tau, const OVTable& table) {
    if (tau > 0) throw InvalidTau("betti_extract requires tau <= 0");
    if (n < 1 || n > table.max_degree)
        throw InputError("betti_extract: table does not contain degree n");
    // d is half the dimension of the variety, so compactly supported
    // cohomology lives in degrees [0, 4d] and the invariants in
    // k = 1-n+2d-2j for j in [0, 2d].
    long long d = leg_quiver_dim(n, static_cast<int>(1 - tau));
    // dim = (-1)^{(tau-1)n+1} N_{n,k}, placed in degree 1-n+2d-k.
    bool flip = ((tau - 1) * static_cast<long long>(n) + 1) % 2 != 0;

    std::vector<std::pair<int, BigInt>> out;
    for (int k : table.row_support(n)) {
        const BigInt& N = table.entries.at({n, k});
        if (d < 0) {
            auto err = SupportViolation("nonzero invariant on an empty variety (d < 0)");
            err.with("n", std::to_string(n)).with("tau", std::to_string(tau))
                .with("k", std::to_string(k)).with("N", N.get_str());
            throw err;
        }
        if (((k % 2) + 2) % 2 != ((n - 1) % 2 + 2) % 2) {
            auto err = ParityViolation("k not congruent to n-1 mod 2");
            err.with("n", std::to_string(n)).with("tau", std::to_string(tau))
                .with("k", std::to_string(k)).with("N", N.get_str());
            throw err;
        }
        BigInt dim = flip ? -N : N;
        if (dim < 0) {
            auto err = SignViolation("(-1)^{(tau-1)n+1} N_{n,k} is negative");
            err.with("n", std::to_string(n)).with("tau", std::to_string(tau))
                .with("k", std::to_string(k)).with("N", N.get_str());
            throw err;
        }
        long long deg = 1 - n + 2 * d - k;
        if (deg < 0 || deg > 4 * d) {
            auto err = SupportViolation("k outside [1-n-2d, 1-n+2d]");
            err.with("n", std::to_string(n)).with("tau", std::to_string(tau))
                .with("k", std::to_string(k)).with("N", N.get_str());
            throw err;
        }
        out.emplace_back(static_cast<int>(deg), dim);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
}

HlrvReport hlrv_special_check(int k, int max_degree) {
    if (k < 1 || max_degree < 1) throw InputError("hlrv_special_check requires k, M >= 1");
    const long tau = 1 - k;

    // Route A: the framed-vertex pipeline.
    XSeries route_a = pleth_log(z_series(tau, max_degree));
    RationalFn u_minus_uinv(IntLaurent::monomial(1, 1) - IntLaurent::monomial(1, -1));

    // Route B: the one-vertex k-leg series built from its own closed form.
    // With W(T) = Z(q^{1/2} T) and the Adams operators commuting with that
    // substitution, G_n = [T^n](q^{-1}-1) Log W satisfies
    // f_n^{1-k}(q) = -u^{1-n} G_n(q).
    XSeries s(XPolicy{max_degree});
    s.set_coeff(0, RationalFn(IntLaurent(1)));
    IntLaurent qpoch(1);
    for (int n = 1; n <= max_degree; ++n) {
        qpoch = qpoch * (IntLaurent(1) - IntLaurent::monomial(1, 2 * n));
        // q-exponent ((2-k)n^2 + kn)/2, i.e. u-exponent (2-k)n^2 + kn (always even)
        long long e = static_cast<long long>(2 - k) * n * n + static_cast<long long>(k) * n;
        if (e % 2 != 0) throw std::logic_error("leg series exponent must be even");
        long long sign = (static_cast<long long>(k) * n) % 2 != 0 ? -1 : 1;
        s.set_coeff(n, RationalFn(IntLaurent::monomial(to_bigint(sign), static_cast<int>(e)), qpoch));
    }
    XSeries route_b = pleth_log(s);
    RationalFn qinv_minus_1(IntLaurent::monomial(1, -2) - IntLaurent(1));

    HlrvReport rep;
    rep.k = k;
    rep.max_degree = max_degree;
    for (int n = 1; n <= max_degree; ++n) {
        RationalFn lhs = u_minus_uinv * route_a.coeff(n);
        RationalFn g = qinv_minus_1 * route_b.coeff(n);
        RationalFn rhs = -(g * RationalFn::monomial(1, 1 - n));
        if (lhs != rhs) {
            auto err = MismatchAt("one-vertex k-leg series disagrees with f_n");
            err.with("k", std::to_string(k)).with("n", std::to_string(n))
                .with("lhs", lhs.to_string()).with("rhs", rhs.to_string());
            throw err;
        }
    }
    rep.ok = true;
    return rep;
}

}  // namespace ovq
