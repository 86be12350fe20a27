#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ovq/partitions.hpp"
#include "ovq/ratfn.hpp"
#include "ovq/series.hpp"

namespace ovq {

// Integer invariants N_{m,k}(tau) of the framed vertex: the coefficients of
// q^{k/2} x^m in (q^{1/2}-q^{-1/2}) Log Z. Only nonzero entries are stored;
// finite support per m is what integrality asserts.
struct OVTable {
    long tau = 0;
    int max_degree = 0;
    std::map<std::pair<int, int>, BigInt> entries;  // (m, k) -> N_{m,k}(tau)

    // sum_k N_{m,k} u^k
    IntLaurent row_poly(int m) const;
    // f_m(1) = sum_k N_{m,k}
    BigInt row_sum(int m) const;
    // smallest k with N_{m,k} != 0, or nullopt for an empty row
    std::vector<int> row_support(int m) const;
};

// Framed hook-content amplitude
//   H_lambda(q;tau) = (-1)^{|lambda| tau} q^{kappa tau / 2}
//                     prod_{cells} q^{cn/2} / (q^{hl/2} - q^{-hl/2}).
RationalFn marino_vafa(const Partition& lambda, long tau);

// One-variable partition function: coefficient of x^n is
//   (-1)^{n(tau-1)} q^{n(n-1)tau/2 + n^2/2} / ((1-q)...(1-q^n)),
// which equals marino_vafa((n), tau).
XSeries z_series(long tau, int max_degree);

// (q^{1/2}-q^{-1/2}) [x^m] Log z_series, for every m <= max_degree, converted
// through the integrality gate. Throws IntegralityViolation (with tau, m and
// the offending value attached) if any coefficient fails to be a Laurent
// polynomial with integer coefficients.
OVTable ov_table(long tau, int max_degree);

// General-partition invariant f_mu = (q^{1/2}-q^{-1/2}) <Log Z, s_mu> built
// from the full symmetric-function partition function up to degree cap.
IntLaurent ov_f_mu(long tau, const Partition& mu, int cap);

struct ProductMismatch {
    int n = 0;
    int exponent = 0;
    std::string product_coeff;
    std::string series_coeff;
};

struct ProductReport {
    bool ok = false;
    long tau = 0;
    int max_degree = 0;
    int u_trunc = 0;
    int l_trunc = 0;
    ProductMismatch mismatch;  // valid when !ok
};

// Expands prod_{m,k,l<L} (1 - q^{k/2} q^{1/2+l} x^m)^{N_{m,k}} exactly
// (1/(1-q) = 1+q+... expansion) and compares with z_series through
// u-exponent U at every x-degree <= M. Throws TruncationTooTight when L is
// provably insufficient for the requested U.
ProductReport product_verify(const OVTable& table, int max_degree, int u_trunc, int l_trunc);

// Smallest l-truncation certified to reproduce all u-exponents <= U.
int min_l_trunc(const OVTable& table, int max_degree, int u_trunc);

// Exact expansion of prod_{m,k,l<L} (1 - u^{k+1+2l} x^m)^{N_{m,k}} as one
// Laurent polynomial per x-degree 0..M.
std::vector<IntLaurent> expand_ov_product(const OVTable& table, int max_degree, int l_trunc);

// f_m(1) at framing tau: (1/m^2) sum_{d|m} mu(m/d) (-1)^{d tau} C(d(tau+1)-1, d-1).
// Throws NonIntegerResult if the sum is not divisible by m^2.
BigInt f_at_one(int m, long tau);

// Degree-m genus-zero disk invariant (-1)^{m tau} C(m(tau+1)-1, m-1) / m^2.
BigRat disk_gw(int m, long tau);

bool is_prime(long long p);

// f_p(n) = prod of i <= n with p not dividing i.
BigInt fp_function(long long n, long long p);

struct DivisibilityReport {
    long long p = 0;
    int alpha = 0;
    long long a = 0;  // multiplier for the f_p congruence; cofactor of n = p^alpha a
    long tau = 0;

    bool fp_checked = false;
    bool fp_holds = false;
    bool fp_congruence_form = false;  // p=2, alpha=1 uses f_2(2a) = (-1)^[a/2] mod 4
    std::string fp_skip_reason;

    bool binom_checked = false;
    bool binom_holds = false;
    std::string binom_skip_reason;

    bool all_hold() const {
        return (!fp_checked || fp_holds) && (!binom_checked || binom_holds);
    }
};

// Verifies p^{2 alpha} | f_p(p^alpha a) - f_p(p^alpha)^a (or the p=2, alpha=1
// congruence) and p^{2 alpha} | (-1)^{tau n} C((tau+1)n-1, n-1)
// - (-1)^{tau n/p} C((tau+1)n/p-1, n/p-1) for n = p^alpha a. The binomial
// check needs p coprime to a and tau >= 0 and is skipped otherwise.
DivisibilityReport divisibility_checks(long long p, int alpha, long long a, long tau);

}  // namespace ovq
