#pragma once

#include <map>
#include <string>

#include "ovq/laurent.hpp"
#include "ovq/ov.hpp"

namespace ovq {

// g_m(q) = sum_k n_{m,k} q^k with n_{m,k} = (-1)^m N_{m,k}(1): nonnegative
// coefficients supported inside I_m. poly lives on even u-exponents 2k.
struct GPoly {
    int m = 0;
    IntLaurent poly;
};

// Conjectured support superset: I_1={0}, I_2={1}, I_3={4}, and for m >= 4
// I_m = {m+1, m+3, ..., m^2-2m-3} together with (m-1)^2.
bool in_support_set(int m, int k);

// Row m of the framing-1 table with the sign flipped; enforces
// nonnegativity (SignViolation) and support inside I_m (SupportViolation).
GPoly g_poly_from_table(const OVTable& table, int m);
// Convenience wrapper computing the table; cost-guarded.
GPoly g_poly(int m, int max_m = 14);

struct RRExponent {
    BigInt value;
    bool complete = false;
};

// Collapsed product exponents of the two classical specializations:
//   variant 1 (x = q^{1/2}):  n_i = sum_{m+k+1=2i}  (-1)^m n_{m,k}
//   variant 2 (x = q^{3/2}):  r_i = sum_{3m+k+1=2i} (-1)^m n_{m,k}
// An index is complete when every row that could contribute under the I_m
// support bound (k >= m+1 for m >= 4, rows 1..3 explicit) is inside the
// table; requires rows m <= 3 present.
std::map<int, RRExponent> rr_exponents(int variant, const OVTable& table);

struct RRMismatch {
    std::string sides;  // which pair disagreed, e.g. "sum/product"
    int exponent = 0;
    std::string lhs, rhs;
};

struct RRReport {
    int variant = 0;
    int order = 0;
    bool ok = false;
    std::string status;  // "verified" or "mismatch"
    RRMismatch mismatch;
};

// Three-way comparison up to q^order: the q-hypergeometric sum side, the
// product rebuilt from the collapsed exponents, and the classical product
//   variant 1: prod 1/((1-q^{5n+1})(1-q^{5n+4}))
//   variant 2: prod 1/((1-q^{5n+2})(1-q^{5n+3})).
// Throws IncompleteExponents when the table rows cannot certify an index.
RRReport rr_verify(int variant, int order, const OVTable& table);

// Sum side against the classical product only; independent of any table.
RRReport classical_rr_check(int variant, int order);

struct DeformedReport {
    int max_degree = 0;
    int u_trunc = 0;
    int l_trunc = 0;
    bool ok = false;
    bool arrangements_equal = false;  // flat vs parity-split factor indexing
};

// Verifies the deformed two-variable identity at framing 1: the flat product
// (1 - q^{(k+1)/2+l} x^m)^{(-1)^m n_{m,k}} against the series side, and the
// parity-split arrangement (even/odd rows as numerator/denominator in the
// a = q^{-1/2} x variables) against the flat one, bit-exact to (x^M, u^U).
// Throws MismatchAt (with x-degree, u-exponent and both values) on failure.
DeformedReport deformed_product_check(const OVTable& table, int max_degree, int u_trunc);

}  // namespace ovq
