#pragma once

#include <map>
#include <utility>
#include <vector>

#include "ovq/laurent.hpp"
#include "ovq/ov.hpp"
#include "ovq/partitions.hpp"

namespace ovq {

// Finite quiver: vertices 1..vertex_count, directed edges (tail, head) with
// loops and multi-edges allowed.
struct Quiver {
    int vertex_count = 0;
    std::vector<std::pair<int, int>> edges;

    void validate() const;  // throws InputError on out-of-range endpoints
    Quiver reversed() const;
};

// Kac polynomials A_v(q): counts of absolutely indecomposable representations
// of dimension v over F_q. Values are polynomials in q (even u-exponents,
// no negative powers) with nonnegative integer coefficients.
struct KacTable {
    Quiver quiver;
    std::vector<int> bound;
    std::map<std::vector<int>, IntLaurent> values;  // dimension vector -> A_v
};

// <lambda, mu> = sum_{i,j} min(i,j) m_i(lambda) m_j(mu).
long long partition_pairing(const Partition& lambda, const Partition& mu);

// Kac polynomials of every dimension vector 0 < v <= bound via the
// plethystic formula
//   sum_v A_v(q) prod T_i^{v_i}
//     = (q-1) Log( sum_{partition tuples} prod_{edges} q^{<pi_t, pi_h>}
//        / prod_i ( q^{<pi_i, pi_i>} prod_{k>=1} prod_{j<=m_k(pi_i)} (1-q^{-j}) )
//        * prod T_i^{|pi_i|} ).
// Throws IntegralityViolation if some A_v is not a polynomial with
// nonnegative integer coefficients. total(bound) is guarded by max_total.
KacTable hua_kac(const Quiver& gamma, const std::vector<int>& bound, int max_total = 8);

// Dimension d = 1 - n^2 + k n(n-1)/2 of the variety attached to one vertex of
// dimension n carrying k legs with dimensions (n-1, n-2, ..., 1), computed
// from the explicit Cartan quadratic form (the closed form is asserted).
// Negative d means the variety is empty.
long long leg_quiver_dim(int n, int k);

// Betti-number reading of row n of an OVTable at framing tau <= 0:
//   N_{n,k} = -(-1)^{(tau-1)n} dim H_c^{1-n+2d-k},
// returned as (even cohomological degree, dimension) pairs with degrees in
// [0, 4d] (d is half the variety dimension), i.e. k in [1-n-2d, 1-n+2d].
// Violations of the parity/sign/support structure raise the matching error.
std::vector<std::pair<int, BigInt>> betti_extract(int n, long tau, const OVTable& table);

struct HlrvReport {
    int k = 0;
    int max_degree = 0;
    bool ok = false;
};

// Consistency of the one-vertex k-leg series with the framed-vertex series
// at tau = 1-k: for every n <= M,
//   f_n^{1-k}(q) = -u^{1-n} G_n(q),
// where G_n = [T^n] (q^{-1}-1) Log sum_n q^{((2-k)n^2+kn)/2} (-1)^{kn}
// T^n/(q;q)_n. Both sides are computed through independent pipelines.
// Throws MismatchAt (with both sides attached) on the first failing n.
HlrvReport hlrv_special_check(int k, int max_degree);

}  // namespace ovq
