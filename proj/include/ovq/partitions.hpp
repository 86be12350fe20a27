#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ovq/bigint.hpp"

namespace ovq {

// Partition of a nonnegative integer: weakly decreasing positive parts,
// the empty list being the unique partition of 0.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);  // validates, throws std::invalid_argument

    static Partition from_string(const std::string& csv);  // "3,1,1"

    const std::vector<int>& parts() const { return parts_; }
    int weight() const;
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return i < length() ? parts_[static_cast<std::size_t>(i)] : 0; }

    Partition conjugate() const;
    // multiplicity vector indexed 1..weight (m[0] unused)
    std::vector<int> multiplicities() const;

    // kappa = sum_i lambda_i (lambda_i - 2i + 1); antisymmetric under conjugation.
    long long kappa() const;
    // z = |Aut(lambda)| * prod(lambda_i) = prod_i i^{m_i} m_i!, the centralizer
    // order of the cycle type in S_{|lambda|}.
    BigInt z() const;
    std::vector<int> hooks() const;     // hook lengths of all cells, sorted descending
    std::vector<int> contents() const;  // contents j - i of all cells, sorted ascending

    // scale every part by d (used by the Adams operators on p-variables)
    Partition stretched(int d) const;
    // multiset union of parts
    Partition merged(const Partition& o) const;

    bool operator==(const Partition& o) const { return parts_ == o.parts_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // Total order: by weight, then reverse-lexicographic within a weight,
    // matching the enumeration order.
    bool operator<(const Partition& o) const;

    std::string to_string() const;  // "(3,1,1)"

private:
    std::vector<int> parts_;
};

struct PartitionStats {
    std::vector<int> hooks;
    std::vector<int> contents;
    long long kappa = 0;
    BigInt z = 1;
};

PartitionStats stats(const Partition& lambda);

// All partitions of n in reverse-lexicographic order: (n) first, (1^n) last.
std::vector<Partition> enumerate_partitions(int n);

// Irreducible character of S_{|lambda|} at cycle type mu, by the
// Murnaghan-Nakayama rule on beta-numbers; 0 when |lambda| != |mu|.
// Memoized globally; safe under concurrent use.
long long mn_character(const Partition& lambda, const Partition& mu);

// Moebius function; n >= 1.
int mobius(long long n);

// Binomial coefficient for any integer a and b >= 0, as the falling product
// a(a-1)...(a-b+1)/b!; 0 for b < 0. Agrees with the usual convention
// C(a,b) = 0 for 0 <= a < b and extends to negative a.
BigInt binomial(long long a, long long b);

}  // namespace ovq
