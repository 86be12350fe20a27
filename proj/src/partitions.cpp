#include "ovq/partitions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace ovq {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

Partition Partition::from_string(const std::string& csv) {
    std::vector<int> parts;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        parts.push_back(std::stoi(tok));
    }
    std::sort(parts.rbegin(), parts.rend());
    return Partition(std::move(parts));
}

int Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const {
    std::vector<int> t;
    if (!parts_.empty()) {
        t.resize(static_cast<std::size_t>(parts_[0]));
        for (int j = 0; j < parts_[0]; ++j) {
            int count = 0;
            for (int p : parts_)
                if (p > j) ++count;
            t[static_cast<std::size_t>(j)] = count;
        }
    }
    return Partition(std::move(t));
}

std::vector<int> Partition::multiplicities() const {
    std::vector<int> m(static_cast<std::size_t>(weight()) + 1, 0);
    for (int p : parts_) ++m[static_cast<std::size_t>(p)];
    return m;
}

long long Partition::kappa() const {
    long long k = 0;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        long long li = parts_[i];
        k += li * (li - 2 * static_cast<long long>(i + 1) + 1);
    }
    return k;
}

BigInt Partition::z() const {
    BigInt r = 1;
    auto m = multiplicities();
    for (std::size_t v = 1; v < m.size(); ++v)
        for (int j = 1; j <= m[v]; ++j) r *= j;
    for (int p : parts_) r *= p;
    return r;
}

std::vector<int> Partition::hooks() const {
    std::vector<int> out;
    Partition t = conjugate();
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (int j = 1; j <= parts_[i]; ++j)
            out.push_back(parts_[i] + t.parts()[static_cast<std::size_t>(j - 1)] -
                          static_cast<int>(i + 1) - j + 1);
    std::sort(out.rbegin(), out.rend());
    return out;
}

std::vector<int> Partition::contents() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < parts_.size(); ++i)
        for (int j = 1; j <= parts_[i]; ++j) out.push_back(j - static_cast<int>(i + 1));
    std::sort(out.begin(), out.end());
    return out;
}

Partition Partition::stretched(int d) const {
    std::vector<int> p = parts_;
    for (int& x : p) x *= d;
    return Partition(std::move(p));
}

Partition Partition::merged(const Partition& o) const {
    std::vector<int> p;
    p.reserve(parts_.size() + o.parts_.size());
    std::merge(parts_.begin(), parts_.end(), o.parts_.begin(), o.parts_.end(),
               std::back_inserter(p), std::greater<int>());
    return Partition(std::move(p));
}

bool Partition::operator<(const Partition& o) const {
    int wa = weight(), wb = o.weight();
    if (wa != wb) return wa < wb;
    return std::lexicographical_compare(o.parts_.begin(), o.parts_.end(),
                                        parts_.begin(), parts_.end());
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

PartitionStats stats(const Partition& lambda) {
    PartitionStats st;
    st.hooks = lambda.hooks();
    st.contents = lambda.contents();
    st.kappa = lambda.kappa();
    st.z = lambda.z();
    return st;
}

namespace {

void enumerate_rec(int remaining, int max_part, std::vector<int>& acc,
                   std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(acc);
        return;
    }
    for (int p = std::min(max_part, remaining); p >= 1; --p) {
        acc.push_back(p);
        enumerate_rec(remaining - p, p, acc, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<Partition> enumerate_partitions(int n) {
    if (n < 0) throw std::invalid_argument("enumerate_partitions: n must be >= 0");
    std::vector<Partition> out;
    std::vector<int> acc;
    enumerate_rec(n, n, acc, out);
    return out;
}

namespace {

// chi on beta-number sets. B is strictly decreasing; removing a border strip
// of size r replaces some b in B by b-r (if absent), with sign (-1)^(number
// of beta numbers strictly between b-r and b).
long long mn_beta(std::vector<int> beta, const std::vector<int>& mu, std::size_t pos,
                  std::map<std::pair<std::vector<int>, std::size_t>, long long>& memo) {
    if (pos == mu.size()) return 1;  // beta is the staircase of the empty partition
    auto key = std::make_pair(beta, pos);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    const int r = mu[pos];
    long long total = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        int b = beta[i];
        int nb = b - r;
        if (nb < 0) continue;
        if (std::find(beta.begin(), beta.end(), nb) != beta.end()) continue;
        int between = 0;
        for (int x : beta)
            if (x > nb && x < b) ++between;
        std::vector<int> next = beta;
        next[i] = nb;
        std::sort(next.rbegin(), next.rend());
        long long sub = mn_beta(std::move(next), mu, pos + 1, memo);
        total += (between % 2 == 0) ? sub : -sub;
    }
    memo.emplace(std::move(key), total);
    return total;
}

std::mutex mn_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, long long> mn_cache;

}  // namespace

long long mn_character(const Partition& lambda, const Partition& mu) {
    if (lambda.weight() != mu.weight()) return 0;
    if (lambda.weight() == 0) return 1;
    auto cache_key = std::make_pair(lambda.parts(), mu.parts());
    {
        std::lock_guard<std::mutex> lock(mn_mutex);
        auto it = mn_cache.find(cache_key);
        if (it != mn_cache.end()) return it->second;
    }
    const int len = lambda.length();
    std::vector<int> beta(static_cast<std::size_t>(len));
    for (int i = 0; i < len; ++i)
        beta[static_cast<std::size_t>(i)] = lambda.parts()[static_cast<std::size_t>(i)] + len - 1 - i;
    std::map<std::pair<std::vector<int>, std::size_t>, long long> memo;
    long long value = mn_beta(std::move(beta), mu.parts(), 0, memo);
    std::lock_guard<std::mutex> lock(mn_mutex);
    mn_cache.emplace(std::move(cache_key), value);
    return value;
}

int mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius: n must be >= 1");
    int primes = 0;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            n /= p;
            if (n % p == 0) return 0;
            ++primes;
        }
    }
    if (n > 1) ++primes;
    return primes % 2 == 0 ? 1 : -1;
}

BigInt binomial(long long a, long long b) {
    if (b < 0) return 0;
    BigInt r = 1;
    for (long long i = 0; i < b; ++i) {
        r *= to_bigint(a - i);
        r = int_divexact(r, to_bigint(i + 1));  // exact: r holds C(a, i+1)(i+1) here
    }
    return r;
}

}  // namespace ovq
