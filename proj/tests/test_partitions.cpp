#include <doctest.h>

#include <algorithm>
#include <set>
#include <thread>

#include "oracles.hpp"
#include "ovq/partitions.hpp"

using namespace ovq;

TEST_CASE("partition enumeration: counts and reverse-lexicographic order") {
    CHECK(enumerate_partitions(0).size() == 1);
    CHECK(enumerate_partitions(0)[0].empty());
    CHECK(enumerate_partitions(4).size() == 5);
    CHECK(enumerate_partitions(10).size() == 42);
    for (int n = 0; n <= 14; ++n)
        CHECK(static_cast<long long>(enumerate_partitions(n).size()) ==
              oracles::partition_count(n));

    auto p4 = enumerate_partitions(4);
    CHECK(p4.front().parts() == std::vector<int>{4});
    CHECK(p4[1].parts() == std::vector<int>{3, 1});
    CHECK(p4[2].parts() == std::vector<int>{2, 2});
    CHECK(p4.back().parts() == std::vector<int>{1, 1, 1, 1});
    CHECK(std::is_sorted(p4.begin(), p4.end()));
}

TEST_CASE("partition validation and parsing") {
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, 0}), std::invalid_argument);
    CHECK(Partition::from_string("1,2,1").parts() == std::vector<int>{2, 1, 1});
    CHECK(Partition::from_string("").empty());
}

TEST_CASE("partition statistics") {
    Partition lam({2, 1});
    PartitionStats st = stats(lam);
    CHECK(st.hooks == std::vector<int>{3, 1, 1});
    CHECK(st.contents == std::vector<int>{-1, 0, 1});
    CHECK(st.kappa == 0);  // self-conjugate
    CHECK(st.z == 2);      // |Aut| = 1, product of parts = 2

    for (int n = 1; n <= 7; ++n) {
        Partition row({n});
        CHECK(row.kappa() == static_cast<long long>(n) * (n - 1));
    }
    CHECK(Partition({1, 1, 1}).z() == 6);  // Aut = S_3, parts product 1
    CHECK(Partition({2, 2, 1}).z() == (2 * 1) * (2 * 2 * 1));

    // kappa is antisymmetric under conjugation; hooks are conjugation invariant;
    // cells of content c match cells of the conjugate with content -c
    for (int n = 0; n <= 8; ++n)
        for (const Partition& lambda : enumerate_partitions(n)) {
            Partition t = lambda.conjugate();
            CHECK(t.conjugate() == lambda);
            CHECK(t.kappa() == -lambda.kappa());
            CHECK(t.hooks() == lambda.hooks());
            auto c1 = lambda.contents();
            auto c2 = t.contents();
            for (int& x : c2) x = -x;
            std::sort(c2.begin(), c2.end());
            CHECK(c1 == c2);
            CHECK(static_cast<int>(lambda.hooks().size()) == lambda.weight());
        }
}

TEST_CASE("characters: trivial, sign, standard") {
    for (int n = 1; n <= 7; ++n) {
        Partition triv({n});
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        Partition sgn(ones);
        for (const Partition& mu : enumerate_partitions(n)) {
            CHECK(mn_character(triv, mu) == 1);
            long long expect = ((n - mu.length()) % 2 == 0) ? 1 : -1;
            CHECK(mn_character(sgn, mu) == expect);
        }
    }
    CHECK(mn_character(Partition({2, 1}), Partition({1, 1, 1})) == 2);
    CHECK(mn_character(Partition({2, 1}), Partition({3})) == -1);
    CHECK(mn_character(Partition({2}), Partition({1})) == 0);  // weight mismatch
}

TEST_CASE("character orthogonality and column sums for n <= 8") {
    for (int n = 1; n <= 8; ++n) {
        auto parts = enumerate_partitions(n);
        for (const Partition& mu : parts) {
            for (const Partition& nu : parts) {
                BigInt s = 0;
                for (const Partition& lambda : parts)
                    s += to_bigint(mn_character(lambda, mu)) *
                         to_bigint(mn_character(lambda, nu));
                // sum_lambda chi(mu) chi(nu) / z_mu = delta_{mu nu}
                if (mu == nu)
                    CHECK(s == mu.z());
                else
                    CHECK(s == 0);
            }
        }
        // sum of squared dimensions is n!
        BigInt nfact = 1;
        for (int i = 2; i <= n; ++i) nfact *= i;
        std::vector<int> ones(static_cast<std::size_t>(n), 1);
        Partition id(ones);
        BigInt s = 0;
        for (const Partition& lambda : parts) {
            long long d = mn_character(lambda, id);
            CHECK(d > 0);
            s += to_bigint(d) * to_bigint(d);
        }
        CHECK(s == nfact);
        // conjugacy class sizes n!/z_mu sum to n!
        BigInt cls = 0;
        for (const Partition& mu : parts) cls += nfact / mu.z();
        CHECK(cls == nfact);
    }
}

TEST_CASE("character cache is safe under concurrent use") {
    auto parts = enumerate_partitions(9);
    std::vector<std::thread> workers;
    std::vector<long long> sums(4, 0);
    for (int t = 0; t < 4; ++t)
        workers.emplace_back([&, t]() {
            long long s = 0;
            for (const Partition& lambda : parts)
                for (const Partition& mu : parts) s += mn_character(lambda, mu);
            sums[static_cast<std::size_t>(t)] = s;
        });
    for (auto& w : workers) w.join();
    for (int t = 1; t < 4; ++t) CHECK(sums[static_cast<std::size_t>(t)] == sums[0]);
}

TEST_CASE("moebius and binomial") {
    CHECK(mobius(1) == 1);
    CHECK(mobius(12) == 0);
    CHECK(mobius(30) == -1);
    CHECK(mobius(2 * 3 * 5 * 7) == 1);
    CHECK(mobius(49) == 0);

    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(2, 5) == 0);
    CHECK(binomial(7, 0) == 1);
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(-1, 3) == -1);
    CHECK(binomial(-3, 1) == -3);
    CHECK(binomial(-5, 3) == -35);
    CHECK(binomial(3, -1) == 0);
    // C(a,b) = C(a-1,b-1) + C(a-1,b) across signs
    for (long long a = -6; a <= 6; ++a)
        for (long long b = 1; b <= 6; ++b)
            CHECK(binomial(a, b) == binomial(a - 1, b - 1) + binomial(a - 1, b));
}
