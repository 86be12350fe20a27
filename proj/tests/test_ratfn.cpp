#include <doctest.h>

#include "oracles.hpp"
#include "ovq/errors.hpp"
#include "ovq/json_io.hpp"
#include "ovq/ratfn.hpp"

using namespace ovq;

namespace {
IntLaurent mono(long c, int e) { return IntLaurent::monomial(BigInt(c), e); }
}

TEST_CASE("ratfn arithmetic examples") {
    // 1/(1-q) + 1/(1-q) = 2/(1-q)
    RationalFn inv(IntLaurent(1), IntLaurent(1) - mono(1, 2));
    RationalFn two_inv(IntLaurent(2), IntLaurent(1) - mono(1, 2));
    CHECK(ratfn_add(inv, inv) == two_inv);

    // (u - u^{-1}) * u/(1-u^2) = -1, the degree-one cancellation
    RationalFn a(mono(1, 1) - mono(1, -1));
    RationalFn b(mono(1, 1), IntLaurent(1) - mono(1, 2));
    CHECK(ratfn_mul(a, b) == RationalFn(IntLaurent(-1)));

    CHECK_THROWS_AS(ratfn_div(RationalFn(IntLaurent(1)), RationalFn()), DivisionByZero);

    RationalFn q(mono(1, 2));
    CHECK(ratfn_sub(q, q).is_zero());
    CHECK(ratfn_div(q, q).is_one());
}

TEST_CASE("canonical form invariants") {
    // denominator gets positive leading coefficient, unit constant term,
    // monomial content moved into the numerator
    RationalFn f(mono(1, 0), mono(-1, 3) + mono(1, 5));  // 1/(u^5 - u^3)
    CHECK(f.den().min_exp() == 0);
    CHECK(f.den().coeff(0) != 0);
    CHECK(f.den().leading() > 0);
    CHECK(f.num() == mono(1, -3));
    CHECK(f.den() == mono(1, 2) - IntLaurent(1));

    // canonicalization is idempotent
    RationalFn g(f.num(), f.den());
    CHECK(g == f);
}

TEST_CASE("equality of canonical forms matches cross multiplication") {
    oracles::Rng rng(01234);
    for (int it = 0; it < 200; ++it) {
        RationalFn a = oracles::random_ratfn(rng);
        RationalFn b = oracles::random_ratfn(rng);
        bool eq_canonical = a == b;
        bool eq_cross = a.num() * b.den() == b.num() * a.den();
        CHECK(eq_canonical == eq_cross);
        // a/b == c/d when built from a common value
        RationalFn scale = oracles::random_ratfn(rng);
        if (!scale.is_zero()) {
            RationalFn left = a * scale / scale;
            CHECK(left == a);
        }
    }
}

TEST_CASE("ring laws on randomized triples") {
    oracles::Rng rng(56789);
    for (int it = 0; it < 200; ++it) {
        RationalFn a = oracles::random_ratfn(rng);
        RationalFn b = oracles::random_ratfn(rng);
        RationalFn c = oracles::random_ratfn(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a - a).is_zero());
        CHECK(a * RationalFn(IntLaurent(1)) == a);
    }
}

TEST_CASE("adams substitution") {
    // u/(1-u^2) -> u^2/(1-u^4)
    RationalFn f(mono(1, 1), IntLaurent(1) - mono(1, 2));
    RationalFn f2(mono(1, 2), IntLaurent(1) - mono(1, 4));
    CHECK(adams_subst(f, 2) == f2);
    CHECK(adams_subst(f, 1) == f);

    oracles::Rng rng(43210);
    for (int it = 0; it < 100; ++it) {
        RationalFn a = oracles::random_ratfn(rng);
        RationalFn b = oracles::random_ratfn(rng);
        // Psi_d is a ring homomorphism and Psi_d Psi_e = Psi_de
        CHECK(adams_subst(a * b, 3) == adams_subst(a, 3) * adams_subst(b, 3));
        CHECK(adams_subst(a + b, 2) == adams_subst(a, 2) + adams_subst(b, 2));
        CHECK(adams_subst(adams_subst(a, 2), 3) == adams_subst(a, 6));
        // u -> u^{-1} is an involution
        CHECK(a.inverted_u().inverted_u() == a);
    }
}

TEST_CASE("to_laurent is the integrality gate") {
    // (u^2-1)/(1-u^2) = -1
    RationalFn f(mono(1, 2) - IntLaurent(1), IntLaurent(1) - mono(1, 2));
    CHECK(to_laurent(f) == IntLaurent(-1));

    RationalFn g(IntLaurent(1), IntLaurent(1) - mono(1, 1));
    CHECK_THROWS_AS(to_laurent(g), NotLaurent);
    CHECK(!g.is_laurent());

    RationalFn h(mono(1, 1) + IntLaurent(3));
    CHECK(to_laurent(h) == mono(1, 1) + IntLaurent(3));

    oracles::Rng rng(777);
    for (int it = 0; it < 100; ++it) {
        RationalFn a = oracles::random_ratfn(rng);
        if (a.is_laurent()) CHECK(RationalFn(to_laurent(a)) == a);
        // f * den = num always becomes Laurent
        RationalFn cleared = a * RationalFn(a.den());
        CHECK(cleared.is_laurent());
        CHECK(to_laurent(cleared) == a.num());
    }
}

TEST_CASE("eval at one") {
    CHECK(eval_at_one(mono(1, 1) + mono(1, -1)) == 2);
    CHECK(eval_at_one(mono(1, 1)) == 1);  // the value of f_2 at framing 1
    CHECK(eval_at_one(IntLaurent()) == 0);
}

TEST_CASE("u expansion follows the ascending geometric convention") {
    // 1/(1-q) = 1 + q + q^2 + ...
    RationalFn f(IntLaurent(1), IntLaurent(1) - mono(1, 2));
    auto s = f.u_expansion(8);
    CHECK(s.at(0) == 1);
    CHECK(s.at(2) == 1);
    CHECK(s.at(8) == 1);
    CHECK(s.count(1) == 0);

    // u^{-3}/(1-u) starts at the true lowest exponent
    RationalFn g(mono(1, -3), IntLaurent(1) - mono(1, 1));
    auto t = g.u_expansion(2);
    CHECK(t.begin()->first == -3);
    for (int e = -3; e <= 2; ++e) CHECK(t.at(e) == 1);

    oracles::Rng rng(888);
    for (int it = 0; it < 60; ++it) {
        // expansion of num/den re-multiplied by den gives back num on a window
        RationalFn a = oracles::random_ratfn(rng);
        if (a.is_zero()) continue;
        auto exp_a = a.u_expansion(12);
        // reconstruct: sum_{e} c_e u^e * den has to agree with num up to u^6
        std::map<int, BigRat> prod;
        for (const auto& [e, c] : exp_a)
            a.den().for_each_term([&](int ed, const BigInt& cd) { prod[e + ed] += c * BigRat(cd); });
        for (const auto& [e, c] : prod) {
            if (e > 6) continue;
            CHECK(c == BigRat(a.num().coeff(e)));
        }
    }
}

TEST_CASE("arithmetic results stay in canonical form") {
    oracles::Rng rng(24601);
    auto check_canonical = [](const RationalFn& f) {
        CHECK(!f.den().is_zero());
        CHECK(f.den().min_exp() == 0);
        CHECK(f.den().coeff(0) != 0);
        CHECK(f.den().leading() > 0);
        if (f.is_zero()) {
            CHECK(f.den().is_one());
        } else {
            CHECK(laurent_gcd(f.num(), f.den()).max_exp() == 0);
            CHECK(laurent_gcd(f.num(), f.den()).coeff(0) == 1);
        }
    };
    for (int it = 0; it < 150; ++it) {
        RationalFn a = oracles::random_ratfn(rng);
        RationalFn b = oracles::random_ratfn(rng);
        check_canonical(a);
        check_canonical(a + b);
        check_canonical(a * b);
        check_canonical(-a);
        check_canonical(a.adams(2));
        check_canonical(a.inverted_u());
        check_canonical(a.scaled(BigRat(-6, 4)));
        if (!b.is_zero()) check_canonical(a / b);
    }
}

TEST_CASE("json round trip of laurent and rational values") {
    oracles::Rng rng(999);
    for (int it = 0; it < 50; ++it) {
        IntLaurent p = oracles::random_laurent(rng);
        CHECK(laurent_from_json(laurent_to_json(p)) == p);
        RationalFn f = oracles::random_ratfn(rng);
        CHECK(ratfn_from_json(ratfn_to_json(f)) == f);
    }
    // exponents serialize ascending
    Json j = laurent_to_json(mono(2, 3) + mono(5, -1));
    CHECK(j[0][0].get<int>() == -1);
    CHECK(j[1][0].get<int>() == 3);
    CHECK(j[1][1].get<std::string>() == "2");
}
