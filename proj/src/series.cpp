#include "ovq/series.hpp"

namespace ovq {

XSeries specialize_single(const PSeries& f) {
    XSeries out(XPolicy{f.policy().cap});
    for (const auto& [mu, c] : f.terms()) out.add_coeff(mu.weight(), c);
    return out;
}

RationalFn schur_pairing(const PSeries& f, const Partition& mu) {
    if (mu.weight() > f.policy().cap)
        throw CapExceeded("schur_pairing: |mu| exceeds the series cap");
    RationalFn acc;
    for (const auto& [nu, c] : f.terms()) {
        if (nu.weight() != mu.weight()) continue;
        long long chi = mn_character(mu, nu);
        if (chi == 0) continue;
        acc += c.scaled(BigRat(to_bigint(chi)));
    }
    return acc;
}

bool pure_q(const RationalFn& f) {
    bool ok = true;
    auto check = [&ok](int e, const BigInt&) {
        if (e % 2 != 0) ok = false;
    };
    f.num().for_each_term(check);
    f.den().for_each_term(check);
    return ok;
}

void assert_pure_q(const TSeries& f) {
    for (const auto& [v, c] : f.terms()) {
        if (!pure_q(c)) {
            auto err = IntegralityViolation("T-series coefficient has a half-integer q power");
            std::string key;
            for (std::size_t i = 0; i < v.size(); ++i)
                key += (i ? "," : "") + std::to_string(v[i]);
            err.with("dimension_vector", key).with("coefficient", c.to_string());
            throw err;
        }
    }
}

}  // namespace ovq
