#ifndef LATTICA_TEST_UTIL_HPP
#define LATTICA_TEST_UTIL_HPP

#include <random>

#include "lattica/laurent.hpp"
#include "lattica/multipoly.hpp"

namespace lattica::testutil {

inline std::mt19937& rng() {
    static std::mt19937 gen(0xC0FFEEu);
    return gen;
}

inline int rand_int(int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    return d(rng());
}

inline LaurentQ rand_laurent(int max_abs_exp = 2, int max_coeff = 4) {
    LaurentQ p;
    int terms = rand_int(1, 3);
    for (int t = 0; t < terms; ++t) {
        int c = rand_int(-max_coeff, max_coeff);
        if (c == 0) c = 1;
        p += LaurentQ::q_power(rand_int(-max_abs_exp, max_abs_exp), BigInt(c));
    }
    return p;
}

template <class R, class G>
MultiPoly<R> rand_poly(int arity, int max_deg, int terms, G&& coeff_gen) {
    MultiPoly<R> p(arity);
    for (int t = 0; t < terms; ++t) {
        Mono m = Mono::unit(arity);
        int budget = rand_int(0, max_deg);
        for (int step = 0; step < budget; ++step) {
            int v = rand_int(0, arity - 1);
            m.set(v, m.get(v) + 1);
        }
        p += MultiPoly<R>::monomial(arity, m, coeff_gen());
    }
    return p;
}

inline MultiPoly<LaurentQ> rand_lpoly(int arity, int max_deg = 3, int terms = 4) {
    return rand_poly<LaurentQ>(arity, max_deg, terms, [] { return rand_laurent(); });
}

inline MultiPoly<BigInt> rand_zpoly(int arity, int max_deg = 3, int terms = 4) {
    return rand_poly<BigInt>(arity, max_deg, terms, [] {
        int c = rand_int(-5, 5);
        return BigInt(c == 0 ? 1 : c);
    });
}

}  // namespace lattica::testutil

#endif
