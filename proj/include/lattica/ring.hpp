#ifndef LATTICA_RING_HPP
#define LATTICA_RING_HPP

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace lattica {

// Arbitrary-precision integers and rationals are GMP's; everything else in
// the kernel is built on top of them.
using BigInt = mpz_class;
using Rational = mpq_class;

struct ring_error : std::runtime_error {
    explicit ring_error(const std::string& msg) : std::runtime_error(msg) {}
};

// thrown when an enumeration bound would be exceeded
struct size_guard_error : ring_error {
    explicit size_guard_error(const std::string& m) : ring_error(m) {}
};

inline bool is_zero(const BigInt& a) { return sgn(a) == 0; }
inline bool is_zero(const Rational& a) { return sgn(a) == 0; }
inline bool is_zero(long a) { return a == 0; }

template <class R>
struct RingOps {
    static R zero() { return R(0); }
    static R one() { return R(1); }
};

template <class R> R ring_zero() { return RingOps<R>::zero(); }
template <class R> R ring_one() { return RingOps<R>::one(); }

// Exact division; throws if the quotient does not stay in the ring.
inline BigInt exact_div(const BigInt& a, const BigInt& b) {
    if (is_zero(b)) throw ring_error("exact_div: division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (!is_zero(r)) throw ring_error("exact_div: inexact integer division");
    return q;
}

inline Rational exact_div(const Rational& a, const Rational& b) {
    if (is_zero(b)) throw ring_error("exact_div: division by zero");
    Rational q = a / b;
    q.canonicalize();
    return q;
}

// mpq_class(num, den) does not canonicalize on its own
inline Rational make_rational(const BigInt& num, const BigInt& den) {
    Rational r(num, den);
    r.canonicalize();
    return r;
}
inline Rational make_rational(long num, long den) { return make_rational(BigInt(num), BigInt(den)); }

inline std::string to_string(const BigInt& a) { return a.get_str(); }

// Canonical rendering: "p/q" with positive denominator, "p" when q == 1.
inline std::string to_string(const Rational& a) {
    Rational c = a;
    c.canonicalize();
    if (c.get_den() == 1) return c.get_num().get_str();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

inline BigInt big_factorial(unsigned long n) {
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline BigInt big_binomial(long n, long k) {
    if (k < 0 || k > n) return BigInt(0);
    BigInt r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace lattica

#endif
