#ifndef LATTICA_EISENSTEIN_HPP
#define LATTICA_EISENSTEIN_HPP

#include <string>

#include "lattica/ring.hpp"

namespace lattica {

// Z[w] with w^2 + w + 1 = 0.  Primitive sixth and third roots of unity live
// here, so specializations at those points stay exact.
struct Eisenstein {
    BigInt a;  // rational-integer part
    BigInt b;  // coefficient of w

    Eisenstein() : a(0), b(0) {}
    Eisenstein(long x) : a(x), b(0) {}  // NOLINT: implicit on purpose
    Eisenstein(BigInt x) : a(std::move(x)), b(0) {}
    Eisenstein(BigInt x, BigInt y) : a(std::move(x)), b(std::move(y)) {}

    static Eisenstein omega() { return Eisenstein(BigInt(0), BigInt(1)); }
    // e^{i pi/3} = 1 + w = -w^2
    static Eisenstein sixth_root() { return Eisenstein(BigInt(1), BigInt(1)); }

    bool operator==(const Eisenstein& o) const { return a == o.a && b == o.b; }
    bool operator!=(const Eisenstein& o) const { return !(*this == o); }

    Eisenstein operator-() const { return Eisenstein(-a, -b); }
    Eisenstein operator+(const Eisenstein& o) const { return Eisenstein(a + o.a, b + o.b); }
    Eisenstein operator-(const Eisenstein& o) const { return Eisenstein(a - o.a, b - o.b); }
    // (a + bw)(c + dw) = ac + (ad + bc)w + bd w^2, with w^2 = -1 - w.
    Eisenstein operator*(const Eisenstein& o) const {
        BigInt bd = b * o.b;
        return Eisenstein(a * o.a - bd, a * o.b + b * o.a - bd);
    }
    Eisenstein& operator+=(const Eisenstein& o) { a += o.a; b += o.b; return *this; }
    Eisenstein& operator-=(const Eisenstein& o) { a -= o.a; b -= o.b; return *this; }
    Eisenstein& operator*=(const Eisenstein& o) { *this = *this * o; return *this; }

    BigInt norm() const { return a * a - a * b + b * b; }
    Eisenstein conj() const { return Eisenstein(a - b, -b); }  // w -> w^2
};

inline bool is_zero(const Eisenstein& e) { return is_zero(e.a) && is_zero(e.b); }

template <>
struct RingOps<Eisenstein> {
    static Eisenstein zero() { return Eisenstein(); }
    static Eisenstein one() { return Eisenstein(BigInt(1), BigInt(0)); }
};

inline Eisenstein exact_div(const Eisenstein& x, const Eisenstein& y) {
    BigInt n = y.norm();
    if (is_zero(n)) throw ring_error("Eisenstein exact_div: division by zero");
    // x / y = x * conj(y) * (other conj factor) / norm(y); norm = y * y.conj_pair
    // where the complementary factor of norm(y) is (a - b) - b w computed via
    // complex conjugation w -> w^2.
    Eisenstein num = x * y.conj();
    return Eisenstein(exact_div(num.a, n), exact_div(num.b, n));
}

inline Eisenstein pow(const Eisenstein& e, long k) {
    if (k < 0) throw ring_error("Eisenstein pow: negative exponent");
    Eisenstein r = RingOps<Eisenstein>::one();
    Eisenstein base = e;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

inline std::string to_string(const Eisenstein& e) {
    if (is_zero(e.b)) return e.a.get_str();
    std::string s;
    if (!is_zero(e.a)) s = e.a.get_str() + (sgn(e.b) < 0 ? "" : "+");
    if (e.b == 1) s += "w";
    else if (e.b == -1) s += "-w";
    else s += e.b.get_str() + "*w";
    return s;
}

}  // namespace lattica

#endif
