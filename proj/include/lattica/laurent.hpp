#ifndef LATTICA_LAURENT_HPP
#define LATTICA_LAURENT_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "lattica/eisenstein.hpp"
#include "lattica/ring.hpp"

namespace lattica {

// Laurent polynomials in the single variable q with BigInt coefficients.
// Terms are kept sorted by exponent, never with zero coefficients.
class LaurentQ {
  public:
    using Term = std::pair<int, BigInt>;

    LaurentQ() = default;
    LaurentQ(long c) {  // NOLINT: implicit on purpose
        if (c != 0) terms_.emplace_back(0, BigInt(c));
    }
    LaurentQ(BigInt c) {
        if (!lattica::is_zero(c)) terms_.emplace_back(0, std::move(c));
    }
    static LaurentQ q_power(int k, BigInt c = BigInt(1)) {
        LaurentQ r;
        if (!lattica::is_zero(c)) r.terms_.emplace_back(k, std::move(c));
        return r;
    }
    static LaurentQ q() { return q_power(1); }
    static LaurentQ q_inv() { return q_power(-1); }
    // tau = -q - 1/q, the loop fugacity in this parametrization
    static LaurentQ tau() {
        LaurentQ r;
        r.terms_.emplace_back(-1, BigInt(-1));
        r.terms_.emplace_back(1, BigInt(-1));
        return r;
    }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
    int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

    BigInt coeff(int k) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), k,
                                   [](const Term& t, int e) { return t.first < e; });
        if (it != terms_.end() && it->first == k) return it->second;
        return BigInt(0);
    }

    bool operator==(const LaurentQ& o) const { return terms_ == o.terms_; }
    bool operator!=(const LaurentQ& o) const { return !(*this == o); }

    LaurentQ operator-() const {
        LaurentQ r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    LaurentQ operator+(const LaurentQ& o) const {
        LaurentQ r;
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && a->first < b->first)) {
                r.terms_.push_back(*a++);
            } else if (a == terms_.end() || b->first < a->first) {
                r.terms_.push_back(*b++);
            } else {
                BigInt c = a->second + b->second;
                if (!lattica::is_zero(c)) r.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return r;
    }
    LaurentQ operator-(const LaurentQ& o) const { return *this + (-o); }

    LaurentQ operator*(const LaurentQ& o) const {
        if (is_zero() || o.is_zero()) return LaurentQ();
        int lo = min_exp() + o.min_exp();
        int hi = max_exp() + o.max_exp();
        std::vector<BigInt> acc(static_cast<size_t>(hi - lo + 1), BigInt(0));
        for (const auto& s : terms_)
            for (const auto& t : o.terms_) acc[static_cast<size_t>(s.first + t.first - lo)] += s.second * t.second;
        LaurentQ r;
        for (int k = lo; k <= hi; ++k)
            if (!lattica::is_zero(acc[static_cast<size_t>(k - lo)]))
                r.terms_.emplace_back(k, std::move(acc[static_cast<size_t>(k - lo)]));
        return r;
    }

    LaurentQ& operator+=(const LaurentQ& o) { *this = *this + o; return *this; }
    LaurentQ& operator-=(const LaurentQ& o) { *this = *this - o; return *this; }
    LaurentQ& operator*=(const LaurentQ& o) { *this = *this * o; return *this; }

    // bar involution q -> 1/q
    LaurentQ bar() const {
        LaurentQ r;
        r.terms_.reserve(terms_.size());
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) r.terms_.emplace_back(-it->first, it->second);
        return r;
    }

    // Evaluate at q = e, where e must be invertible when negative powers occur.
    Eisenstein eval(const Eisenstein& e, const Eisenstein& e_inv) const {
        Eisenstein r = RingOps<Eisenstein>::zero();
        for (const auto& t : terms_) {
            Eisenstein p = t.first >= 0 ? pow(e, t.first) : pow(e_inv, -t.first);
            r += Eisenstein(t.second) * p;
        }
        return r;
    }

    Rational eval(const Rational& v) const {
        Rational r(0);
        for (const auto& t : terms_) {
            if (t.first < 0 && lattica::is_zero(v)) throw ring_error("LaurentQ eval: q = 0 with negative power");
            Rational p(1);
            Rational base = t.first >= 0 ? v : Rational(1) / v;
            for (int k = 0; k < std::abs(t.first); ++k) p *= base;
            r += Rational(t.second) * p;
        }
        return r;
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
            else if (sgn(c) < 0) s += "-";
            BigInt ac = abs(c);
            if (e == 0) s += ac.get_str();
            else {
                if (ac != 1) s += ac.get_str() + "*";
                s += e == 1 ? "q" : "q^" + std::to_string(e);
            }
        }
        return s;
    }

  private:
    std::vector<Term> terms_;
};

inline bool is_zero(const LaurentQ& p) { return p.is_zero(); }

template <>
struct RingOps<LaurentQ> {
    static LaurentQ zero() { return LaurentQ(); }
    static LaurentQ one() { return LaurentQ(1); }
};

inline LaurentQ exact_div(const LaurentQ& a, const LaurentQ& b) {
    if (b.is_zero()) throw ring_error("LaurentQ exact_div: division by zero");
    if (a.is_zero()) return LaurentQ();
    // Long division from the top; an exact quotient has its lowest exponent
    // pinned at a.min - b.min, which bounds the loop.
    LaurentQ rem = a, quot;
    const int db = b.max_exp();
    const int qmin = a.min_exp() - b.min_exp();
    const BigInt& lb = b.terms().back().second;
    while (!rem.is_zero()) {
        int qe = rem.max_exp() - db;
        if (qe < qmin) throw ring_error("LaurentQ exact_div: inexact division");
        LaurentQ t = LaurentQ::q_power(qe, exact_div(rem.terms().back().second, lb));
        quot += t;
        rem -= b * t;
    }
    return quot;
}

inline LaurentQ pow(const LaurentQ& p, long k) {
    if (k < 0) throw ring_error("LaurentQ pow: negative exponent");
    LaurentQ r(1), base = p;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Coefficients of p as a polynomial in tau = -q - 1/q.  Succeeds exactly on
// bar-symmetric Laurent polynomials and throws otherwise.
inline std::vector<BigInt> rewrite_in_tau(const LaurentQ& p) {
    if (p != p.bar()) throw ring_error("rewrite_in_tau: not bar-symmetric");
    std::vector<BigInt> out;
    LaurentQ rem = p;
    LaurentQ t = LaurentQ::tau();
    while (!rem.is_zero()) {
        int d = rem.max_exp();
        if (d < 0 || rem.min_exp() != -d) throw ring_error("rewrite_in_tau: stray terms");
        BigInt c = rem.coeff(d);
        if (d % 2 != 0) c = -c;  // tau^d has leading coefficient (-1)^d q^d
        if (out.size() < static_cast<size_t>(d) + 1) out.resize(static_cast<size_t>(d) + 1, BigInt(0));
        out[static_cast<size_t>(d)] = c;
        rem -= pow(t, d) * LaurentQ(c);
        if (!rem.is_zero() && rem.max_exp() >= d) throw ring_error("rewrite_in_tau: no progress");
    }
    if (out.empty()) out.push_back(BigInt(0));
    return out;
}

inline std::string tau_poly_str(const std::vector<BigInt>& c) {
    std::string s;
    for (size_t k = 0; k < c.size(); ++k) {
        if (lattica::is_zero(c[k])) continue;
        if (!s.empty()) s += sgn(c[k]) < 0 ? " - " : " + ";
        else if (sgn(c[k]) < 0) s += "-";
        BigInt ac = abs(c[k]);
        if (k == 0) { s += ac.get_str(); continue; }
        if (ac != 1) s += ac.get_str() + "*";
        s += k == 1 ? "tau" : "tau^" + std::to_string(k);
    }
    return s.empty() ? "0" : s;
}

inline std::string to_string(const LaurentQ& p) { return p.str(); }

}  // namespace lattica

#endif
