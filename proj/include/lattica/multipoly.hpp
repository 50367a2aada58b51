#ifndef LATTICA_MULTIPOLY_HPP
#define LATTICA_MULTIPOLY_HPP

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstring>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "lattica/ring.hpp"

namespace lattica {

// Exponent vector with fixed small capacity.  Exponents may be negative
// (Laurent monomials); the graded-lex order compares total degree first,
// then exponents left to right.
struct Mono {
    static constexpr int kMaxVars = 24;

    int16_t deg = 0;
    int8_t arity = 0;
    std::array<int8_t, kMaxVars> e{};

    static Mono unit(int arity) {
        Mono m;
        m.arity = static_cast<int8_t>(arity);
        return m;
    }
    static Mono var(int arity, int i, int exp = 1) {
        Mono m = unit(arity);
        m.set(i, exp);
        return m;
    }

    int get(int i) const { return e[static_cast<size_t>(i)]; }
    void set(int i, int v) {
        if (v < -127 || v > 127) throw ring_error("Mono: exponent out of range");
        deg = static_cast<int16_t>(deg - e[static_cast<size_t>(i)] + v);
        e[static_cast<size_t>(i)] = static_cast<int8_t>(v);
    }

    Mono operator*(const Mono& o) const {
        Mono r = *this;
        for (int i = 0; i < arity; ++i) {
            int v = r.e[static_cast<size_t>(i)] + o.e[static_cast<size_t>(i)];
            if (v < -127 || v > 127) throw ring_error("Mono: exponent out of range");
            r.e[static_cast<size_t>(i)] = static_cast<int8_t>(v);
        }
        r.deg = static_cast<int16_t>(deg + o.deg);
        return r;
    }

    bool operator==(const Mono& o) const {
        return deg == o.deg && arity == o.arity &&
               std::memcmp(e.data(), o.e.data(), static_cast<size_t>(arity)) == 0;
    }
    bool operator!=(const Mono& o) const { return !(*this == o); }

    // graded lex, true if *this < o
    bool operator<(const Mono& o) const {
        if (deg != o.deg) return deg < o.deg;
        for (int i = 0; i < arity; ++i)
            if (e[static_cast<size_t>(i)] != o.e[static_cast<size_t>(i)])
                return e[static_cast<size_t>(i)] < o.e[static_cast<size_t>(i)];
        return false;
    }
};

struct MonoHash {
    size_t operator()(const Mono& m) const {
        uint64_t h = 1469598103934665603ull;
        auto mix = [&h](uint8_t b) {
            h ^= b;
            h *= 1099511628211ull;
        };
        mix(static_cast<uint8_t>(m.arity));
        for (int i = 0; i < m.arity; ++i) mix(static_cast<uint8_t>(m.e[static_cast<size_t>(i)]));
        return static_cast<size_t>(h);
    }
};

// Sparse multivariate (Laurent) polynomial over R, canonical form: terms
// sorted by graded-lex descending, no zero coefficients stored.
template <class R>
class MultiPoly {
  public:
    using Term = std::pair<Mono, R>;

    MultiPoly() : arity_(0) {}
    explicit MultiPoly(int arity) : arity_(check_arity(arity)) {}
    MultiPoly(int arity, R constant) : arity_(check_arity(arity)) {
        if (!is_zero(constant)) terms_.emplace_back(Mono::unit(arity_), std::move(constant));
    }

    static MultiPoly zero(int arity) { return MultiPoly(arity); }
    static MultiPoly constant(int arity, R c) { return MultiPoly(arity, std::move(c)); }
    static MultiPoly variable(int arity, int i, R c = ring_one<R>()) {
        return monomial(arity, Mono::var(arity, i), std::move(c));
    }
    static MultiPoly monomial(int arity, const Mono& m, R c) {
        MultiPoly p(arity);
        if (!is_zero(c)) p.terms_.emplace_back(m, std::move(c));
        return p;
    }

    int arity() const { return arity_; }
    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }
    size_t size() const { return terms_.size(); }

    bool operator==(const MultiPoly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    const Term& leading() const {
        if (terms_.empty()) throw ring_error("MultiPoly: leading term of zero");
        return terms_.front();
    }

    R coeff(const Mono& m) const {
        auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                                   [](const Term& t, const Mono& k) { return k < t.first; });
        if (it != terms_.end() && it->first == m) return it->second;
        return ring_zero<R>();
    }

    int total_degree() const {
        int d = 0;
        for (const auto& t : terms_) d = std::max(d, static_cast<int>(t.first.deg));
        return terms_.empty() ? 0 : d;
    }
    bool is_homogeneous(int d) const {
        for (const auto& t : terms_)
            if (t.first.deg != d) return false;
        return true;
    }
    // [min, max] exponent of variable i over all terms; {0,0} for the zero poly
    std::pair<int, int> var_degree_range(int i) const {
        if (terms_.empty()) return {0, 0};
        int lo = 127, hi = -127;
        for (const auto& t : terms_) {
            lo = std::min(lo, t.first.get(i));
            hi = std::max(hi, t.first.get(i));
        }
        return {lo, hi};
    }

    MultiPoly operator-() const {
        MultiPoly r = *this;
        for (auto& t : r.terms_) t.second = -t.second;
        return r;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        require_same_arity(o);
        MultiPoly r(arity_);
        r.terms_.reserve(terms_.size() + o.terms_.size());
        auto a = terms_.begin(), b = o.terms_.begin();
        while (a != terms_.end() || b != o.terms_.end()) {
            if (b == o.terms_.end() || (a != terms_.end() && b->first < a->first)) {
                r.terms_.push_back(*a++);
            } else if (a == terms_.end() || a->first < b->first) {
                r.terms_.push_back(*b++);
            } else {
                R c = a->second + b->second;
                if (!is_zero(c)) r.terms_.emplace_back(a->first, std::move(c));
                ++a;
                ++b;
            }
        }
        return r;
    }
    MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }

    MultiPoly operator*(const MultiPoly& o) const { return mul(o, nullptr); }

    // Product with per-variable exponent caps: any monomial exceeding a cap is
    // dropped.  This is the truncation used for series-windowed extraction.
    MultiPoly mul_capped(const MultiPoly& o, const std::vector<int>& caps) const {
        return mul(o, &caps);
    }

    MultiPoly& operator+=(const MultiPoly& o) { *this = *this + o; return *this; }
    MultiPoly& operator-=(const MultiPoly& o) { *this = *this - o; return *this; }
    MultiPoly& operator*=(const MultiPoly& o) { *this = *this * o; return *this; }

    MultiPoly scale(const R& c) const {
        MultiPoly r(arity_);
        if (is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            R v = t.second * c;
            if (!is_zero(v)) r.terms_.emplace_back(t.first, std::move(v));
        }
        return r;
    }

    MultiPoly mul_mono(const Mono& m, const R& c) const {
        MultiPoly r(arity_);
        if (is_zero(c)) return r;
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            R v = t.second * c;
            if (!is_zero(v)) r.terms_.emplace_back(t.first * m, std::move(v));
        }
        // multiplying by a fixed monomial preserves the order
        return r;
    }

    // exchange variables i and j
    MultiPoly swap_vars(int i, int j) const {
        MultiPoly r(arity_);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Mono m = t.first;
            int ei = m.get(i), ej = m.get(j);
            m.set(i, ej);
            m.set(j, ei);
            r.terms_.emplace_back(m, t.second);
        }
        r.normalize();
        return r;
    }

    bool symmetric_in(int i, int j) const { return *this == swap_vars(i, j); }

    // relabel variables through an injective map old -> new
    MultiPoly map_vars(int new_arity, const std::vector<int>& where) const {
        check_arity(new_arity);
        MultiPoly r(new_arity);
        r.terms_.reserve(terms_.size());
        for (const auto& t : terms_) {
            Mono m = Mono::unit(new_arity);
            for (int i = 0; i < arity_; ++i) {
                int ei = t.first.get(i);
                if (ei == 0) continue;
                if (i >= static_cast<int>(where.size()) || where[static_cast<size_t>(i)] < 0)
                    throw ring_error("map_vars: unmapped variable in support");
                int tgt = where[static_cast<size_t>(i)];
                if (m.get(tgt) != 0) throw ring_error("map_vars: non-injective map");
                m.set(tgt, ei);
            }
            r.terms_.emplace_back(m, t.second);
        }
        r.normalize();
        return r;
    }

    // substitute variable i by a polynomial; negative powers of i require the
    // binding to be an invertible single term
    MultiPoly substitute(int i, const MultiPoly& value) const {
        require_same_arity(value);
        int lo = 0, hi = 0;
        for (const auto& t : terms_) {
            lo = std::min(lo, t.first.get(i));
            hi = std::max(hi, t.first.get(i));
        }
        std::optional<MultiPoly> inv;
        if (lo < 0) inv = invert_term(value, i);
        // cache powers
        std::map<int, MultiPoly> powers;
        powers[0] = constant(arity_, ring_one<R>());
        auto get_power = [&](int k) -> const MultiPoly& {
            auto it = powers.find(k);
            if (it != powers.end()) return it->second;
            MultiPoly p = k > 0 ? powers.rbegin()->second : powers.begin()->second;
            int have = k > 0 ? powers.rbegin()->first : powers.begin()->first;
            while (have < k) { p = p * value; ++have; powers[have] = p; }
            while (have > k) { p = p * *inv; --have; powers[have] = p; }
            return powers[k];
        };
        MultiPoly r(arity_);
        for (const auto& t : terms_) {
            Mono m = t.first;
            int k = m.get(i);
            m.set(i, 0);
            r += get_power(k).mul_mono(m, t.second);
        }
        return r;
    }

    // coefficient of the requested monomial
    R constant_term(const std::vector<int>& exponents) const {
        Mono m = Mono::unit(arity_);
        for (size_t i = 0; i < exponents.size(); ++i) m.set(static_cast<int>(i), exponents[i]);
        return coeff(m);
    }

    template <class R2, class F>
    MultiPoly<R2> map_coeffs(F&& f) const {
        MultiPoly<R2> r(arity_);
        std::vector<typename MultiPoly<R2>::Term> ts;
        ts.reserve(terms_.size());
        for (const auto& t : terms_) {
            R2 c = f(t.second);
            if (!is_zero(c)) ts.emplace_back(t.first, std::move(c));
        }
        r.set_terms_sorted(std::move(ts));
        return r;
    }

    // for map_coeffs: terms already in order, zero-free
    void set_terms_sorted(std::vector<Term> ts) { terms_ = std::move(ts); }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(),
                  [](const Term& a, const Term& b) { return b.first < a.first; });
        std::vector<Term> out;
        out.reserve(terms_.size());
        for (auto& t : terms_) {
            if (!out.empty() && out.back().first == t.first) out.back().second += t.second;
            else out.push_back(std::move(t));
        }
        out.erase(std::remove_if(out.begin(), out.end(),
                                 [](const Term& t) { return is_zero(t.second); }),
                  out.end());
        terms_ = std::move(out);
    }

    std::string str(const std::vector<std::string>& names) const {
        if (terms_.empty()) return "0";
        std::string s;
        for (const auto& t : terms_) {
            if (!s.empty()) s += " + ";
            s += coeff_str(t.second);
            std::string vars;
            for (int i = 0; i < arity_; ++i) {
                int e = t.first.get(i);
                if (e == 0) continue;
                if (!vars.empty()) vars += "*";
                vars += names[static_cast<size_t>(i)];
                if (e != 1) vars += "^" + std::to_string(e);
            }
            if (!vars.empty()) s += " * " + vars;
        }
        return s;
    }

  private:
    int arity_;
    std::vector<Term> terms_;

    static int check_arity(int a) {
        if (a < 0 || a > Mono::kMaxVars) throw ring_error("MultiPoly: arity out of range");
        return a;
    }
    void require_same_arity(const MultiPoly& o) const {
        if (arity_ != o.arity_) throw ring_error("MultiPoly: arity mismatch");
    }

    static std::string coeff_str(const R& c) {
        using lattica::to_string;
        std::string cs = to_string(c);
        if (cs.find(' ') != std::string::npos) return "(" + cs + ")";
        return cs;
    }

    static MultiPoly invert_term(const MultiPoly& value, int var) {
        if (value.terms_.size() != 1)
            throw ring_error("substitute: negative power of variable " + std::to_string(var) +
                             " needs an invertible single-term binding");
        const auto& [m, c] = value.terms_.front();
        R cinv = exact_div(ring_one<R>(), c);
        Mono mi = Mono::unit(value.arity_);
        for (int i = 0; i < value.arity_; ++i) mi.set(i, -m.get(i));
        return monomial(value.arity_, mi, cinv);
    }

    MultiPoly mul(const MultiPoly& o, const std::vector<int>* caps) const {
        require_same_arity(o);
        MultiPoly r(arity_);
        if (terms_.empty() || o.terms_.empty()) return r;
        std::unordered_map<Mono, R, MonoHash> acc;
        acc.reserve(terms_.size() * 2);
        const MultiPoly* big = this;
        const MultiPoly* small = &o;
        if (big->terms_.size() < small->terms_.size()) std::swap(big, small);
        for (const auto& s : small->terms_) {
            for (const auto& t : big->terms_) {
                Mono m = s.first * t.first;
                if (caps) {
                    bool drop = false;
                    for (size_t i = 0; i < caps->size(); ++i)
                        if ((*caps)[i] >= 0 && m.get(static_cast<int>(i)) > (*caps)[i]) { drop = true; break; }
                    if (drop) continue;
                }
                R& slot = acc.try_emplace(m, ring_zero<R>()).first->second;
                slot += s.second * t.second;
            }
        }
        r.terms_.reserve(acc.size());
        for (auto& kv : acc)
            if (!is_zero(kv.second)) r.terms_.emplace_back(kv.first, std::move(kv.second));
        std::sort(r.terms_.begin(), r.terms_.end(),
                  [](const Term& a, const Term& b) { return b.first < a.first; });
        return r;
    }
};

template <class R>
bool is_zero(const MultiPoly<R>& p) { return p.is_zero_poly(); }

using ZPoly = MultiPoly<BigInt>;
using QPoly = MultiPoly<Rational>;

template <class R>
struct RingOps<MultiPoly<R>> {
    // arity-less zero/one are only usable where arity is reconstructed by ops
    static MultiPoly<R> zero() { return MultiPoly<R>(0); }
    static MultiPoly<R> one() { return MultiPoly<R>(0, ring_one<R>()); }
};

template <class R>
MultiPoly<R> pow(const MultiPoly<R>& p, long k) {
    if (k < 0) throw ring_error("MultiPoly pow: negative exponent");
    MultiPoly<R> r = MultiPoly<R>::constant(p.arity(), ring_one<R>());
    MultiPoly<R> base = p;
    unsigned long n = static_cast<unsigned long>(k);
    while (n) {
        if (n & 1) r *= base;
        base *= base;
        n >>= 1;
    }
    return r;
}

// Exact multivariate division; throws on inexact input.  Negative exponents
// are handled by shifting both operands into the polynomial range first.
template <class R>
MultiPoly<R> exact_div(const MultiPoly<R>& a, const MultiPoly<R>& b) {
    if (b.is_zero_poly()) throw ring_error("MultiPoly exact_div: division by zero");
    if (a.is_zero_poly()) return MultiPoly<R>(a.arity());
    if (a.arity() != b.arity()) throw ring_error("MultiPoly exact_div: arity mismatch");
    const int k = a.arity();
    Mono shift_a = Mono::unit(k), shift_b = Mono::unit(k);
    for (int i = 0; i < k; ++i) {
        auto [la, ha] = a.var_degree_range(i);
        auto [lb, hb] = b.var_degree_range(i);
        shift_a.set(i, la < 0 ? -la : 0);
        shift_b.set(i, lb < 0 ? -lb : 0);
    }
    MultiPoly<R> an = a.mul_mono(shift_a, ring_one<R>());
    MultiPoly<R> bn = b.mul_mono(shift_b, ring_one<R>());
    MultiPoly<R> rem = an, quot(k);
    const Mono& lmb = bn.leading().first;
    const R& lcb = bn.leading().second;
    while (!rem.is_zero_poly()) {
        const Mono& lm = rem.leading().first;
        Mono qm = Mono::unit(k);
        for (int i = 0; i < k; ++i) {
            int d = lm.get(i) - lmb.get(i);
            if (d < 0) throw ring_error("MultiPoly exact_div: inexact (monomial)");
            qm.set(i, d);
        }
        R qc = exact_div(rem.leading().second, lcb);
        MultiPoly<R> t = MultiPoly<R>::monomial(k, qm, qc);
        quot += t;
        rem -= bn * t;
        if (!rem.is_zero_poly() && !(rem.leading().first < lm))
            throw ring_error("MultiPoly exact_div: no progress");
    }
    // undo the shifts: quot * x^{shift_b - shift_a}
    Mono unshift = Mono::unit(k);
    for (int i = 0; i < k; ++i) unshift.set(i, shift_b.get(i) - shift_a.get(i));
    return quot.mul_mono(unshift, ring_one<R>());
}

// Evaluate p at the given images (one per variable); exponents must be
// nonnegative.
template <class R>
MultiPoly<R> compose(const MultiPoly<R>& p, const std::vector<MultiPoly<R>>& images) {
    if (static_cast<int>(images.size()) != p.arity()) throw ring_error("compose: image count mismatch");
    int out_arity = images.empty() ? 0 : images.front().arity();
    MultiPoly<R> out(out_arity);
    for (const auto& t : p.terms()) {
        MultiPoly<R> m = MultiPoly<R>::constant(out_arity, t.second);
        for (int i = 0; i < p.arity(); ++i) {
            int e = t.first.get(i);
            if (e < 0) throw ring_error("compose: negative exponent");
            if (e > 0) m *= pow(images[static_cast<size_t>(i)], e);
        }
        out += m;
    }
    return out;
}

// Divided difference on adjacent variables (0-based slot i, acting on vars
// i and i+1): (swap - id)/(x_{i+1} - x_i); the division is always exact.
template <class R>
MultiPoly<R> divided_difference(int i, const MultiPoly<R>& f) {
    if (i + 1 >= f.arity()) throw ring_error("divided_difference: needs at least i+2 variables");
    MultiPoly<R> num = f.swap_vars(i, i + 1) - f;
    if (num.is_zero_poly()) return MultiPoly<R>(f.arity());
    MultiPoly<R> den = MultiPoly<R>::variable(f.arity(), i + 1) - MultiPoly<R>::variable(f.arity(), i);
    return exact_div(num, den);
}

}  // namespace lattica

#endif
