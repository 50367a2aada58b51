#include "lattica/schur.hpp"

#include <functional>

namespace lattica {

namespace detail {

ZPoly hk_uncached(int k, int n) {
    if (k < 0) return ZPoly(n);
    if (k == 0) return ZPoly::constant(n, BigInt(1));
    if (n == 0) return ZPoly(0);
    // h_k(x_1..x_n) = h_k(x_1..x_{n-1}) + x_n h_{k-1}(x_1..x_n)
    ZPoly a = complete_h(k, n - 1).map_vars(n, [&] {
        std::vector<int> w;
        for (int i = 0; i < n - 1; ++i) w.push_back(i);
        return w;
    }());
    return a + complete_h(k - 1, n) * ZPoly::variable(n, n - 1);
}

ZPoly ek_uncached(int k, int n) {
    if (k < 0 || k > n) return ZPoly(n);
    if (k == 0) return ZPoly::constant(n, BigInt(1));
    ZPoly a = elementary_e(k, n - 1).map_vars(n, [&] {
        std::vector<int> w;
        for (int i = 0; i < n - 1; ++i) w.push_back(i);
        return w;
    }());
    ZPoly b = elementary_e(k - 1, n - 1).map_vars(n, [&] {
        std::vector<int> w;
        for (int i = 0; i < n - 1; ++i) w.push_back(i);
        return w;
    }());
    return a + b * ZPoly::variable(n, n - 1);
}

}  // namespace detail

const ZPoly& complete_h(int k, int n) {
    static std::map<std::pair<int, int>, ZPoly> cache;
    static std::mutex mu;
    return detail::sym_cache(k, n, cache, mu, detail::hk_uncached);
}

const ZPoly& elementary_e(int k, int n) {
    static std::map<std::pair<int, int>, ZPoly> cache;
    static std::mutex mu;
    return detail::sym_cache(k, n, cache, mu, detail::ek_uncached);
}

ZPoly schur_ssyt(const SkewShape& shape, int n) {
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    ZPoly out(n);
    if (lam.rows() > 0 && n == 0) {
        // no letters: nonzero only for the empty skew shape
        bool empty_shape = true;
        for (int r = 0; r < lam.rows(); ++r)
            if (lam.part(r) > mu.part(r)) empty_shape = false;
        return empty_shape ? ZPoly::constant(0, BigInt(1)) : ZPoly(0);
    }
    int rows = lam.rows();
    if (rows == 0) return ZPoly::constant(n, BigInt(1));
    // row-filling backtracking, column-strict against the previous row
    std::vector<std::vector<int>> fill(static_cast<size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<size_t>(r)].assign(static_cast<size_t>(lam.part(r)), 0);
    Mono weight = Mono::unit(n);
    std::function<void(int, int)> rec = [&](int r, int c) {
        if (r == rows) {
            out += ZPoly::monomial(n, weight, BigInt(1));
            return;
        }
        if (c >= lam.part(r)) {
            rec(r + 1, mu.part(r + 1));
            return;
        }
        int lo = 1;
        if (c > mu.part(r) && c > 0) lo = std::max(lo, fill[static_cast<size_t>(r)][static_cast<size_t>(c - 1)]);
        if (r > 0 && c < lam.part(r - 1) && c >= mu.part(r - 1))
            lo = std::max(lo, fill[static_cast<size_t>(r - 1)][static_cast<size_t>(c)] + 1);
        for (int v = lo; v <= n; ++v) {
            fill[static_cast<size_t>(r)][static_cast<size_t>(c)] = v;
            weight.set(v - 1, weight.get(v - 1) + 1);
            rec(r, c + 1);
            weight.set(v - 1, weight.get(v - 1) - 1);
        }
    };
    rec(0, mu.part(0));
    return out;
}

ZPoly schur_jacobi_trudi(const SkewShape& shape, int n) {
    const Partition& lam = shape.outer;
    const Partition& mu = shape.inner;
    int rows = lam.rows();
    if (rows == 0) return ZPoly::constant(n, BigInt(1));
    ExactMatrix<ZPoly> m(rows, rows, ZPoly(n));
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < rows; ++q)
            m.at(p, q) = complete_h(lam.part(q) - mu.part(p) - q + p, n);
    return m.det();
}

ZPoly schur_dual_jt(const SkewShape& shape, int n) {
    Partition lc = shape.outer.conjugate();
    Partition mc = shape.inner.conjugate();
    int rows = lc.rows();
    if (rows == 0) return ZPoly::constant(n, BigInt(1));
    ExactMatrix<ZPoly> m(rows, rows, ZPoly(n));
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < rows; ++q)
            m.at(p, q) = elementary_e(lc.part(q) - mc.part(p) - q + p, n);
    return m.det();
}

ZPoly schur_weyl(const Partition& lambda, int n) {
    if (lambda.rows() > n) throw ring_error("schur_weyl: partition has more rows than variables");
    ExactMatrix<ZPoly> m(n, n, ZPoly(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            m.at(i, j) = ZPoly::monomial(n, Mono::var(n, i, lambda.part(j) + n - 1 - j), BigInt(1));
    ZPoly num = m.det();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (num.is_zero_poly()) return num;
            num = exact_div(num, ZPoly::variable(n, i) - ZPoly::variable(n, j));
        }
    return num;
}

QPoly schur_powersum(const Partition& lambda, int order) {
    int d = lambda.size();
    if (order < d) throw ring_error("schur_powersum: order must be at least |lambda|");
    // h_k[t] from exp(sum_q t_q z^q): variables are t_1..t_order, and we track
    // the z-expansion as a vector of QPoly coefficients up to z^d.
    int vars = order;
    std::vector<QPoly> expo(static_cast<size_t>(d) + 1, QPoly(vars));
    expo[0] = QPoly::constant(vars, Rational(1));
    // multiply exp(t_q z^q) for q = 1..d (higher q cannot reach z^d)
    for (int q = 1; q <= d; ++q) {
        std::vector<QPoly> next(static_cast<size_t>(d) + 1, QPoly(vars));
        // exp(t_q z^q) = sum_m t_q^m z^{qm} / m!
        for (int m = 0; q * m <= d; ++m) {
            Rational inv_fact(1);
            for (int j = 2; j <= m; ++j) inv_fact /= j;
            QPoly tm = pow(QPoly::variable(vars, q - 1), m).scale(inv_fact);
            for (int z = 0; z + q * m <= d; ++z)
                next[static_cast<size_t>(z + q * m)] += expo[static_cast<size_t>(z)] * tm;
        }
        expo = std::move(next);
    }
    auto hk = [&](int k) -> QPoly {
        if (k < 0) return QPoly(vars);
        if (k > d) throw ring_error("schur_powersum: internal window too small");
        return expo[static_cast<size_t>(k)];
    };
    int rows = lambda.rows();
    if (rows == 0) return QPoly::constant(vars, Rational(1));
    ExactMatrix<QPoly> m(rows, rows, QPoly(vars));
    for (int p = 0; p < rows; ++p)
        for (int q = 0; q < rows; ++q)
            m.at(p, q) = hk(lambda.part(q) - q + p);
    return m.det();
}

BigInt schur_all_ones(const Partition& lambda, int n) {
    if (lambda.rows() > n) return BigInt(0);
    Rational r(1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            r *= make_rational(BigInt(lambda.part(i) - i - lambda.part(j) + j), BigInt(j - i));
    r.canonicalize();
    if (r.get_den() != 1) throw ring_error("schur_all_ones: non-integer product");
    return r.get_num();
}

bool cauchy_check(int n, int m, int degree) {
    int vars = n + m;
    std::vector<int> caps(static_cast<size_t>(vars), 2 * degree);
    // left side: sum over |lambda| <= degree of s_lambda(x) s_lambda(y)
    ZPoly lhs(vars);
    std::vector<int> to_x, to_y;
    for (int i = 0; i < n; ++i) to_x.push_back(i);
    for (int j = 0; j < m; ++j) to_y.push_back(n + j);
    for (const Partition& lam : partitions_up_to(degree)) {
        if (lam.rows() > std::min(n, m)) continue;
        ZPoly sx = schur_ssyt(lam, n).map_vars(vars, to_x);
        ZPoly sy = schur_ssyt(lam, m).map_vars(vars, to_y);
        lhs += sx * sy;
    }
    // right side: prod_{i,j} (1 + x_i y_j + (x_i y_j)^2 + ...) truncated at
    // combined total degree 2*degree
    ZPoly rhs = ZPoly::constant(vars, BigInt(1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < m; ++j) {
            ZPoly geo(vars);
            for (int k = 0; 2 * k <= 2 * degree; ++k) {
                Mono mo = Mono::unit(vars);
                mo.set(i, k);
                mo.set(n + j, k);
                geo += ZPoly::monomial(vars, mo, BigInt(1));
            }
            rhs = rhs * geo;
        }
    auto truncate = [&](const ZPoly& p) {
        ZPoly out(vars);
        for (const auto& t : p.terms())
            if (t.first.deg <= 2 * degree) out += ZPoly::monomial(vars, t.first, t.second);
        return out;
    };
    return truncate(lhs) == truncate(rhs);
}

}  // namespace lattica
