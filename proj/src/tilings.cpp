#include "lattica/tilings.hpp"

#include <algorithm>

#include "lattica/matrix.hpp"
#include "lattica/schur.hpp"

namespace lattica {

BigInt macmahon(int a, int b, int c) {
    if (a < 0 || b < 0 || c < 0) throw ring_error("macmahon: negative box size");
    Rational r(1);
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) r *= make_rational(i + j + k - 1, i + j + k - 2);
    r.canonicalize();
    if (r.get_den() != 1) throw ring_error("macmahon: non-integer product");
    return r.get_num();
}

LaurentQ macmahon_q(int a, int b, int c) {
    // collect exponent multiplicities of (1-q^m) upstairs and downstairs
    std::map<int, int> mult;
    for (int i = 1; i <= a; ++i)
        for (int j = 1; j <= b; ++j)
            for (int k = 1; k <= c; ++k) {
                mult[i + j + k - 1]++;
                mult[i + j + k - 2]--;
            }
    LaurentQ num(1), den(1);
    for (auto [m, e] : mult) {
        if (m == 0 || e == 0) continue;  // (1-q^0) factors always cancel out
        LaurentQ f = LaurentQ(1) - LaurentQ::q_power(m);
        for (int t = 0; t < std::abs(e); ++t) (e > 0 ? num : den) *= f;
    }
    return exact_div(num, den);
}

void plane_partitions_foreach(int a, int b, int c,
                              const std::function<void(const BoxedPlanePartition&)>& visit,
                              long guard) {
    if (a < 0 || b < 0 || c < 0) throw ring_error("plane_partitions: negative box size");
    if (static_cast<long>(a) * b * c > guard)
        throw size_guard_error("plane_partitions: a*b*c exceeds enumeration bound " + std::to_string(guard));
    BoxedPlanePartition pp;
    pp.a = a;
    pp.b = b;
    pp.c = c;
    pp.heights.assign(static_cast<size_t>(a), std::vector<int>(static_cast<size_t>(b), 0));
    if (a == 0 || b == 0) {
        visit(pp);
        return;
    }
    std::function<void(int, int)> rec = [&](int i, int j) {
        if (i == a) {
            visit(pp);
            return;
        }
        int ni = j + 1 < b ? i : i + 1;
        int nj = j + 1 < b ? j + 1 : 0;
        int hi = c;
        if (i > 0) hi = std::min(hi, pp.heights[static_cast<size_t>(i - 1)][static_cast<size_t>(j)]);
        if (j > 0) hi = std::min(hi, pp.heights[static_cast<size_t>(i)][static_cast<size_t>(j - 1)]);
        for (int h = 0; h <= hi; ++h) {
            pp.heights[static_cast<size_t>(i)][static_cast<size_t>(j)] = h;
            rec(ni, nj);
        }
        pp.heights[static_cast<size_t>(i)][static_cast<size_t>(j)] = 0;
    };
    rec(0, 0);
}

BigInt plane_partitions_brute(int a, int b, int c) {
    BigInt n(0);
    plane_partitions_foreach(a, b, c, [&](const BoxedPlanePartition&) { n += 1; });
    return n;
}

MultiPoly<BigInt> plane_partitions_weighted(int a, int b, int c) {
    // slice the solid along the a-axis: G[j][k] = #{i : h_ij >= k+1}; the
    // variable index of slice (j,k) is (a - G[j][k]) + j, giving the
    // rectangular Schur polynomial in a+b letters.
    int vars = a + b;
    MultiPoly<BigInt> out(vars);
    plane_partitions_foreach(a, b, c, [&](const BoxedPlanePartition& pp) {
        Mono w = Mono::unit(vars);
        for (int j = 0; j < b; ++j)
            for (int k = 0; k < c; ++k) {
                int g = 0;
                for (int i = 0; i < a; ++i)
                    if (pp.heights[static_cast<size_t>(i)][static_cast<size_t>(j)] >= k + 1) ++g;
                int v = (a - g) + j;
                w.set(v, w.get(v) + 1);
            }
        out += MultiPoly<BigInt>::monomial(vars, w, BigInt(1));
    });
    return out;
}

bool auxiliary_identities_check(int a, int b, int c) {
    if (a > 4 || b > 4 || c > 4) throw size_guard_error("auxiliary_identities_check: sides must be <= 4");
    BigInt target = macmahon(a, b, c);

    // N = sum over lambda with lambda_1 <= c of s_lambda(1^a) s_lambda(1^b)
    BigInt sum(0);
    for (const Partition& lam : partitions_up_to(std::min(a, b) * c, std::min(a, b), c))
        sum += schur_all_ones(lam, a) * schur_all_ones(lam, b);
    if (sum != target) return false;

    // N = det(1 + T_{c x b} T_{b x a} T_{a x c}), T with binomial entries
    auto binom_matrix = [](int rows, int cols) {
        ExactMatrix<BigInt> t(rows, cols, BigInt(0));
        for (int i = 0; i < rows; ++i)
            for (int j = 0; j < cols; ++j) t.at(i, j) = big_binomial(i, j);
        return t;
    };
    auto mul = [](const ExactMatrix<BigInt>& x, const ExactMatrix<BigInt>& y) {
        ExactMatrix<BigInt> r(x.rows(), y.cols(), BigInt(0));
        for (int i = 0; i < x.rows(); ++i)
            for (int j = 0; j < y.cols(); ++j)
                for (int k = 0; k < x.cols(); ++k) r.at(i, j) += x.at(i, k) * y.at(k, j);
        return r;
    };
    ExactMatrix<BigInt> prod = mul(mul(binom_matrix(c, b), binom_matrix(b, a)), binom_matrix(a, c));
    for (int i = 0; i < c; ++i) prod.at(i, i) += 1;
    BigInt d = c == 0 ? BigInt(1) : prod.det();
    return d == target;
}

namespace {

using TauPoly = MultiPoly<BigInt>;  // univariate in tau

// entries N_{i,r} = tau^{2i-r-1} C(i, 2i-r-1), the weighted one-path counts
TauPoly path_entry(int i, int r) {
    int k = 2 * i - r - 1;
    if (k < 0 || k > i) return TauPoly(1);
    return TauPoly::monomial(1, Mono::var(1, 0, k), big_binomial(i, k));
}

}  // namespace

MultiPoly<BigInt> tsscpp_ct(int n) {
    if (n < 1) throw ring_error("tsscpp_ct: n must be positive");
    int m = n - 1;  // number of u variables
    if (m == 0) return TauPoly::constant(1, BigInt(1));
    // variables: u_1..u_m then tau
    int vars = m + 1;
    std::vector<int> caps(static_cast<size_t>(vars), -1);
    std::vector<int> target(static_cast<size_t>(vars), 0);
    for (int i = 0; i < m; ++i) {
        caps[static_cast<size_t>(i)] = 2 * (i + 1) - 1;
        target[static_cast<size_t>(i)] = 2 * (i + 1) - 1;
    }
    using P = MultiPoly<BigInt>;
    auto var = [&](int i) { return P::variable(vars, i); };
    P one = P::constant(vars, BigInt(1));
    P acc = one;
    auto geometric = [&](int vi, int vj) {
        // truncated 1/(1-u_i u_j); vi == vj gives truncated 1/(1-u_i)
        P g(vars);
        int kmax = caps[static_cast<size_t>(vi)];
        if (vi != vj) kmax = std::min(kmax, caps[static_cast<size_t>(vj)]);
        for (int k = 0; k <= kmax; ++k) {
            Mono mo = Mono::unit(vars);
            mo.set(vi, k);
            if (vi != vj) mo.set(vj, k);
            g += P::monomial(vars, mo, BigInt(1));
        }
        return g;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            acc = acc.mul_capped(var(j) - var(i), caps);
            acc = acc.mul_capped(geometric(i, j), caps);
        }
    for (int i = 0; i < m; ++i) {
        P f = one + var(i) * P::variable(vars, m);  // 1 + tau u_i
        for (int t = 0; t < i + 1; ++t) acc = acc.mul_capped(f, caps);
        acc = acc.mul_capped(geometric(i, i), caps);
    }
    // pick coefficient of prod u_i^{2i-1} as a polynomial in tau
    TauPoly out(1);
    for (const auto& t : acc.terms()) {
        bool match = true;
        for (int i = 0; i < m; ++i)
            if (t.first.get(i) != target[static_cast<size_t>(i)]) { match = false; break; }
        if (!match) continue;
        out += TauPoly::monomial(1, Mono::var(1, 0, t.first.get(m)), t.second);
    }
    return out;
}

MultiPoly<BigInt> tsscpp_brute(int n) {
    if (n < 1) throw ring_error("tsscpp_brute: n must be positive");
    if (n > 6) throw size_guard_error("tsscpp_brute: n must be <= 6");
    int m = n - 1;
    if (m == 0) return TauPoly::constant(1, BigInt(1));
    // endpoints 0 <= r_1 < ... < r_m, with path i reaching r in [i-1, 2i-1]
    int rmax = 2 * m - 1;
    std::vector<int> r(static_cast<size_t>(m));
    TauPoly total(1);
    std::function<void(int, int)> rec = [&](int idx, int lo) {
        if (idx == m) {
            ExactMatrix<TauPoly> mat(m, m, TauPoly(1));
            for (int i = 1; i <= m; ++i)
                for (int j = 0; j < m; ++j) mat.at(i - 1, j) = path_entry(i, r[static_cast<size_t>(j)]);
            total += mat.det();
            return;
        }
        for (int v = lo; v <= rmax; ++v) {
            r[static_cast<size_t>(idx)] = v;
            rec(idx + 1, v + 1);
        }
    };
    rec(0, 0);
    return total;
}

BigInt tsscpp_total(int n) {
    Rational r(1);
    for (int i = 0; i <= n - 1; ++i)
        r *= make_rational(big_factorial(static_cast<unsigned long>(3 * i + 1)),
                           big_factorial(static_cast<unsigned long>(n + i)));
    r.canonicalize();
    if (r.get_den() != 1) throw ring_error("tsscpp_total: non-integer product");
    return r.get_num();
}

BigInt asm_total(int n) { return tsscpp_total(n); }

}  // namespace lattica
