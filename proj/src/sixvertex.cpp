#include "lattica/sixvertex.hpp"

#include <algorithm>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lattica/eisenstein.hpp"
#include "lattica/matrix.hpp"
#include "lattica/schur.hpp"

namespace lattica {

namespace {

inline bool edge_in_L(const SixVertexConfig& c, int i, int j) { return c.H[i][j]; }
inline bool edge_in_R(const SixVertexConfig& c, int i, int j) { return !c.H[i][j + 1]; }
inline bool edge_in_U(const SixVertexConfig& c, int i, int j) { return !c.V[i][j]; }
inline bool edge_in_D(const SixVertexConfig& c, int i, int j) { return c.V[i + 1][j]; }

SixVertexConfig blank_config(int n) {
    SixVertexConfig c;
    c.n = n;
    c.H.assign(static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n) + 1, 0));
    c.V.assign(static_cast<size_t>(n) + 1, std::vector<uint8_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i) {
        c.H[i][0] = 1;                       // left boundary points in (right)
        c.H[i][static_cast<size_t>(n)] = 0;  // right boundary points in (left)
    }
    for (int j = 0; j < n; ++j) {
        c.V[0][j] = 1;                       // top boundary points out (up)
        c.V[static_cast<size_t>(n)][j] = 0;  // bottom boundary points out (down)
    }
    return c;
}

// DFS over vertices from (row, 0); L and U edges of the current vertex are
// already decided, R and D are chosen subject to arrow conservation.
void enumerate_rec(SixVertexConfig& c, int i, int j,
                   const std::function<void(const SixVertexConfig&)>& visit) {
    int n = c.n;
    if (i == n) {
        visit(c);
        return;
    }
    int ni = j + 1 < n ? i : i + 1;
    int nj = j + 1 < n ? j + 1 : 0;
    bool L = c.H[i][j], U = c.V[i][j];
    // (1-R) + D = 1 - L + U
    int k = 1 - (L ? 1 : 0) + (U ? 1 : 0);
    for (int R = 0; R <= 1; ++R) {
        for (int D = 0; D <= 1; ++D) {
            if ((1 - R) + D != k) continue;
            if (j + 1 == n && R != 0) continue;  // right boundary fixed
            if (i + 1 == n && D != 0) continue;  // bottom boundary fixed
            c.H[i][j + 1] = static_cast<uint8_t>(R);
            c.V[i + 1][j] = static_cast<uint8_t>(D);
            enumerate_rec(c, ni, nj, visit);
        }
    }
}

}  // namespace

VertexType vertex_type(const SixVertexConfig& c, int i, int j) {
    bool L = c.H[i][j], R = c.H[i][j + 1], U = c.V[i][j], D = c.V[i + 1][j];
    if (L && R && U && D) return VertexType::A1;
    if (!L && !R && !U && !D) return VertexType::A2;
    if (L && R && !U && !D) return VertexType::B1;
    if (!L && !R && U && D) return VertexType::B2;
    if (L && !R && U && !D) return VertexType::C1;
    if (!L && R && !U && D) return VertexType::C2;
    throw ring_error("vertex_type: arrow conservation violated");
}

bool check_conservation(const SixVertexConfig& c) {
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            int in = (edge_in_L(c, i, j) ? 1 : 0) + (edge_in_R(c, i, j) ? 1 : 0) +
                     (edge_in_U(c, i, j) ? 1 : 0) + (edge_in_D(c, i, j) ? 1 : 0);
            if (in != 2) return false;
        }
    return true;
}

void dwbc_enumerate(int n, const std::function<void(const SixVertexConfig&)>& visit, int guard) {
    if (n < 1) throw ring_error("dwbc_enumerate: n must be positive");
    if (n > guard) throw size_guard_error("dwbc_enumerate: n exceeds bound " + std::to_string(guard));
    SixVertexConfig c = blank_config(n);
    enumerate_rec(c, 0, 0, visit);
}

std::vector<SixVertexConfig> dwbc_first_row_states(int n) {
    std::vector<SixVertexConfig> out;
    SixVertexConfig c = blank_config(n);
    std::function<void(int)> rec = [&](int j) {
        if (j == n) {
            out.push_back(c);
            return;
        }
        bool L = c.H[0][j], U = c.V[0][j];
        int k = 1 - (L ? 1 : 0) + (U ? 1 : 0);
        for (int R = 0; R <= 1; ++R)
            for (int D = 0; D <= 1; ++D) {
                if ((1 - R) + D != k) continue;
                if (j + 1 == n && R != 0) continue;
                if (n == 1 && D != 0) continue;
                c.H[0][j + 1] = static_cast<uint8_t>(R);
                c.V[1][j] = static_cast<uint8_t>(D);
                rec(j + 1);
            }
    };
    rec(0);
    return out;
}

void dwbc_enumerate_tail(SixVertexConfig& c, int start_row,
                         const std::function<void(const SixVertexConfig&)>& visit) {
    enumerate_rec(c, start_row, 0, visit);
}

BigInt dwbc_count_serial(int n, int guard) {
    BigInt total(0);
    dwbc_enumerate(n, [&](const SixVertexConfig&) { total += 1; }, guard);
    return total;
}

BigInt dwbc_count_parallel(int n, int guard) {
    if (n < 1) throw ring_error("dwbc_count: n must be positive");
    if (n > guard) throw size_guard_error("dwbc_count: n exceeds bound " + std::to_string(guard));
    std::vector<SixVertexConfig> prefixes = dwbc_first_row_states(n);
    BigInt total(0);
#ifdef _OPENMP
#pragma omp parallel
    {
        BigInt local(0);
#pragma omp for schedule(dynamic)
        for (long t = 0; t < static_cast<long>(prefixes.size()); ++t) {
            SixVertexConfig c = prefixes[static_cast<size_t>(t)];
            dwbc_enumerate_tail(c, 1, [&](const SixVertexConfig&) { local += 1; });
        }
#pragma omp critical
        total += local;
    }
#else
    for (auto& p : prefixes) {
        SixVertexConfig c = p;
        dwbc_enumerate_tail(c, 1, [&](const SixVertexConfig&) { total += 1; });
    }
#endif
    return total;
}

// ---- symbolic partition function -----------------------------------------

namespace {

// vertex weight in the 2n-variable Laurent ring; x_i is variable i,
// y_j is variable n+j
LPoly vertex_weight(int n, int i, int j, VertexType t) {
    int vars = 2 * n;
    Mono up = Mono::unit(vars);    // y_j / x_i
    up.set(n + j, 1);
    up.set(i, -1);
    Mono dn = Mono::unit(vars);    // x_i / y_j
    dn.set(i, 1);
    dn.set(n + j, -1);
    switch (t) {
        case VertexType::A1:
        case VertexType::A2:
            return LPoly::monomial(vars, up, LaurentQ::q()) +
                   LPoly::monomial(vars, dn, -LaurentQ::q_inv());
        case VertexType::B1:
        case VertexType::B2:
            return LPoly::monomial(vars, up, LaurentQ(1)) + LPoly::monomial(vars, dn, LaurentQ(-1));
        case VertexType::C1:
        case VertexType::C2:
            return LPoly::constant(vars, LaurentQ::q() - LaurentQ::q_inv());
    }
    throw ring_error("vertex_weight: unreachable");
}

}  // namespace

LPoly partition_function_brute(int n, int guard) {
    if (n > guard) throw size_guard_error("partition_function_brute: n exceeds bound " + std::to_string(guard));
    int vars = 2 * n;
    LPoly total(vars);
    dwbc_enumerate(n, [&](const SixVertexConfig& c) {
        LPoly w = LPoly::constant(vars, LaurentQ(1));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) w *= vertex_weight(n, i, j, vertex_type(c, i, j));
        total += w;
    });
    return total;
}

LPoly izergin_symbolic(int n) {
    int vars = 2 * n;
    auto ratio = [&](int num, int den) {
        Mono m = Mono::unit(vars);
        m.set(num, 1);
        m.set(den, -1);
        return m;
    };
    // A_{ij} = x_j/y_i - y_i/x_j, B_{ij} = q x_j/y_i - q^{-1} y_i/x_j
    auto A = [&](int i, int j) {
        return LPoly::monomial(vars, ratio(j, n + i), LaurentQ(1)) +
               LPoly::monomial(vars, ratio(n + i, j), LaurentQ(-1));
    };
    auto B = [&](int i, int j) {
        return LPoly::monomial(vars, ratio(j, n + i), LaurentQ::q()) +
               LPoly::monomial(vars, ratio(n + i, j), -LaurentQ::q_inv());
    };
    ExactMatrix<LPoly> k(n, n, LPoly(vars));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            LPoly entry = LPoly::constant(vars, LaurentQ(1));
            for (int l = 0; l < n; ++l) {
                if (l == j) continue;
                entry *= A(i, l) * B(i, l);
            }
            k.at(i, j) = entry;
        }
    LPoly det = k.det();
    LPoly c = LPoly::constant(vars, LaurentQ::q() - LaurentQ::q_inv());
    LPoly z = det * pow(c, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            LPoly vx = LPoly::monomial(vars, ratio(i, j), LaurentQ(1)) +
                       LPoly::monomial(vars, ratio(j, i), LaurentQ(-1));
            LPoly vy = LPoly::monomial(vars, ratio(n + i, n + j), LaurentQ(1)) +
                       LPoly::monomial(vars, ratio(n + j, n + i), LaurentQ(-1));
            z = exact_div(z, vx);
            z = exact_div(z, vy);
        }
    return z;
}

Rational izergin_numeric(int n, const Rational& q, const std::vector<Rational>& x,
                         const std::vector<Rational>& y) {
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw ring_error("izergin_numeric: need n spectral parameters per direction");
    if (is_zero(q)) throw ring_error("izergin_numeric: q must be nonzero");
    for (const auto& v : x)
        if (is_zero(v)) throw ring_error("izergin_numeric: x must be nonzero");
    for (const auto& v : y)
        if (is_zero(v)) throw ring_error("izergin_numeric: y must be nonzero");
    Rational qi = Rational(1) / q;
    auto a_fac = [&](int i, int j) { return q * x[j] / y[i] - qi * y[i] / x[j]; };
    auto v_fac = [&](int i, int j) { return x[j] / y[i] - y[i] / x[j]; };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (x[i] * x[i] == x[j] * x[j] || y[i] * y[i] == y[j] * y[j])
                throw ring_error("izergin_numeric: coinciding spectral parameters (pole); "
                                 "use the configuration sum instead");
    Rational pref(1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Rational f = v_fac(i, j) * a_fac(i, j);
            if (is_zero(f)) throw ring_error("izergin_numeric: determinant entry pole");
            pref *= f;
        }
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            pref /= (x[i] / x[j] - x[j] / x[i]) * (y[i] / y[j] - y[j] / y[i]);
    ExactMatrix<Rational> m(n, n, Rational(0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m.at(i, j) = (q - qi) / (v_fac(i, j) * a_fac(i, j));
    return pref * m.det();
}

KorepinReport korepin_check(int n) {
    if (n < 2 || n > 4) throw ring_error("korepin_check: n must be in 2..4");
    KorepinReport rep;
    int vars = 2 * n;
    LPoly z1 = partition_function_brute(1);
    rep.z1_ok = z1 == LPoly::constant(2, LaurentQ::q() - LaurentQ::q_inv());

    LPoly z = partition_function_brute(n);
    rep.symmetric_ok = true;
    for (int i = 0; i + 1 < n; ++i) {
        if (z != z.swap_vars(i, i + 1)) rep.symmetric_ok = false;
        if (z != z.swap_vars(n + i, n + i + 1)) rep.symmetric_ok = false;
    }
    rep.degree_ok = true;
    for (int v = 0; v < 2 * n; ++v) {
        auto [lo, hi] = z.var_degree_range(v);
        if (lo < -(n - 1) || hi > n - 1) rep.degree_ok = false;
        for (const auto& t : z.terms())
            if (((t.first.get(v) - (n - 1)) % 2 + 2) % 2 != 0) rep.degree_ok = false;
    }

    // recursion at y_1 = x_1 against the embedded smaller function
    LPoly zsmall = partition_function_brute(n - 1);
    std::vector<int> embed;
    for (int i = 1; i < n; ++i) embed.push_back(i);
    for (int j = 1; j < n; ++j) embed.push_back(n + j);
    LPoly zs = zsmall.map_vars(vars, embed);
    LPoly factor = LPoly::constant(vars, LaurentQ::q() - LaurentQ::q_inv());
    auto ratio = [&](int a, int b) {
        Mono m = Mono::unit(vars);
        m.set(a, 1);
        m.set(b, -1);
        return m;
    };
    for (int i = 1; i < n; ++i)
        factor *= LPoly::monomial(vars, ratio(0, i), LaurentQ::q()) +
                  LPoly::monomial(vars, ratio(i, 0), -LaurentQ::q_inv());
    for (int j = 1; j < n; ++j)
        factor *= LPoly::monomial(vars, ratio(n + j, 0), LaurentQ::q()) +
                  LPoly::monomial(vars, ratio(0, n + j), -LaurentQ::q_inv());
    LPoly rhs = factor * zs;
    LPoly lhs_brute = z.substitute(n, LPoly::variable(vars, 0));
    rep.recursion_brute_ok = lhs_brute == rhs;
    LPoly lhs_iz = izergin_symbolic(n).substitute(n, LPoly::variable(vars, 0));
    rep.recursion_izergin_ok = lhs_iz == rhs;
    return rep;
}

// ---- ASMs -----------------------------------------------------------------

bool asm_valid(const ASMMatrix& m) {
    int n = m.n;
    for (int i = 0; i < n; ++i) {
        int run = 0;
        for (int j = 0; j < n; ++j) {
            int v = m.a[i][j];
            if (v != -1 && v != 0 && v != 1) return false;
            if (v == 0) continue;
            if (run == 0 && v != 1) return false;
            if (run != 0 && v == run) return false;
            run = v;
        }
        if (run != 1) return false;
    }
    for (int j = 0; j < n; ++j) {
        int run = 0;
        for (int i = 0; i < n; ++i) {
            int v = m.a[i][j];
            if (v == 0) continue;
            if (run == 0 && v != 1) return false;
            if (run != 0 && v == run) return false;
            run = v;
        }
        if (run != 1) return false;
    }
    return true;
}

ASMMatrix asm_from_config(const SixVertexConfig& c) {
    ASMMatrix m;
    m.n = c.n;
    m.a.assign(static_cast<size_t>(c.n), std::vector<int>(static_cast<size_t>(c.n), 0));
    for (int i = 0; i < c.n; ++i)
        for (int j = 0; j < c.n; ++j) {
            VertexType t = vertex_type(c, i, j);
            if (t == VertexType::C1) m.a[i][j] = 1;
            else if (t == VertexType::C2) m.a[i][j] = -1;
        }
    if (!asm_valid(m)) throw ring_error("asm_from_config: result violates the sign-alternation rules");
    return m;
}

SixVertexConfig config_from_asm(const ASMMatrix& m) {
    if (!asm_valid(m)) throw ring_error("config_from_asm: invalid matrix");
    int n = m.n;
    SixVertexConfig c = blank_config(n);
    for (int i = 0; i < n; ++i) {
        int par = 1;
        for (int j = 0; j < n; ++j) {
            if (m.a[i][j] != 0) par ^= 1;
            c.H[i][j + 1] = static_cast<uint8_t>(j + 1 == n ? 0 : par);
            if (j + 1 == n && par != 0) throw ring_error("config_from_asm: row does not close");
        }
    }
    for (int j = 0; j < n; ++j) {
        int par = 1;
        for (int i = 0; i < n; ++i) {
            if (m.a[i][j] != 0) par ^= 1;
            c.V[i + 1][j] = static_cast<uint8_t>(i + 1 == n ? 0 : par);
            if (i + 1 == n && par != 0) throw ring_error("config_from_asm: column does not close");
        }
    }
    if (!check_conservation(c)) throw ring_error("config_from_asm: arrow conservation violated");
    // signs must match the c-vertex orientations
    ASMMatrix back = asm_from_config(c);
    if (!(back.a == m.a)) throw ring_error("config_from_asm: sign pattern mismatch");
    return c;
}

AsmCounts asm_counts(int n, int guard) {
    AsmCounts out;
    out.total = asm_total(n);
    out.refined.assign(static_cast<size_t>(n), BigInt(0));
    dwbc_enumerate(n, [&](const SixVertexConfig& c) {
        ASMMatrix m = asm_from_config(c);
        for (int j = 0; j < n; ++j)
            if (m.a[0][j] == 1) {
                out.refined[static_cast<size_t>(j)] += 1;
                break;
            }
    }, guard);
    return out;
}

bool schur_identification_check(int n) {
    // product-form Schur evaluation at 1^{2n} vs the counting product
    BigInt s = schur_all_ones(Partition::double_staircase(n), 2 * n);
    BigInt pw(1);
    for (int k = 0; k < n * (n - 1) / 2; ++k) pw *= 3;
    if (s != pw * asm_total(n)) return false;

    if (n > 3) return true;
    // specialization identity at q = e^{i pi/3}: substituting z_j = w^2 z_i
    // (w = omega) collapses the double staircase to size n-1
    if (n >= 2) {
        using EPoly = MultiPoly<Eisenstein>;
        int vars = 2 * n;
        Eisenstein w = Eisenstein::omega();
        Eisenstein w2 = w * w;
        EPoly s_big = schur_ssyt(Partition::double_staircase(n), vars)
                          .map_coeffs<Eisenstein>([](const BigInt& c) { return Eisenstein(c); });
        int i = 0, j = 1;  // specialize z_2 = w^2 z_1
        EPoly lhs = s_big.substitute(j, EPoly::variable(vars, i, w2));
        EPoly rhs(vars);
        {
            std::vector<int> embed;
            for (int v = 0; v < vars; ++v)
                if (v != i && v != j) embed.push_back(v);
            EPoly s_small = schur_ssyt(Partition::double_staircase(n - 1), vars - 2)
                                .map_coeffs<Eisenstein>([](const BigInt& c) { return Eisenstein(c); })
                                .map_vars(vars, embed);
            rhs = s_small;
            for (int k = 0; k < vars; ++k) {
                if (k == i || k == j) continue;
                rhs *= EPoly::variable(vars, k) - EPoly::variable(vars, i, w);
            }
        }
        if (lhs != rhs) return false;
    }
    return true;
}

// ---- Toda -----------------------------------------------------------------

namespace {

using QSeries = TruncatedSeries<Rational>;

QSeries series_det(const std::vector<std::vector<QSeries>>& m) {
    size_t k = m.size();
    if (k == 1) return m[0][0];
    QSeries acc = QSeries::constant(m[0][0].order(), Rational(0));
    for (size_t j = 0; j < k; ++j) {
        std::vector<std::vector<QSeries>> sub;
        for (size_t i = 1; i < k; ++i) {
            std::vector<QSeries> row;
            for (size_t c = 0; c < k; ++c)
                if (c != j) row.push_back(m[i][c]);
            sub.push_back(std::move(row));
        }
        QSeries t = m[0][j] * series_det(sub);
        acc = j % 2 == 0 ? acc + t : acc - t;
    }
    return acc;
}

}  // namespace

TodaReport toda_chain_check(const TruncatedSeries<Rational>& phi, int n) {
    if (n < 1) throw ring_error("toda_chain_check: n must be positive");
    if (phi.order() < 2 * n + 2)
        throw precision_error("toda_chain_check: series order must be at least 2n+2");
    // derivatives up to phi^{(2n)}
    std::vector<QSeries> d{phi};
    for (int k = 1; k <= 2 * n; ++k) d.push_back(d.back().derivative());
    auto tau = [&](int k) -> QSeries {
        if (k == 0) return QSeries::constant(phi.order() - 2 * n, Rational(1));
        std::vector<std::vector<QSeries>> m;
        for (int i = 0; i < k; ++i) {
            std::vector<QSeries> row;
            for (int j = 0; j < k; ++j) row.push_back(d[static_cast<size_t>(i + j)].truncate(phi.order() - 2 * n));
            m.push_back(std::move(row));
        }
        Rational norm(1);
        for (int j = 1; j < k; ++j) {
            Rational fj(big_factorial(static_cast<unsigned long>(j)));
            norm /= fj * fj;
        }
        QSeries det = series_det(m);
        return det * QSeries::constant(det.order(), norm);
    };
    QSeries tn = tau(n);
    TodaReport rep;
    if (tn.is_zero_series()) {
        rep.degenerate = true;
        return rep;
    }
    QSeries tnp = tau(n + 1), tnm = tau(n - 1);
    // two derivatives on tau_n cost two orders of precision
    QSeries tn_d = tn.derivative();
    QSeries tn_dd = tn_d.derivative();
    int d_ok = tn_dd.order();
    QSeries lhs = (tnp * tnm * QSeries::constant(tnp.order(), Rational(n * n))).truncate(d_ok);
    QSeries rhs = (tn.truncate(d_ok) * tn_dd) - (tn_d.truncate(d_ok) * tn_d.truncate(d_ok));
    rep.ok = lhs.equal_up_to(rhs, d_ok);
    return rep;
}

}  // namespace lattica
