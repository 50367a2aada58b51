#include "lattica/brauer.hpp"

#include <deque>
#include <map>

#include "lattica/cpl.hpp"
#include "lattica/joseph.hpp"
#include "lattica/schubert.hpp"

namespace lattica {

namespace {

// slots: x_0..x_{N-1}, A = N, eps = N+1
ZPoly xvar(int vars, int i) { return ZPoly::variable(vars, i); }
ZPoly avar(int vars) { return ZPoly::variable(vars, vars - 2); }
ZPoly evar(int vars) { return ZPoly::variable(vars, vars - 1); }

// A + x_i - x_j with the shifted wraparound x_{j+N} = x_j + eps
ZPoly shifted_factor(int N, int i, int j) {
    int vars = N + 2;
    ZPoly f = avar(vars) + xvar(vars, i % N);
    if (j < N) f -= xvar(vars, j);
    else f -= xvar(vars, j - N) + evar(vars);
    return f;
}

LinkPattern max_crossed(int n) {
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int i = 0; i < 2 * n; ++i) p[static_cast<size_t>(i)] = (i + n) % (2 * n);
    return LinkPattern(std::move(p));
}

}  // namespace

const ZPoly& BrauerSolution::at(const LinkPattern& p) const {
    for (size_t k = 0; k < patterns.size(); ++k)
        if (patterns[k] == p) return comps[k];
    throw ring_error("BrauerSolution: unknown pattern");
}

ZPoly brauer_base(int N) {
    int n = N / 2;
    int vars = N + 2;
    ZPoly p = ZPoly::constant(vars, BigInt(1));
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j <= i + n - 1; ++j) p *= shifted_factor(N, i, j);
    return p;
}

BrauerSolution brauer_solve(int N) {
    if (N != 4 && N != 6) throw size_guard_error("brauer_solve: N must be 4 or 6");
    int n = N / 2;
    int vars = N + 2;
    BrauerSolution sol;
    sol.N = N;
    sol.patterns = crossing_link_patterns(n);
    std::map<LinkPattern, int> index;
    for (size_t k = 0; k < sol.patterns.size(); ++k) index[sol.patterns[k]] = static_cast<int>(k);
    sol.comps.assign(sol.patterns.size(), ZPoly(vars));
    std::vector<bool> known(sol.patterns.size(), false);

    int start = index.at(max_crossed(n));
    sol.comps[static_cast<size_t>(start)] = brauer_base(N);
    known[static_cast<size_t>(start)] = true;

    ZPoly apb = avar(vars).scale(BigInt(2)) - evar(vars);  // A + B with B = A - eps
    std::deque<int> queue{start};
    while (!queue.empty()) {
        int cur = queue.front();
        queue.pop_front();
        const LinkPattern& pat = sol.patterns[static_cast<size_t>(cur)];
        for (int i = 0; i + 1 < N; ++i) {
            if (pat.partner(i) == i + 1) continue;  // exchange move needs an unpaired (i, i+1)
            LinkPattern img = brauer_f(i, pat);
            ZPoly fac = avar(vars) + xvar(vars, i) - xvar(vars, i + 1);
            ZPoly g = exact_div(sol.comps[static_cast<size_t>(cur)], fac);
            ZPoly moved = -(fac * (apb * divided_difference(i, g) + g.swap_vars(i, i + 1)));
            int tk = index.at(img);
            if (!known[static_cast<size_t>(tk)]) {
                sol.comps[static_cast<size_t>(tk)] = std::move(moved);
                known[static_cast<size_t>(tk)] = true;
                queue.push_back(tk);
            } else if (sol.comps[static_cast<size_t>(tk)] != moved) {
                throw ring_error("brauer_solve: path dependence at pattern " + img.str());
            }
        }
    }
    for (bool k : known)
        if (!k) throw ring_error("brauer_solve: exchange moves did not reach every pattern");
    return sol;
}

BrauerVerifyReport brauer_verify(const BrauerSolution& s) {
    BrauerVerifyReport rep;
    int N = s.N;
    int vars = N + 2;
    ZPoly apb = avar(vars).scale(BigInt(2)) - evar(vars);

    rep.arch_constraint_ok = true;
    for (size_t k = 0; k < s.patterns.size() && rep.arch_constraint_ok; ++k) {
        const LinkPattern& pat = s.patterns[k];
        for (int i = 0; i + 1 < N; ++i) {
            if (pat.partner(i) != i + 1) continue;
            ZPoly lhs = -((avar(vars) + xvar(vars, i) - xvar(vars, i + 1)) *
                          (apb + xvar(vars, i + 1) - xvar(vars, i)) *
                          divided_difference(i, s.comps[k]));
            ZPoly sum(vars);
            for (size_t j = 0; j < s.patterns.size(); ++j) {
                if (j == k) continue;
                auto [img, loops] = brauer_e(i, s.patterns[j]);
                (void)loops;
                if (img == pat) sum += s.comps[j];
            }
            if (lhs != apb * sum) {
                rep.arch_constraint_ok = false;
                rep.witness = "arch constraint fails at i=" + std::to_string(i + 1) + ", pattern " +
                              pat.str();
                break;
            }
        }
    }

    rep.wheel_ok = true;
    for (int i = 0; i < N && rep.wheel_ok; ++i)
        for (int j = i + 1; j < N && rep.wheel_ok; ++j)
            for (int k = j + 1; k < N && rep.wheel_ok; ++k)
                for (size_t c = 0; c < s.patterns.size(); ++c) {
                    ZPoly f = s.comps[c]
                                  .substitute(j, xvar(vars, i) + avar(vars))
                                  .substitute(k, xvar(vars, i) + avar(vars).scale(BigInt(2)));
                    if (!f.is_zero_poly()) {
                        rep.wheel_ok = false;
                        rep.witness = "wheel fails at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                      "), pattern " + s.patterns[c].str();
                        break;
                    }
                }
    return rep;
}

BrauerDegenerateReport brauer_degenerate_checks() {
    BrauerDegenerateReport rep;
    const int N = 4, n = 2;
    BrauerSolution s = brauer_solve(N);
    // move to variables (x, A, B): substitute eps = A - B, with B in a fresh slot
    int vars = N + 3;  // x_0..x_3, A, eps, B
    auto to_ab = [&](const ZPoly& p) {
        ZPoly q = p.map_vars(vars, {0, 1, 2, 3, 4, 5});
        return q.substitute(5, ZPoly::variable(vars, 4) - ZPoly::variable(vars, 6));
    };
    auto b_leading = [&](const ZPoly& p, int expected_deg) {
        ZPoly out(vars);
        for (const auto& t : p.terms()) {
            if (t.first.get(6) > expected_deg)
                throw ring_error("brauer_degenerate_checks: degree overflow in B");
            if (t.first.get(6) == expected_deg) {
                Mono m = t.first;
                m.set(6, 0);
                out += ZPoly::monomial(vars, m, t.second);
            }
        }
        return out;
    };

    // noncrossing sector: B^{n(n-1)} coefficient equals the rational component
    JosephSolution js = joseph_solve(n);
    const auto& nc = cpl_basis(n);
    rep.noncrossing_ok = true;
    for (size_t k = 0; k < nc.size(); ++k) {
        ZPoly lead = b_leading(to_ab(s.at(nc[k])), n * (n - 1));
        ZPoly expect = js.comps[k].map_vars(vars, {0, 1, 2, 3, 4});
        if (lead != expect) rep.noncrossing_ok = false;
    }

    // permutation sector: chi^2 factors through the longest double polynomial
    {
        LinkPattern chi = LinkPattern(std::vector<int>{2, 3, 0, 1});
        // sigma(i) = pi(n+1-i) - n, here the longest element of S_2
        Permutation sigma = Permutation::longest(n);
        int deg_b = n * (n - 1) - sigma.inversions();
        ZPoly lead = b_leading(to_ab(s.at(chi)), deg_b);
        ZPoly xi = schubert_pipedream(sigma);  // vars x_0, x_1, y_0, y_1
        std::vector<ZPoly> images;
        // x-slot j of the double polynomial reads A + x_{n-j}
        for (int j = 0; j < n; ++j)
            images.push_back(ZPoly::variable(vars, 4) + ZPoly::variable(vars, n - 1 - j));
        for (int j = 0; j < n; ++j) images.push_back(ZPoly::variable(vars, n + j));
        ZPoly expect = compose(xi, images) * joseph_base(n).map_vars(vars, {0, 1, 2, 3, 4});
        rep.permutation_ok = lead == expect;
    }
    return rep;
}

}  // namespace lattica
