#include "lattica/joseph.hpp"

#include <map>

#include "lattica/qkz.hpp"

namespace lattica {

namespace {

// A + x_i - x_{i+1} in the 2n+1 variable space, slot 2n is the weight
ZPoly weight_factor(int vars, int i) {
    return ZPoly::variable(vars, vars - 1) + ZPoly::variable(vars, i) -
           ZPoly::variable(vars, i + 1);
}

}  // namespace

ZPoly joseph_base(int n) {
    int vars = 2 * n + 1;
    ZPoly p = ZPoly::constant(vars, BigInt(1));
    auto fac = [&](int i, int j) {
        return ZPoly::variable(vars, vars - 1) + ZPoly::variable(vars, i) - ZPoly::variable(vars, j);
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) p *= fac(i, j);
    for (int i = n; i < 2 * n; ++i)
        for (int j = i + 1; j < 2 * n; ++j) p *= fac(i, j);
    return p;
}

JosephSolution joseph_solve(int n) {
    if (n < 1) throw ring_error("joseph_solve: n must be positive");
    if (n > 4) throw size_guard_error("joseph_solve: n must be <= 4");
    const auto& basis = cpl_basis(n);
    const int vars = 2 * n + 1;
    std::map<LinkPattern, int> index;
    for (size_t k = 0; k < basis.size(); ++k) index[basis[k]] = static_cast<int>(k);

    std::vector<std::vector<std::vector<int>>> preim(
        static_cast<size_t>(2 * n), std::vector<std::vector<int>>(basis.size()));
    for (int i = 0; i + 1 < 2 * n; ++i)
        for (size_t k = 0; k < basis.size(); ++k) {
            auto [img, loops] = tl_e(i, basis[k]);
            (void)loops;
            preim[static_cast<size_t>(i)][static_cast<size_t>(index.at(img))].push_back(static_cast<int>(k));
        }

    JosephSolution sol;
    sol.n = n;
    sol.comps.assign(basis.size(), ZPoly(vars));
    std::vector<bool> known(basis.size(), false);
    sol.comps[0] = joseph_base(n);
    known[0] = true;

    for (size_t target = 1; target < basis.size(); ++target) {
        const LinkPattern& mu = basis[target];
        bool have = false;
        for (int i = 0; i + 1 < 2 * n; ++i) {
            if (!(mu.partner(i) < i && mu.partner(i + 1) > i + 1)) continue;
            auto [parent, loops] = tl_e(i, mu);
            (void)loops;
            int pk = index.at(parent);
            if (!known[static_cast<size_t>(pk)])
                throw ring_error("joseph_solve: parent not available; ordering bug");
            ZPoly rhs = -(weight_factor(vars, i) *
                          divided_difference(i, sol.comps[static_cast<size_t>(pk)]));
            for (int src : preim[static_cast<size_t>(i)][static_cast<size_t>(pk)]) {
                if (src == static_cast<int>(target) || src == pk) continue;
                if (!known[static_cast<size_t>(src)])
                    throw ring_error("joseph_solve: preimage not available; consistency failure");
                rhs -= sol.comps[static_cast<size_t>(src)];
            }
            if (!have) {
                sol.comps[target] = std::move(rhs);
                have = true;
            } else if (sol.comps[target] != rhs) {
                throw ring_error("joseph_solve: box-addition order dependence at pattern " + mu.str());
            }
        }
        if (!have) throw ring_error("joseph_solve: pattern with no removable box");
        known[target] = true;
    }
    return sol;
}

JosephVerifyReport joseph_verify(int n) {
    JosephVerifyReport rep;
    JosephSolution sol = joseph_solve(n);
    const auto& basis = cpl_basis(n);
    const int vars = 2 * n + 1;

    rep.divisibility_ok = true;
    for (int i = 0; i + 1 < 2 * n && rep.divisibility_ok; ++i)
        for (size_t k = 0; k < basis.size(); ++k) {
            if (basis[k].is_little_arch(i)) continue;
            // (A + x_{i+1} - x_i) f == (A + x_i - x_{i+1}) s_i f
            ZPoly lhs = (ZPoly::variable(vars, vars - 1) + ZPoly::variable(vars, i + 1) -
                         ZPoly::variable(vars, i)) *
                        sol.comps[k];
            ZPoly rhs = weight_factor(vars, i) * sol.comps[k].swap_vars(i, i + 1);
            if (lhs != rhs) {
                rep.divisibility_ok = false;
                rep.witness = "division/symmetry fails at i=" + std::to_string(i + 1) +
                              ", pattern " + basis[k].str();
                break;
            }
        }

    // recurrence at x_{i+1} = x_i + A
    rep.recurrence_ok = true;
    if (n >= 2) {
        JosephSolution small = joseph_solve(n - 1);
        const auto& small_basis = cpl_basis(n - 1);
        std::map<LinkPattern, int> small_index;
        for (size_t k = 0; k < small_basis.size(); ++k) small_index[small_basis[k]] = static_cast<int>(k);
        for (int i = 0; i + 1 < 2 * n && rep.recurrence_ok; ++i) {
            ZPoly pref = ZPoly::constant(vars, BigInt(1));
            for (int j = 0; j < i; ++j)
                pref *= ZPoly::variable(vars, vars - 1) + ZPoly::variable(vars, j) -
                        ZPoly::variable(vars, i);
            for (int j = i + 2; j < 2 * n; ++j)
                pref *= ZPoly::variable(vars, vars - 1).scale(BigInt(2)) +
                        ZPoly::variable(vars, i) - ZPoly::variable(vars, j);
            std::vector<int> embed;
            for (int v = 0; v < 2 * n; ++v)
                if (v != i && v != i + 1) embed.push_back(v);
            embed.push_back(vars - 1);  // weight slot maps to weight slot
            for (size_t k = 0; k < basis.size(); ++k) {
                ZPoly spec = sol.comps[k].substitute(
                    i + 1, ZPoly::variable(vars, i) + ZPoly::variable(vars, vars - 1));
                if (basis[k].is_little_arch(i)) {
                    std::vector<int> q(static_cast<size_t>(2 * n - 2));
                    for (int v = 0, w = 0; v < 2 * n; ++v) {
                        if (v == i || v == i + 1) continue;
                        int pv = basis[k].partner(v);
                        q[static_cast<size_t>(w)] = pv - (pv > i + 1 ? 2 : 0);
                        ++w;
                    }
                    int sk = small_index.at(LinkPattern(q));
                    ZPoly expect = pref * small.comps[static_cast<size_t>(sk)].map_vars(vars, embed);
                    if (spec != expect) {
                        rep.recurrence_ok = false;
                        rep.witness = "recurrence fails at i=" + std::to_string(i + 1) + ", pattern " +
                                      basis[k].str();
                        break;
                    }
                } else if (!spec.is_zero_poly()) {
                    rep.recurrence_ok = false;
                    rep.witness = "recurrence vanishing fails at i=" + std::to_string(i + 1) +
                                  ", pattern " + basis[k].str();
                    break;
                }
            }
        }
    }

    // wheel: zero at x_k = x_j + A = x_i + 2A
    rep.wheel_ok = true;
    for (int i = 0; i < 2 * n && rep.wheel_ok; ++i)
        for (int j = i + 1; j < 2 * n && rep.wheel_ok; ++j)
            for (int k = j + 1; k < 2 * n && rep.wheel_ok; ++k)
                for (size_t c = 0; c < basis.size(); ++c) {
                    ZPoly f = sol.comps[c]
                                  .substitute(j, ZPoly::variable(vars, i) +
                                                     ZPoly::variable(vars, vars - 1))
                                  .substitute(k, ZPoly::variable(vars, i) +
                                                     ZPoly::variable(vars, vars - 1).scale(BigInt(2)));
                    if (!f.is_zero_poly()) {
                        rep.wheel_ok = false;
                        rep.witness = "wheel fails at (" + std::to_string(i + 1) + "," +
                                      std::to_string(j + 1) + "," + std::to_string(k + 1) +
                                      "), pattern " + basis[c].str();
                        break;
                    }
                }
    return rep;
}

bool rational_limit_check(int n) {
    if (n > 3) throw size_guard_error("rational_limit_check: n must be <= 3");
    QkzSolution trig = qkz_solve(n);
    JosephSolution rat = joseph_solve(n);
    const auto& basis = cpl_basis(n);
    const int d = n * (n - 1);
    const int vars = 2 * n + 1;  // x_1..x_2n and the weight A

    // expansion of q^k prod z_i^{a_i} under q = -e^{-hA/2}, z_i = e^{-h x_i}:
    // (-1)^k sum_r (-h L)^r / r!, with the linear form L = k A/2 + sum a_i x_i
    auto expand = [&](const LPoly& p) {
        std::vector<QPoly> coeff(static_cast<size_t>(d) + 1, QPoly(vars));
        for (const auto& term : p.terms()) {
            for (const auto& [k, c] : term.second.terms()) {
                QPoly lin(vars);
                lin += QPoly::variable(vars, vars - 1, make_rational(k, 2));
                for (int v = 0; v < 2 * n; ++v)
                    if (term.first.get(v) != 0)
                        lin += QPoly::variable(vars, v, Rational(term.first.get(v)));
                Rational sign = k % 2 == 0 ? Rational(c) : Rational(-c);
                QPoly power = QPoly::constant(vars, Rational(1));
                Rational fact(1);
                for (int r = 0; r <= d; ++r) {
                    Rational s = sign / fact;
                    if (r % 2 == 1) s = -s;
                    coeff[static_cast<size_t>(r)] += power.scale(s);
                    if (r < d) {
                        power *= lin;
                        fact *= r + 1;
                    }
                }
            }
        }
        return coeff;
    };

    BigInt sign = (n * (n - 1) / 2) % 2 == 0 ? BigInt(1) : BigInt(-1);
    for (size_t k = 0; k < basis.size(); ++k) {
        auto coeff = expand(trig.comps[k]);
        for (int r = 0; r < d; ++r)
            if (!coeff[static_cast<size_t>(r)].is_zero_poly()) return false;
        QPoly expect = rat.comps[k].map_coeffs<Rational>([&](const BigInt& c) { return Rational(c * sign); });
        if (coeff[static_cast<size_t>(d)] != expect) return false;
    }
    return true;
}

}  // namespace lattica
