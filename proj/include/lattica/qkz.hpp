#ifndef LATTICA_QKZ_HPP
#define LATTICA_QKZ_HPP

#include <string>
#include <vector>

#include "lattica/cpl.hpp"
#include "lattica/laurent.hpp"
#include "lattica/linkpattern.hpp"
#include "lattica/multipoly.hpp"

namespace lattica {

using LPoly = MultiPoly<LaurentQ>;
using TauPoly = MultiPoly<BigInt>;  // univariate in tau

// Polynomial eigenvector family over link patterns: one homogeneous
// polynomial of degree n(n-1) in z_1..z_{2n} per noncrossing pattern,
// indexed in the canonical pattern order.
struct QkzSolution {
    int n = 0;
    std::vector<LPoly> comps;   // aligned with cpl_basis(n)
    std::string normalization;  // record of the base component convention
};

// base component: prod_{1<=i<j<=n} (q z_i - z_j/q) * prod_{n+1<=i<j<=2n} (z_j/q - q z_i)
LPoly qkz_base(int n);

// triangular build by box additions; asserts agreement across all parents
QkzSolution qkz_solve(int n);

// action of the loop generators on a component vector, with loop weight tau
std::vector<LPoly> tl_apply_e(int i, const std::vector<LPoly>& v, int n);

struct QkzVerifyReport {
    bool exchange_ok = false;
    bool cyclic_ok = false;
    bool wheel_ok = false;
    bool recurrence_ok = false;
    bool dyck_ok = false;
    std::string witness;  // first failure, if any
    bool all() const { return exchange_ok && cyclic_ok && wheel_ok && recurrence_ok && dyck_ok; }
};
QkzVerifyReport verify_solution(const QkzSolution& s);

// R-matrix structure on the pattern representation: unitarity and the
// Yang-Baxter relation, checked fraction-free at symbolic z, w
bool rmatrix_checks(int n);

// sum of components against the double-staircase Schur polynomial at the
// third root of unity, plus the all-ones total
bool sum_rule_check(int n);

// z = 1 components divided by the base value, rewritten in tau
std::vector<TauPoly> homogeneous_tau(const QkzSolution& s);
std::vector<TauPoly> homogeneous_tau(int n);

struct ThreeArchReport {
    bool values_ok = false;       // tau = 1 components match box counts
    bool recurrence_ok = false;   // specialization structure of the kagome recursion
    bool base_ok = false;         // c = 0 initial condition
    int patterns_checked = 0;
    bool all() const { return values_ok && recurrence_ok && base_ok; }
};
ThreeArchReport three_arch_check(int n);

// circular fan decomposition; empty when the pattern is not a three-fan
std::vector<int> three_arch_profile(const LinkPattern& p);

// Chebyshev coefficients (q^{k+1} - q^{-(k+1)})/(q - q^{-1}) as tau-polynomials
TauPoly chebyshev_u(int k);

// homogeneous component of the intermediate basis by coefficient extraction
TauPoly component_ct(int n, const std::vector<int>& a);

// rebuild all tau-components through the triangular change of basis and
// compare with homogeneous_tau
bool component_ct_reconstruction(int n);

}  // namespace lattica

#endif
