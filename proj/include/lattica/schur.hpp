#ifndef LATTICA_SCHUR_HPP
#define LATTICA_SCHUR_HPP

#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "lattica/matrix.hpp"
#include "lattica/multipoly.hpp"
#include "lattica/partition.hpp"

namespace lattica {

// ---- complete homogeneous and elementary symmetric polynomials ----------
// h_k and e_k in n variables, generated by prod 1/(1-z x_i) and prod (1+z x_i).
// Cached per (k, n): every Jacobi-Trudi determinant entry reuses them.

namespace detail {
ZPoly hk_uncached(int k, int n);
ZPoly ek_uncached(int k, int n);

template <class F>
const ZPoly& sym_cache(int k, int n, std::map<std::pair<int, int>, ZPoly>& cache, std::mutex& mu, F&& make) {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(k, n);
    auto it = cache.find(key);
    if (it == cache.end()) it = cache.emplace(key, make(k, n)).first;
    return it->second;
}
}  // namespace detail

const ZPoly& complete_h(int k, int n);
const ZPoly& elementary_e(int k, int n);

// ---- Schur polynomials, four independent routes -------------------------

// Sum over semistandard tableaux of (skew) shape, alphabet {1..n}.
ZPoly schur_ssyt(const SkewShape& shape, int n);
inline ZPoly schur_ssyt(const Partition& lambda, int n) { return schur_ssyt(SkewShape(lambda), n); }

// det(h_{lambda_q - mu_p - q + p})
ZPoly schur_jacobi_trudi(const SkewShape& shape, int n);
inline ZPoly schur_jacobi_trudi(const Partition& lambda, int n) {
    return schur_jacobi_trudi(SkewShape(lambda), n);
}

// det(e_{lambda'_q - mu'_p - q + p})
ZPoly schur_dual_jt(const SkewShape& shape, int n);
inline ZPoly schur_dual_jt(const Partition& lambda, int n) { return schur_dual_jt(SkewShape(lambda), n); }

// det(x_i^{lambda_j + n - j}) / Vandermonde; requires length(lambda) <= n.
ZPoly schur_weyl(const Partition& lambda, int n);

// s_lambda expressed in power-sum coordinates t_1..t_D, rational coefficients.
QPoly schur_powersum(const Partition& lambda, int order);

// dimension-style product evaluation s_lambda(1,...,1) over n variables
BigInt schur_all_ones(const Partition& lambda, int n);

// sum_{|lambda|<=D} s_lambda(x) s_lambda(y) == prod 1/(1-x_i y_j), both sides
// truncated at total degree 2D in the combined variables
bool cauchy_check(int n, int m, int degree);

}  // namespace lattica

#endif
