#ifndef LATTICA_TILINGS_HPP
#define LATTICA_TILINGS_HPP

#include <functional>
#include <vector>

#include "lattica/laurent.hpp"
#include "lattica/multipoly.hpp"
#include "lattica/ring.hpp"

namespace lattica {

// Columns of cubes in an a x b corner, heights weakly decreasing both ways.
struct BoxedPlanePartition {
    int a = 0, b = 0, c = 0;
    std::vector<std::vector<int>> heights;  // a rows, b columns, entries 0..c
};

// exact product  prod_{i,j,k} (i+j+k-1)/(i+j+k-2)
BigInt macmahon(int a, int b, int c);

// q-deformation  prod (1-q^{i+j+k-1})/(1-q^{i+j+k-2}); minimal exponent 0
LaurentQ macmahon_q(int a, int b, int c);

// enumerate all boxed plane partitions; throws size_guard_error over the cap
void plane_partitions_foreach(int a, int b, int c,
                              const std::function<void(const BoxedPlanePartition&)>& visit,
                              long guard = 24);
BigInt plane_partitions_brute(int a, int b, int c);
// with a weight per column slice; reproduces the rectangular Schur polynomial
// s_{b x c}(x_1..x_{a+b})
MultiPoly<BigInt> plane_partitions_weighted(int a, int b, int c);

// the two classical identities re-deriving the box count
bool auxiliary_identities_check(int a, int b, int c);

// N_n(tau): coefficient of prod u_i^{2i-1} in the truncated expansion of
// prod_{i<j} (u_j-u_i)/(1-u_i u_j) * prod_i (1+tau u_i)^i/(1-u_i)
MultiPoly<BigInt> tsscpp_ct(int n);  // univariate in tau

// same polynomial from nonintersecting path families with weighted steps
MultiPoly<BigInt> tsscpp_brute(int n);

// product form for the tau = 1 total
BigInt tsscpp_total(int n);  // prod (3i+1)!/(n+i)!

BigInt asm_total(int n);  // the same product, under its other name

}  // namespace lattica

#endif
