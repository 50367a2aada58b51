#ifndef LATTICA_JOSEPH_HPP
#define LATTICA_JOSEPH_HPP

#include <string>
#include <vector>

#include "lattica/linkpattern.hpp"
#include "lattica/multipoly.hpp"

namespace lattica {

// Rational (additive-parameter) analogue of the pattern-indexed polynomial
// family: variables x_1..x_{2n} (slots 0..2n-1) and the scaling weight
// (slot 2n).  Each component is homogeneous of degree n(n-1).
ZPoly joseph_base(int n);

struct JosephSolution {
    int n = 0;
    std::vector<ZPoly> comps;  // aligned with cpl_basis(n)
};
JosephSolution joseph_solve(int n);

struct JosephVerifyReport {
    bool divisibility_ok = false;  // unpaired neighbors: (A + x_i - x_{i+1}) | comp, symmetric quotient
    bool recurrence_ok = false;    // x_{i+1} = x_i + A against size n-1
    bool wheel_ok = false;         // vanishing at x_k = x_j + A = x_i + 2A
    std::string witness;
    bool all() const { return divisibility_ok && recurrence_ok && wheel_ok; }
};
JosephVerifyReport joseph_verify(int n);

// leading term of the trigonometric solution under q = -exp(-hA/2),
// z_i = exp(-h x_i) matches the rational components
bool rational_limit_check(int n);

}  // namespace lattica

#endif
