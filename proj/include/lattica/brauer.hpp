#ifndef LATTICA_BRAUER_HPP
#define LATTICA_BRAUER_HPP

#include <string>
#include <vector>

#include "lattica/linkpattern.hpp"
#include "lattica/multipoly.hpp"

namespace lattica {

// Components indexed by crossing link patterns (all fixed-point-free
// involutions of Z/NZ).  Variables: x_1..x_N (slots 0..N-1), the scaling
// weight A (slot N) and the shift eps (slot N+1); wraparound uses
// x_{i+N} = x_i + eps.  Degree of every component is 2 n (n-1), N = 2n.
struct BrauerSolution {
    int N = 0;
    std::vector<LinkPattern> patterns;
    std::vector<ZPoly> comps;

    const ZPoly& at(const LinkPattern& p) const;
};

ZPoly brauer_base(int N);

// breadth-first build over adjacent-transposition moves from the maximally
// crossed pattern; path independence is asserted on every revisit
BrauerSolution brauer_solve(int N);

struct BrauerVerifyReport {
    bool arch_constraint_ok = false;  // little-arch divided-difference relation
    bool wheel_ok = false;
    std::string witness;
    bool all() const { return arch_constraint_ok && wheel_ok; }
};
BrauerVerifyReport brauer_verify(const BrauerSolution& s);

struct BrauerDegenerateReport {
    bool noncrossing_ok = false;  // leading coefficient in B = A - eps recovers the rational family
    bool permutation_ok = false;  // crossed sector factors through the double polynomials
    bool all() const { return noncrossing_ok && permutation_ok; }
};
BrauerDegenerateReport brauer_degenerate_checks();  // N = 4

}  // namespace lattica

#endif
