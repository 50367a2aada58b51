#ifndef LATTICA_FN_HPP
#define LATTICA_FN_HPP

#include "lattica/multipoly.hpp"
#include "lattica/ring.hpp"

namespace lattica {

// Refined generating polynomials F_n(t, tau), variables (t, tau), computed by
// coefficient extraction from two different integrands.
MultiPoly<BigInt> fn_ct(int n);
MultiPoly<BigInt> fn_sym(int n);

struct FnReport {
    bool ct_equals_sym = false;
    bool top_coefficient_ok = false;  // F_n |_{t^{n-1}} = F_{n-1}(tau)
    bool at_zero_ok = false;          // F_n(0) = tau^{n-1} F_{n-1}(1/tau)
    bool tsscpp_ok = false;           // F_n(1) matches the tau-weighted tilings
    bool refined_asm_ok = false;      // tau = 1 row matches the refined counts
    bool all() const {
        return ct_equals_sym && top_coefficient_ok && at_zero_ok && tsscpp_ok && refined_asm_ok;
    }
};
FnReport fn_properties(int n);

}  // namespace lattica

#endif
