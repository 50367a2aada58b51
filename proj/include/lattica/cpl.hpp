#ifndef LATTICA_CPL_HPP
#define LATTICA_CPL_HPP

#include <map>
#include <vector>

#include "lattica/linkpattern.hpp"
#include "lattica/matrix.hpp"

namespace lattica {

// Column-stochastic transfer matrix of the tau = 1 plaquette model on a
// cylinder of even circumference L: a full row of random tiles is applied
// face by face along an auxiliary strand which is then closed around the
// cylinder.  T[r][c] is the probability that pattern c turns into pattern r.
ExactMatrix<Rational> cpl_transfer(int L, const Rational& p, bool parallel = true);

// connectivity rewiring of one fixed row; word bit i picks the tile at face i
LinkPattern cpl_apply_row(const LinkPattern& in, unsigned long word);

// Exact Perron vector of cpl_transfer: kernel of (T - I), normalized to total
// mass one.  Entries come out strictly positive; a kernel of dimension != 1
// is an internal error.
std::vector<Rational> cpl_steady_state(int L);

// order used for vectors over link patterns
const std::vector<LinkPattern>& cpl_basis(int n);

}  // namespace lattica

#endif
