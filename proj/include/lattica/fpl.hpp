#ifndef LATTICA_FPL_HPP
#define LATTICA_FPL_HPP

#include <map>
#include <vector>

#include "lattica/linkpattern.hpp"
#include "lattica/sixvertex.hpp"

namespace lattica {

// Fully packed loop configuration: edge occupation on the n x n grid plus
// the alternating boundary stubs induced by domain-wall arrows.
struct FplConfig {
    int n = 0;
    // occ_h[i][j]: edge between vertices (i,j-1) and (i,j), j = 0..n where
    // j = 0 and j = n are boundary stubs;  occ_v[i][j] likewise vertical.
    std::vector<std::vector<uint8_t>> occ_h;  // n rows, n+1 entries
    std::vector<std::vector<uint8_t>> occ_v;  // n+1 rows, n columns
};

FplConfig fpl_from_config(const SixVertexConfig& c);

// boundary pairing of the 2n occupied stubs, numbered counterclockwise
// starting from the top-left occupied one
LinkPattern fpl_boundary_pattern(const FplConfig& f);

// counts per link pattern over all DWBC configurations
std::map<LinkPattern, BigInt> fpl_census(int n, int guard = 5);

struct RsReport {
    bool multiset_ok = false;
    bool entrywise_ok = false;
    int rotation_offset = -1;
};
// steady state of the cylinder chain against the census ratios
RsReport rs_check(int n, int frozen_offset = -1);

}  // namespace lattica

#endif
