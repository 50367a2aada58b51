#ifndef LATTICA_SIXVERTEX_HPP
#define LATTICA_SIXVERTEX_HPP

#include <functional>
#include <vector>

#include "lattica/laurent.hpp"
#include "lattica/multipoly.hpp"
#include "lattica/partition.hpp"
#include "lattica/series.hpp"
#include "lattica/tilings.hpp"

namespace lattica {

// n x n grid of arrow states.  H[i][j] (j = 0..n) is true when the
// horizontal edge left of vertex (i,j) points right; V[i][j] (i = 0..n) is
// true when the vertical edge above vertex (i,j) points up.  Row 0 is the
// top row.  Domain-wall boundaries: vertical boundary edges point out,
// horizontal boundary edges point in.
struct SixVertexConfig {
    int n = 0;
    std::vector<std::vector<uint8_t>> H;  // n rows, n+1 entries
    std::vector<std::vector<uint8_t>> V;  // n+1 rows, n entries
};

enum class VertexType { A1, A2, B1, B2, C1, C2 };

VertexType vertex_type(const SixVertexConfig& c, int i, int j);
bool check_conservation(const SixVertexConfig& c);

// Every DWBC configuration exactly once (row-major DFS with propagation).
void dwbc_enumerate(int n, const std::function<void(const SixVertexConfig&)>& visit, int guard = 7);

// Serial reference count and the OpenMP kernel split by first-row prefix.
BigInt dwbc_count_serial(int n, int guard = 7);
BigInt dwbc_count_parallel(int n, int guard = 7);

// partial configurations with row 0 fixed, for parallel fan-out
std::vector<SixVertexConfig> dwbc_first_row_states(int n);
void dwbc_enumerate_tail(SixVertexConfig& c, int start_row,
                         const std::function<void(const SixVertexConfig&)>& visit);

// ---- weighted partition function ----------------------------------------

using LPoly = MultiPoly<LaurentQ>;

// Z_n with symbolic x_1..x_n, y_1..y_n (variables 0..n-1 and n..2n-1) and
// symbolic q; vertex weights a = q y/x - x/(q y), b = y/x - x/y, c = q - 1/q
// evaluated at the ratio y_j / x_i.
LPoly partition_function_brute(int n, int guard = 5);

// Determinant evaluation of the same function; the prefactor division is
// exact over the Laurent ring.
LPoly izergin_symbolic(int n);

// Numeric evaluation over exact rationals; x, y must avoid the poles.
Rational izergin_numeric(int n, const Rational& q, const std::vector<Rational>& x,
                         const std::vector<Rational>& y);

struct KorepinReport {
    bool z1_ok = false;
    bool symmetric_ok = false;
    bool degree_ok = false;
    bool recursion_brute_ok = false;
    bool recursion_izergin_ok = false;
    bool all() const { return z1_ok && symmetric_ok && degree_ok && recursion_brute_ok && recursion_izergin_ok; }
};
KorepinReport korepin_check(int n);

// ---- alternating sign matrices -------------------------------------------

struct ASMMatrix {
    int n = 0;
    std::vector<std::vector<int>> a;
};

bool asm_valid(const ASMMatrix& m);
ASMMatrix asm_from_config(const SixVertexConfig& c);
SixVertexConfig config_from_asm(const ASMMatrix& m);

struct AsmCounts {
    BigInt total;
    std::vector<BigInt> refined;  // by column of the 1 in the first row
};
AsmCounts asm_counts(int n, int guard = 7);

// all-ones Schur evaluation against the counting product, plus the symbolic
// two-variable specialization identity at the sixth root of unity
bool schur_identification_check(int n);

// ---- Hankel/Toda identity -------------------------------------------------

struct TodaReport {
    bool degenerate = false;  // tau_n vanished to working order; nothing to check
    bool ok = false;
};
// tau_k = det(phi^{(i+j)})_{0..k-1} / (prod_{j<k} j!)^2 ;
// checks n^2 tau_{n+1} tau_{n-1} = tau_n tau_n'' - (tau_n')^2
TodaReport toda_chain_check(const TruncatedSeries<Rational>& phi, int n);

}  // namespace lattica

#endif
