#include "lattica/fpl.hpp"

#include <algorithm>

#include "lattica/cpl.hpp"

namespace lattica {

namespace {

// parity rule: an edge is occupied iff its arrow points from the odd vertex
// to the even one ((i+j) even = even vertex); boundary stubs use the rule of
// the single vertex they touch
bool even_vertex(int i, int j) { return ((i + j) & 1) == 0; }

}  // namespace

FplConfig fpl_from_config(const SixVertexConfig& c) {
    int n = c.n;
    FplConfig f;
    f.n = n;
    f.occ_h.assign(static_cast<size_t>(n), std::vector<uint8_t>(static_cast<size_t>(n) + 1, 0));
    f.occ_v.assign(static_cast<size_t>(n) + 1, std::vector<uint8_t>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= n; ++j) {
            // edge between (i, j-1) and (i, j); arrow points right iff H
            bool right = c.H[i][j];
            bool occupied;
            if (j == 0) {
                occupied = right ? even_vertex(i, 0) : !even_vertex(i, 0);
            } else if (j == n) {
                occupied = right ? !even_vertex(i, n - 1) : even_vertex(i, n - 1);
            } else {
                // into (i,j) when pointing right: occupied iff target is even
                occupied = right ? even_vertex(i, j) : even_vertex(i, j - 1);
            }
            f.occ_h[i][j] = static_cast<uint8_t>(occupied);
        }
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j < n; ++j) {
            // edge between (i-1, j) and (i, j); arrow points up iff V
            bool up = c.V[i][j];
            bool occupied;
            if (i == 0) {
                occupied = up ? !even_vertex(0, j) : even_vertex(0, j);
            } else if (i == n) {
                occupied = up ? even_vertex(n - 1, j) : !even_vertex(n - 1, j);
            } else {
                // points up = from (i,j) to (i-1,j)
                occupied = up ? even_vertex(i - 1, j) : even_vertex(i, j);
            }
            f.occ_v[i][j] = static_cast<uint8_t>(occupied);
        }
    // each vertex must carry exactly one loop
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            int deg = f.occ_h[i][j] + f.occ_h[i][j + 1] + f.occ_v[i][j] + f.occ_v[i + 1][j];
            if (deg != 2) throw ring_error("fpl_from_config: vertex degree is not two");
        }
    return f;
}

namespace {

struct Stub {
    // kind 0: left  (edge occ_h[row][0])
    // kind 1: bottom(edge occ_v[n][col])
    // kind 2: right (edge occ_h[row][n])
    // kind 3: top   (edge occ_v[0][col])
    int kind;
    int idx;
};

// all boundary stubs counterclockwise from the top-left corner: down the left
// side, across the bottom, up the right side, back across the top
std::vector<Stub> boundary_circuit(int n) {
    std::vector<Stub> out;
    for (int i = 0; i < n; ++i) out.push_back({0, i});
    for (int j = 0; j < n; ++j) out.push_back({1, j});
    for (int i = n - 1; i >= 0; --i) out.push_back({2, i});
    for (int j = n - 1; j >= 0; --j) out.push_back({3, j});
    return out;
}

}  // namespace

LinkPattern fpl_boundary_pattern(const FplConfig& f) {
    int n = f.n;
    auto circuit = boundary_circuit(n);
    std::vector<Stub> occ;
    for (const Stub& s : circuit) {
        bool o = s.kind == 0 ? f.occ_h[s.idx][0]
               : s.kind == 1 ? f.occ_v[n][s.idx]
               : s.kind == 2 ? f.occ_h[s.idx][n]
                             : f.occ_v[0][s.idx];
        if (o) occ.push_back(s);
    }
    if (static_cast<int>(occ.size()) != 2 * n)
        throw ring_error("fpl_boundary_pattern: expected 2n occupied boundary stubs");

    // walk the loop from each occupied stub; state: position + direction
    // directions: 0 = east, 1 = north, 2 = west, 3 = south
    auto trace = [&](const Stub& start) -> Stub {
        int i, j, dir;
        switch (start.kind) {
            case 0: i = start.idx; j = 0; dir = 0; break;   // entering from the left
            case 1: i = n - 1; j = start.idx; dir = 1; break;  // from the bottom, heading up
            case 2: i = start.idx; j = n - 1; dir = 2; break;  // from the right
            default: i = 0; j = start.idx; dir = 3; break;     // from the top, heading down
        }
        while (true) {
            // at vertex (i,j), arrived moving in `dir`; pick the other
            // occupied edge
            int enter_edge;  // 0 east,1 north,2 west,3 south relative to (i,j)
            enter_edge = (dir + 2) % 4;
            int chosen = -1;
            for (int e = 0; e < 4; ++e) {
                if (e == enter_edge) continue;
                bool o = e == 0 ? f.occ_h[i][j + 1]
                       : e == 1 ? f.occ_v[i][j]
                       : e == 2 ? f.occ_h[i][j]
                                : f.occ_v[i + 1][j];
                if (o) { chosen = e; break; }
            }
            if (chosen < 0) throw ring_error("fpl_boundary_pattern: broken loop");
            // leave through `chosen`
            if (chosen == 0) {
                if (j + 1 == n) return {2, i};
                ++j;
                dir = 0;
            } else if (chosen == 1) {
                if (i == 0) return {3, j};
                --i;
                dir = 1;
            } else if (chosen == 2) {
                if (j == 0) return {0, i};
                --j;
                dir = 2;
            } else {
                if (i + 1 == n) return {1, j};
                ++i;
                dir = 3;
            }
        }
    };

    auto stub_number = [&](const Stub& s) {
        for (size_t k = 0; k < occ.size(); ++k)
            if (occ[k].kind == s.kind && occ[k].idx == s.idx) return static_cast<int>(k);
        throw ring_error("fpl_boundary_pattern: endpoint is not an occupied stub");
    };

    std::vector<int> pairing(occ.size(), -1);
    for (size_t k = 0; k < occ.size(); ++k) {
        if (pairing[k] >= 0) continue;
        Stub end = trace(occ[k]);
        int m = stub_number(end);
        if (m == static_cast<int>(k)) throw ring_error("fpl_boundary_pattern: path returned to its start");
        pairing[k] = m;
        pairing[static_cast<size_t>(m)] = static_cast<int>(k);
    }
    return LinkPattern(std::move(pairing));
}

std::map<LinkPattern, BigInt> fpl_census(int n, int guard) {
    std::map<LinkPattern, BigInt> tally;
    dwbc_enumerate(n, [&](const SixVertexConfig& c) {
        LinkPattern p = fpl_boundary_pattern(fpl_from_config(c));
        auto [it, fresh] = tally.try_emplace(p, BigInt(0));
        (void)fresh;
        it->second += 1;
    }, guard);
    return tally;
}

RsReport rs_check(int n, int frozen_offset) {
    RsReport rep;
    auto census = fpl_census(n);
    auto steady = cpl_steady_state(2 * n);
    const auto& basis = cpl_basis(n);
    BigInt an = asm_total(n);

    std::vector<Rational> census_ratios;
    std::map<LinkPattern, Rational> ratio;
    for (const auto& [pat, cnt] : census) ratio[pat] = make_rational(cnt, an);

    // multiset comparison
    std::vector<Rational> a = steady, b;
    for (const auto& kv : ratio) b.push_back(kv.second);
    for (size_t k = census.size(); k < basis.size(); ++k) b.push_back(Rational(0));
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    rep.multiset_ok = a == b;

    // entrywise after one global rotation of the labels
    auto try_offset = [&](int r) {
        for (size_t k = 0; k < basis.size(); ++k) {
            LinkPattern rot = basis[k].rotated(r);
            auto it = ratio.find(rot);
            Rational v = it == ratio.end() ? Rational(0) : it->second;
            if (!(v == steady[k])) return false;
        }
        return true;
    };
    if (frozen_offset >= 0) {
        rep.entrywise_ok = try_offset(frozen_offset);
        rep.rotation_offset = frozen_offset;
    } else {
        for (int r = 0; r < 2 * n; ++r)
            if (try_offset(r)) {
                rep.entrywise_ok = true;
                rep.rotation_offset = r;
                break;
            }
    }
    return rep;
}

}  // namespace lattica
