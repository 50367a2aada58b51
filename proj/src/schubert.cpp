#include "lattica/schubert.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "lattica/schur.hpp"

namespace lattica {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
    std::vector<bool> seen(w_.size(), false);
    for (int v : w_) {
        if (v < 1 || v > static_cast<int>(w_.size()) || seen[static_cast<size_t>(v - 1)])
            throw ring_error("Permutation: not a bijection");
        seen[static_cast<size_t>(v - 1)] = true;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    return Permutation(std::move(w));
}

Permutation Permutation::longest(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = n - i;
    return Permutation(std::move(w));
}

int Permutation::inversions() const {
    int inv = 0;
    for (size_t i = 0; i < w_.size(); ++i)
        for (size_t j = i + 1; j < w_.size(); ++j)
            if (w_[i] > w_[j]) ++inv;
    return inv;
}

Permutation Permutation::swap_positions(int i) const {
    std::vector<int> w = w_;
    std::swap(w[static_cast<size_t>(i - 1)], w[static_cast<size_t>(i)]);
    return Permutation(std::move(w));
}

Permutation Permutation::inverse() const {
    std::vector<int> w(w_.size());
    for (size_t i = 0; i < w_.size(); ++i) w[static_cast<size_t>(w_[i] - 1)] = static_cast<int>(i) + 1;
    return Permutation(std::move(w));
}

std::vector<Permutation> all_permutations(int n) {
    std::vector<int> w(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) w[static_cast<size_t>(i)] = i + 1;
    std::vector<Permutation> out;
    do {
        out.push_back(Permutation(w));
    } while (std::next_permutation(w.begin(), w.end()));
    return out;
}

namespace {

// Pipedream tiles fill the cells (r, c), 1-based, r + c <= N; the hypotenuse
// half-tiles are forced elbows.  Strand from row r on the left exits on top.
struct PipedreamWalk {
    int n;
    const std::vector<std::vector<uint8_t>>& cross;  // cross[r][c], 1-based grid

    // returns the exit column of the strand entering at row r, 1-based
    int trace(int r) const {
        int i = r, j = 1;
        bool east = true;  // heading east, else north
        while (true) {
            if (i + j == n + 1) {
                // forced elbow on the hypotenuse
                if (!east) throw ring_error("pipedream: trace left the triangle");
                east = false;
                --i;
                if (i == 0) return j;
                continue;
            }
            bool x = cross[static_cast<size_t>(i)][static_cast<size_t>(j)];
            if (x) {
                // pass through
                if (east) ++j;
                else {
                    --i;
                    if (i == 0) return j;
                }
            } else {
                // elbow: east turns north, north turns east
                if (east) {
                    east = false;
                    --i;
                    if (i == 0) return j;
                } else {
                    east = true;
                    ++j;
                }
            }
        }
    }
};

// enumerate reduced fillings; visit(cross) for each filling realizing sigma
void enumerate_pipedreams(const Permutation& sigma,
                          const std::function<void(const std::vector<std::vector<uint8_t>>&)>& visit) {
    int n = sigma.size();
    if (n > 6) throw ring_error("pipedreams: N must be <= 6");
    std::vector<std::pair<int, int>> cells;
    for (int r = 1; r < n; ++r)
        for (int c = 1; r + c <= n; ++c) cells.emplace_back(r, c);
    std::vector<std::vector<uint8_t>> cross(static_cast<size_t>(n) + 1,
                                            std::vector<uint8_t>(static_cast<size_t>(n) + 1, 0));
    PipedreamWalk walk{n, cross};
    std::function<void(size_t)> rec = [&](size_t k) {
        if (k == cells.size()) {
            // reduced check: no two strands cross twice; strand map must be sigma
            std::vector<int> exit(static_cast<size_t>(n) + 1, 0);
            for (int r = 1; r <= n; ++r) exit[static_cast<size_t>(r)] = walk.trace(r);
            for (int r = 1; r <= n; ++r)
                if (exit[static_cast<size_t>(r)] != sigma(r)) return;
            int inv = sigma.inversions();
            int crossings = 0;
            for (const auto& [r, c] : cells) crossings += cross[static_cast<size_t>(r)][static_cast<size_t>(c)];
            if (crossings != inv) return;  // non-reduced fillings repeat a pair
            visit(cross);
            return;
        }
        auto [r, c] = cells[k];
        for (int v = 0; v <= 1; ++v) {
            cross[static_cast<size_t>(r)][static_cast<size_t>(c)] = static_cast<uint8_t>(v);
            rec(k + 1);
        }
        cross[static_cast<size_t>(r)][static_cast<size_t>(c)] = 0;
    };
    rec(0);
}

}  // namespace

ZPoly schubert_pipedream(const Permutation& sigma) {
    int n = sigma.size();
    int vars = 2 * n;
    ZPoly out(vars);
    enumerate_pipedreams(sigma, [&](const std::vector<std::vector<uint8_t>>& cross) {
        ZPoly w = ZPoly::constant(vars, BigInt(1));
        for (int r = 1; r < n; ++r)
            for (int c = 1; r + c <= n; ++c)
                if (cross[static_cast<size_t>(r)][static_cast<size_t>(c)])
                    w *= ZPoly::variable(vars, r - 1) - ZPoly::variable(vars, n + c - 1);
        out += w;
    });
    return out;
}

long pipedream_count(const Permutation& sigma) {
    long k = 0;
    enumerate_pipedreams(sigma, [&](const std::vector<std::vector<uint8_t>>&) { ++k; });
    return k;
}

ZPoly schubert_nilhecke(const Permutation& sigma) {
    int n = sigma.size();
    int vars = 2 * n;
    std::map<Permutation, ZPoly> memo;
    ZPoly top = ZPoly::constant(vars, BigInt(1));
    for (int i = 1; i <= n; ++i)
        for (int j = 1; i + j <= n; ++j)
            top *= ZPoly::variable(vars, i - 1) - ZPoly::variable(vars, n + j - 1);
    memo.emplace(Permutation::longest(n), std::move(top));
    std::function<const ZPoly&(const Permutation&)> get = [&](const Permutation& s) -> const ZPoly& {
        auto it = memo.find(s);
        if (it != memo.end()) return it->second;
        // first ascent: s with values at (i, i+1) swapped has one more inversion
        int asc = -1;
        for (int i = 1; i < n; ++i)
            if (s(i) < s(i + 1)) { asc = i; break; }
        if (asc < 0) throw ring_error("schubert_nilhecke: no ascent below the longest element");
        const ZPoly& up = get(s.swap_positions(asc));
        ZPoly val = divided_difference(asc - 1, up);
        return memo.emplace(s, std::move(val)).first->second;
    };
    return get(sigma);
}

std::optional<std::pair<int, Partition>> grassmannian_shape(const Permutation& sigma) {
    int n = sigma.size();
    int descent = -1;
    for (int i = 1; i < n; ++i) {
        if (sigma(i) > sigma(i + 1)) {
            if (descent >= 0) return std::nullopt;
            descent = i;
        }
    }
    if (descent < 0) return std::make_pair(0, Partition());  // identity
    std::vector<int> lam;
    for (int i = descent; i >= 1; --i) lam.push_back(sigma(i) - i);
    return std::make_pair(descent, Partition(std::move(lam)));
}

bool factorial_schur_check(const Permutation& sigma) {
    auto gr = grassmannian_shape(sigma);
    if (!gr) throw ring_error("factorial_schur_check: permutation has more than one descent");
    auto [k, lam] = *gr;
    int n = sigma.size();
    int vars = 2 * n;
    ZPoly xi = schubert_pipedream(sigma);
    // specialize all y to zero
    for (int j = 0; j < n; ++j) xi = xi.substitute(n + j, ZPoly(vars));
    int letters = k == 0 ? 1 : k;
    ZPoly expect = schur_ssyt(lam, letters).map_vars(vars, [&] {
        std::vector<int> w;
        for (int i = 0; i < letters; ++i) w.push_back(i);
        return w;
    }());
    return xi == expect;
}

}  // namespace lattica
