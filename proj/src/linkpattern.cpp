#include "lattica/linkpattern.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace lattica {

LinkPattern::LinkPattern(std::vector<int> pairing) : pi_(std::move(pairing)) {
    int m = points();
    if (m % 2 != 0) throw ring_error("LinkPattern: odd number of points");
    for (int i = 0; i < m; ++i) {
        int j = pi_[static_cast<size_t>(i)];
        if (j < 0 || j >= m || j == i || pi_[static_cast<size_t>(j)] != i)
            throw ring_error("LinkPattern: not a fixed-point-free involution");
    }
}

LinkPattern LinkPattern::fully_nested(int n) {
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<size_t>(i)] = 2 * n - 1 - i;
        p[static_cast<size_t>(2 * n - 1 - i)] = i;
    }
    return LinkPattern(std::move(p));
}

LinkPattern LinkPattern::nearest_neighbor(int n) {
    std::vector<int> p(static_cast<size_t>(2 * n));
    for (int i = 0; i < n; ++i) {
        p[static_cast<size_t>(2 * i)] = 2 * i + 1;
        p[static_cast<size_t>(2 * i + 1)] = 2 * i;
    }
    return LinkPattern(std::move(p));
}

bool LinkPattern::noncrossing() const {
    int m = points();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int pi = partner(i), pj = partner(j);
            if (i < j && j < pi && pi < pj) return false;
        }
    return true;
}

LinkPattern LinkPattern::rotated(int steps) const {
    int m = points();
    steps = ((steps % m) + m) % m;
    std::vector<int> p(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) p[static_cast<size_t>((i + steps) % m)] = (partner(i) + steps) % m;
    return LinkPattern(std::move(p));
}

std::string LinkPattern::str() const {
    std::string s;
    for (int i = 0; i < points(); ++i) {
        int j = partner(i);
        if (j < i) continue;
        s += "(" + std::to_string(i + 1) + " " + std::to_string(j + 1) + ")";
    }
    return s;
}

std::vector<int> opening_positions(const LinkPattern& p) {
    std::vector<int> a;
    for (int i = 0; i < p.points(); ++i)
        if (p.partner(i) > i) a.push_back(i);
    return a;
}

Partition pattern_to_young(const LinkPattern& p) {
    if (!p.noncrossing()) throw ring_error("pattern_to_young: pattern has crossings");
    int n = p.n();
    std::vector<int> a = opening_positions(p);  // 0-based, ascending, size n
    std::vector<int> lam;
    for (int i = 0; i < n; ++i) {
        // 1-based openings a_k = lambda_{n+1-k} + k
        int k = n - i;  // row i (0-based) uses opening k
        lam.push_back(a[static_cast<size_t>(k - 1)] + 1 - k);
    }
    return Partition(std::move(lam));
}

LinkPattern young_to_pattern(const Partition& lam, int n) {
    std::vector<bool> open(static_cast<size_t>(2 * n), false);
    for (int k = 1; k <= n; ++k) {
        int a = lam.part(n - k) + k;  // 1-based opening position
        if (a < 1 || a > 2 * n || open[static_cast<size_t>(a - 1)])
            throw ring_error("young_to_pattern: diagram does not fit the staircase");
        open[static_cast<size_t>(a - 1)] = true;
    }
    // match closings to the nearest unmatched opening, parenthesis-wise
    std::vector<int> stack, p(static_cast<size_t>(2 * n), -1);
    for (int i = 0; i < 2 * n; ++i) {
        if (open[static_cast<size_t>(i)]) {
            stack.push_back(i);
        } else {
            if (stack.empty()) throw ring_error("young_to_pattern: unbalanced profile");
            int j = stack.back();
            stack.pop_back();
            p[static_cast<size_t>(i)] = j;
            p[static_cast<size_t>(j)] = i;
        }
    }
    if (!stack.empty()) throw ring_error("young_to_pattern: unbalanced profile");
    return LinkPattern(std::move(p));
}

std::vector<LinkPattern> link_patterns(int n) {
    if (n > 8) throw ring_error("link_patterns: n must be <= 8");
    std::vector<std::pair<Partition, LinkPattern>> all;
    for (const Partition& lam : partitions_up_to(n * (n - 1) / 2)) {
        bool fits = true;
        for (int i = 0; i < lam.rows(); ++i)
            if (lam.part(i) > n - 1 - i) { fits = false; break; }
        if (!fits) continue;
        all.emplace_back(lam, young_to_pattern(lam, n));
    }
    std::sort(all.begin(), all.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<LinkPattern> out;
    out.reserve(all.size());
    for (auto& kv : all) out.push_back(std::move(kv.second));
    return out;
}

std::pair<LinkPattern, int> tl_e(int i, const LinkPattern& p) {
    int m = p.points();
    if (i < 0 || i >= m) throw ring_error("tl_e: generator index out of range");
    if (i == m - 1) {
        // affine generator via rotation conjugation
        auto [img, loops] = tl_e(m - 2, p.rotated(-1));
        return {img.rotated(1), loops};
    }
    return brauer_e(i, p);
}

std::pair<LinkPattern, int> brauer_e(int i, const LinkPattern& p) {
    int m = p.points();
    int j = (i + 1) % m;
    std::vector<int> q = p.pairing();
    int a = p.partner(i), b = p.partner(j);
    if (a == j) {
        return {p, 1};  // closed loop
    }
    q[static_cast<size_t>(i)] = j;
    q[static_cast<size_t>(j)] = i;
    q[static_cast<size_t>(a)] = b;
    q[static_cast<size_t>(b)] = a;
    return {LinkPattern(std::move(q)), 0};
}

LinkPattern brauer_f(int i, const LinkPattern& p) {
    int m = p.points();
    int j = (i + 1) % m;
    std::vector<int> q(static_cast<size_t>(m));
    auto swap_pt = [&](int x) { return x == i ? j : x == j ? i : x; };
    for (int x = 0; x < m; ++x) q[static_cast<size_t>(swap_pt(x))] = swap_pt(p.partner(x));
    return LinkPattern(std::move(q));
}

std::vector<LinkPattern> crossing_link_patterns(int n) {
    std::vector<LinkPattern> out;
    std::vector<int> p(static_cast<size_t>(2 * n), -1);
    std::function<void()> rec = [&]() {
        int i = -1;
        for (int k = 0; k < 2 * n; ++k)
            if (p[static_cast<size_t>(k)] < 0) { i = k; break; }
        if (i < 0) {
            out.push_back(LinkPattern(p));
            return;
        }
        for (int j = i + 1; j < 2 * n; ++j) {
            if (p[static_cast<size_t>(j)] >= 0) continue;
            p[static_cast<size_t>(i)] = j;
            p[static_cast<size_t>(j)] = i;
            rec();
            p[static_cast<size_t>(i)] = -1;
            p[static_cast<size_t>(j)] = -1;
        }
    };
    rec();
    return out;
}

}  // namespace lattica
