#include "lattica/cpl.hpp"

#include <algorithm>
#include <mutex>

#include "lattica/tilings.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace lattica {

const std::vector<LinkPattern>& cpl_basis(int n) {
    static std::map<int, std::vector<LinkPattern>> cache;
    static std::mutex mu;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, link_patterns(n)).first;
    return it->second;
}

namespace {

// Open-strand bookkeeping: ends carry integer ids, other[] links the two ends
// of each strand.  Joining two ends of one strand closes a loop (dropped at
// tau = 1).
struct Strands {
    std::vector<int> other;

    int fresh() {
        other.push_back(-1);
        return static_cast<int>(other.size()) - 1;
    }
    void pair_ends(int a, int b) {
        other[static_cast<size_t>(a)] = b;
        other[static_cast<size_t>(b)] = a;
    }
    // join open ends a and b; returns true when this closed a loop
    bool join(int a, int b) {
        int a2 = other[static_cast<size_t>(a)];
        int b2 = other[static_cast<size_t>(b)];
        if (a2 == b) return true;
        pair_ends(a2, b2);
        other[static_cast<size_t>(a)] = -2;
        other[static_cast<size_t>(b)] = -2;
        return false;
    }
};

}  // namespace

LinkPattern cpl_apply_row(const LinkPattern& in, unsigned long word) {
    int L = in.points();
    Strands s;
    std::vector<int> bottom(static_cast<size_t>(L)), top(static_cast<size_t>(L));
    for (int i = 0; i < L; ++i) bottom[static_cast<size_t>(i)] = s.fresh();
    for (int i = 0; i < L; ++i)
        if (in.partner(i) > i)
            s.pair_ends(bottom[static_cast<size_t>(i)], bottom[static_cast<size_t>(in.partner(i))]);
    int aux_start = s.fresh();
    int carrier = s.fresh();
    s.pair_ends(aux_start, carrier);
    for (int i = 0; i < L; ++i) {
        int t = s.fresh();
        top[static_cast<size_t>(i)] = t;
        if ((word >> i) & 1ul) {
            // tile joining (west, south) and (north, east)
            s.join(carrier, bottom[static_cast<size_t>(i)]);
            int e = s.fresh();
            s.pair_ends(t, e);
            carrier = e;
        } else {
            // tile joining (west, north) and (south, east)
            int far = s.other[static_cast<size_t>(carrier)];
            s.pair_ends(far, t);
            carrier = bottom[static_cast<size_t>(i)];
        }
    }
    s.join(carrier, aux_start);
    std::vector<int> out(static_cast<size_t>(L), -1);
    for (int i = 0; i < L; ++i) {
        int j = s.other[static_cast<size_t>(top[static_cast<size_t>(i)])];
        // every surviving open end must be a top point
        int found = -1;
        for (int k = 0; k < L; ++k)
            if (top[static_cast<size_t>(k)] == j) { found = k; break; }
        if (found < 0) throw ring_error("cpl_apply_row: dangling strand end");
        out[static_cast<size_t>(i)] = found;
    }
    return LinkPattern(std::move(out));
}

ExactMatrix<Rational> cpl_transfer(int L, const Rational& p, bool parallel) {
    if (L < 2 || L % 2 != 0) throw ring_error("cpl_transfer: L must be even and positive");
    if (L > 12) throw size_guard_error("cpl_transfer: L must be <= 12");
    if (!(p > 0 && p < 1)) throw ring_error("cpl_transfer: p must satisfy 0 < p < 1");
    int n = L / 2;
    const auto& basis = cpl_basis(n);
    int c = static_cast<int>(basis.size());
    std::map<LinkPattern, int> index;
    for (int i = 0; i < c; ++i) index[basis[static_cast<size_t>(i)]] = i;

    // probability of a word by tile count
    std::vector<Rational> prob(static_cast<size_t>(L) + 1);
    for (int k = 0; k <= L; ++k) {
        Rational w(1);
        for (int t = 0; t < k; ++t) w *= p;
        for (int t = 0; t < L - k; ++t) w *= Rational(1) - p;
        prob[static_cast<size_t>(k)] = w;
    }

    ExactMatrix<Rational> tm(c, c, Rational(0));
    const unsigned long words = 1ul << L;

    auto accumulate_words = [&](unsigned long lo, unsigned long hi, ExactMatrix<Rational>& out) {
        for (unsigned long w = lo; w < hi; ++w) {
            int ones = __builtin_popcountl(w);
            for (int col = 0; col < c; ++col) {
                LinkPattern img = cpl_apply_row(basis[static_cast<size_t>(col)], w);
                out.at(index.at(img), col) += prob[static_cast<size_t>(ones)];
            }
        }
    };

#ifdef _OPENMP
    if (parallel) {
        int nt = omp_get_max_threads();
        std::vector<ExactMatrix<Rational>> local(static_cast<size_t>(nt), ExactMatrix<Rational>(c, c, Rational(0)));
#pragma omp parallel
        {
            int id = omp_get_thread_num();
#pragma omp for schedule(static)
            for (long w = 0; w < static_cast<long>(words); ++w)
                accumulate_words(static_cast<unsigned long>(w), static_cast<unsigned long>(w) + 1,
                                 local[static_cast<size_t>(id)]);
        }
        for (const auto& m : local)
            for (int i = 0; i < c; ++i)
                for (int j = 0; j < c; ++j) tm.at(i, j) += m.at(i, j);
        return tm;
    }
#else
    (void)parallel;
#endif
    accumulate_words(0, words, tm);
    return tm;
}

std::vector<Rational> cpl_steady_state(int L) {
    ExactMatrix<Rational> t = cpl_transfer(L, make_rational(1, 2));
    int c = t.rows();
    for (int i = 0; i < c; ++i) t.at(i, i) -= 1;
    auto basis = nullspace(t);
    if (basis.size() != 1) throw ring_error("cpl_steady_state: kernel dimension is not one");
    std::vector<Rational> v = basis.front();
    Rational total(0);
    for (const auto& x : v) total += x;
    if (is_zero(total)) throw ring_error("cpl_steady_state: zero-mass kernel vector");
    for (auto& x : v) {
        x /= total;
        if (!(x > 0)) throw ring_error("cpl_steady_state: non-positive entry");
    }
    return v;
}

}  // namespace lattica
