// Serial reference vs OpenMP kernels on the enumeration-heavy paths.
#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "lattica/cpl.hpp"
#include "lattica/sixvertex.hpp"
#include "lattica/tilings.hpp"

using namespace lattica;

namespace {

double now() {
    return std::chrono::duration<double>(std::chrono::steady_clock::now().time_since_epoch()).count();
}

template <class F>
double timed(F&& f) {
    double t0 = now();
    f();
    return now() - t0;
}

}  // namespace

int main() {
#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    {
        int n = 6;
        BigInt serial_count, parallel_count;
        double ts = timed([&] { serial_count = dwbc_count_serial(n, 8); });
        double tp = timed([&] { parallel_count = dwbc_count_parallel(n, 8); });
        if (serial_count != parallel_count) {
            std::printf("dwbc n=%d MISMATCH\n", n);
            return 1;
        }
        std::printf("dwbc count n=%d: serial %.3fs  parallel %.3fs  speedup %.2fx  (%s)\n", n, ts,
                    tp, ts / tp, to_string(serial_count).c_str());
    }
    {
        int L = 12;
        ExactMatrix<Rational> a(1, 1, Rational(0)), b(1, 1, Rational(0));
        double ts = timed([&] { a = cpl_transfer(L, make_rational(1, 2), false); });
        double tp = timed([&] { b = cpl_transfer(L, make_rational(1, 2), true); });
        bool same = true;
        for (int i = 0; i < a.rows() && same; ++i)
            for (int j = 0; j < a.cols(); ++j)
                if (!(a.at(i, j) == b.at(i, j))) { same = false; break; }
        if (!same) {
            std::printf("cpl transfer L=%d MISMATCH\n", L);
            return 1;
        }
        std::printf("cpl transfer L=%d: serial %.3fs  parallel %.3fs  speedup %.2fx\n", L, ts, tp,
                    ts / tp);
    }
    {
        int a = 4, b = 4, c = 4;
        BigInt count(0);
        double ts = timed([&] {
            plane_partitions_foreach(a, b, c, [&](const BoxedPlanePartition&) { count += 1; }, 64);
        });
        std::printf("plane partitions %dx%dx%d: %.3fs  (%s, product form %s)\n", a, b, c, ts,
                    to_string(count).c_str(), to_string(macmahon(a, b, c)).c_str());
    }
    return 0;
}
