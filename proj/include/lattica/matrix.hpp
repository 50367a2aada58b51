#ifndef LATTICA_MATRIX_HPP
#define LATTICA_MATRIX_HPP

#include <optional>
#include <vector>

#include "lattica/ring.hpp"

namespace lattica {

template <class R>
class ExactMatrix {
  public:
    ExactMatrix(int rows, int cols, R fill)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * static_cast<size_t>(cols), fill) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    R& at(int i, int j) { return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)]; }
    const R& at(int i, int j) const {
        return a_[static_cast<size_t>(i) * static_cast<size_t>(cols_) + static_cast<size_t>(j)];
    }

    // Fraction-free (Bareiss) determinant; every division is exact in R.
    R det() const {
        if (rows_ != cols_) throw ring_error("det: non-square matrix");
        int n = rows_;
        if (n == 0) {
            // empty product convention; needs a usable one in R
            return ring_one<R>();
        }
        ExactMatrix m = *this;
        std::optional<R> prev;  // pivot of the previous step
        bool negate = false;
        for (int k = 0; k + 1 < n; ++k) {
            if (is_zero(m.at(k, k))) {
                int p = -1;
                for (int i = k + 1; i < n; ++i)
                    if (!is_zero(m.at(i, k))) { p = i; break; }
                if (p < 0) return ring_zero<R>();
                for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
                negate = !negate;
            }
            for (int i = k + 1; i < n; ++i) {
                for (int j = k + 1; j < n; ++j) {
                    R v = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                    m.at(i, j) = prev ? exact_div(v, *prev) : std::move(v);
                }
                m.at(i, k) = ring_zero<R>();
            }
            prev = m.at(k, k);
        }
        R d = m.at(n - 1, n - 1);
        return negate ? -d : d;
    }

    // Cofactor expansion along the first row; the independent oracle for det.
    R det_cofactor() const {
        if (rows_ != cols_) throw ring_error("det: non-square matrix");
        int n = rows_;
        if (n == 0) return ring_one<R>();
        if (n == 1) return at(0, 0);
        R d = ring_zero<R>();
        for (int j = 0; j < n; ++j) {
            if (is_zero(at(0, j))) continue;
            ExactMatrix sub(n - 1, n - 1, ring_zero<R>());
            for (int i = 1; i < n; ++i) {
                int cc = 0;
                for (int c = 0; c < n; ++c) {
                    if (c == j) continue;
                    sub.at(i - 1, cc++) = at(i, c);
                }
            }
            R t = at(0, j) * sub.det_cofactor();
            if (j % 2 == 0) d += t;
            else d -= t;
        }
        return d;
    }

  private:
    int rows_, cols_;
    std::vector<R> a_;
};

// Kernel basis of a matrix over the rationals (or any field with exact_div);
// returns vectors spanning { x : M x = 0 }.
inline std::vector<std::vector<Rational>> nullspace(ExactMatrix<Rational> m) {
    int rows = m.rows(), cols = m.cols();
    std::vector<int> pivot_col;
    int r = 0;
    for (int c = 0; c < cols && r < rows; ++c) {
        int p = -1;
        for (int i = r; i < rows; ++i)
            if (!is_zero(m.at(i, c))) { p = i; break; }
        if (p < 0) continue;
        for (int j = 0; j < cols; ++j) std::swap(m.at(p, j), m.at(r, j));
        Rational inv = m.at(r, c);
        for (int j = 0; j < cols; ++j) m.at(r, j) = m.at(r, j) / inv;
        for (int i = 0; i < rows; ++i) {
            if (i == r || is_zero(m.at(i, c))) continue;
            Rational f = m.at(i, c);
            for (int j = 0; j < cols; ++j) m.at(i, j) -= f * m.at(r, j);
        }
        pivot_col.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(static_cast<size_t>(cols), false);
    for (int c : pivot_col) is_pivot[static_cast<size_t>(c)] = true;
    std::vector<std::vector<Rational>> basis;
    for (int c = 0; c < cols; ++c) {
        if (is_pivot[static_cast<size_t>(c)]) continue;
        std::vector<Rational> v(static_cast<size_t>(cols), Rational(0));
        v[static_cast<size_t>(c)] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[static_cast<size_t>(pivot_col[i])] = -m.at(static_cast<int>(i), c);
        basis.push_back(std::move(v));
    }
    return basis;
}

}  // namespace lattica

#endif
