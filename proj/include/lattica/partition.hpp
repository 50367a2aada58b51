#ifndef LATTICA_PARTITION_HPP
#define LATTICA_PARTITION_HPP

#include <algorithm>
#include <string>
#include <vector>

#include "lattica/ring.hpp"

namespace lattica {

// Weakly decreasing nonnegative parts, trailing zeros stripped.
class Partition {
  public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : p_(std::move(parts)) {
        for (size_t i = 0; i + 1 < p_.size(); ++i)
            if (p_[i] < p_[i + 1]) throw ring_error("Partition: parts must weakly decrease");
        for (int x : p_)
            if (x < 0) throw ring_error("Partition: negative part");
        while (!p_.empty() && p_.back() == 0) p_.pop_back();
    }
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    static Partition staircase(int n) {  // (n-1, n-2, ..., 1)
        std::vector<int> p;
        for (int k = n - 1; k >= 1; --k) p.push_back(k);
        return Partition(std::move(p));
    }
    // (n-1, n-1, n-2, n-2, ..., 1, 1), the double staircase of the all-ones count
    static Partition double_staircase(int n) {
        std::vector<int> p;
        for (int k = n - 1; k >= 1; --k) { p.push_back(k); p.push_back(k); }
        return Partition(std::move(p));
    }
    static Partition rectangle(int rows, int width) {
        return Partition(std::vector<int>(static_cast<size_t>(rows), width));
    }

    const std::vector<int>& parts() const { return p_; }
    int rows() const { return static_cast<int>(p_.size()); }
    int part(int i) const { return i < rows() ? p_[static_cast<size_t>(i)] : 0; }  // 0-based
    int size() const {
        int s = 0;
        for (int x : p_) s += x;
        return s;
    }
    bool empty() const { return p_.empty(); }

    Partition conjugate() const {
        if (p_.empty()) return Partition();
        std::vector<int> c(static_cast<size_t>(p_[0]), 0);
        for (int x : p_)
            for (int j = 0; j < x; ++j) c[static_cast<size_t>(j)]++;
        return Partition(std::move(c));
    }

    bool contains(const Partition& inner) const {
        for (int i = 0; i < inner.rows(); ++i)
            if (part(i) < inner.part(i)) return false;
        return true;
    }

    bool operator==(const Partition& o) const { return p_ == o.p_; }
    bool operator!=(const Partition& o) const { return !(*this == o); }
    // canonical order used throughout: by size, then lexicographic
    bool operator<(const Partition& o) const {
        int a = size(), b = o.size();
        if (a != b) return a < b;
        return p_ < o.p_;
    }

    std::string str() const {
        std::string s = "[";
        for (size_t i = 0; i < p_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(p_[i]);
        }
        return s + "]";
    }

  private:
    std::vector<int> p_;
};

struct SkewShape {
    Partition outer;
    Partition inner;

    SkewShape(Partition out, Partition in) : outer(std::move(out)), inner(std::move(in)) {
        if (!outer.contains(inner)) throw ring_error("SkewShape: inner not contained in outer");
    }
    explicit SkewShape(Partition out) : SkewShape(std::move(out), Partition()) {}
};

// All partitions with |lambda| <= max_size (optionally bounded rows/width).
inline std::vector<Partition> partitions_up_to(int max_size, int max_rows = -1, int max_width = -1) {
    std::vector<Partition> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int remaining, int cap) -> void {
        out.push_back(Partition(cur));
        if (remaining == 0) return;
        if (max_rows >= 0 && static_cast<int>(cur.size()) >= max_rows) return;
        int hi = std::min(remaining, cap);
        for (int next = hi; next >= 1; --next) {
            cur.push_back(next);
            self(self, remaining - next, next);
            cur.pop_back();
        }
    };
    int cap0 = max_width >= 0 ? max_width : max_size;
    // enumerate by first part; dedupe via the size-then-lex order afterwards
    rec(rec, max_size, cap0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace lattica

#endif
