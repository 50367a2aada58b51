#ifndef LATTICA_SERIES_HPP
#define LATTICA_SERIES_HPP

#include <string>
#include <vector>

#include "lattica/ring.hpp"

namespace lattica {

struct precision_error : ring_error {
    explicit precision_error(const std::string& m) : ring_error(m) {}
};

// One-variable power series truncated at a fixed order: coefficients of
// t^0 .. t^order are stored and trusted, everything above is unknown.
template <class R>
class TruncatedSeries {
  public:
    TruncatedSeries(int order, std::vector<R> coeffs) : order_(order), c_(std::move(coeffs)) {
        if (order_ < 0) throw ring_error("TruncatedSeries: negative order");
        c_.resize(static_cast<size_t>(order_) + 1, ring_zero<R>());
    }
    static TruncatedSeries constant(int order, R v) {
        std::vector<R> c{std::move(v)};
        return TruncatedSeries(order, std::move(c));
    }

    int order() const { return order_; }
    const R& coeff(int k) const {
        if (k < 0) throw ring_error("TruncatedSeries: negative index");
        if (k > order_) throw precision_error("TruncatedSeries: coefficient beyond truncation order");
        return c_[static_cast<size_t>(k)];
    }

    TruncatedSeries truncate(int order) const {
        if (order > order_) throw precision_error("TruncatedSeries: cannot extend precision");
        std::vector<R> c(c_.begin(), c_.begin() + order + 1);
        return TruncatedSeries(order, std::move(c));
    }

    TruncatedSeries operator+(const TruncatedSeries& o) const {
        int d = std::min(order_, o.order_);
        std::vector<R> c(static_cast<size_t>(d) + 1);
        for (int k = 0; k <= d; ++k) c[static_cast<size_t>(k)] = c_[static_cast<size_t>(k)] + o.c_[static_cast<size_t>(k)];
        return TruncatedSeries(d, std::move(c));
    }
    TruncatedSeries operator-(const TruncatedSeries& o) const { return *this + (-o); }
    TruncatedSeries operator-() const {
        std::vector<R> c = c_;
        for (auto& x : c) x = -x;
        return TruncatedSeries(order_, std::move(c));
    }
    TruncatedSeries operator*(const TruncatedSeries& o) const {
        int d = std::min(order_, o.order_);
        std::vector<R> c(static_cast<size_t>(d) + 1, ring_zero<R>());
        for (int i = 0; i <= d; ++i)
            for (int j = 0; i + j <= d; ++j)
                c[static_cast<size_t>(i + j)] += c_[static_cast<size_t>(i)] * o.c_[static_cast<size_t>(j)];
        return TruncatedSeries(d, std::move(c));
    }

    // d/dt lowers the trusted order by one
    TruncatedSeries derivative() const {
        if (order_ == 0) throw precision_error("TruncatedSeries: derivative exhausts precision");
        std::vector<R> c(static_cast<size_t>(order_));
        for (int k = 1; k <= order_; ++k)
            c[static_cast<size_t>(k - 1)] = c_[static_cast<size_t>(k)] * R(k);
        return TruncatedSeries(order_ - 1, std::move(c));
    }

    bool equal_up_to(const TruncatedSeries& o, int d) const {
        if (d > order_ || d > o.order_) throw precision_error("TruncatedSeries: comparison beyond order");
        for (int k = 0; k <= d; ++k)
            if (!(c_[static_cast<size_t>(k)] == o.c_[static_cast<size_t>(k)])) return false;
        return true;
    }

    bool is_zero_series() const {
        for (const auto& x : c_)
            if (!is_zero(x)) return false;
        return true;
    }

  private:
    int order_;
    std::vector<R> c_;
};

}  // namespace lattica

#endif
