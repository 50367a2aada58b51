#ifndef LATTICA_LGV_HPP
#define LATTICA_LGV_HPP

#include <vector>

#include "lattica/matrix.hpp"
#include "lattica/ring.hpp"

namespace lattica {

// Weighted directed acyclic graph for nonintersecting-path counts.
template <class R>
class DAGPaths {
  public:
    explicit DAGPaths(int vertices) : adj_(static_cast<size_t>(vertices)) {}

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    void add_edge(int from, int to, R weight) {
        adj_[static_cast<size_t>(from)].emplace_back(to, std::move(weight));
    }
    void set_sources(std::vector<int> s) { sources_ = std::move(s); }
    void set_sinks(std::vector<int> s) { sinks_ = std::move(s); }
    const std::vector<int>& sources() const { return sources_; }
    const std::vector<int>& sinks() const { return sinks_; }

    std::vector<int> topo_order() const {
        int n = vertex_count();
        std::vector<int> indeg(static_cast<size_t>(n), 0);
        for (const auto& edges : adj_)
            for (const auto& e : edges) indeg[static_cast<size_t>(e.first)]++;
        std::vector<int> stack, order;
        for (int v = 0; v < n; ++v)
            if (indeg[static_cast<size_t>(v)] == 0) stack.push_back(v);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order.push_back(v);
            for (const auto& e : adj_[static_cast<size_t>(v)])
                if (--indeg[static_cast<size_t>(e.first)] == 0) stack.push_back(e.first);
        }
        if (static_cast<int>(order.size()) != n) throw ring_error("DAGPaths: graph has a cycle");
        return order;
    }

    // weighted count of single paths from one source to every vertex
    std::vector<R> path_counts_from(int source, const std::vector<int>& order) const {
        std::vector<R> cnt(static_cast<size_t>(vertex_count()), ring_zero<R>());
        cnt[static_cast<size_t>(source)] = ring_one<R>();
        for (int v : order)
            for (const auto& e : adj_[static_cast<size_t>(v)])
                cnt[static_cast<size_t>(e.first)] += cnt[static_cast<size_t>(v)] * e.second;
        return cnt;
    }

    ExactMatrix<R> path_matrix() const {
        auto order = topo_order();
        int k = static_cast<int>(sources_.size());
        if (k != static_cast<int>(sinks_.size())) throw ring_error("DAGPaths: source/sink count mismatch");
        ExactMatrix<R> m(k, k, ring_zero<R>());
        for (int p = 0; p < k; ++p) {
            auto cnt = path_counts_from(sources_[static_cast<size_t>(p)], order);
            for (int q = 0; q < k; ++q) m.at(p, q) = cnt[static_cast<size_t>(sinks_[static_cast<size_t>(q)])];
        }
        return m;
    }

  private:
    std::vector<std::vector<std::pair<int, R>>> adj_;
    std::vector<int> sources_;
    std::vector<int> sinks_;
};

// det of the pairwise path-count matrix.  For planar graphs with compatible
// endpoints this is the plain NILP count; in general it is the signed sum
// over permutation-matched path families.
template <class R>
R lgv_count(const DAGPaths<R>& g) {
    return g.path_matrix().det();
}

}  // namespace lattica

#endif
