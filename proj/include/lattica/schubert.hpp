#ifndef LATTICA_SCHUBERT_HPP
#define LATTICA_SCHUBERT_HPP

#include <optional>
#include <vector>

#include "lattica/multipoly.hpp"
#include "lattica/partition.hpp"

namespace lattica {

// One-line notation, values 1..N.
class Permutation {
  public:
    explicit Permutation(std::vector<int> one_line);
    static Permutation identity(int n);
    static Permutation longest(int n);  // i -> N+1-i

    int size() const { return static_cast<int>(w_.size()); }
    int operator()(int i) const { return w_[static_cast<size_t>(i - 1)]; }  // 1-based
    const std::vector<int>& one_line() const { return w_; }
    int inversions() const;
    Permutation swap_positions(int i) const;  // compose with s_i on positions i, i+1 (1-based)
    Permutation inverse() const;

    bool operator==(const Permutation& o) const { return w_ == o.w_; }
    bool operator<(const Permutation& o) const { return w_ < o.w_; }

  private:
    std::vector<int> w_;
};

std::vector<Permutation> all_permutations(int n);

// Double polynomials in x_1..x_N (vars 0..N-1) and y_1..y_N (vars N..2N-1).
// Pipedream route: sum over reduced tile fillings with crossing weights
// x_i - y_j; descent route: divided differences down from the longest element.
ZPoly schubert_pipedream(const Permutation& sigma);
ZPoly schubert_nilhecke(const Permutation& sigma);

// number of reduced pipedreams for sigma (enumeration byproduct)
long pipedream_count(const Permutation& sigma);

// Grassmannian data: the unique descent position and the partition read off
// the endpoint colors; empty when sigma has more than one descent.
std::optional<std::pair<int, Partition>> grassmannian_shape(const Permutation& sigma);

// y = 0 specialization against the Schur polynomial of the shape
bool factorial_schur_check(const Permutation& sigma);

}  // namespace lattica

#endif
