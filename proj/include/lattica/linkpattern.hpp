#ifndef LATTICA_LINKPATTERN_HPP
#define LATTICA_LINKPATTERN_HPP

#include <string>
#include <vector>

#include "lattica/partition.hpp"
#include "lattica/ring.hpp"

namespace lattica {

// Fixed-point-free involution of {0..2n-1}; planar (noncrossing) unless
// stated otherwise.  Points sit on a circle, labels increasing
// counterclockwise.
class LinkPattern {
  public:
    LinkPattern() = default;
    explicit LinkPattern(std::vector<int> pairing);

    static LinkPattern fully_nested(int n);   // pairs (i, 2n-1-i); the 0^n pattern
    static LinkPattern nearest_neighbor(int n);  // pairs (2i, 2i+1); the 1^n pattern

    int points() const { return static_cast<int>(pi_.size()); }
    int n() const { return points() / 2; }
    int partner(int i) const { return pi_[static_cast<size_t>(i)]; }
    const std::vector<int>& pairing() const { return pi_; }

    bool noncrossing() const;
    bool is_little_arch(int i) const {  // pairs i with i+1 mod 2n
        return partner(i) == (i + 1) % points();
    }

    // rotate labels one step: pairs (i,j) become (i+1, j+1) mod 2n
    LinkPattern rotated(int steps = 1) const;

    bool operator==(const LinkPattern& o) const { return pi_ == o.pi_; }
    bool operator!=(const LinkPattern& o) const { return !(*this == o); }
    bool operator<(const LinkPattern& o) const { return pi_ < o.pi_; }

    // canonical cycle rendering with 1-based points: "(1 4)(2 3)"
    std::string str() const;

  private:
    std::vector<int> pi_;
};

// All noncrossing patterns of size 2n in the canonical order: by the Young
// diagram of the pattern (size, then lex), smallest diagram = fully nested.
std::vector<LinkPattern> link_patterns(int n);

// Temperley-Lieb generator e_i rewires (i,i+1) and (pi(i),pi(i+1)); the flag
// reports a closed loop (pi(i) == i+1).  i == 2n-1 is the affine generator,
// realized by rotation conjugation.
std::pair<LinkPattern, int> tl_e(int i, const LinkPattern& p);

// bijection with Young diagrams inside the staircase (n-1, ..., 1)
Partition pattern_to_young(const LinkPattern& p);
LinkPattern young_to_pattern(const Partition& lam, int n);

// positions i with partner(i) > i, ascending
std::vector<int> opening_positions(const LinkPattern& p);

// crossing link patterns: all fixed-point-free involutions of {0..2n-1}
std::vector<LinkPattern> crossing_link_patterns(int n);

// Brauer moves on crossing patterns
LinkPattern brauer_f(int i, const LinkPattern& p);                 // conjugate by (i, i+1)
std::pair<LinkPattern, int> brauer_e(int i, const LinkPattern& p);  // TL move, crossings allowed

}  // namespace lattica

#endif
