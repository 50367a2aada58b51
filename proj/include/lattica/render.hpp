#ifndef LATTICA_RENDER_HPP
#define LATTICA_RENDER_HPP

#include <string>
#include <vector>

#include "lattica/laurent.hpp"
#include "lattica/linkpattern.hpp"
#include "lattica/multipoly.hpp"

namespace lattica {

std::vector<std::string> var_names(const std::string& prefix, int count);
std::vector<std::string> var_names_xy(int n);                      // x1..xn, y1..yn
std::vector<std::string> var_names_suffixed(int count, const std::vector<std::string>& extra);

std::string tau_str(const MultiPoly<BigInt>& p);  // univariate in tau

// evaluation of a tau-polynomial at a rational point
Rational tau_eval(const MultiPoly<BigInt>& p, const Rational& tau);

Rational parse_rational(const std::string& s);
std::vector<Rational> parse_rational_list(const std::string& s);
std::vector<int> parse_int_list(const std::string& s);

}  // namespace lattica

#endif
