#include "lattica/render.hpp"

#include <sstream>

namespace lattica {

std::vector<std::string> var_names(const std::string& prefix, int count) {
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i) v.push_back(prefix + std::to_string(i));
    return v;
}

std::vector<std::string> var_names_xy(int n) {
    std::vector<std::string> v = var_names("x", n);
    for (const auto& s : var_names("y", n)) v.push_back(s);
    return v;
}

std::vector<std::string> var_names_suffixed(int count, const std::vector<std::string>& extra) {
    std::vector<std::string> v = var_names("x", count);
    for (const auto& s : extra) v.push_back(s);
    return v;
}

std::string tau_str(const MultiPoly<BigInt>& p) {
    // ascending powers read better for counting polynomials
    if (p.is_zero_poly()) return "0";
    std::vector<std::pair<int, BigInt>> terms;
    for (const auto& t : p.terms()) terms.emplace_back(t.first.get(0), t.second);
    std::sort(terms.begin(), terms.end());
    std::string s;
    for (const auto& [e, c] : terms) {
        if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
        else if (sgn(c) < 0) s += "-";
        BigInt ac = abs(c);
        if (e == 0) { s += ac.get_str(); continue; }
        if (ac != 1) s += ac.get_str() + "*";
        s += e == 1 ? "tau" : "tau^" + std::to_string(e);
    }
    return s;
}

Rational tau_eval(const MultiPoly<BigInt>& p, const Rational& tau) {
    Rational acc(0);
    for (const auto& t : p.terms()) {
        Rational m(t.second);
        for (int k = 0; k < t.first.get(0); ++k) m *= tau;
        acc += m;
    }
    return acc;
}

Rational parse_rational(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        return make_rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
    } catch (const std::invalid_argument&) {
        throw ring_error("cannot parse rational: " + s);
    }
}

std::vector<Rational> parse_rational_list(const std::string& s) {
    std::vector<Rational> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(parse_rational(item));
    return out;
}

std::vector<int> parse_int_list(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ','))
        if (!item.empty()) out.push_back(std::stoi(item));
    return out;
}

}  // namespace lattica
