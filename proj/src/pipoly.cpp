#include "qdvol/pipoly.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qdvol {

PiPoly PiPoly::monomial(int exponent, const Rational& coeff) {
    PiPoly p;
    if (coeff != 0) p.c[exponent] = coeff;
    return p;
}

std::pair<int, Rational> PiPoly::single_term() const {
    if (c.size() != 1) throw std::logic_error("PiPoly::single_term: not a monomial: " + str());
    return *c.begin();
}

Rational PiPoly::coeff(int exponent) const {
    auto it = c.find(exponent);
    return it == c.end() ? Rational(0) : it->second;
}

static void add_into(std::map<int, Rational>& m, int e, const Rational& v) {
    auto it = m.find(e);
    if (it == m.end()) {
        if (v != 0) m.emplace(e, v);
        return;
    }
    it->second += v;
    if (it->second == 0) m.erase(it);
}

PiPoly PiPoly::operator+(const PiPoly& o) const {
    PiPoly r = *this;
    for (const auto& [e, v] : o.c) add_into(r.c, e, v);
    return r;
}

PiPoly PiPoly::operator-(const PiPoly& o) const {
    PiPoly r = *this;
    for (const auto& [e, v] : o.c) add_into(r.c, e, -v);
    return r;
}

PiPoly PiPoly::operator*(const PiPoly& o) const {
    PiPoly r;
    for (const auto& [e1, v1] : c)
        for (const auto& [e2, v2] : o.c) add_into(r.c, e1 + e2, v1 * v2);
    return r;
}

PiPoly PiPoly::scaled(const Rational& s) const {
    PiPoly r;
    if (s == 0) return r;
    for (const auto& [e, v] : c) r.c[e] = v * s;
    return r;
}

std::string PiPoly::str() const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (!first) out << " + ";
        out << rat_str(it->second);
        if (it->first != 0) out << "*pi^" << it->first;
        first = false;
    }
    return out.str();
}

double PiPoly::to_double() const {
    double acc = 0;
    for (const auto& [e, v] : c) acc += v.get_d() * std::pow(M_PI, e);
    return acc;
}

}  // namespace qdvol
