#include "qdvol/hlaurent.hpp"

#include <sstream>
#include <stdexcept>

namespace qdvol {

HLaurent HLaurent::monomial(int h_power, const PiPoly& coeff) {
    HLaurent r;
    if (!coeff.is_zero()) r.c[h_power] = coeff;
    return r;
}

HLaurent HLaurent::one() { return monomial(0, PiPoly::monomial(0, 1)); }

PiPoly HLaurent::coeff(int h_power) const {
    auto it = c.find(h_power);
    return it == c.end() ? PiPoly() : it->second;
}

void HLaurent::prune() {
    for (auto it = c.begin(); it != c.end();)
        it = it->second.is_zero() ? c.erase(it) : std::next(it);
}

HLaurent HLaurent::operator+(const HLaurent& o) const {
    HLaurent r = *this;
    for (const auto& [p, v] : o.c) r.c[p] = r.coeff(p) + v;
    r.prune();
    return r;
}

HLaurent HLaurent::operator-(const HLaurent& o) const {
    HLaurent r = *this;
    for (const auto& [p, v] : o.c) r.c[p] = r.coeff(p) - v;
    r.prune();
    return r;
}

HLaurent HLaurent::operator*(const HLaurent& o) const {
    HLaurent r;
    for (const auto& [p1, v1] : c)
        for (const auto& [p2, v2] : o.c) r.c[p1 + p2] = r.coeff(p1 + p2) + v1 * v2;
    r.prune();
    return r;
}

HLaurent HLaurent::scaled(const Rational& s) const {
    HLaurent r;
    if (s == 0) return r;
    for (const auto& [p, v] : c) r.c[p] = v.scaled(s);
    return r;
}

HLaurent HLaurent::pow(int e) const {
    if (e < 0) throw std::invalid_argument("HLaurent::pow: negative exponent");
    HLaurent r = one();
    for (int k = 0; k < e; ++k) r = r * *this;
    return r;
}

std::string HLaurent::str() const {
    if (c.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = c.begin(); it != c.end(); ++it) {
        if (!first) out << " + ";
        out << "(" << it->second.str() << ")";
        if (it->first != 0) out << "*h^" << it->first;
        first = false;
    }
    return out.str();
}

}  // namespace qdvol
