#pragma once

#include <map>
#include <string>

#include "qdvol/rational.hpp"

namespace qdvol {

// Finite rational linear combination of integer powers of pi.
// Zero coefficients are never stored. Final volumes must reduce to a
// single monomial r * pi^(2*g_eff).
struct PiPoly {
    std::map<int, Rational> c;  // pi exponent -> coefficient

    PiPoly() = default;
    static PiPoly monomial(int exponent, const Rational& coeff);

    bool is_zero() const { return c.empty(); }
    bool is_monomial() const { return c.size() == 1; }
    // (exponent, coefficient) of the unique term; throws unless is_monomial().
    std::pair<int, Rational> single_term() const;

    Rational coeff(int exponent) const;

    PiPoly operator+(const PiPoly& o) const;
    PiPoly operator-(const PiPoly& o) const;
    PiPoly operator*(const PiPoly& o) const;
    PiPoly scaled(const Rational& s) const;
    bool operator==(const PiPoly& o) const { return c == o.c; }

    // e.g. "4/3*pi^2", "2*pi^2 + 1/4".
    std::string str() const;

    double to_double() const;
};

}  // namespace qdvol
