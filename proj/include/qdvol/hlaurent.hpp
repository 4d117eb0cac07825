#pragma once

#include <map>

#include "qdvol/pipoly.hpp"

namespace qdvol {

// Laurent polynomial in h (finitely many terms, negative powers allowed)
// with PiPoly coefficients; carries the h->0 asymptotics of substituted
// quasi-modular polynomials.
struct HLaurent {
    std::map<int, PiPoly> c;  // power of h -> coefficient

    static HLaurent monomial(int h_power, const PiPoly& coeff);
    static HLaurent one();

    PiPoly coeff(int h_power) const;

    HLaurent operator+(const HLaurent& o) const;
    HLaurent operator-(const HLaurent& o) const;
    HLaurent operator*(const HLaurent& o) const;
    HLaurent scaled(const Rational& s) const;
    HLaurent pow(int e) const;  // e >= 0
    bool operator==(const HLaurent& o) const { return c == o.c; }

    std::string str() const;

  private:
    void prune();
};

}  // namespace qdvol
