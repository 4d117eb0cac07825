#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "qdvol/hlaurent.hpp"
#include "qdvol/qseries.hpp"

namespace qdvol {

// Two graded polynomial rings of quasi-modular forms:
//   Pillow:  E2(q^2)^a E2(q^4)^b E4(q^4)^c, weight 2a+2b+4c  (level 2)
//   Abelian: E2^a E4^b E6^c,               weight 2a+4b+6c
// Abelian polynomials are fitted against generator series in q and later
// substituted with the generators read at q^2 (the pipeline always consumes
// the abelian generating function at q^2).
enum class QMFamily { Pillow, Abelian };

struct QMMonomial {
    QMFamily fam = QMFamily::Pillow;
    int a = 0, b = 0, c = 0;
    int weight() const;
    std::string str() const;
    bool operator<(const QMMonomial& o) const;
    bool operator==(const QMMonomial& o) const;
};

// All monomials of weight <= weight_cap (constant included), deterministic
// order: by weight, then (a,b,c) lexicographic.
std::vector<QMMonomial> monomial_basis(int weight_cap, QMFamily fam);

// E_{2k}(q^m) = zeta(1-2k)/2 + sum_{n>=1} sigma_{2k-1}(n) q^{mn}, to order N.
QSeries eisenstein(int two_k, int m, int N);

// Series of one basis monomial in the fitting variable (generators at q^2 /
// q^4 for Pillow, at q for Abelian).
QSeries monomial_series(const QMMonomial& mon, int N);

struct QMPoly {
    QMFamily fam = QMFamily::Pillow;
    int weight_cap = 0;
    std::vector<std::pair<QMMonomial, Rational>> terms;  // basis order, zeros dropped

    QSeries to_series(int N) const;
    std::string str() const;
};

struct FitReport {
    QMPoly poly;
    int rows = 0;     // coefficient equations used
    int surplus = 0;  // rows - basis size (consistency margin)
};

struct FitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of coefficient equations the fitting policy wants: basis size + 2.
int required_fit_rows(int weight_cap, QMFamily fam);
// Series order needed to feed fit(): 2*(rows-1) for Pillow, rows-1 for Abelian.
int required_series_order(int weight_cap, QMFamily fam);

// Exact overdetermined fit; throws FitError if the target is not in the
// span (inconsistent rows) or the basis matrix is rank deficient. Pillow
// targets must have vanishing odd coefficients.
FitReport fit(const QSeries& target, int weight_cap, QMFamily fam);

// h -> 0 asymptotics of the generators under q = e^{-h}:
//   E2(q^2) -> pi^2/(24h^2) - 1/(4h)     E2(q^4) -> pi^2/(96h^2) - 1/(8h)
//   E4(q^4) -> pi^4/(3840 h^4)
//   (abelian, read at q^2)
//   E4(q^2) -> pi^4/(240 h^4)            E6(q^2) -> pi^6/(504 h^6)
HLaurent generator_laurent(QMFamily fam, int which);  // which in {0,1,2} = (a,b,c) slot
HLaurent substitute_asymptotics(const QMPoly& p);

}  // namespace qdvol
