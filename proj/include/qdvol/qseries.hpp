#pragma once

#include <vector>

#include "qdvol/rational.hpp"

namespace qdvol {

// Truncated power series in q with exact rational coefficients.
// `order` is the largest exponent whose coefficient is tracked; arithmetic
// results carry the minimum valid order of the operands.
struct QSeries {
    int order = 0;
    std::vector<Rational> c;  // c[i] = coefficient of q^i, size order+1

    QSeries() : c(1) {}
    explicit QSeries(int n) : order(n), c(n + 1) {}

    static QSeries one(int n);

    const Rational& coeff(int i) const;
    void set(int i, const Rational& v);

    QSeries truncated(int n) const;

    QSeries operator+(const QSeries& o) const;
    QSeries operator-(const QSeries& o) const;
    QSeries operator*(const QSeries& o) const;
    QSeries scaled(const Rational& s) const;
    bool operator==(const QSeries& o) const;

    // Substitute q -> q^m (exponent dilation); order becomes order*m.
    QSeries dilated(int m) const;

    std::string str(int max_terms = -1) const;
};

QSeries series_mul(const QSeries& a, const QSeries& b);
// Requires b to have nonzero constant term; exact to min order.
QSeries series_div(const QSeries& a, const QSeries& b);

// (1 - q^m)^exponent to order N, generalized binomial expansion.
QSeries binomial_factor(int m, const Rational& exponent, int N);

// prod_{n>=1} (1 - q^{step*n})^exponent to order N.
QSeries product_factor(int step, const Rational& exponent, int N);

}  // namespace qdvol
