#include "qdvol/qseries.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace qdvol {

QSeries QSeries::one(int n) {
    QSeries s(n);
    s.c[0] = 1;
    return s;
}

const Rational& QSeries::coeff(int i) const {
    if (i < 0 || i > order) throw std::out_of_range("QSeries::coeff beyond tracked order");
    return c[i];
}

void QSeries::set(int i, const Rational& v) {
    if (i < 0 || i > order) throw std::out_of_range("QSeries::set beyond tracked order");
    c[i] = v;
}

QSeries QSeries::truncated(int n) const {
    if (n > order) throw std::out_of_range("QSeries::truncated beyond tracked order");
    QSeries r(n);
    std::copy(c.begin(), c.begin() + n + 1, r.c.begin());
    return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
    QSeries r(std::min(order, o.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = c[i] + o.c[i];
    return r;
}

QSeries QSeries::operator-(const QSeries& o) const {
    QSeries r(std::min(order, o.order));
    for (int i = 0; i <= r.order; ++i) r.c[i] = c[i] - o.c[i];
    return r;
}

QSeries QSeries::operator*(const QSeries& o) const { return series_mul(*this, o); }

QSeries QSeries::scaled(const Rational& s) const {
    QSeries r(order);
    for (int i = 0; i <= order; ++i) r.c[i] = c[i] * s;
    return r;
}

bool QSeries::operator==(const QSeries& o) const { return order == o.order && c == o.c; }

QSeries QSeries::dilated(int m) const {
    if (m < 1) throw std::invalid_argument("dilation step must be >= 1");
    QSeries r(order * m);
    for (int i = 0; i <= order; ++i) r.c[i * m] = c[i];
    return r;
}

std::string QSeries::str(int max_terms) const {
    std::ostringstream out;
    bool first = true;
    int printed = 0;
    for (int i = 0; i <= order; ++i) {
        if (c[i] == 0) continue;
        if (max_terms >= 0 && printed >= max_terms) {
            out << " + ...";
            break;
        }
        if (!first) out << " + ";
        out << rat_str(c[i]);
        if (i > 0) out << "*q^" << i;
        first = false;
        ++printed;
    }
    if (first) out << "0";
    out << " + O(q^" << order + 1 << ")";
    return out.str();
}

QSeries series_mul(const QSeries& a, const QSeries& b) {
    QSeries r(std::min(a.order, b.order));
    for (int i = 0; i <= r.order; ++i) {
        if (a.c[i] == 0) continue;
        for (int j = 0; i + j <= r.order && j <= b.order; ++j) {
            if (b.c[j] == 0) continue;
            r.c[i + j] += a.c[i] * b.c[j];
        }
    }
    return r;
}

QSeries series_div(const QSeries& a, const QSeries& b) {
    if (b.c[0] == 0) throw std::domain_error("series_div: divisor has zero constant term");
    QSeries r(std::min(a.order, b.order));
    for (int n = 0; n <= r.order; ++n) {
        Rational acc = a.c[n];
        for (int k = 1; k <= n; ++k) acc -= b.c[k] * r.c[n - k];
        r.c[n] = acc / b.c[0];
    }
    return r;
}

QSeries binomial_factor(int m, const Rational& exponent, int N) {
    if (m < 1) throw std::invalid_argument("binomial_factor: m >= 1 required");
    QSeries r(N);
    // (1-x)^e = sum_k C(e,k) (-x)^k with C(e,k) = e(e-1)...(e-k+1)/k!.
    Rational coef = 1;
    r.c[0] = 1;
    for (int k = 1; k * m <= N; ++k) {
        coef *= (exponent - Rational(k - 1)) / Rational(k);
        Rational term = coef;
        if (k % 2 == 1) term = -term;
        r.c[k * m] = term;
        if (coef == 0) break;
    }
    return r;
}

QSeries product_factor(int step, const Rational& exponent, int N) {
    QSeries r = QSeries::one(N);
    for (int n = 1; n * step <= N; ++n) r = r * binomial_factor(n * step, exponent, N);
    return r;
}

}  // namespace qdvol
