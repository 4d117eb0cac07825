#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <mpfr.h>

#include "qdvol/quasimodular.hpp"

using namespace qdvol;

TEST_CASE("basis dimensions match the dimension table") {
    int expect[5] = {3, 7, 13, 22, 34};
    for (int i = 0; i < 5; ++i)
        CHECK(monomial_basis(2 * (i + 1), QMFamily::Pillow).size() == static_cast<size_t>(expect[i]));
    // abelian ring has one generator per even weight 2,4,6
    CHECK(monomial_basis(2, QMFamily::Abelian).size() == 2);
    CHECK(monomial_basis(6, QMFamily::Abelian).size() == 7);
}

TEST_CASE("eisenstein expansions") {
    QSeries e2 = eisenstein(2, 1, 6);
    CHECK(e2.coeff(0) == Rational(-1, 24));
    CHECK(e2.coeff(1) == 1);
    CHECK(e2.coeff(2) == 3);
    CHECK(e2.coeff(3) == 4);
    CHECK(e2.coeff(4) == 7);
    CHECK(e2.coeff(6) == 12);
    QSeries e2q2 = eisenstein(2, 2, 8);
    CHECK(e2q2.coeff(2) == 1);
    CHECK(e2q2.coeff(4) == 3);
    CHECK(e2q2.coeff(3) == 0);
    QSeries e4 = eisenstein(4, 1, 4);
    CHECK(e4.coeff(0) == Rational(1, 240));
    CHECK(e4.coeff(1) == 1);
    CHECK(e4.coeff(2) == 9);
    CHECK(e4.coeff(3) == 28);
    QSeries e6 = eisenstein(6, 1, 3);
    CHECK(e6.coeff(0) == Rational(-1, 504));
    CHECK(e6.coeff(2) == 33);
}

TEST_CASE("fit recovers a known combination exactly") {
    // target = 3*E2(q^2)*E2(q^4) - 1/5*E4(q^4) + 7, weight cap 4
    int N = required_series_order(4, QMFamily::Pillow);
    QSeries target = (eisenstein(2, 2, N) * eisenstein(2, 4, N)).scaled(3) -
                     eisenstein(4, 4, N).scaled(Rational(1, 5)) - QSeries::one(N).scaled(-7);
    FitReport rep = fit(target, 4, QMFamily::Pillow);
    CHECK(rep.surplus >= 2);
    CHECK(rep.poly.to_series(N) == target);
    // round-trip coefficient check
    bool found = false;
    for (const auto& [mon, c] : rep.poly.terms)
        if (mon.a == 1 && mon.b == 1 && mon.c == 0) {
            CHECK(c == 3);
            found = true;
        }
    CHECK(found);
}

TEST_CASE("fit rejects non-quasimodular targets") {
    int N = required_series_order(2, QMFamily::Pillow);
    QSeries junk(N);
    junk.set(0, 1);
    junk.set(2, Rational(22, 7));
    junk.set(4, Rational(355, 113));
    junk.set(6, 1);
    junk.set(8, 1);
    CHECK_THROWS_AS(fit(junk, 2, QMFamily::Pillow), FitError);
}

static double eval_series_at(const QSeries& s, double h, int dilate) {
    // evaluate at q = e^{-h} with 256-bit mpfr, coefficients exact
    mpfr_t acc, q, qe, term;
    mpfr_inits2(256, acc, q, qe, term, (mpfr_ptr) nullptr);
    mpfr_set_d(q, -h * dilate, MPFR_RNDN);
    mpfr_exp(q, q, MPFR_RNDN);  // q^dilate per unit exponent
    mpfr_set_zero(acc, 1);
    for (int i = 0; i <= s.order; ++i) {
        if (s.coeff(i) == 0) continue;
        mpfr_set_q(term, s.coeff(i).get_mpq_t(), MPFR_RNDN);
        mpfr_pow_ui(qe, q, static_cast<unsigned long>(i), MPFR_RNDN);
        mpfr_mul(term, term, qe, MPFR_RNDN);
        mpfr_add(acc, acc, term, MPFR_RNDN);
    }
    double out = mpfr_get_d(acc, MPFR_RNDN);
    mpfr_clears(acc, q, qe, term, (mpfr_ptr) nullptr);
    return out;
}

static double eval_laurent_at(const HLaurent& L, double h) {
    double acc = 0;
    for (const auto& [p, v] : L.c) acc += v.to_double() * std::pow(h, p);
    return acc;
}

TEST_CASE("substitution rules pass the numeric gate at h=0.01") {
    const double h = 0.01;
    const int N = 1500;
    struct Probe {
        QMFamily fam;
        int which;
        int two_k, m;
    };
    // pillow generators at their natural q-powers; abelian generators read at q^2
    Probe probes[] = {{QMFamily::Pillow, 0, 2, 2}, {QMFamily::Pillow, 1, 2, 4},
                      {QMFamily::Pillow, 2, 4, 4}, {QMFamily::Abelian, 0, 2, 2},
                      {QMFamily::Abelian, 1, 4, 2}, {QMFamily::Abelian, 2, 6, 2}};
    for (const auto& pr : probes) {
        QSeries s = eisenstein(pr.two_k, 1, N);
        double lhs = eval_series_at(s, h, pr.m);
        double rhs = eval_laurent_at(generator_laurent(pr.fam, pr.which), h);
        CHECK(std::abs(lhs - rhs) / std::abs(rhs) < 1e-6);
    }
}

TEST_CASE("substituted laurent of a polynomial") {
    QMPoly p;
    p.fam = QMFamily::Pillow;
    p.weight_cap = 2;
    p.terms.emplace_back(QMMonomial{QMFamily::Pillow, 1, 0, 0}, Rational(2));
    HLaurent L = substitute_asymptotics(p);
    CHECK(L.coeff(-2) == PiPoly::monomial(2, Rational(1, 12)));
    CHECK(L.coeff(-1) == PiPoly::monomial(0, Rational(-1, 2)));
}
