#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdvol/genfun.hpp"

using namespace qdvol;

namespace {

ProfilePair prof(const std::string& sig) {
    auto parsed = parse_signature(sig);
    REQUIRE(parsed.has_value());
    return to_profile(*parsed);
}

}  // namespace

TEST_CASE("empty-profile generating functions") {
    QSeries zp = z_empty(8);
    CHECK(zp.coeff(0) == Rational(1));
    CHECK(zp.coeff(2) == Rational(1, 2));
    CHECK(zp.coeff(4) == Rational(7, 8));
    QSeries za = z_empty_abelian(6);
    // partition numbers
    CHECK(za.coeff(4) == Rational(5));
    CHECK(za.coeff(6) == Rational(11));
}

TEST_CASE("Z' of the four-pole sphere starts at q^4 with weight 1/4") {
    // Degree-4 covers: the corner over the (1^4) corner is unramified, the
    // other three carry fixed-point-free involutions g2, g3, g4 multiplying
    // to the identity. In S4 there are 3*2 = 6 such triples, weight 6/4!.
    QSeries z = zprime_series(prof("-1^4"), 8);
    for (int n = 0; n < 4; ++n) CHECK(z.coeff(n) == Rational(0));
    CHECK(z.coeff(4) == Rational(1, 4));
    CHECK(z.coeff(5) == Rational(0));
    CHECK(z.coeff(7) == Rational(0));
    // Printed weight variant gives a different series (negative control).
    QSeries zp = zprime_series(prof("-1^4"), 8, WeightVariant::Printed);
    CHECK(zp.coeff(4) != z.coeff(4));
}

TEST_CASE("decomposition weights") {
    // No way to split four simple poles into valid sub-profiles.
    CHECK(decompositions(prof("-1^4")).empty());
    CHECK(decompositions(prof("2,-1^2")).empty());

    // mu=(2,2,2), nu=(1,1): only (2,2 | 2,-1^2), counted 3 ways.
    auto d1 = decompositions(prof("2^3,-1^2"));
    REQUIRE(d1.size() == 1);
    CHECK(d1[0].parts.size() == 2);
    CHECK(d1[0].weight == Rational(3));

    // nu=(1^8): the only valid split is two identical (1^4) halves, /2!.
    auto d2 = decompositions(prof("-1^8"));
    REQUIRE(d2.size() == 1);
    CHECK(d2[0].parts.size() == 2);
    CHECK(d2[0].parts[0].nu == std::vector<int>{1, 1, 1, 1});
    CHECK(d2[0].weight == Rational(1, 2));
}

TEST_CASE("connected equals disconnected when nothing decomposes") {
    ProfilePair p = prof("-1^4");
    CHECK(zconnected_series(p, 8) == zprime_series(p, 8));
}

TEST_CASE("abelian connected inversion") {
    // Empty mu: Z' is identically 1, no proper set partitions.
    CHECK(zprime_abelian({}, 6) == QSeries::one(6));
    // Z0(m1,m2) = Z'(m1,m2) - Z0(m1) Z0(m2).
    QSeries lhs = zconnected_abelian({3, 2}, 8);
    QSeries rhs = zprime_abelian({3, 2}, 8) - zconnected_abelian({3}, 8) * zconnected_abelian({2}, 8);
    CHECK(lhs == rhs);
}

TEST_CASE("quasi-modular fits reproduce the series beyond the fit window") {
    ProfilePair p = prof("-1^4");
    FitReport fr = zconnected_poly(p);
    CHECK(fr.surplus >= 2);
    int probe = required_series_order(invariants(p).weight, QMFamily::Pillow) + 6;
    CHECK(fr.poly.to_series(probe) == zconnected_series(p, probe));

    FitReport fa = zconnected_abelian_poly({2});
    int probe_a = required_series_order(3, QMFamily::Abelian) + 6;
    CHECK(fa.poly.to_series(probe_a) == zconnected_abelian({2}, probe_a));
}

TEST_CASE("asymptotics of the four-pole sphere") {
    HLaurent L = z_asymptotics(prof("-1^4"));
    // dim_C = 2: nothing beyond h^-2, and the leading term is pi^2/384
    // (volume pi^2/192 after the dim_R / dim_C! normalization).
    CHECK(L.coeff(-3).is_zero());
    CHECK(L.coeff(-4).is_zero());
    CHECK(L.coeff(-2) == PiPoly::monomial(2, Rational(1, 384)));
}

TEST_CASE("asymptotics of Q(2,-1^2)") {
    HLaurent L = z_asymptotics(prof("2,-1^2"));
    CHECK(L.coeff(-4).is_zero());
    CHECK(L.coeff(-3) == PiPoly::monomial(2, Rational(1, 48)));
}

TEST_CASE("interpolation route agrees with the direct fit") {
    // g_nu for the empty profile is the constant 1.
    CHECK(interpolate_g_nu({}).eval({3, 2, 1}) == Rational(1));

    for (const char* sig : {"-1^4", "2,-1^2"}) {
        ProfilePair p = prof(sig);
        FitReport direct = zprime_poly(p);
        FitReport interp = zprime_poly_method2(p);
        int probe = required_series_order(invariants(p).weight, QMFamily::Pillow);
        CHECK(direct.poly.to_series(probe) == interp.poly.to_series(probe));
    }
}
