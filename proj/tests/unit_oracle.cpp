#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdvol/genfun.hpp"
#include "qdvol/oracle.hpp"

using namespace qdvol;

namespace {

ProfilePair prof(const std::string& sig) {
    auto parsed = parse_signature(sig);
    REQUIRE(parsed.has_value());
    return to_profile(*parsed);
}

}  // namespace

TEST_CASE("hand-sized pillow counts") {
    // Degree 2, empty profile: the unique cover has all four monodromies
    // equal to the transposition, weight 1/2!.
    CoverCount c = count_pillow_covers(ProfilePair{}, 2);
    CHECK(c.all == Rational(1, 2));
    CHECK(c.connected == Rational(1, 2));

    // Four poles need degree >= 4 (parity/padding obstruction below that).
    CHECK(count_pillow_covers(prof("-1^4"), 2).all == Rational(0));
    CoverCount c4 = count_pillow_covers(prof("-1^4"), 4);
    CHECK(c4.all == Rational(1, 4));
    CHECK(c4.connected == Rational(1, 4));
}

TEST_CASE("optimized path agrees with full enumeration") {
    for (int two_d : {2, 4}) {
        for (const char* s : {"-1^4", "2,-1^2"}) {
            CoverCount a = count_pillow_covers(prof(s), two_d);
            CoverCount b = count_pillow_covers_full(prof(s), two_d);
            CHECK(a.all == b.all);
            CHECK(a.connected == b.connected);
        }
        CoverCount a = count_pillow_covers(ProfilePair{}, two_d);
        CoverCount b = count_pillow_covers_full(ProfilePair{}, two_d);
        CHECK(a.all == b.all);
        CHECK(a.connected == b.connected);
    }
}

TEST_CASE("pillow counts match the generating functions") {
    int N = 6;
    for (const char* s : {"-1^4", "2,-1^2", "1^2,-1^2"}) {
        ProfilePair p = prof(s);
        QSeries z_all = zprime_series(p, N) * z_empty(N);
        QSeries z_conn = zconnected_series(p, N);
        for (int two_d : {2, 4, 6}) {
            CoverCount c = count_pillow_covers(p, two_d);
            CHECK(c.all == z_all.coeff(two_d));
            CHECK(c.connected == z_conn.coeff(two_d));
        }
    }
    // Empty profile: all covers are unramified, Z(0,0) itself.
    QSeries ze = z_empty(N);
    for (int two_d : {2, 4, 6})
        CHECK(count_pillow_covers(ProfilePair{}, two_d).all == ze.coeff(two_d));
}

TEST_CASE("torus counts match the abelian generating functions") {
    QSeries ze = z_empty_abelian(5);
    for (int d = 1; d <= 5; ++d) {
        CoverCount c = count_torus_covers({}, d);
        CHECK(c.all == ze.coeff(d));  // partition numbers
        // Connected covers <-> index-d sublattices of Z^2 (sigma(d) of them),
        // each with deck group of order d.
        int sigma = 0;
        for (int k = 1; k <= d; ++k)
            if (d % k == 0) sigma += k;
        CHECK(c.connected == Rational(sigma, d));
    }
    QSeries za = zprime_abelian({2, 2}, 5) * z_empty_abelian(5);
    QSeries zc = zconnected_abelian({2, 2}, 5);
    for (int d = 1; d <= 5; ++d) {
        CoverCount c = count_torus_covers({2, 2}, d);
        CHECK(c.all == za.coeff(d));
        CHECK(c.connected == zc.coeff(d));
    }
}

TEST_CASE("class-sum fast path") {
    // j = 0 reproduces the unramified generating function.
    QSeries ze = z_empty(12);
    for (int two_d : {2, 4, 6, 8, 10, 12})
        CHECK(pole_cover_class_sum(0, two_d) == ze.coeff(two_d));
    // j = 2 reproduces the brute-force counts for four poles.
    ProfilePair p = prof("-1^4");
    for (int two_d : {4, 6, 8})
        CHECK(pole_cover_class_sum(2, two_d) == count_pillow_covers(p, two_d).all);
}

TEST_CASE("volume estimator from partial cover counts") {
    ProfilePair p = prof("-1^4");
    EstimateReport r10 = estimate_volume_from_counts(p, 10);
    CHECK(r10.exact > 0);
    CHECK(std::abs(r10.ratio - 1.0) < 0.35);
    EstimateReport r4 = estimate_volume_from_counts(p, 4);
    CHECK(std::abs(r10.ratio - 1.0) < std::abs(r4.ratio - 1.0));
    CHECK(r4.warning_small_d);
    CHECK(!r10.warning_small_d);

    CHECK_THROWS(estimate_volume_from_counts(prof("2,-1^2"), 4));  // mu nonempty
}

TEST_CASE("truncated-sum identities") {
    auto checks = validate_sum_identities();
    CHECK(checks.size() == 7);
    for (const auto& c : checks) {
        INFO(c.name, ": ", c.lhs, " vs ", c.rhs, " rel ", c.rel_error);
        CHECK(c.pass);
    }
}
