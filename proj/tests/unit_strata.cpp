#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdvol/strata.hpp"

using namespace qdvol;

TEST_CASE("parse and format signatures") {
    auto s = parse_signature("2,-1^2");
    REQUIRE(s.has_value());
    CHECK(s->orders == std::vector<int>{2, -1, -1});
    CHECK(format_signature(*s) == "2,-1^2");

    auto t = parse_signature("-1^4");
    REQUIRE(t.has_value());
    CHECK(t->orders == std::vector<int>{-1, -1, -1, -1});

    auto u = parse_signature("5,4,1^{2},-1^3");
    REQUIRE(u.has_value());
    CHECK(format_signature(*u) == "5,4,1^2,-1^3");

    CHECK(!parse_signature("").has_value());
    CHECK(!parse_signature("0,4").has_value());
    CHECK(!parse_signature("-2").has_value());
    CHECK(!parse_signature("2,^3").has_value());

    // valid syntax, invalid stratum: order sum not divisible by 4
    auto bad = parse_signature("3,-1");
    REQUIRE(bad.has_value());
    CHECK(signature_invalid_reason(*bad) != "");
    CHECK(signature_invalid_reason(*s) == "");
}

TEST_CASE("profiles and invariants") {
    // Q(-1^4): mu empty, nu = (1,1,1,1)
    auto p = to_profile(*parse_signature("-1^4"));
    CHECK(p.mu.empty());
    CHECK(p.nu == std::vector<int>{1, 1, 1, 1});
    auto inv = invariants(p);
    CHECK(inv.genus == 0);
    CHECK(inv.dim_c == 2);
    CHECK(inv.dim_r == 4);
    CHECK(inv.g_eff == 1);
    CHECK(inv.weight == 2);
    CHECK(inv.n_poles == 4);

    // Q(2,-1^2): mu=(2), nu=(1,1)
    auto p2 = to_profile(*parse_signature("2,-1^2"));
    CHECK(p2.mu == std::vector<int>{2});
    CHECK(p2.nu == std::vector<int>{1, 1});
    auto inv2 = invariants(p2);
    CHECK(inv2.genus == 1);
    CHECK(inv2.dim_c == 3);
    CHECK(inv2.g_eff == 1);
    CHECK(inv2.weight == 4);

    // Q(1,-1^5): nu=(3,1^5)
    auto p3 = to_profile(*parse_signature("1,-1^5"));
    CHECK(p3.nu == std::vector<int>{3, 1, 1, 1, 1, 1});
    auto inv3 = invariants(p3);
    CHECK(inv3.dim_c == 4);
    CHECK(inv3.g_eff == 2);
    CHECK(inv3.weight == 4);

    // Q(8): mu=(5)
    auto p4 = to_profile(*parse_signature("8"));
    CHECK(p4.mu == std::vector<int>{5});
    auto inv4 = invariants(p4);
    CHECK(inv4.genus == 3);
    CHECK(inv4.dim_c == 5);
    CHECK(inv4.g_eff == 2);
    CHECK(inv4.weight == 6);

    // Q(9,-1): dim 6, genus 3 per the table
    auto p5 = to_profile(*parse_signature("9,-1"));
    auto inv5 = invariants(p5);
    CHECK(inv5.dim_c == 6);
    CHECK(inv5.genus == 3);
    CHECK(inv5.g_eff == 3);
    CHECK(inv5.weight == 6);

    // round trip
    for (const char* txt : {"-1^4", "2,-1^2", "8", "9,-1", "5,4,1^2,-1^3", "2^2"}) {
        auto sig = *parse_signature(txt);
        CHECK(format_signature(to_signature(to_profile(sig))) == format_signature(sig));
    }
}

TEST_CASE("profile validity") {
    CHECK(profile_invalid_reason({{}, {1, 1, 1, 1}}) == "");
    CHECK(profile_invalid_reason({{2}, {1, 1}}) == "");
    CHECK(profile_invalid_reason({{}, {1, 1}}) != "");        // genus not integer
    CHECK(profile_invalid_reason({{}, {1, 1, 1}}) != "");     // |nu| odd
    CHECK(profile_invalid_reason({{}, {2, 2}}) != "");        // even nu part
    CHECK(profile_invalid_reason({{1}, {}}) != "");           // mu part < 2
    CHECK(profile_invalid_reason({{}, std::vector<int>(8, 1)}) != "");  // genus < 0
}
