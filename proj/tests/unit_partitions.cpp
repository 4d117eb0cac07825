#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qdvol/partition.hpp"
#include "qdvol/qseries.hpp"

using namespace qdvol;

TEST_CASE("partition enumeration") {
    CHECK(partitions_of(0).size() == 1);
    CHECK(partitions_of(4).size() == 5);
    CHECK(partitions_of(10).size() == 42);
    CHECK(partitions_of(20).size() == 627);
}

TEST_CASE("hook length dimensions") {
    CHECK(dim_irrep({}) == 1);
    CHECK(dim_irrep({3}) == 1);
    CHECK(dim_irrep({1, 1, 1}) == 1);
    CHECK(dim_irrep({2, 1}) == 2);
    CHECK(dim_irrep({3, 2}) == 5);
    CHECK(dim_irrep({4, 3, 2, 1}) == 768);
    // Burnside: sum of dim^2 over partitions of n equals n!
    for (int n : {5, 8}) {
        Integer s = 0;
        for (const auto& p : partitions_of(n)) {
            Integer d = dim_irrep(p);
            s += d * d;
        }
        CHECK(s == factorial(n));
    }
}

TEST_CASE("characters by Murnaghan-Nakayama") {
    // S3 table
    CHECK(character_value({3}, {1, 1, 1}) == 1);
    CHECK(character_value({3}, {2, 1}) == 1);
    CHECK(character_value({3}, {3}) == 1);
    CHECK(character_value({2, 1}, {1, 1, 1}) == 2);
    CHECK(character_value({2, 1}, {2, 1}) == 0);
    CHECK(character_value({2, 1}, {3}) == -1);
    CHECK(character_value({1, 1, 1}, {2, 1}) == -1);
    CHECK(character_value({1, 1, 1}, {3}) == 1);
    // sign character: chi^{1^n}(rho) = (-1)^{n - l(rho)}
    CHECK(character_value({1, 1, 1, 1, 1}, {3, 2}) == -1);
    CHECK(character_value({1, 1, 1, 1, 1}, {5}) == 1);
    // column orthogonality at n = 6: sum over lambda chi(rho)^2 = z_rho
    for (std::vector<int> rho : {std::vector<int>{2, 2, 1, 1}, {3, 2, 1}, {6}, {4, 2}}) {
        Integer z = cycle_type_z(rho);
        int64_t s = 0;
        for (const auto& lam : partitions_of(6)) {
            int64_t v = character_value(lam, rho);
            s += v * v;
        }
        CHECK(Integer(s) == z);
    }
}

TEST_CASE("balanced partitions") {
    CHECK(is_balanced({}));
    CHECK(is_balanced({2}));
    CHECK(is_balanced({1, 1}));
    CHECK(!is_balanced({1}));
    CHECK(!is_balanced({3, 2, 1}));  // 2-core is itself
    CHECK(balanced_partitions_of(2).size() == 2);
    // balanced iff chi^lambda(2^{n/2}) != 0 on even sizes
    for (int n : {4, 6, 8, 10}) {
        std::vector<int> rho(n / 2, 2);
        for (const auto& lam : partitions_of(n)) {
            bool nonzero = character_value(lam, rho) != 0;
            CHECK(nonzero == is_balanced(lam));
        }
    }
}

TEST_CASE("central characters") {
    // f_{2,1,...,1} on (2) in S2: |C|=1, chi=1, dim=1
    auto f = central_character({2}, {2}, PadKind::Ones);
    REQUIRE(f.has_value());
    CHECK(*f == 1);
    auto fs = central_character({1, 1}, {2}, PadKind::Ones);
    CHECK(*fs == -1);
    // padding impossible
    CHECK(!central_character({2, 1}, {2}, PadKind::Twos).has_value());
    CHECK(!central_character({2}, {3}, PadKind::Ones).has_value());
}

TEST_CASE("shifted symmetric functions") {
    // p_1(lambda) = |lambda| - 1/24
    CHECK(p_shifted(1, {}) == Rational(-1, 24));
    CHECK(p_shifted(1, {3, 1}) == Rational(4) - Rational(1, 24));
    CHECK(p_shifted(1, {2, 2, 1}) == Rational(5) - Rational(1, 24));
    // pbar constants: c_0 = 1/2, c_2 = -1/8, c_4 = 5/32, odd vanish
    CHECK(pbar_constant(0) == Rational(1, 2));
    CHECK(pbar_constant(1) == 0);
    CHECK(pbar_constant(2) == Rational(-1, 8));
    CHECK(pbar_constant(4) == Rational(5, 32));
    // pbar_0 == 1/2 exactly on balanced partitions
    for (const auto& lam : partitions_of(6)) {
        bool bal = pbar_shifted(0, lam) == Rational(1, 2);
        CHECK(bal == is_balanced(lam));
    }
}

TEST_CASE("bracket weight reproduces the empty-profile generating function") {
    // sum over balanced |lambda|=2d of w(lambda) should match
    // prod (1-q^{2n})^{-1/2} = 1 + q^2/2 + 7q^4/8 + ...
    QSeries zc = product_factor(2, Rational(-1, 2), 8);
    CHECK(zc.coeff(2) == Rational(1, 2));
    CHECK(zc.coeff(4) == Rational(7, 8));
    for (int d = 1; d <= 4; ++d) {
        Rational s = 0;
        for (const auto& lam : balanced_partitions_of(2 * d)) s += bracket_weight(lam, WeightVariant::Frobenius);
        CHECK(s == zc.coeff(2 * d));
    }
    // printed variant does NOT reproduce it (negative control)
    Rational sp = 0;
    for (const auto& lam : balanced_partitions_of(2)) sp += bracket_weight(lam, WeightVariant::Printed);
    CHECK(sp != Rational(1, 2));
}
