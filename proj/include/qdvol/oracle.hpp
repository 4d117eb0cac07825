#pragma once

#include <string>
#include <vector>

#include "qdvol/strata.hpp"

namespace qdvol {

struct CoverCount {
    Rational all;        // weighted count of all covers (1/|Aut|, i.e. tuples/n!)
    Rational connected;  // transitive tuples only
};

// Degree-2d pillow covers with monodromy (g1,g2,g3,g4,h_1..h_l):
//   g1 of type (nu,2^{d-|nu|/2}), g2..g4 fixed-point-free involutions,
//   h_i of type (mu_i,1^{2d-mu_i}), g1 g2 g3 g4 h_1...h_l = id.
// Optimized path fixes g2 as a class representative; degree <= 8.
CoverCount count_pillow_covers(const ProfilePair& p, int two_d);
// Plain full enumeration over all tuples; degree <= 4, used as a check of
// the optimized path.
CoverCount count_pillow_covers_full(const ProfilePair& p, int two_d);

// Degree-d torus covers (a,b,h_1..h_l): a^-1 b^-1 a b h_1...h_l = id,
// h_i of type (mu_i,1^{d-mu_i}); degree <= 6.
CoverCount count_torus_covers(const std::vector<int>& mu, int d);

// Weighted tuple count for the profile (emptyset, 1^{2j}) at degree 2d,
// summed over conjugacy classes of g2*g3 instead of enumerating tuples:
// reaches degree 20 and beyond.
Rational pole_cover_class_sum(int j, int two_d);

struct EstimateReport {
    int D = 0;                 // degrees 2..2D enter the partial sum
    double estimate = 0;       // approximate Vol^EO
    double exact = 0;          // exact pipeline value (0 if unavailable)
    double ratio = 0;          // estimate/exact when exact is known
    bool warning_small_d = false;
};

// Vol^EO ~ dim_R * Z0_{2D} / (2D)^{dim_C} with Z0_{2D} the partial sum of
// connected weighted counts. Supported for profiles (emptyset, 1^{2j}) with
// no proper decompositions (connected = no-unramified-components there).
EstimateReport estimate_volume_from_counts(const ProfilePair& p, int D);

struct IdentityCheck {
    std::string name;
    double lhs = 0;       // truncated sum (or exact count), normalized
    double rhs = 0;       // closed form / asymptotic prediction
    double rel_error = 0; // |lhs/rhs - 1|
    double tolerance = 0;
    bool pass = false;
};

// Truncated-sum checks of the zeta-value identities and lattice-counting
// asymptotics the volume computations rest on; evaluated with 256-bit
// precision. scale >= 1 grows every truncation bound.
std::vector<IdentityCheck> validate_sum_identities(long scale = 1);

}  // namespace qdvol
