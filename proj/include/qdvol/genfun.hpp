#pragma once

#include <map>

#include "qdvol/partition.hpp"
#include "qdvol/quasimodular.hpp"
#include "qdvol/strata.hpp"

namespace qdvol {

// Generating function of all covers with empty profile:
//   pillow: prod (1-q^{2n})^{-1/2}    torus: prod (1-q^n)^{-1}
QSeries z_empty(int N);
QSeries z_empty_abelian(int N);

// Z'(mu,nu;q): covers without unramified components, as the bracket
//   (1/Z(0,0)) sum over balanced lambda of q^|lambda| w(lambda)
//   f_{nu,2..2}(lambda)/f_{2..2}(lambda) * prod_i f_{mu_i}(lambda),
// evaluated without the internal division (w * F collapses).
QSeries zprime_series(const ProfilePair& p, int N,
                      WeightVariant v = WeightVariant::Frobenius);

// Torus analogue over all partitions: (1/Z(0)) sum q^|lambda| prod f_{mu_i}.
QSeries zprime_abelian(const std::vector<int>& mu, int N);

// One way of splitting a profile into >= 2 valid sub-profiles, together
// with its combinatorial weight a(D): the multinomial count of assignments
// of the labeled mu entries divided by k! for each group of k identical
// parts (nu entries are unlabeled).
struct Decomposition {
    std::vector<ProfilePair> parts;
    Rational weight;
};
std::vector<Decomposition> decompositions(const ProfilePair& p);

// Connected covers: Z0(p) = Z'(p) - sum_D a(D) prod Z0(part).
QSeries zconnected_series(const ProfilePair& p, int N,
                          WeightVariant v = WeightVariant::Frobenius);
// Torus analogue; labels are all distinct, so the poset is plain set
// partitions of the mu positions with unit weights.
QSeries zconnected_abelian(const std::vector<int>& mu, int N);

// Quasi-modular fits at weight cap w(mu,nu) (pillow) / |mu|+l(mu) (abelian),
// with the policy surplus of 2 consistency rows.
FitReport zprime_poly(const ProfilePair& p, WeightVariant v = WeightVariant::Frobenius);
FitReport zconnected_poly(const ProfilePair& p, WeightVariant v = WeightVariant::Frobenius);
FitReport zconnected_abelian_poly(const std::vector<int>& mu);

// 2^{l(mu)-1} * (abelian Z0 read at q^2), as h -> 0 asymptotics. Subtracted
// from Z0(mu,{}) to cut the orientable square-tiled surfaces out of strata
// with only even singularities.
HLaurent quad_subtraction_laurent(const std::vector<int>& mu);

// Full h -> 0 asymptotics of the connected generating function of the
// stratum (with the abelian subtraction applied when nu is empty).
HLaurent z_asymptotics(const ProfilePair& p, WeightVariant v = WeightVariant::Frobenius);

void clear_genfun_cache();

// ---- optional second route: shifted-symmetric interpolation ----

// Monomial in the p_k (k>=1, weight k+1) and pbar_k (k>=1, weight k)
// generators.
struct SymMonomial {
    std::map<int, int> p;     // k -> exponent
    std::map<int, int> pbar;  // k -> exponent
    int weight() const;
    bool operator<(const SymMonomial& o) const;
    std::string str() const;
};

struct SymPoly {
    std::map<SymMonomial, Rational> terms;
    Rational eval(const Partition& lam) const;
    SymPoly operator*(const SymPoly& o) const;
    SymPoly operator+(const SymPoly& o) const;
    static SymPoly constant(const Rational& c);
};

std::vector<SymMonomial> sym_monomials(int weight_cap);

// g_nu = f_{nu,2..2}/f_{2..2} on balanced partitions, interpolated exactly
// in the generators (weight (|nu|+l(nu))/2) and verified on held-out
// partitions.
SymPoly interpolate_g_nu(const std::vector<int>& nu);
// f_{m,1..1} as polynomial in p_k alone, weight m+1.
SymPoly interpolate_f_mu(int m);

// <monomial>_w as a pillow quasi-modular polynomial of weight = monomial
// weight (fit cap).
FitReport bracket_monomial(const SymMonomial& m,
                           WeightVariant v = WeightVariant::Frobenius);

// Z'(mu,nu) assembled through the interpolation route; must agree with
// zprime_poly.
FitReport zprime_poly_method2(const ProfilePair& p,
                              WeightVariant v = WeightVariant::Frobenius);

}  // namespace qdvol
