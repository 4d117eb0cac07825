#pragma once

#include <optional>
#include <string>

#include "qdvol/genfun.hpp"
#include "qdvol/pipoly.hpp"
#include "qdvol/strata.hpp"

namespace qdvol {

// Reads Vol^EO off the h -> 0 asymptotics: Z0 ~ Vol/dim_R * dim_C!/h^dim_C.
// Throws if any h^{-k} with k > dim_C survives.
PiPoly extract_volume_eo(const HLaurent& L, const StratumInvariants& inv);

// Vol^AEZ = 4^{dim_C} / 2^{l(mu)} * prod m_i! * Vol^EO, where the m_i are
// the multiplicities of the odd orders (simple poles included) and l(mu)
// counts the even zeros.
Rational aez_factor(const StratumSignature& sig);

// Sphere strata: Vol = 2 pi^2 prod v(alpha_i),
//   v(n) = n!!/(n+1)!! * pi^(n+1)        (n odd, v(-1) = 1)
//   v(n) = 2 * n!!/(n+1)!! * pi^n        (n even)
PiPoly genus0_volume(const StratumSignature& sig);  // throws unless genus 0

// Closed forms for the hyperelliptic components, with labeled singularities
// (d = k1+k2+4 throughout; nullopt if the signature is not of one of the
// three shapes):
//   (k1^2,k2^2), k_i odd:        2^d/d! pi^d     k1!!/(k1+1)!! k2!!/(k2+1)!!
//                 (x3 if k1=k2, i.e. the shape (k1^4))
//   (k1^2,2k2+2), k1 odd:        2^d/d! pi^(d-1) k1!!/(k1+1)!! k2!!/(k2+1)!!
//   (2k1+2,2k2+2):               2^(d+1)/d! pi^(d-2) ...
// The third shape carries the hyperelliptic involution even after labeling,
// so counting modulo symmetries halves it.
std::optional<PiPoly> hyperelliptic_component_volume(const StratumSignature& sig);

// Hyperelliptic components of Abelian strata, area-1/2 hypersurface:
//   single zero 2g-2:      k = 2g-1,  2^(k+2)/(k+2)! (k-2)!!/(k-1)!! pi^(k+1)
//   double zero (g-1)^2:   k = 2g,    2^(k+3)/(k+2)! (k-2)!!/(k-1)!! pi^k
PiPoly hyperelliptic_abelian_volume(int g, bool single_zero);

// Unnumbered volume: numbered * |Gamma| / prod (multiplicity!), the product
// running over all distinct singularity orders.
PiPoly unnumbered_from_numbered(const PiPoly& numbered, const StratumSignature& sig,
                                int gamma_order = 1);

enum class VolumeMethod { Auto, CharacterSum, ClosedForm };

struct VolumeResult {
    PiPoly eo;          // Eskin-Okounkov normalization
    PiPoly aez;         // Athreya-Eskin-Zorich normalization, labeled zeros
    std::string method; // "character-sum" or "genus0"
};

// Auto: character-sum pipeline when w(mu,nu) <= max_weight (cross-checked
// against the sphere formula when genus is 0), otherwise the sphere formula
// alone; throws for strata it cannot handle.
VolumeResult compute_volume(const StratumSignature& sig,
                            VolumeMethod method = VolumeMethod::Auto,
                            WeightVariant v = WeightVariant::Frobenius,
                            int max_weight = 6);

}  // namespace qdvol
