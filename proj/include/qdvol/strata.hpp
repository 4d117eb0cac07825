#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qdvol/rational.hpp"

namespace qdvol {

// Singularity orders of a stratum of quadratic differentials: each order is
// >= -1 and nonzero (simple poles allowed), sum divisible by 4.
struct StratumSignature {
    std::vector<int> orders;  // sorted descending, poles (-1) last
};

// Ramification-profile encoding of a stratum:
//   mu: one entry a/2+1 (>= 2) per even order a (ramification over the
//       interior marked points; labeled/ordered);
//   nu: one entry a+2 (odd, >= 1) per odd order a including poles
//       (ramification over corner 0, together with 2-padding).
struct ProfilePair {
    std::vector<int> mu;  // sorted descending
    std::vector<int> nu;  // sorted descending
};

struct StratumInvariants {
    int genus = 0;      // g of the underlying surface
    int ghat = 0;       // genus of the orienting double cover
    int g_eff = 0;      // ghat - g; pi-exponent of the volume is 2*g_eff
    int dim_c = 0;      // complex dimension of the stratum
    int dim_r = 0;      // 2*dim_c
    int weight = 0;     // quasi-modular weight w = |mu| + l(mu) + |nu|/2
    int l_mu = 0;
    int l_nu = 0;
    int n_poles = 0;    // number of simple poles (signature view)
};

// Compact text form, e.g. "2,-1^2" or "1^2,-1^2". Parse rejects zero
// orders, orders < -1, and malformed syntax. Validity (sum % 4, genus >= 0)
// is a separate check.
std::optional<StratumSignature> parse_signature(const std::string& text);
std::string format_signature(const StratumSignature& sig);

// Empty string reason means valid.
std::string signature_invalid_reason(const StratumSignature& sig);
std::string profile_invalid_reason(const ProfilePair& p);

ProfilePair to_profile(const StratumSignature& sig);
StratumSignature to_signature(const ProfilePair& p);

StratumInvariants invariants(const ProfilePair& p);

// Canonical key for memo tables: "mu|nu" with sorted parts.
std::string profile_key(const ProfilePair& p);

}  // namespace qdvol
