#include "qdvol/volume.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace qdvol {

PiPoly extract_volume_eo(const HLaurent& L, const StratumInvariants& inv) {
    for (const auto& [k, p] : L.c)
        if (k < -inv.dim_c && !p.is_zero())
            throw std::runtime_error("extract_volume_eo: surviving h^" + std::to_string(k) +
                                     " term (expected nothing below h^-" +
                                     std::to_string(inv.dim_c) + ")");
    PiPoly lead = L.coeff(-inv.dim_c);
    return lead.scaled(Rational(inv.dim_r) / Rational(factorial(inv.dim_c)));
}

Rational aez_factor(const StratumSignature& sig) {
    StratumInvariants inv = invariants(to_profile(sig));
    Rational f = pow_rational(Rational(4), inv.dim_c) / pow_rational(Rational(2), inv.l_mu);
    std::map<int, int> mult;
    for (int a : sig.orders)
        if (a % 2 != 0) mult[a]++;
    for (const auto& [a, m] : mult) f *= Rational(factorial(m));
    return f;
}

namespace {

// 2 pi^2 normalized contribution of one singularity of order n >= -1.
PiPoly v_factor(int n) {
    Rational r = Rational(double_factorial(n)) / Rational(double_factorial(n + 1));
    if (n % 2 != 0)  // odd (covers n = -1: r = 1, pi^0)
        return PiPoly::monomial(n + 1, r);
    return PiPoly::monomial(n, 2 * r);
}

}  // namespace

PiPoly genus0_volume(const StratumSignature& sig) {
    StratumInvariants inv = invariants(to_profile(sig));
    if (inv.genus != 0) throw std::invalid_argument("genus0_volume: genus != 0");
    PiPoly vol = PiPoly::monomial(2, Rational(2));
    for (int a : sig.orders) vol = vol * v_factor(a);
    return vol;
}

std::optional<PiPoly> hyperelliptic_component_volume(const StratumSignature& sig) {
    std::map<int, int> mult;
    for (int a : sig.orders) mult[a]++;

    auto ratio = [](int k) -> Rational {
        return Rational(double_factorial(k)) / Rational(double_factorial(k + 1));
    };
    auto base = [](int d, int pi_pow, const Rational& extra) {
        return PiPoly::monomial(pi_pow,
                                extra * pow_rational(Rational(2), d) / Rational(factorial(d)));
    };

    // (k1^4), k1 odd
    if (mult.size() == 1) {
        auto [k, m] = *mult.begin();
        if (m == 4 && k % 2 != 0) {
            int d = 2 * k + 4;
            return base(d, d, Rational(3) * ratio(k) * ratio(k));
        }
        if (m == 2 && k % 2 == 0) {  // (2k1+2)^2, k1 = k2
            int k1 = k / 2 - 1, d = 2 * k1 + 4;
            return base(d, d - 2, Rational(2) * ratio(k1) * ratio(k1));  // 2^{d+1}/d!
        }
        return std::nullopt;
    }
    if (mult.size() != 2) return std::nullopt;
    auto it = mult.begin();
    auto [a1, m1] = *it;
    auto [a2, m2] = *std::next(it);

    // (k1^2, k2^2), both odd, distinct
    if (m1 == 2 && m2 == 2 && a1 % 2 != 0 && a2 % 2 != 0) {
        int d = a1 + a2 + 4;
        return base(d, d, ratio(a1) * ratio(a2));
    }
    // (k1^2, 2k2+2), k1 odd, other even
    for (int swap = 0; swap < 2; ++swap) {
        int ko = swap ? a2 : a1, mo = swap ? m2 : m1;
        int ke = swap ? a1 : a2, me = swap ? m1 : m2;
        if (mo == 2 && ko % 2 != 0 && me == 1 && ke % 2 == 0 && ke >= 2) {
            int k2 = ke / 2 - 1, d = ko + k2 + 4;
            return base(d, d - 1, ratio(ko) * ratio(k2));
        }
    }
    // (2k1+2, 2k2+2), both even, distinct
    if (m1 == 1 && m2 == 1 && a1 % 2 == 0 && a2 % 2 == 0 && a1 >= 2 && a2 >= 2) {
        int k1 = a1 / 2 - 1, k2 = a2 / 2 - 1, d = k1 + k2 + 4;
        return base(d, d - 2, Rational(2) * ratio(k1) * ratio(k2));  // 2^{d+1}/d!
    }
    return std::nullopt;
}

PiPoly hyperelliptic_abelian_volume(int g, bool single_zero) {
    if (g < 2) throw std::invalid_argument("hyperelliptic_abelian_volume: g >= 2");
    int k = single_zero ? 2 * g - 1 : 2 * g;
    Rational r = Rational(double_factorial(k - 2)) / Rational(double_factorial(k - 1));
    Rational c = pow_rational(Rational(2), k + (single_zero ? 2 : 3)) / Rational(factorial(k + 2));
    return PiPoly::monomial(single_zero ? k + 1 : k, c * r);
}

PiPoly unnumbered_from_numbered(const PiPoly& numbered, const StratumSignature& sig,
                                int gamma_order) {
    std::map<int, int> mult;
    for (int a : sig.orders) mult[a]++;
    Rational f = Rational(gamma_order);
    for (const auto& [a, m] : mult) f /= Rational(factorial(m));
    return numbered.scaled(f);
}

VolumeResult compute_volume(const StratumSignature& sig, VolumeMethod method, WeightVariant v,
                            int max_weight) {
    std::string bad = signature_invalid_reason(sig);
    if (!bad.empty()) throw std::invalid_argument("compute_volume: " + bad);
    ProfilePair p = to_profile(sig);
    StratumInvariants inv = invariants(p);
    Rational factor = aez_factor(sig);

    bool can_sum = inv.weight <= max_weight;
    bool want_sum = method == VolumeMethod::CharacterSum ||
                    (method == VolumeMethod::Auto && can_sum);
    if (want_sum) {
        if (!can_sum)
            throw std::invalid_argument("compute_volume: weight " + std::to_string(inv.weight) +
                                        " exceeds max_weight " + std::to_string(max_weight));
        VolumeResult r;
        r.eo = extract_volume_eo(z_asymptotics(p, v), inv);
        r.aez = r.eo.scaled(factor);
        r.method = "character-sum";
        if (method == VolumeMethod::Auto && inv.genus == 0 && !(r.aez == genus0_volume(sig)))
            throw std::runtime_error("compute_volume: character sum disagrees with the sphere "
                                     "formula for " + format_signature(sig));
        return r;
    }
    if (inv.genus != 0)
        throw std::invalid_argument("compute_volume: no closed form for " +
                                    format_signature(sig) + " (genus " +
                                    std::to_string(inv.genus) + ", weight " +
                                    std::to_string(inv.weight) + ")");
    VolumeResult r;
    r.aez = genus0_volume(sig);
    r.eo = r.aez.scaled(Rational(1) / factor);
    r.method = "genus0";
    return r;
}

}  // namespace qdvol
