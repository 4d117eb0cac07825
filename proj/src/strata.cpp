#include "qdvol/strata.hpp"

#include <algorithm>
#include <sstream>

namespace qdvol {

std::optional<StratumSignature> parse_signature(const std::string& text) {
    StratumSignature sig;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, ',')) {
        // trim
        size_t a = token.find_first_not_of(" \t");
        size_t b = token.find_last_not_of(" \t");
        if (a == std::string::npos) return std::nullopt;
        token = token.substr(a, b - a + 1);
        long order, mult = 1;
        auto caret = token.find('^');
        try {
            std::string head = caret == std::string::npos ? token : token.substr(0, caret);
            order = std::stol(head);
            if (caret != std::string::npos) {
                std::string tail = token.substr(caret + 1);
                if (!tail.empty() && tail.front() == '{' && tail.back() == '}')
                    tail = tail.substr(1, tail.size() - 2);
                mult = std::stol(tail);
            }
        } catch (...) {
            return std::nullopt;
        }
        if (order == 0 || order < -1 || mult < 1 || mult > 1000) return std::nullopt;
        for (long k = 0; k < mult; ++k) sig.orders.push_back(static_cast<int>(order));
    }
    if (sig.orders.empty()) return std::nullopt;
    std::sort(sig.orders.begin(), sig.orders.end(), std::greater<int>());
    return sig;
}

std::string format_signature(const StratumSignature& sig) {
    std::ostringstream out;
    size_t i = 0;
    bool first = true;
    while (i < sig.orders.size()) {
        size_t j = i;
        while (j < sig.orders.size() && sig.orders[j] == sig.orders[i]) ++j;
        if (!first) out << ",";
        out << sig.orders[i];
        if (j - i > 1) out << "^" << (j - i);
        first = false;
        i = j;
    }
    return out.str();
}

std::string signature_invalid_reason(const StratumSignature& sig) {
    if (sig.orders.empty()) return "empty signature";
    long s = 0;
    for (int a : sig.orders) {
        if (a == 0 || a < -1) return "orders must be nonzero and >= -1";
        s += a;
    }
    if (s % 4 != 0) return "order sum must be divisible by 4";
    if ((s + 4) / 4 < 0) return "negative genus";
    return "";
}

ProfilePair to_profile(const StratumSignature& sig) {
    ProfilePair p;
    for (int a : sig.orders) {
        if (a % 2 == 0)
            p.mu.push_back(a / 2 + 1);
        else
            p.nu.push_back(a + 2);
    }
    std::sort(p.mu.begin(), p.mu.end(), std::greater<int>());
    std::sort(p.nu.begin(), p.nu.end(), std::greater<int>());
    return p;
}

StratumSignature to_signature(const ProfilePair& p) {
    StratumSignature sig;
    for (int m : p.mu) sig.orders.push_back(2 * (m - 1));
    for (int n : p.nu) sig.orders.push_back(n - 2);
    std::sort(sig.orders.begin(), sig.orders.end(), std::greater<int>());
    return sig;
}

std::string profile_invalid_reason(const ProfilePair& p) {
    long snu = 0;
    for (int m : p.mu)
        if (m < 2) return "mu parts must be >= 2";
    for (int n : p.nu) {
        if (n < 1 || n % 2 == 0) return "nu parts must be odd and >= 1";
        snu += n;
    }
    if (snu % 2 != 0) return "|nu| must be even";
    long smu = 0;
    for (int m : p.mu) smu += m;
    long lmu = static_cast<long>(p.mu.size()), lnu = static_cast<long>(p.nu.size());
    long t = smu - lmu + snu / 2 - lnu;  // 2(g-1)
    if (t % 2 != 0) return "genus is not an integer";
    if (t / 2 + 1 < 0) return "negative genus";
    if (p.mu.empty() && p.nu.empty()) return "empty profile";
    return "";
}

StratumInvariants invariants(const ProfilePair& p) {
    StratumInvariants inv;
    long smu = 0, snu = 0;
    for (int m : p.mu) smu += m;
    for (int n : p.nu) snu += n;
    inv.l_mu = static_cast<int>(p.mu.size());
    inv.l_nu = static_cast<int>(p.nu.size());
    for (int n : p.nu)
        if (n == 1) inv.n_poles++;
    long a = smu - inv.l_mu + snu / 2;
    inv.genus = static_cast<int>((a - inv.l_nu) / 2 + 1);
    inv.ghat = static_cast<int>(a - inv.l_nu / 2 + 1);
    inv.g_eff = static_cast<int>(a / 2);
    inv.dim_c = static_cast<int>(smu + snu / 2);
    inv.dim_r = 2 * inv.dim_c;
    inv.weight = static_cast<int>(smu + inv.l_mu + snu / 2);
    return inv;
}

std::string profile_key(const ProfilePair& p) {
    std::ostringstream out;
    for (size_t i = 0; i < p.mu.size(); ++i) out << (i ? "," : "") << p.mu[i];
    out << "|";
    for (size_t i = 0; i < p.nu.size(); ++i) out << (i ? "," : "") << p.nu[i];
    return out.str();
}

}  // namespace qdvol
