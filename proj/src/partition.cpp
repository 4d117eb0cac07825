#include "qdvol/partition.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "qdvol/qseries.hpp"

namespace qdvol {

std::vector<Partition> partitions_of(int n) {
    std::vector<Partition> out;
    if (n < 0) return out;
    Partition cur;
    // Standard descent enumeration: parts bounded by the previous one.
    auto rec = [&](auto&& self, int rest, int maxpart) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n == 0 ? 1 : n);
    return out;
}

bool is_balanced(const Partition& lambda) {
    long s = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        int a = lambda[i] - static_cast<int>(i + 1) + 1;  // lam_i - i + 1 with i 1-based
        int sign_a = ((a % 2) + 2) % 2 == 0 ? 1 : -1;
        int sign_b = (i % 2 == 0) ? 1 : -1;  // (-1)^{-i+1} for 1-based i
        s += sign_a - sign_b;
    }
    return s == 0;
}

std::vector<Partition> balanced_partitions_of(int n) {
    std::vector<Partition> out;
    for (auto& p : partitions_of(n))
        if (is_balanced(p)) out.push_back(std::move(p));
    return out;
}

Integer dim_irrep(const Partition& lambda) {
    const int l = static_cast<int>(lambda.size());
    long n = 0;
    for (int v : lambda) n += v;
    if (n == 0) return 1;
    std::vector<int> conj(lambda[0], 0);
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < lambda[i]; ++j) conj[j]++;
    Integer hooks = 1;
    for (int i = 0; i < l; ++i)
        for (int j = 0; j < lambda[i]; ++j)
            hooks *= (lambda[i] - j) + (conj[j] - i) - 1;
    return factorial(n) / hooks;
}

namespace {

std::unordered_map<std::string, int64_t> g_char_cache;

std::string mn_key(const Partition& lambda, const std::vector<int>& rho, size_t idx) {
    std::string k;
    k.reserve(lambda.size() + (rho.size() - idx) + 1);
    for (int v : lambda) k.push_back(static_cast<char>(v));
    k.push_back(127);
    for (size_t i = idx; i < rho.size(); ++i) k.push_back(static_cast<char>(rho[i]));
    return k;
}

int64_t dim_i64(const Partition& lambda) {
    Integer d = dim_irrep(lambda);
    if (!d.fits_slong_p()) throw std::overflow_error("character_value: partition too large");
    return d.get_si();
}

// Recursive Murnaghan-Nakayama over beta numbers; rho[idx..] remains.
int64_t mn(const Partition& lambda, const std::vector<int>& rho, size_t idx) {
    if (idx == rho.size()) return 1;  // lambda empty too (sizes match)
    if (rho[idx] == 1) return dim_i64(lambda);  // remaining parts are all 1s
    auto key = mn_key(lambda, rho, idx);
    auto hit = g_char_cache.find(key);
    if (hit != g_char_cache.end()) return hit->second;

    const int r = rho[idx];
    const int l = static_cast<int>(lambda.size());
    std::vector<int> beta(l);
    for (int i = 0; i < l; ++i) beta[i] = lambda[i] + (l - 1 - i);  // descending

    int64_t total = 0;
    for (int i = 0; i < l; ++i) {
        int target = beta[i] - r;
        if (target < 0) continue;
        bool occupied = false;
        int between = 0;
        for (int j = 0; j < l; ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++between;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<int>());
        Partition mu;
        const int nl = static_cast<int>(nb.size());
        for (int j = 0; j < nl; ++j) {
            int part = nb[j] - (nl - 1 - j);
            if (part > 0) mu.push_back(part);
        }
        int64_t sub = mn(mu, rho, idx + 1);
        total += (between % 2 == 0) ? sub : -sub;
    }
    g_char_cache.emplace(std::move(key), total);
    return total;
}

}  // namespace

int64_t character_value(const Partition& lambda, Partition rho) {
    long n = 0, m = 0;
    for (int v : lambda) n += v;
    for (int v : rho) m += v;
    if (n != m) throw std::invalid_argument("character_value: size mismatch");
    if (n > 30) throw std::overflow_error("character_value: |lambda| > 30 unsupported");
    // Largest parts first, so the 2s/1s padding tail is shared across calls.
    std::sort(rho.begin(), rho.end(), std::greater<int>());
    return mn(lambda, rho, 0);
}

void clear_character_cache() { g_char_cache.clear(); }
size_t character_cache_size() { return g_char_cache.size(); }

Integer cycle_type_z(const std::vector<int>& rho) {
    std::map<int, int> mult;
    for (int v : rho) mult[v]++;
    Integer z = 1;
    for (const auto& [j, m] : mult) {
        z *= factorial(m);
        for (int k = 0; k < m; ++k) z *= j;
    }
    return z;
}

std::optional<Rational> central_character(const Partition& lambda,
                                          const std::vector<int>& rho_core, PadKind pad) {
    long n = 0, core = 0;
    for (int v : lambda) n += v;
    for (int v : rho_core) core += v;
    long rest = n - core;
    if (rest < 0) return std::nullopt;
    const int step = (pad == PadKind::Ones) ? 1 : 2;
    if (rest % step != 0) return std::nullopt;
    std::vector<int> rho = rho_core;
    for (long k = 0; k < rest / step; ++k) rho.push_back(step);
    Integer class_size = factorial(n) / cycle_type_z(rho);
    int64_t chi = character_value(lambda, rho);
    return Rational(class_size) * Rational(chi) / Rational(dim_irrep(lambda));
}

namespace {

Rational half_power(long twice_base, int k) {
    // (twice_base/2)^k
    Integer num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        num *= twice_base;
        den *= 2;
    }
    Rational r(num, den);
    r.canonicalize();
    return r;
}

}  // namespace

Rational pbar_constant(int k) {
    // 1/(e^{z/2}+e^{-z/2}) = 1/(2 cosh(z/2)); reciprocal of the even series.
    QSeries cosh2(k);
    for (int j = 0; 2 * j <= k; ++j) {
        Integer den = factorial(2 * j);
        for (int t = 0; t < 2 * j; ++t) den *= 2;
        cosh2.set(2 * j, Rational(2, 1) / Rational(den));
    }
    QSeries inv = series_div(QSeries::one(k), cosh2);
    return inv.coeff(k) * Rational(factorial(k));
}

Rational p_shifted(int k, const Partition& lambda) {
    if (k < 0) throw std::invalid_argument("p_shifted: k >= 0");
    Rational s = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        long ii = static_cast<long>(i) + 1;
        s += half_power(2L * lambda[i] - 2 * ii + 1, k) - half_power(-2 * ii + 1, k);
    }
    Integer two_k = 1;
    for (int t = 0; t < k; ++t) two_k *= 2;
    s += (Rational(1) - Rational(1, two_k)) * zeta_nonpositive(k);
    return s;
}

Rational pbar_shifted(int k, const Partition& lambda) {
    if (k < 0) throw std::invalid_argument("pbar_shifted: k >= 0");
    Rational s = 0;
    for (size_t i = 0; i < lambda.size(); ++i) {
        long ii = static_cast<long>(i) + 1;
        int sa = (((lambda[i] - ii + 1) % 2) + 2) % 2 == 0 ? 1 : -1;
        int sb = ((ii + 1) % 2 == 0) ? 1 : -1;
        s += Rational(sa) * half_power(2L * lambda[i] - 2 * ii + 1, k) -
             Rational(sb) * half_power(-2 * ii + 1, k);
    }
    return s + pbar_constant(k);
}

Rational bracket_weight(const Partition& lambda, WeightVariant v) {
    long n = 0;
    for (int x : lambda) n += x;
    if (n % 2 != 0) throw std::invalid_argument("bracket_weight: odd size");
    auto f2 = central_character(lambda, {}, PadKind::Twos);
    if (!f2) throw std::logic_error("bracket_weight: padding failed");
    Rational dn = Rational(dim_irrep(lambda)) / Rational(factorial(n));
    if (v == WeightVariant::Printed) return dn * *f2;
    Rational f = *f2;
    return dn * dn * f * f * f * f;
}

}  // namespace qdvol
