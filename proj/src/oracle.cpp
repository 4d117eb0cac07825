#include "qdvol/oracle.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

#include "qdvol/genfun.hpp"
#include "qdvol/volume.hpp"

namespace qdvol {

namespace {

using Perm = std::vector<int>;

Perm mult(const Perm& a, const Perm& b) {  // (a*b)(i) = a(b(i))
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
    return r;
}

Perm inverse(const Perm& a) {
    Perm r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[a[i]] = static_cast<int>(i);
    return r;
}

std::vector<int> cycle_type(const Perm& a) {
    std::vector<bool> seen(a.size(), false);
    std::vector<int> type;
    for (size_t i = 0; i < a.size(); ++i) {
        if (seen[i]) continue;
        int len = 0;
        for (size_t j = i; !seen[j]; j = a[j]) {
            seen[j] = true;
            ++len;
        }
        type.push_back(len);
    }
    std::sort(type.begin(), type.end(), std::greater<int>());
    return type;
}

// Cycle type (core, pad^k) padded to n; empty if impossible.
std::vector<int> padded_type(const std::vector<int>& core, int pad, int n) {
    int s = std::accumulate(core.begin(), core.end(), 0);
    int rest = n - s;
    if (rest < 0 || rest % pad != 0) return {};
    std::vector<int> t = core;
    t.insert(t.end(), rest / pad, pad);
    std::sort(t.begin(), t.end(), std::greater<int>());
    return t;
}

const std::vector<Perm>& perms_of_type(int n, const std::vector<int>& type) {
    static std::map<std::pair<int, std::vector<int>>, std::vector<Perm>> cache;
    auto key = std::make_pair(n, type);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<Perm> out;
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        if (cycle_type(p) == type) out.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    return cache.emplace(std::move(key), std::move(out)).first->second;
}

bool is_fpf_involution(const Perm& a) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] == static_cast<int>(i) || a[a[i]] != static_cast<int>(i)) return false;
    return true;
}

struct UnionFind {
    std::vector<int> up;
    explicit UnionFind(int n) : up(n) { std::iota(up.begin(), up.end(), 0); }
    int find(int i) { return up[i] == i ? i : up[i] = find(up[i]); }
    void join(int a, int b) { up[find(a)] = find(b); }
};

bool transitive(const std::vector<const Perm*>& gens, int n) {
    UnionFind uf(n);
    for (const Perm* g : gens)
        for (int i = 0; i < n; ++i) uf.join(i, (*g)[i]);
    int root = uf.find(0);
    for (int i = 1; i < n; ++i)
        if (uf.find(i) != root) return false;
    return true;
}

// Recursion over h_1..h_l with the running product carried along; calls
// back with the full product h_1...h_l and the list of h's.
void for_each_h_tuple(const std::vector<std::vector<int>>& h_types, size_t idx, int n,
                      const Perm& acc, std::vector<const Perm*>& hs,
                      const std::function<void(const Perm&, const std::vector<const Perm*>&)>& f) {
    if (idx == h_types.size()) {
        f(acc, hs);
        return;
    }
    for (const Perm& h : perms_of_type(n, h_types[idx])) {
        hs.push_back(&h);
        for_each_h_tuple(h_types, idx + 1, n, mult(acc, h), hs, f);
        hs.pop_back();
    }
}

Perm identity_perm(int n) {
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

}  // namespace

CoverCount count_pillow_covers(const ProfilePair& p, int two_d) {
    if (two_d <= 0 || two_d % 2 != 0 || two_d > 8)
        throw std::invalid_argument("count_pillow_covers: degree must be even, in [2,8]");
    CoverCount zero{Rational(0), Rational(0)};
    std::vector<int> g1_type = padded_type(p.nu, 2, two_d);
    if (g1_type.empty()) return zero;
    std::vector<std::vector<int>> h_types;
    for (int m : p.mu) {
        std::vector<int> t = padded_type({m}, 1, two_d);
        if (t.empty()) return zero;
        h_types.push_back(t);
    }
    std::vector<int> fpf(two_d / 2, 2);
    // g2 pinned to (0 1)(2 3)...; scale by its class size afterwards.
    Perm g2(two_d);
    for (int i = 0; i < two_d; i += 2) {
        g2[i] = i + 1;
        g2[i + 1] = i;
    }
    Integer fpf_class = factorial(two_d) / cycle_type_z(fpf);

    Rational all = 0, connected = 0;
    std::vector<const Perm*> hs;
    for (const Perm& g1 : perms_of_type(two_d, g1_type)) {
        Perm g12 = mult(g1, g2);
        for (const Perm& g3 : perms_of_type(two_d, fpf)) {
            Perm g123 = mult(g12, g3);
            Perm left_inv = inverse(g123);
            Perm dummy = identity_perm(two_d);
            for_each_h_tuple(h_types, 0, two_d, dummy, hs,
                             [&](const Perm& h, const std::vector<const Perm*>& hlist) {
                Perm g4 = mult(left_inv, inverse(h));
                if (!is_fpf_involution(g4)) return;
                all += 1;
                std::vector<const Perm*> gens{&g1, &g2, &g3, &g4};
                gens.insert(gens.end(), hlist.begin(), hlist.end());
                if (transitive(gens, two_d)) connected += 1;
            });
        }
    }
    Rational scale = Rational(fpf_class) / Rational(factorial(two_d));
    return {all * scale, connected * scale};
}

CoverCount count_pillow_covers_full(const ProfilePair& p, int two_d) {
    if (two_d <= 0 || two_d % 2 != 0 || two_d > 4)
        throw std::invalid_argument("count_pillow_covers_full: degree must be even, in [2,4]");
    CoverCount zero{Rational(0), Rational(0)};
    std::vector<int> g1_type = padded_type(p.nu, 2, two_d);
    if (g1_type.empty()) return zero;
    std::vector<std::vector<int>> h_types;
    for (int m : p.mu) {
        std::vector<int> t = padded_type({m}, 1, two_d);
        if (t.empty()) return zero;
        h_types.push_back(t);
    }
    std::vector<int> fpf(two_d / 2, 2);

    Rational all = 0, connected = 0;
    std::vector<const Perm*> hs;
    for (const Perm& g1 : perms_of_type(two_d, g1_type))
        for (const Perm& g2 : perms_of_type(two_d, fpf))
            for (const Perm& g3 : perms_of_type(two_d, fpf)) {
                Perm left_inv = inverse(mult(mult(g1, g2), g3));
                for_each_h_tuple(h_types, 0, two_d, identity_perm(two_d), hs,
                                 [&](const Perm& h, const std::vector<const Perm*>& hlist) {
                    Perm g4 = mult(left_inv, inverse(h));
                    if (!is_fpf_involution(g4)) return;
                    all += 1;
                    std::vector<const Perm*> gens{&g1, &g2, &g3, &g4};
                    gens.insert(gens.end(), hlist.begin(), hlist.end());
                    if (transitive(gens, two_d)) connected += 1;
                });
            }
    Rational scale = Rational(1) / Rational(factorial(two_d));
    return {all * scale, connected * scale};
}

CoverCount count_torus_covers(const std::vector<int>& mu, int d) {
    if (d <= 0 || d > 6) throw std::invalid_argument("count_torus_covers: degree in [1,6]");
    CoverCount zero{Rational(0), Rational(0)};
    std::vector<std::vector<int>> h_types;
    for (int m : mu) {
        std::vector<int> t = padded_type({m}, 1, d);
        if (t.empty()) return zero;
        h_types.push_back(t);
    }
    Rational all = 0, connected = 0;
    std::vector<Perm> sd;
    {
        Perm p = identity_perm(d);
        do sd.push_back(p);
        while (std::next_permutation(p.begin(), p.end()));
    }
    std::vector<const Perm*> hs;
    const Perm id = identity_perm(d);
    for (const Perm& a : sd) {
        for (const Perm& b : sd) {
            Perm comm = mult(mult(inverse(mult(b, a)), a), b);  // a^-1 b^-1 a b
            for_each_h_tuple(h_types, 0, d, id, hs,
                             [&](const Perm& h, const std::vector<const Perm*>& hlist) {
                if (mult(comm, h) != id) return;
                all += 1;
                std::vector<const Perm*> gens{&a, &b};
                gens.insert(gens.end(), hlist.begin(), hlist.end());
                if (transitive(gens, d)) connected += 1;
            });
        }
    }
    Rational scale = Rational(1) / Rational(factorial(d));
    return {all * scale, connected * scale};
}

namespace {

// (r-1)!! * m^{r/2}: perfect pairings of r cycles of length m, times the m
// alignments per pair; 0 for odd r.
Integer pairings(int r, int m) {
    if (r % 2 != 0) return 0;
    Integer res = double_factorial(r - 1);
    for (int i = 0; i < r / 2; ++i) res *= m;
    return res;
}

}  // namespace

Rational pole_cover_class_sum(int j, int two_d) {
    if (j < 0 || two_d <= 0 || two_d % 2 != 0)
        throw std::invalid_argument("pole_cover_class_sum: bad arguments");
    Rational total = 0;
    for (const auto& c : partitions_of(two_d)) {
        std::map<int, int> r;
        for (int m : c) r[m]++;
        // a(c): pairs of fixed-point-free involutions with product in c.
        Integer a = 1;
        for (const auto& [m, rm] : r) {
            a *= pairings(rm, m);
            if (a == 0) break;
        }
        if (a == 0) continue;
        // b(c): pairs (fpf involution, involution with 2j fixed points) with
        // product in c: pick j cycles of even length 2k to reverse in place
        // (k ways each), pair up the rest.
        std::vector<std::pair<int, int>> entries(r.begin(), r.end());
        Integer b = 0;
        std::function<void(size_t, int, Integer)> rec = [&](size_t idx, int left, Integer acc) {
            if (idx == entries.size()) {
                if (left == 0) b += acc;
                return;
            }
            auto [m, rm] = entries[idx];
            int maxt = (m % 2 == 0) ? std::min(rm, left) : 0;
            for (int t = 0; t <= maxt; ++t) {
                Integer ways = binomial(rm, t) * pairings(rm - t, m);
                if (ways == 0) continue;
                for (int i = 0; i < t; ++i) ways *= m / 2;
                rec(idx + 1, left - t, acc * ways);
            }
        };
        rec(0, j, Integer(1));
        if (b == 0) continue;
        total += Rational(a * b) / Rational(cycle_type_z(c));
    }
    return total;
}

EstimateReport estimate_volume_from_counts(const ProfilePair& p, int D) {
    std::string bad = profile_invalid_reason(p);
    if (!bad.empty()) throw std::invalid_argument("estimate_volume_from_counts: " + bad);
    if (!p.mu.empty() || !std::all_of(p.nu.begin(), p.nu.end(), [](int n) { return n == 1; }))
        throw std::invalid_argument(
            "estimate_volume_from_counts: only profiles (emptyset, 1^2j) supported");
    if (!decompositions(p).empty())
        throw std::invalid_argument(
            "estimate_volume_from_counts: profile decomposes; partial sums would need the "
            "full inclusion-exclusion");
    if (D < 1) throw std::invalid_argument("estimate_volume_from_counts: D >= 1");
    StratumInvariants inv = invariants(p);
    int j = static_cast<int>(p.nu.size()) / 2;

    int N = 2 * D;
    QSeries z(N);
    z.set(0, Rational(1));
    for (int d = 1; d <= D; ++d) z.set(2 * d, pole_cover_class_sum(j, 2 * d));
    QSeries zprime = series_div(z, z_empty(N));  // = connected here

    Rational partial = 0;
    for (int d = 1; d <= D; ++d) partial += zprime.coeff(2 * d);

    EstimateReport rep;
    rep.D = D;
    rep.warning_small_d = D < 5;
    double zsum = mpq_class(partial).get_d();
    double est = inv.dim_r * zsum;
    for (int i = 0; i < inv.dim_c; ++i) est /= 2.0 * D;
    rep.estimate = est;
    if (inv.weight <= 6) {
        rep.exact = extract_volume_eo(z_asymptotics(p), inv).to_double();
        if (rep.exact != 0) rep.ratio = rep.estimate / rep.exact;
    }
    return rep;
}

// ---------- truncated-sum validators ----------

namespace {

double zeta_d(int m) {
    mpfr_t z;
    mpfr_init2(z, 256);
    mpfr_zeta_ui(z, m, MPFR_RNDN);
    double r = mpfr_get_d(z, MPFR_RNDN);
    mpfr_clear(z);
    return r;
}

double mpz_to_d(const Integer& z) { return z.get_d(); }

IdentityCheck make_check(const std::string& name, double lhs, double rhs, double tol) {
    IdentityCheck c;
    c.name = name;
    c.lhs = lhs;
    c.rhs = rhs;
    c.rel_error = rhs == 0 ? 1.0 : std::abs(lhs / rhs - 1.0);
    c.tolerance = tol;
    c.pass = c.rel_error < tol;
    return c;
}

Integer sum_cubes_upto(long n) {  // sum_{w=1}^n w^3 = (n(n+1)/2)^2
    Integer t = Integer(n) * (n + 1) / 2;
    return t * t;
}

}  // namespace

std::vector<IdentityCheck> validate_sum_identities(long scale) {
    if (scale < 1) throw std::invalid_argument("validate_sum_identities: scale >= 1");
    std::vector<IdentityCheck> out;

    {  // sum over odd integers: sum 1/(2k+1)^2 = (3/4) zeta(2)
        long K = 1000000 * scale;
        mpfr_t acc, term;
        mpfr_init2(acc, 256);
        mpfr_init2(term, 256);
        mpfr_set_ui(acc, 0, MPFR_RNDN);
        for (long k = K; k >= 0; --k) {  // small terms first
            unsigned long odd = 2 * static_cast<unsigned long>(k) + 1;
            mpfr_set_ui(term, 1, MPFR_RNDN);
            mpfr_div_ui(term, term, odd, MPFR_RNDN);
            mpfr_div_ui(term, term, odd, MPFR_RNDN);
            mpfr_add(acc, acc, term, MPFR_RNDN);
        }
        double lhs = mpfr_get_d(acc, MPFR_RNDN);
        mpfr_clears(acc, term, static_cast<mpfr_ptr>(nullptr));
        out.push_back(make_check("sum_odd_m2", lhs, 0.75 * zeta_d(2), 1e-5));
    }
    {  // power sum: sum i^3 ~ N^4/4
        long N = 100000 * scale;
        double lhs = mpz_to_d(sum_cubes_upto(N));
        out.push_back(make_check("power_sum_m3", lhs, std::pow(double(N), 4) / 4.0, 1e-4));
    }
    {  // exact count of N = 2l1 + l2 + l3 over nonnegative l ~ N^2/4
        long N = 200 * scale;
        Integer count = 0;
        for (long l1 = 0; 2 * l1 <= N; ++l1) count += N - 2 * l1 + 1;
        out.push_back(make_check("partition_count_m3_j1", mpz_to_d(count),
                                 double(N) * double(N) / 4.0, 0.05));
    }
    {  // AEZ lattice sum, k=1, a1=2: sum_{WH<=N} W^3 ~ N^4/4! * 3 zeta(4)
        long N = 100000 * scale;
        Integer acc = 0;
        for (long h = 1; h <= N; ++h) acc += sum_cubes_upto(N / h);
        double rhs = std::pow(double(N), 4) / 24.0 * 6.0 * zeta_d(4);  // (a1+1)! zeta(a1+2)
        out.push_back(make_check("aez_lattice_a2", mpz_to_d(acc), rhs, 0.01));
    }
    {  // combi1, m=2: sum_{W(H1+2H2)<=2N} W^2 ~ N^3/6 (8 zeta(2) - 9 zeta(3))
        long N = 100000 * scale, M = 2 * N;
        Integer acc = 0;
        for (long h = 3; h <= M; ++h) {
            long w = M / h;
            Integer sq = Integer(w) * (w + 1) * (2 * w + 1) / 6;
            acc += sq * ((h - 1) / 2);
        }
        double rhs = std::pow(double(N), 3) / 6.0 * (8 * zeta_d(2) - 9 * zeta_d(3));
        out.push_back(make_check("combi1_m2", mpz_to_d(acc), rhs, 0.01));
    }
    {  // combi2: sum_{W(H1+2H2+H3)<=N} W^3 ~ N^4/16 (z2 - 4 z3 + 49/16 z4)
        long N = 100000 * scale;
        Integer acc = 0;
        for (long h = 4; h <= N; ++h) {
            long K = (h - 2) / 2;
            Integer card = (h % 2 == 0) ? Integer(K) * K : Integer(K) * (K + 1);
            acc += card * sum_cubes_upto(N / h);
        }
        double rhs = std::pow(double(N), 4) / 16.0 *
                     (zeta_d(2) - 4 * zeta_d(3) + 49.0 / 16.0 * zeta_d(4));
        out.push_back(make_check("combi2", mpz_to_d(acc), rhs, 0.01));
    }
    {  // combi3: sum_{W1(H1+2H2)+W2H3<=2N} W1^2 W2 ~ N^5/30 (8 z2^2 - 9 z2 z3)
        long N = 2000 * scale, M = 2 * N;
        // T[R] = sum_{W2*H3 <= R} W2
        std::vector<Integer> T(M + 1, Integer(0));
        for (long R = 1; R <= M; ++R) {
            Integer t = 0;
            for (long h = 1; h <= R; ++h) {
                long w = R / h;
                t += Integer(w) * (w + 1) / 2;
            }
            T[R] = t;
        }
        Integer acc = 0;
        for (long h = 3; h <= M; ++h) {
            long card = (h - 1) / 2;
            for (long w1 = 1; w1 * h < M; ++w1)
                acc += Integer(w1) * w1 * card * T[M - w1 * h];
        }
        double rhs = std::pow(double(N), 5) / 30.0 *
                     (8 * zeta_d(2) * zeta_d(2) - 9 * zeta_d(2) * zeta_d(3));
        out.push_back(make_check("combi3", mpz_to_d(acc), rhs, 0.05));
    }
    return out;
}

}  // namespace qdvol
