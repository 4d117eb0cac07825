#include "qdvol/genfun.hpp"

#include <algorithm>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "qdvol/linsolve.hpp"

namespace qdvol {

QSeries z_empty(int N) { return product_factor(2, Rational(-1, 2), N); }
QSeries z_empty_abelian(int N) { return product_factor(1, Rational(-1), N); }

QSeries zprime_series(const ProfilePair& p, int N, WeightVariant v) {
    std::string bad = profile_invalid_reason(p);
    if (!bad.empty()) throw std::invalid_argument("zprime_series: " + bad);
    QSeries num(N);
    for (int n = 0; n <= N; n += 2) {
        Rational acc = 0;
        for (const auto& lam : balanced_partitions_of(n)) {
            auto fnu = central_character(lam, p.nu, PadKind::Twos);
            if (!fnu) continue;  // padding impossible at this degree
            Rational term = *fnu;
            bool ok = true;
            for (int m : p.mu) {
                auto fm = central_character(lam, {m}, PadKind::Ones);
                if (!fm) {
                    ok = false;
                    break;
                }
                term *= *fm;
            }
            if (!ok || term == 0) continue;
            // w(lambda) * F(lambda) with the f_{2..2} ratio cancelled:
            //   Frobenius: (dim/n!)^2 f_2^3 * f_nu * prod f_mu
            //   Printed:   (dim/n!)        * f_nu * prod f_mu
            Rational dn = Rational(dim_irrep(lam)) / Rational(factorial(n));
            if (v == WeightVariant::Frobenius) {
                auto f2 = central_character(lam, {}, PadKind::Twos);
                Rational f = *f2;
                term *= dn * dn * f * f * f;
            } else {
                term *= dn;
            }
            acc += term;
        }
        num.set(n, acc);
    }
    return series_div(num, z_empty(N));
}

QSeries zprime_abelian(const std::vector<int>& mu, int N) {
    QSeries num(N);
    for (int n = 0; n <= N; ++n) {
        Rational acc = 0;
        for (const auto& lam : partitions_of(n)) {
            Rational term = 1;
            bool ok = true;
            for (int m : mu) {
                auto fm = central_character(lam, {m}, PadKind::Ones);
                if (!fm) {
                    ok = false;
                    break;
                }
                term *= *fm;
            }
            if (ok) acc += term;
        }
        num.set(n, acc);
    }
    return series_div(num, z_empty_abelian(N));
}

// ---------- decompositions ----------

namespace {

// Multiset partition enumeration over a fixed symbol alphabet. Blocks are
// produced in weakly decreasing lexicographic order of their count vectors;
// each block must contain the first symbol still present, which makes the
// generation canonical (each unordered partition appears exactly once).
void enum_multiset_partitions(std::vector<int>& remaining, std::vector<std::vector<int>>& blocks,
                              const std::vector<int>* bound,
                              const std::function<void(const std::vector<std::vector<int>>&)>& emit) {
    size_t first = 0;
    while (first < remaining.size() && remaining[first] == 0) ++first;
    if (first == remaining.size()) {
        emit(blocks);
        return;
    }
    const size_t k = remaining.size();
    std::vector<int> block(k, 0);
    // Odometer over sub-multisets with block[first] >= 1.
    std::function<void(size_t)> walk = [&](size_t idx) {
        if (idx == k) {
            if (block[first] < 1) return;
            if (bound && std::lexicographical_compare(bound->begin(), bound->end(),
                                                      block.begin(), block.end()))
                return;  // block > bound
            for (size_t i = 0; i < k; ++i) remaining[i] -= block[i];
            std::vector<int> bound_copy = block;  // blocks may reallocate below
            blocks.push_back(block);
            enum_multiset_partitions(remaining, blocks, &bound_copy, emit);
            blocks.pop_back();
            for (size_t i = 0; i < k; ++i) remaining[i] += block[i];
            return;
        }
        for (int c = 0; c <= remaining[idx]; ++c) {
            block[idx] = c;
            walk(idx + 1);
        }
        block[idx] = 0;
    };
    walk(0);
}

}  // namespace

std::vector<Decomposition> decompositions(const ProfilePair& p) {
    // Alphabet: tagged symbols (0,mu value) and (1,nu value).
    std::vector<std::pair<int, int>> alphabet;
    std::vector<int> counts;
    auto add_sym = [&](int tag, int value) {
        for (size_t i = 0; i < alphabet.size(); ++i)
            if (alphabet[i] == std::make_pair(tag, value)) {
                counts[i]++;
                return;
            }
        alphabet.emplace_back(tag, value);
        counts.push_back(1);
    };
    for (int m : p.mu) add_sym(0, m);
    for (int n : p.nu) add_sym(1, n);

    std::vector<Decomposition> out;
    std::vector<std::vector<int>> blocks;
    std::vector<int> remaining = counts;
    enum_multiset_partitions(remaining, blocks, nullptr,
                             [&](const std::vector<std::vector<int>>& bl) {
        if (bl.size() < 2) return;
        Decomposition dec;
        for (const auto& b : bl) {
            ProfilePair part;
            for (size_t i = 0; i < alphabet.size(); ++i)
                for (int c = 0; c < b[i]; ++c)
                    (alphabet[i].first == 0 ? part.mu : part.nu).push_back(alphabet[i].second);
            std::sort(part.mu.begin(), part.mu.end(), std::greater<int>());
            std::sort(part.nu.begin(), part.nu.end(), std::greater<int>());
            if (!profile_invalid_reason(part).empty()) return;  // invalid sub-profile
            dec.parts.push_back(std::move(part));
        }
        // Weight: multinomial over each labeled mu value, divided by k! per
        // group of identical blocks.
        Rational w = 1;
        for (size_t i = 0; i < alphabet.size(); ++i) {
            if (alphabet[i].first != 0) continue;
            Integer multi = factorial(counts[i]);
            for (const auto& b : bl) multi /= factorial(b[i]);
            w *= Rational(multi);
        }
        std::map<std::vector<int>, int> groups;
        for (const auto& b : bl) groups[b]++;
        for (const auto& [b, k] : groups) w /= Rational(factorial(k));
        dec.weight = w;
        out.push_back(std::move(dec));
    });
    return out;
}

// ---------- connected inversion ----------

namespace {

std::unordered_map<std::string, QSeries> g_zc_cache;
std::unordered_map<std::string, QSeries> g_zc_ab_cache;

std::string zc_key(const ProfilePair& p, int N, WeightVariant v) {
    return profile_key(p) + "#" + std::to_string(N) + (v == WeightVariant::Frobenius ? "F" : "P");
}

}  // namespace

void clear_genfun_cache() {
    g_zc_cache.clear();
    g_zc_ab_cache.clear();
}

QSeries zconnected_series(const ProfilePair& p, int N, WeightVariant v) {
    auto key = zc_key(p, N, v);
    auto hit = g_zc_cache.find(key);
    if (hit != g_zc_cache.end()) return hit->second;
    QSeries z = zprime_series(p, N, v);
    for (const auto& dec : decompositions(p)) {
        QSeries prod = QSeries::one(N);
        for (const auto& part : dec.parts) prod = prod * zconnected_series(part, N, v);
        z = z - prod.scaled(dec.weight);
    }
    g_zc_cache.emplace(std::move(key), z);
    return z;
}

namespace {

// Set partitions of {0..n-1} as restricted growth strings.
void enum_set_partitions(int n, const std::function<void(const std::vector<int>&)>& emit) {
    std::vector<int> rgs(n, 0);
    std::function<void(int, int)> rec = [&](int i, int maxblock) {
        if (i == n) {
            emit(rgs);
            return;
        }
        for (int b = 0; b <= maxblock + 1; ++b) {
            rgs[i] = b;
            rec(i + 1, std::max(maxblock, b));
        }
    };
    if (n == 0) {
        emit(rgs);
        return;
    }
    rec(0, -1);
}

std::string mu_key(std::vector<int> mu, int N) {
    std::sort(mu.begin(), mu.end(), std::greater<int>());
    std::ostringstream out;
    for (int m : mu) out << m << ",";
    out << "#" << N;
    return out.str();
}

}  // namespace

QSeries zconnected_abelian(const std::vector<int>& mu, int N) {
    auto key = mu_key(mu, N);
    auto hit = g_zc_ab_cache.find(key);
    if (hit != g_zc_ab_cache.end()) return hit->second;
    QSeries z = zprime_abelian(mu, N);
    const int n = static_cast<int>(mu.size());
    enum_set_partitions(n, [&](const std::vector<int>& rgs) {
        int nblocks = n == 0 ? 0 : *std::max_element(rgs.begin(), rgs.end()) + 1;
        if (nblocks < 2) return;
        QSeries prod = QSeries::one(N);
        for (int b = 0; b < nblocks; ++b) {
            std::vector<int> sub;
            for (int i = 0; i < n; ++i)
                if (rgs[i] == b) sub.push_back(mu[i]);
            prod = prod * zconnected_abelian(sub, N);
        }
        z = z - prod;
    });
    g_zc_ab_cache.emplace(std::move(key), z);
    return z;
}

// ---------- fits and asymptotics ----------

FitReport zprime_poly(const ProfilePair& p, WeightVariant v) {
    int cap = invariants(p).weight;
    int N = required_series_order(cap, QMFamily::Pillow);
    return fit(zprime_series(p, N, v), cap, QMFamily::Pillow);
}

FitReport zconnected_poly(const ProfilePair& p, WeightVariant v) {
    int cap = invariants(p).weight;
    int N = required_series_order(cap, QMFamily::Pillow);
    return fit(zconnected_series(p, N, v), cap, QMFamily::Pillow);
}

FitReport zconnected_abelian_poly(const std::vector<int>& mu) {
    int cap = 0;
    for (int m : mu) cap += m + 1;
    int N = required_series_order(cap, QMFamily::Abelian);
    return fit(zconnected_abelian(mu, N), cap, QMFamily::Abelian);
}

HLaurent quad_subtraction_laurent(const std::vector<int>& mu) {
    if (mu.empty()) throw std::invalid_argument("quad_subtraction_laurent: empty mu");
    HLaurent L = substitute_asymptotics(zconnected_abelian_poly(mu).poly);
    Rational scale = 1;
    for (size_t i = 1; i < mu.size(); ++i) scale *= 2;  // 2^{l(mu)-1}
    return L.scaled(scale);
}

HLaurent z_asymptotics(const ProfilePair& p, WeightVariant v) {
    HLaurent L = substitute_asymptotics(zconnected_poly(p, v).poly);
    if (p.nu.empty()) L = L - quad_subtraction_laurent(p.mu);
    return L;
}

// ---------- interpolation route ----------

int SymMonomial::weight() const {
    int w = 0;
    for (const auto& [k, e] : p) w += (k + 1) * e;
    for (const auto& [k, e] : pbar) w += k * e;
    return w;
}

bool SymMonomial::operator<(const SymMonomial& o) const {
    return std::tie(p, pbar) < std::tie(o.p, o.pbar);
}

std::string SymMonomial::str() const {
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, e] : p) {
        if (!first) out << "*";
        out << "p" << k;
        if (e > 1) out << "^" << e;
        first = false;
    }
    for (const auto& [k, e] : pbar) {
        if (!first) out << "*";
        out << "pbar" << k;
        if (e > 1) out << "^" << e;
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

Rational SymPoly::eval(const Partition& lam) const {
    Rational acc = 0;
    for (const auto& [mon, coef] : terms) {
        Rational t = coef;
        for (const auto& [k, e] : mon.p)
            for (int i = 0; i < e; ++i) t *= p_shifted(k, lam);
        for (const auto& [k, e] : mon.pbar)
            for (int i = 0; i < e; ++i) t *= pbar_shifted(k, lam);
        acc += t;
    }
    return acc;
}

SymPoly SymPoly::operator*(const SymPoly& o) const {
    SymPoly r;
    for (const auto& [m1, c1] : terms)
        for (const auto& [m2, c2] : o.terms) {
            SymMonomial m = m1;
            for (const auto& [k, e] : m2.p) m.p[k] += e;
            for (const auto& [k, e] : m2.pbar) m.pbar[k] += e;
            r.terms[m] += c1 * c2;
        }
    for (auto it = r.terms.begin(); it != r.terms.end();)
        it = it->second == 0 ? r.terms.erase(it) : std::next(it);
    return r;
}

SymPoly SymPoly::operator+(const SymPoly& o) const {
    SymPoly r = *this;
    for (const auto& [m, c] : o.terms) {
        r.terms[m] += c;
        if (r.terms[m] == 0) r.terms.erase(m);
    }
    return r;
}

SymPoly SymPoly::constant(const Rational& c) {
    SymPoly r;
    if (c != 0) r.terms[SymMonomial{}] = c;
    return r;
}

std::vector<SymMonomial> sym_monomials(int weight_cap) {
    // Generators in a fixed order: pbar_1..pbar_cap (weight k), p_1.. (weight k+1).
    std::vector<std::pair<bool, int>> gens;  // (is_pbar, k)
    for (int k = 1; k <= weight_cap; ++k) gens.emplace_back(true, k);
    for (int k = 1; k + 1 <= weight_cap; ++k) gens.emplace_back(false, k);
    std::vector<SymMonomial> out;
    SymMonomial cur;
    std::function<void(size_t, int)> rec = [&](size_t idx, int left) {
        if (idx == gens.size()) {
            out.push_back(cur);
            return;
        }
        int w = gens[idx].first ? gens[idx].second : gens[idx].second + 1;
        rec(idx + 1, left);
        for (int e = 1; e * w <= left; ++e) {
            if (gens[idx].first)
                cur.pbar[gens[idx].second] = e;
            else
                cur.p[gens[idx].second] = e;
            rec(idx + 1, left - e * w);
        }
        if (gens[idx].first)
            cur.pbar.erase(gens[idx].second);
        else
            cur.p.erase(gens[idx].second);
    };
    rec(0, weight_cap);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// Elimination that tolerates rank deficiency: particular solution with free
// variables zero; returns false if the sample rows are inconsistent.
bool solve_any(std::vector<std::vector<Rational>> a, std::vector<Rational> b,
               std::vector<Rational>& x) {
    const size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    std::vector<size_t> pivot_col;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t p = row;
        while (p < rows && a[p][col] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[row]);
        std::swap(b[p], b[row]);
        Rational inv = Rational(1) / a[row][col];
        for (size_t j = col; j < cols; ++j) a[row][j] *= inv;
        b[row] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == row || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (size_t j = col; j < cols; ++j) a[i][j] -= f * a[row][j];
            b[i] -= f * b[row];
        }
        pivot_col.push_back(col);
        ++row;
    }
    for (size_t i = row; i < rows; ++i)
        if (b[i] != 0) return false;
    x.assign(cols, Rational(0));
    for (size_t i = 0; i < row; ++i) x[pivot_col[i]] = b[i];
    return true;
}

// Interpolate values given as (partition, value) pairs against sym_monomials
// restricted by `use_pbar`; verifies on the holdout tail.
SymPoly interpolate_samples(int weight_cap, bool use_pbar,
                            const std::vector<std::pair<Partition, Rational>>& samples,
                            const std::string& what) {
    std::vector<SymMonomial> basis;
    for (const auto& m : sym_monomials(weight_cap))
        if (use_pbar || m.pbar.empty()) basis.push_back(m);
    if (samples.size() < basis.size() + 2)
        throw std::runtime_error("interpolate(" + what + "): not enough samples");
    size_t fit_rows = basis.size() + 2;
    std::vector<std::vector<Rational>> a(fit_rows, std::vector<Rational>(basis.size()));
    std::vector<Rational> b(fit_rows);
    for (size_t r = 0; r < fit_rows; ++r) {
        for (size_t j = 0; j < basis.size(); ++j) {
            SymPoly single;
            single.terms[basis[j]] = 1;
            a[r][j] = single.eval(samples[r].first);
        }
        b[r] = samples[r].second;
    }
    std::vector<Rational> x;
    if (!solve_any(std::move(a), std::move(b), x))
        throw std::runtime_error("interpolate(" + what + "): inconsistent samples at weight cap " +
                                 std::to_string(weight_cap));
    SymPoly out;
    for (size_t j = 0; j < basis.size(); ++j)
        if (x[j] != 0) out.terms[basis[j]] = x[j];
    // Holdout verification on every remaining sample.
    for (size_t r = fit_rows; r < samples.size(); ++r)
        if (out.eval(samples[r].first) != samples[r].second)
            throw std::runtime_error("interpolate(" + what + "): holdout mismatch");
    return out;
}

}  // namespace

SymPoly interpolate_g_nu(const std::vector<int>& nu) {
    long snu = 0;
    for (int n : nu) {
        if (n < 1 || n % 2 == 0) throw std::invalid_argument("interpolate_g_nu: bad nu");
        snu += n;
    }
    if (snu % 2 != 0) throw std::invalid_argument("interpolate_g_nu: |nu| odd");
    if (nu.empty()) return SymPoly::constant(1);
    int cap = static_cast<int>((snu + nu.size()) / 2);
    std::vector<std::pair<Partition, Rational>> samples;
    size_t want = sym_monomials(cap).size() + 6;
    for (int n = static_cast<int>(snu); samples.size() < want && n <= snu + 24; n += 2) {
        for (const auto& lam : balanced_partitions_of(n)) {
            auto fn = central_character(lam, nu, PadKind::Twos);
            auto f2 = central_character(lam, {}, PadKind::Twos);
            if (!fn || !f2 || *f2 == 0) continue;
            samples.emplace_back(lam, *fn / *f2);
            if (samples.size() >= want) break;
        }
    }
    return interpolate_samples(cap, true, samples, "g_nu");
}

SymPoly interpolate_f_mu(int m) {
    if (m < 2) throw std::invalid_argument("interpolate_f_mu: m >= 2");
    int cap = m + 1;
    std::vector<std::pair<Partition, Rational>> samples;
    size_t want = 0;
    for (const auto& mon : sym_monomials(cap))
        if (mon.pbar.empty()) ++want;
    want += 6;
    for (int n = m; samples.size() < want && n <= m + 24; ++n) {
        for (const auto& lam : partitions_of(n)) {
            auto fm = central_character(lam, {m}, PadKind::Ones);
            if (!fm) continue;
            samples.emplace_back(lam, *fm);
            if (samples.size() >= want) break;
        }
    }
    return interpolate_samples(cap, false, samples, "f_mu");
}

FitReport bracket_monomial(const SymMonomial& m, WeightVariant v) {
    int cap = std::max(m.weight(), 2);
    int N = required_series_order(cap, QMFamily::Pillow);
    QSeries num(N);
    SymPoly single;
    single.terms[m] = 1;
    for (int n = 0; n <= N; n += 2) {
        Rational acc = 0;
        for (const auto& lam : balanced_partitions_of(n))
            acc += bracket_weight(lam, v) * single.eval(lam);
        num.set(n, acc);
    }
    return fit(series_div(num, z_empty(N)), cap, QMFamily::Pillow);
}

FitReport zprime_poly_method2(const ProfilePair& p, WeightVariant v) {
    SymPoly f = interpolate_g_nu(p.nu);
    for (int m : p.mu) f = f * interpolate_f_mu(m);
    std::map<QMMonomial, Rational> combined;
    int min_surplus = 1 << 20, rows = 0;
    for (const auto& [mon, coef] : f.terms) {
        FitReport br = bracket_monomial(mon, v);
        min_surplus = std::min(min_surplus, br.surplus);
        rows = std::max(rows, br.rows);
        for (const auto& [qm, qc] : br.poly.terms) {
            combined[qm] += coef * qc;
            if (combined[qm] == 0) combined.erase(qm);
        }
    }
    FitReport out;
    out.poly.fam = QMFamily::Pillow;
    out.poly.weight_cap = invariants(p).weight;
    for (const auto& [qm, qc] : combined) out.poly.terms.emplace_back(qm, qc);
    out.rows = rows;
    out.surplus = min_surplus == (1 << 20) ? 0 : min_surplus;
    return out;
}

}  // namespace qdvol
