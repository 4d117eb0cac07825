#include "qdvol/quasimodular.hpp"

#include <algorithm>
#include <sstream>

#include "qdvol/linsolve.hpp"

namespace qdvol {

int QMMonomial::weight() const {
    return fam == QMFamily::Pillow ? 2 * a + 2 * b + 4 * c : 2 * a + 4 * b + 6 * c;
}

std::string QMMonomial::str() const {
    const char* names_pillow[3] = {"E2(q^2)", "E2(q^4)", "E4(q^4)"};
    const char* names_abelian[3] = {"E2", "E4", "E6"};
    const char** names = fam == QMFamily::Pillow ? names_pillow : names_abelian;
    int e[3] = {a, b, c};
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i < 3; ++i) {
        if (e[i] == 0) continue;
        if (!first) out << "*";
        out << names[i];
        if (e[i] > 1) out << "^" << e[i];
        first = false;
    }
    if (first) out << "1";
    return out.str();
}

bool QMMonomial::operator<(const QMMonomial& o) const {
    if (weight() != o.weight()) return weight() < o.weight();
    return std::tie(a, b, c) < std::tie(o.a, o.b, o.c);
}

bool QMMonomial::operator==(const QMMonomial& o) const {
    return fam == o.fam && a == o.a && b == o.b && c == o.c;
}

std::vector<QMMonomial> monomial_basis(int weight_cap, QMFamily fam) {
    std::vector<QMMonomial> out;
    const int wa = 2, wb = fam == QMFamily::Pillow ? 2 : 4, wc = fam == QMFamily::Pillow ? 4 : 6;
    for (int a = 0; a * wa <= weight_cap; ++a)
        for (int b = 0; a * wa + b * wb <= weight_cap; ++b)
            for (int c = 0; a * wa + b * wb + c * wc <= weight_cap; ++c)
                out.push_back({fam, a, b, c});
    std::sort(out.begin(), out.end());
    return out;
}

QSeries eisenstein(int two_k, int m, int N) {
    if (two_k < 2 || two_k % 2 != 0 || m < 1) throw std::invalid_argument("eisenstein: bad args");
    QSeries s(N);
    s.set(0, zeta_nonpositive(two_k - 1) / 2);
    for (long n = 1; n * m <= N; ++n) {
        Integer sigma = 0;
        for (long d = 1; d <= n; ++d)
            if (n % d == 0) {
                Integer t = 1;
                for (int e = 0; e < two_k - 1; ++e) t *= d;
                sigma += t;
            }
        s.set(static_cast<int>(n * m), Rational(sigma));
    }
    return s;
}

static QSeries generator_series(QMFamily fam, int which, int N) {
    if (fam == QMFamily::Pillow) {
        switch (which) {
            case 0: return eisenstein(2, 2, N);
            case 1: return eisenstein(2, 4, N);
            case 2: return eisenstein(4, 4, N);
        }
    } else {
        switch (which) {
            case 0: return eisenstein(2, 1, N);
            case 1: return eisenstein(4, 1, N);
            case 2: return eisenstein(6, 1, N);
        }
    }
    throw std::invalid_argument("generator_series: which in {0,1,2}");
}

QSeries monomial_series(const QMMonomial& mon, int N) {
    QSeries s = QSeries::one(N);
    int e[3] = {mon.a, mon.b, mon.c};
    for (int i = 0; i < 3; ++i)
        for (int k = 0; k < e[i]; ++k) s = s * generator_series(mon.fam, i, N);
    return s;
}

QSeries QMPoly::to_series(int N) const {
    QSeries s(N);
    for (const auto& [mon, coef] : terms) s = s + monomial_series(mon, N).scaled(coef);
    return s;
}

std::string QMPoly::str() const {
    if (terms.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [mon, coef] : terms) {
        if (!first) out << " + ";
        out << rat_str(coef) << "*" << mon.str();
        first = false;
    }
    return out.str();
}

int required_fit_rows(int weight_cap, QMFamily fam) {
    return static_cast<int>(monomial_basis(weight_cap, fam).size()) + 2;
}

int required_series_order(int weight_cap, QMFamily fam) {
    int rows = required_fit_rows(weight_cap, fam);
    return fam == QMFamily::Pillow ? 2 * (rows - 1) : rows - 1;
}

FitReport fit(const QSeries& target, int weight_cap, QMFamily fam) {
    auto basis = monomial_basis(weight_cap, fam);
    const int rows = required_fit_rows(weight_cap, fam);
    const int need_order = required_series_order(weight_cap, fam);
    if (target.order < need_order)
        throw FitError("fit: target series order " + std::to_string(target.order) +
                       " below required " + std::to_string(need_order));
    if (fam == QMFamily::Pillow) {
        for (int i = 1; i <= need_order; i += 2)
            if (target.coeff(i) != 0) throw FitError("fit: pillow target has odd-power term q^" + std::to_string(i));
    }
    const int stride = fam == QMFamily::Pillow ? 2 : 1;

    std::vector<std::vector<Rational>> a(rows, std::vector<Rational>(basis.size()));
    std::vector<Rational> b(rows);
    std::vector<QSeries> cols;
    cols.reserve(basis.size());
    for (const auto& mon : basis) cols.push_back(monomial_series(mon, need_order));
    for (int r = 0; r < rows; ++r) {
        for (size_t j = 0; j < basis.size(); ++j) a[r][j] = cols[j].coeff(r * stride);
        b[r] = target.coeff(r * stride);
    }
    SolveReport rep = solve_exact(std::move(a), std::move(b));
    if (!rep.unique) throw FitError("fit: basis matrix rank deficient (rank " + std::to_string(rep.rank) + ")");
    if (!rep.consistent) throw FitError("fit: target is not a quasi-modular polynomial of weight <= " +
                                        std::to_string(weight_cap));
    FitReport out;
    out.poly.fam = fam;
    out.poly.weight_cap = weight_cap;
    for (size_t j = 0; j < basis.size(); ++j)
        if (rep.x[j] != 0) out.poly.terms.emplace_back(basis[j], rep.x[j]);
    out.rows = rows;
    out.surplus = rows - static_cast<int>(basis.size());
    return out;
}

HLaurent generator_laurent(QMFamily fam, int which) {
    if (fam == QMFamily::Pillow) {
        switch (which) {
            case 0:
                return HLaurent::monomial(-2, PiPoly::monomial(2, Rational(1, 24))) +
                       HLaurent::monomial(-1, PiPoly::monomial(0, Rational(-1, 4)));
            case 1:
                return HLaurent::monomial(-2, PiPoly::monomial(2, Rational(1, 96))) +
                       HLaurent::monomial(-1, PiPoly::monomial(0, Rational(-1, 8)));
            case 2:
                return HLaurent::monomial(-4, PiPoly::monomial(4, Rational(1, 3840)));
        }
    } else {
        switch (which) {
            case 0:  // abelian E2 read at q^2: same Laurent as pillow E2(q^2)
                return HLaurent::monomial(-2, PiPoly::monomial(2, Rational(1, 24))) +
                       HLaurent::monomial(-1, PiPoly::monomial(0, Rational(-1, 4)));
            case 1:
                return HLaurent::monomial(-4, PiPoly::monomial(4, Rational(1, 240)));
            case 2:
                return HLaurent::monomial(-6, PiPoly::monomial(6, Rational(1, 504)));
        }
    }
    throw std::invalid_argument("generator_laurent: which in {0,1,2}");
}

HLaurent substitute_asymptotics(const QMPoly& p) {
    HLaurent out;
    for (const auto& [mon, coef] : p.terms) {
        HLaurent t = HLaurent::one();
        int e[3] = {mon.a, mon.b, mon.c};
        for (int i = 0; i < 3; ++i)
            if (e[i] > 0) t = t * generator_laurent(p.fam, i).pow(e[i]);
        out = out + t.scaled(coef);
    }
    return out;
}

}  // namespace qdvol
