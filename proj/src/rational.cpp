#include "qdvol/rational.hpp"

#include <stdexcept>

namespace qdvol {

Integer factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial of negative");
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

Integer double_factorial(long n) {
    if (n < -1) throw std::invalid_argument("double factorial below -1");
    Integer r = 1;
    for (long k = n; k > 1; k -= 2) r *= k;
    return r;
}

Integer binomial(long n, long k) {
    if (k < 0 || k > n) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

std::string rat_str(const Rational& r) {
    Rational v = r;
    v.canonicalize();
    if (v.get_den() == 1) return v.get_num().get_str();
    return v.get_num().get_str() + "/" + v.get_den().get_str();
}

std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        Rational r;
        if (slash == std::string::npos) {
            r = Rational(Integer(s));
        } else {
            Integer num(s.substr(0, slash));
            Integer den(s.substr(slash + 1));
            if (den == 0) return std::nullopt;
            r = Rational(num, den);
        }
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        return std::nullopt;
    }
}

std::vector<Rational> bernoulli_numbers(int n) {
    // sum_{j=0}^{m} C(m+1,j) B_j = 0 for m >= 1.
    std::vector<Rational> b(n + 1);
    b[0] = 1;
    for (int m = 1; m <= n; ++m) {
        Rational acc = 0;
        for (int j = 0; j < m; ++j) acc += Rational(binomial(m + 1, j)) * b[j];
        b[m] = -acc / Rational(binomial(m + 1, m));
    }
    return b;
}

Rational zeta_nonpositive(int k) {
    if (k < 0) throw std::invalid_argument("zeta_nonpositive wants k >= 0");
    if (k == 0) return Rational(-1, 2);
    auto b = bernoulli_numbers(k + 1);
    return -b[k + 1] / Rational(k + 1);
}

Rational pow_rational(const Rational& base, long e) {
    if (e == 0) return 1;
    if (base == 0) {
        if (e < 0) throw std::domain_error("0 to negative power");
        return 0;
    }
    Rational acc = 1;
    Rational b = e > 0 ? base : Rational(1) / base;
    for (long k = 0; k < (e > 0 ? e : -e); ++k) acc *= b;
    return acc;
}

}  // namespace qdvol
