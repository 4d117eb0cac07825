#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qdvol {

// Exact arithmetic backed by GMP. mpq_class keeps gcd(num,den)=1 and den>0
// after canonicalize(); every constructor path below canonicalizes.
using Integer = mpz_class;
using Rational = mpq_class;

Integer factorial(long n);
// n!! with (-1)!! = 0!! = 1.
Integer double_factorial(long n);
Integer binomial(long n, long k);

// "num/den" (den omitted when 1). Canonical: reduced, den > 0.
std::string rat_str(const Rational& r);
std::optional<Rational> parse_rational(const std::string& s);

// B_0..B_n with B_1 = -1/2.
std::vector<Rational> bernoulli_numbers(int n);

// zeta(-k) for k >= 0: zeta(0) = -1/2, zeta(-k) = -B_{k+1}/(k+1).
Rational zeta_nonpositive(int k);

Rational pow_rational(const Rational& base, long e);

}  // namespace qdvol
