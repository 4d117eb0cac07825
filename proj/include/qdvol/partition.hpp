#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "qdvol/rational.hpp"

namespace qdvol {

// Partition: weakly decreasing positive parts.
using Partition = std::vector<int>;

std::vector<Partition> partitions_of(int n);
std::vector<Partition> balanced_partitions_of(int n);

// Hook length formula, |lambda|! / prod(hooks).
Integer dim_irrep(const Partition& lambda);

// chi^lambda(rho) by the Murnaghan-Nakayama rule (border strips via beta
// numbers), globally memoized. rho is a cycle type of the same size as
// lambda; part order irrelevant. int64 is safe for |lambda| <= 30 (checked);
// max dim(S_30) < 4e13 and intermediate sums stay far below 2^63.
int64_t character_value(const Partition& lambda, Partition rho);
void clear_character_cache();
size_t character_cache_size();

// pbar_0(lambda) == 1/2, the support of the pillowcase bracket.
bool is_balanced(const Partition& lambda);

enum class PadKind { Ones, Twos };

// f_rho(lambda) = |C_rho| chi^lambda(rho) / dim(lambda) with rho = rho_core
// padded by 1s or 2s up to |lambda|. nullopt when padding is impossible
// (negative remainder, or odd remainder for 2-padding).
std::optional<Rational> central_character(const Partition& lambda,
                                          const std::vector<int>& rho_core, PadKind pad);

// z_rho = prod m_j! j^{m_j}; |C_rho| = n!/z_rho.
Integer cycle_type_z(const std::vector<int>& rho);

// Shifted symmetric p_k and its signed variant pbar_k (k >= 0):
//   p_k    = sum_i [(lam_i-i+1/2)^k - (-i+1/2)^k] + (1-2^{-k}) zeta(-k)
//   pbar_k = sum_i [(-1)^{lam_i-i+1}(lam_i-i+1/2)^k - (-1)^{i+1}(-i+1/2)^k] + c_k
// with c_k = k! [z^k] 1/(e^{z/2}+e^{-z/2}).
Rational p_shifted(int k, const Partition& lambda);
Rational pbar_shifted(int k, const Partition& lambda);
Rational pbar_constant(int k);  // c_k

enum class WeightVariant { Frobenius, Printed };

// Pillowcase bracket weight of a balanced partition of even size n:
//   Frobenius: (dim/n!)^2 * f_{2,...,2}^4   (the variant whose bracket of 1
//              reproduces prod (1-q^{2n})^{-1/2}; the default)
//   Printed:   (dim/n!)   * f_{2,...,2}     (kept as a negative control)
Rational bracket_weight(const Partition& lambda, WeightVariant v);

}  // namespace qdvol
