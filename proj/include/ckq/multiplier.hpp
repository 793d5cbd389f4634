#pragma once

#include "ckq/ck_core.hpp"

namespace ckq {

/// Componentwise maximum of exponents.
JMonomial multiplier_union(const JMonomial& a, const JMonomial& b);

/// First-power multiplier: union of (sigma_k, sigma_k') over the paired
/// positions, k = 1..n (odd N) or 1..n-1 (even N).
JMonomial j_zero(const SigmaPermutation& sigma);

/// Compensating multiplier for the commutator prefactors.  i_k is the
/// minimum of sigma over positions k+1 .. k'-1.
JMonomial j_one(const SigmaPermutation& sigma);

JMonomial theorem_multiplier(const SigmaPermutation& sigma);

/// Scans the closed-form relations, star map and invariant (generated with
/// J = 1) for Laurent prefactors of sinh/tanh atoms and returns the least
/// monomial clearing them, united with j_zero.
JMonomial oracle_multiplier(const SigmaPermutation& sigma);

enum class MultiplierKind { Theorem, JZero, Oracle };
JMonomial multiplier(MultiplierKind kind, const SigmaPermutation& sigma);
MultiplierKind parse_multiplier_kind(const std::string& s);

}  // namespace ckq
