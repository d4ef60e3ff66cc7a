#pragma once

// Steiner structures S[t, l, n]_q: families of l-subspaces covering every
// t-subspace exactly once. Includes the cyclotomic spread S[1, l, kl]_q.

#include <cstdint>
#include <optional>
#include <vector>

#include "cdc/bigint.hpp"
#include "cdc/bounds.hpp"
#include "cdc/code.hpp"

namespace cdc {

struct SteinerParams {
  unsigned t = 1;
  unsigned l = 1;
  unsigned n = 1;
  std::uint64_t q = 2;

  // Throws RangeError unless 1 <= t <= l <= n and q >= 2.
  void validate() const;
};

struct SpreadConstruction {
  ConstantDimensionCode code;
  // Blocks E_0, ..., E_{e-1} in coset order, before canonical sorting.
  std::vector<Subspace> blocks;
  std::uint64_t q = 0;
  unsigned l = 0;
  unsigned k = 0;
  // The field GF(q^(kl)) the cosets live in and its primitive element.
  std::uint64_t p = 0;
  unsigned big_degree = 0;
  Polynomial big_modulus;
  Elem alpha = 0;
};

// Blocks E_i = alpha^i <alpha^e> + {0}, e = (q^(kl)-1)/(q^l-1), read as
// subspaces of GF(q)^(kl) through the power-basis coordinates. All
// postconditions (dimension l, E_0 the subfield GF(q^l), pairwise trivial
// intersection, partition of the nonzero vectors, distance 2l, Steiner at
// t = 1) are checked on every call; a failure throws
// ConstructionVerificationFailed.
SpreadConstruction construct_spread(
    const FieldSpec& base, unsigned l, unsigned k,
    const std::optional<std::vector<std::uint64_t>>& factorization = std::nullopt,
    std::uint64_t budget = kDefaultFactoringBudget);

struct SteinerCheck {
  bool is_steiner = false;
  // First t-subspace (canonical order) not covered exactly once.
  std::optional<Subspace> witness;
  std::size_t witness_count = 0;
};

SteinerCheck is_steiner_structure(const ConstantDimensionCode& code, unsigned t,
                                  std::uint64_t budget = kDefaultEnumerationBudget);

// [n t]_q / [l t]_q. A non-integral value certifies that no S[t,l,n]_q exists.
BigRational steiner_block_count(const SteinerParams& params);

struct SteinerCodeParams {
  CodeParams params;  // delta = l - t + 1
  BigRational block_count;
};

SteinerCodeParams steiner_as_code_params(const SteinerParams& params);

struct WxsEquivalence {
  bool achieves_wxs = false;
  bool is_steiner = false;
};

// Evaluates "M equals the exact WXS bound" and "is S[l-delta+1, l, n]_q"
// independently. Throws RangeError if the code's distance is below 2*delta.
WxsEquivalence check_wxs_achiever_equivalence(const ConstantDimensionCode& code, unsigned delta,
                                              std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cdc
