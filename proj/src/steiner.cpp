#include "cdc/steiner.hpp"

#include <string>

#include "cdc/error.hpp"

namespace cdc {

namespace {

void verify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstructionVerificationFailed, "spread construction: " + what);
}

std::uint64_t upow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

void SteinerParams::validate() const {
  if (q < 2) throw Error(ErrorKind::RangeError, "q must be >= 2");
  if (t < 1 || t > l || l > n) throw Error(ErrorKind::RangeError, "Steiner parameters need 1 <= t <= l <= n");
}

SpreadConstruction construct_spread(const FieldSpec& base, unsigned l, unsigned k,
                                    const std::optional<std::vector<std::uint64_t>>& factorization,
                                    std::uint64_t budget) {
  if (l < 1) throw Error(ErrorKind::RangeError, "spread block dimension must be >= 1");
  if (k < 2) throw Error(ErrorKind::RangeError, "spread needs k >= 2");
  const unsigned n = k * l;
  const auto ext = FieldExtension::over(base, n, factorization, budget);
  const FieldSpec& big = ext.big();
  const std::uint64_t q = base.order();
  const std::uint64_t block_order = upow(q, l);
  const std::uint64_t e = (big.order() - 1) / (block_order - 1);
  const Elem alpha = ext.primitive().value();
  const Elem step = big.pow(alpha, e);

  std::vector<Subspace> blocks;
  blocks.reserve(e);
  std::vector<std::uint8_t> covered(upow(q, n), 0);
  Elem coset_rep = 1;  // alpha^i
  for (std::uint64_t i = 0; i < e; ++i, coset_rep = big.mul(coset_rep, alpha)) {
    std::vector<Vector> rows;
    rows.reserve(block_order - 1);
    Elem x = coset_rep;
    for (std::uint64_t j = 0; j + 1 < block_order; ++j, x = big.mul(x, step)) {
      if (i == 0) verify(big.pow(x, block_order) == x, "E_0 is not the subfield of order q^l");
      auto coords = ext.coordinates(x);
      const auto code = encode_vector(base, coords);
      verify(code != 0 && covered[code] == 0, "cosets overlap");
      covered[code] = 1;
      rows.push_back(std::move(coords));
    }
    auto block = subspace_from_rows(base, n, rows);
    verify(block.dim() == l, "block " + std::to_string(i) + " has dimension " + std::to_string(block.dim()));
    blocks.push_back(std::move(block));
  }
  for (std::uint64_t c = 1; c < covered.size(); ++c) verify(covered[c] == 1, "nonzero vectors not covered");
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      verify(intersect_dim(blocks[i], blocks[j]) == 0, "blocks intersect nontrivially");
    }
  }

  auto code = new_code(base, n, l, blocks);
  verify(code.size() == e, "block count differs from (q^(kl)-1)/(q^l-1)");
  verify(code.cached_min_distance() == 2 * l, "minimum distance differs from 2l");
  verify(is_steiner_structure(code, 1).is_steiner, "Steiner check at t = 1 failed");

  return SpreadConstruction{.code = std::move(code),
                            .blocks = std::move(blocks),
                            .q = q,
                            .l = l,
                            .k = k,
                            .p = big.characteristic(),
                            .big_degree = big.degree(),
                            .big_modulus = big.modulus(),
                            .alpha = alpha};
}

SteinerCheck is_steiner_structure(const ConstantDimensionCode& code, unsigned t, std::uint64_t budget) {
  if (t < 1 || t > code.dim()) throw Error(ErrorKind::RangeError, "Steiner check needs 1 <= t <= l");
  SubspaceEnumerator it(code.field(), code.ambient(), t, budget);
  while (auto sub = it.next()) {
    std::size_t count = 0;
    for (const auto& x : code.codewords()) {
      if (intersect_dim(*sub, x) == t) ++count;
    }
    if (count != 1) return SteinerCheck{false, std::move(*sub), count};
  }
  return SteinerCheck{true, std::nullopt, 0};
}

BigRational steiner_block_count(const SteinerParams& params) {
  params.validate();
  return BigRational(gaussian_binomial(params.n, params.t, params.q),
                     gaussian_binomial(params.l, params.t, params.q));
}

SteinerCodeParams steiner_as_code_params(const SteinerParams& params) {
  params.validate();
  return SteinerCodeParams{CodeParams{params.q, params.n, params.l - params.t + 1, params.l},
                           steiner_block_count(params)};
}

WxsEquivalence check_wxs_achiever_equivalence(const ConstantDimensionCode& code, unsigned delta,
                                              std::uint64_t budget) {
  const CodeParams params{code.field().order(), code.ambient(), delta, code.dim()};
  params.validate();
  if (code.cached_min_distance() && *code.cached_min_distance() < 2 * delta) {
    throw Error(ErrorKind::RangeError, "code distance " + std::to_string(*code.cached_min_distance()) +
                                           " is below 2*delta = " + std::to_string(2 * delta));
  }
  WxsEquivalence out;
  out.achieves_wxs = BigRational(BigInt(code.size())) == wxs_bound(params).exact;
  out.is_steiner = is_steiner_structure(code, code.dim() - delta + 1, budget).is_steiner;
  return out;
}

}  // namespace cdc
