#pragma once

// Exact upper bounds on A_q[n, 2*delta, l], the largest size of a constant
// dimension code of l-dimensional subspaces of GF(q)^n with minimum
// dimension distance at least 2*delta.
//
// Every bound function evaluates its formula exactly as written, in the
// orientation given. bound_report() is the only place that also looks at the
// complementary dimension n - l.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cdc/bigint.hpp"

namespace cdc {

struct CodeParams {
  std::uint64_t q = 2;
  unsigned n = 0;
  unsigned delta = 1;
  unsigned l = 0;

  // Throws RangeError unless q >= 2 and 1 <= delta <= l <= n.
  void validate() const;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

std::string to_string(const CodeParams& params);

// [n m]_q; throws RangeError unless 0 <= m <= n and q >= 2.
BigInt gaussian_binomial(unsigned n, unsigned m, std::uint64_t q);

// [n-delta+1  l-delta+1]_q
BigInt singleton_bound(const CodeParams& params);

struct WxsBound {
  BigRational exact;
  BigInt floor;
};

// [n  l-delta+1]_q / [l  l-delta+1]_q, exact and floored.
WxsBound wxs_bound(const CodeParams& params);

// Absent when (q^l-1)^2 <= (q^n-1)(q^(l-delta)-1).
std::optional<BigInt> johnson_i_bound(const CodeParams& params);

// floor((q^n-1) * inner / (q^l-1)), where inner bounds A_q[n-1, 2delta, l-1].
BigInt johnson_ii_step(const CodeParams& params, const BigInt& inner);

// The nested-floor chain of johnson_ii_step, innermost at dimension delta.
BigInt johnson_ii_bound(const CodeParams& params);

enum class BoundKind { Singleton, Wxs, JohnsonI, JohnsonII };

std::string_view bound_name(BoundKind kind);

struct OrientationBounds {
  unsigned l = 0;
  BigInt singleton;
  WxsBound wxs;
  std::optional<BigInt> johnson_i;
  BigInt johnson_ii;
};

OrientationBounds evaluate_orientation(const CodeParams& params);

struct BoundReport {
  CodeParams params;
  OrientationBounds primary;
  // Bounds at l' = n - l; present when n - l >= delta and n - l != l.
  std::optional<OrientationBounds> dual;
  BigInt best;
  BoundKind best_kind = BoundKind::Singleton;
  unsigned best_l = 0;
  // True when the best bound came from the dual orientation.
  bool dual_params_used = false;
};

// Minimum over every present bound in both orientations; WXS contributes its
// floor. Ties go to the primary orientation, then to the earlier of
// Singleton, WXS, Johnson I, Johnson II.
BoundReport bound_report(const CodeParams& params);

// Singleton bound divided by the exact WXS bound.
BigRational singleton_wxs_ratio(const CodeParams& params);

// singleton_wxs_ratio for each q, rendered with `digits` decimals.
std::vector<std::string> bound_ratio_table(unsigned n, unsigned l, unsigned delta,
                                           const std::vector<std::uint64_t>& q_list,
                                           unsigned digits);

}  // namespace cdc
