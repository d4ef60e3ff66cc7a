#include "cdc/bounds.hpp"

#include "cdc/error.hpp"

namespace cdc {

namespace {

BigInt q_pow_minus_one(std::uint64_t q, unsigned k) { return ipow(q, k) - 1; }

}  // namespace

void CodeParams::validate() const {
  if (q < 2) throw Error(ErrorKind::RangeError, "q must be >= 2");
  if (delta < 1) throw Error(ErrorKind::RangeError, "delta must be >= 1");
  if (delta > l) throw Error(ErrorKind::RangeError, "delta must not exceed l");
  if (l > n) throw Error(ErrorKind::RangeError, "l must not exceed n");
}

std::string to_string(const CodeParams& params) {
  return "q=" + std::to_string(params.q) + " n=" + std::to_string(params.n) +
         " delta=" + std::to_string(params.delta) + " l=" + std::to_string(params.l);
}

BigInt gaussian_binomial(unsigned n, unsigned m, std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::RangeError, "gaussian binomial needs q >= 2");
  if (m > n) throw Error(ErrorKind::RangeError, "gaussian binomial needs m <= n");
  BigInt num = 1;
  BigInt den = 1;
  for (unsigned i = 0; i < m; ++i) {
    num *= q_pow_minus_one(q, n - i);
    den *= q_pow_minus_one(q, m - i);
  }
  BigInt quot, rem;
  boost::multiprecision::divide_qr(num, den, quot, rem);
  if (rem != 0) {
    throw Error(ErrorKind::ConstructionVerificationFailed, "gaussian binomial division was not exact");
  }
  return quot;
}

BigInt singleton_bound(const CodeParams& params) {
  params.validate();
  return gaussian_binomial(params.n - params.delta + 1, params.l - params.delta + 1, params.q);
}

WxsBound wxs_bound(const CodeParams& params) {
  params.validate();
  const unsigned t = params.l - params.delta + 1;
  BigRational exact(gaussian_binomial(params.n, t, params.q), gaussian_binomial(params.l, t, params.q));
  BigInt fl = floor(exact);
  return {std::move(exact), std::move(fl)};
}

std::optional<BigInt> johnson_i_bound(const CodeParams& params) {
  params.validate();
  const BigInt ql = q_pow_minus_one(params.q, params.l);
  const BigInt qn = q_pow_minus_one(params.q, params.n);
  const BigInt qld = q_pow_minus_one(params.q, params.l - params.delta);
  const BigInt lhs = ql * ql;
  const BigInt rhs = qn * qld;
  if (lhs <= rhs) return std::nullopt;
  const BigInt numerator = (ipow(params.q, params.l) - ipow(params.q, params.l - params.delta)) * qn;
  return BigInt(numerator / (lhs - rhs));
}

BigInt johnson_ii_step(const CodeParams& params, const BigInt& inner) {
  params.validate();
  return BigInt(q_pow_minus_one(params.q, params.n) * inner / q_pow_minus_one(params.q, params.l));
}

BigInt johnson_ii_bound(const CodeParams& params) {
  params.validate();
  // A_q[n-l, 2delta, 0] = 1 seeds the chain; each step raises n and l by one.
  BigInt value = 1;
  for (unsigned ll = params.delta; ll <= params.l; ++ll) {
    const CodeParams step{params.q, params.n - params.l + ll, params.delta, ll};
    value = johnson_ii_step(step, value);
  }
  return value;
}

std::string_view bound_name(BoundKind kind) {
  switch (kind) {
    case BoundKind::Singleton: return "singleton";
    case BoundKind::Wxs: return "wxs";
    case BoundKind::JohnsonI: return "johnson_i";
    case BoundKind::JohnsonII: return "johnson_ii";
  }
  return "unknown";
}

OrientationBounds evaluate_orientation(const CodeParams& params) {
  OrientationBounds out;
  out.l = params.l;
  out.singleton = singleton_bound(params);
  out.wxs = wxs_bound(params);
  out.johnson_i = johnson_i_bound(params);
  out.johnson_ii = johnson_ii_bound(params);
  return out;
}

BoundReport bound_report(const CodeParams& params) {
  params.validate();
  BoundReport report;
  report.params = params;
  report.primary = evaluate_orientation(params);
  const unsigned dual_l = params.n - params.l;
  if (dual_l >= params.delta && dual_l != params.l) {
    report.dual = evaluate_orientation(CodeParams{params.q, params.n, params.delta, dual_l});
  }

  bool have_best = false;
  const auto consider = [&](const BigInt& value, BoundKind kind, unsigned l, bool dual) {
    if (!have_best || value < report.best) {
      report.best = value;
      report.best_kind = kind;
      report.best_l = l;
      report.dual_params_used = dual;
      have_best = true;
    }
  };
  const auto consider_all = [&](const OrientationBounds& o, bool dual) {
    consider(o.singleton, BoundKind::Singleton, o.l, dual);
    consider(o.wxs.floor, BoundKind::Wxs, o.l, dual);
    if (o.johnson_i) consider(*o.johnson_i, BoundKind::JohnsonI, o.l, dual);
    consider(o.johnson_ii, BoundKind::JohnsonII, o.l, dual);
  };
  consider_all(report.primary, false);
  if (report.dual) consider_all(*report.dual, true);
  return report;
}

BigRational singleton_wxs_ratio(const CodeParams& params) {
  return BigRational(singleton_bound(params)) / wxs_bound(params).exact;
}

std::vector<std::string> bound_ratio_table(unsigned n, unsigned l, unsigned delta,
                                           const std::vector<std::uint64_t>& q_list,
                                           unsigned digits) {
  std::vector<std::string> out;
  out.reserve(q_list.size());
  for (const auto q : q_list) {
    out.push_back(to_decimal(singleton_wxs_ratio(CodeParams{q, n, delta, l}), digits));
  }
  return out;
}

}  // namespace cdc
