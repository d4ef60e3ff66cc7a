#include "cdc/field.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "cdc/error.hpp"

namespace cdc {

namespace {

using u128 = unsigned __int128;

constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 63;
constexpr std::uint64_t kTableLimit = 256;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t k, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (k > 0) {
    if (k & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    k >>= 1;
  }
  return r;
}

std::uint64_t inv_mod_prime(std::uint64_t a, std::uint64_t p) {
  return powmod(a, p - 2, p);
}

// Checked p^e; nullopt on overflow past kMaxOrder.
std::optional<std::uint64_t> checked_pow(std::uint64_t p, unsigned e) {
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (q > kMaxOrder / p) return std::nullopt;
    q *= p;
  }
  return q;
}

void trim(Polynomial& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo the monic polynomial m over GF(p).
Polynomial poly_mod(Polynomial a, const Polynomial& m, std::uint64_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint64_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    if (lead != 0) {
      for (std::size_t i = 0; i <= dm; ++i) {
        const std::uint64_t t = mulmod(lead, m[i], p);
        a[shift + i] = (a[shift + i] + p - t) % p;
      }
    }
    a.pop_back();
    trim(a);
  }
  return a;
}

std::uint64_t eval_poly(const Polynomial& a, std::uint64_t x, std::uint64_t p) {
  std::uint64_t acc = 0;
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    acc = (mulmod(acc, x, p) + *it) % p;
  }
  return acc;
}

// Inverts a square matrix over GF(p) in place; returns false if singular.
bool invert_mod_p(std::vector<std::uint64_t> a, std::size_t dim, std::uint64_t p,
                  std::vector<std::uint64_t>& out) {
  out.assign(dim * dim, 0);
  for (std::size_t i = 0; i < dim; ++i) out[i * dim + i] = 1;
  for (std::size_t col = 0; col < dim; ++col) {
    std::size_t pivot = col;
    while (pivot < dim && a[pivot * dim + col] == 0) ++pivot;
    if (pivot == dim) return false;
    if (pivot != col) {
      for (std::size_t j = 0; j < dim; ++j) {
        std::swap(a[pivot * dim + j], a[col * dim + j]);
        std::swap(out[pivot * dim + j], out[col * dim + j]);
      }
    }
    const std::uint64_t s = inv_mod_prime(a[col * dim + col], p);
    for (std::size_t j = 0; j < dim; ++j) {
      a[col * dim + j] = mulmod(a[col * dim + j], s, p);
      out[col * dim + j] = mulmod(out[col * dim + j], s, p);
    }
    for (std::size_t r = 0; r < dim; ++r) {
      const std::uint64_t f = a[r * dim + col];
      if (r == col || f == 0) continue;
      for (std::size_t j = 0; j < dim; ++j) {
        a[r * dim + j] = (a[r * dim + j] + p - mulmod(f, a[col * dim + j], p)) % p;
        out[r * dim + j] = (out[r * dim + j] + p - mulmod(f, out[col * dim + j], p)) % p;
      }
    }
  }
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  // Deterministic Miller-Rabin for 64-bit inputs.
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

bool is_irreducible(const Polynomial& poly, std::uint64_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const std::size_t deg = poly.size() - 1;
  if (deg == 1) return true;
  for (std::uint64_t r = 0; r < p; ++r) {
    if (eval_poly(poly, r, p) == 0) return false;
  }
  for (std::size_t d = 2; d <= deg / 2; ++d) {
    // Every monic divisor candidate of degree d.
    Polynomial cand(d + 1, 0);
    cand[d] = 1;
    while (true) {
      if (poly_mod(poly, cand, p).empty()) return false;
      std::size_t i = 0;
      while (i < d && ++cand[i] == p) {
        cand[i] = 0;
        ++i;
      }
      if (i == d) break;
    }
  }
  return true;
}

std::pair<std::uint64_t, unsigned> prime_power_parts(std::uint64_t q) {
  if (q < 2) throw Error(ErrorKind::NotPrime, "field order must be a prime power >= 2, got " + std::to_string(q));
  const auto factors = distinct_prime_factors(q);
  if (factors.size() != 1) {
    throw Error(ErrorKind::NotPrime, "field order " + std::to_string(q) + " is not a prime power");
  }
  unsigned e = 0;
  for (std::uint64_t r = q; r > 1; r /= factors.front()) ++e;
  return {factors.front(), e};
}

FieldSpec make_field(std::uint64_t p, unsigned e, std::optional<Polynomial> modulus) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p >= (std::uint64_t{1} << 32)) {
    throw Error(ErrorKind::RangeError, "characteristic beyond 2^32 is not supported");
  }
  if (e < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  const auto q = checked_pow(p, e);
  if (!q) throw Error(ErrorKind::RangeError, "field order p^e exceeds 2^63");

  Polynomial mod;
  if (modulus) {
    mod = *modulus;
    if (mod.size() != e + 1 || mod.back() != 1) {
      throw Error(ErrorKind::DegreeMismatch, "modulus must be monic of degree " + std::to_string(e));
    }
    for (auto c : mod) {
      if (c >= p) throw Error(ErrorKind::ElementNotInField, "modulus coefficient out of range");
    }
    if (!is_irreducible(mod, p)) {
      throw Error(ErrorKind::ReduciblePolynomial, "modulus is reducible over GF(" + std::to_string(p) + ")");
    }
  } else {
    mod.assign(e + 1, 0);
    mod[e] = 1;
    while (!is_irreducible(mod, p)) {
      std::size_t i = 0;
      while (i < e && ++mod[i] == p) {
        mod[i] = 0;
        ++i;
      }
    }
  }

  auto impl = std::make_shared<FieldSpec::Impl>();
  impl->p = p;
  impl->e = e;
  impl->q = *q;
  impl->modulus = std::move(mod);
  FieldSpec spec(impl);
  if (*q <= kTableLimit) {
    const std::uint64_t n = *q;
    impl->add_table.resize(n * n);
    impl->mul_table.resize(n * n);
    impl->inv_table.assign(n, 0);
    impl->neg_table.assign(n, 0);
    for (Elem a = 0; a < n; ++a) {
      for (Elem b = 0; b < n; ++b) {
        impl->add_table[a * n + b] = static_cast<std::uint16_t>(spec.add_slow(a, b));
        const Elem prod = spec.mul_slow(a, b);
        impl->mul_table[a * n + b] = static_cast<std::uint16_t>(prod);
        if (prod == 1) impl->inv_table[a] = static_cast<std::uint16_t>(b);
      }
      impl->neg_table[a] = static_cast<std::uint16_t>(spec.neg_slow(a));
    }
  }
  return spec;
}

std::vector<std::uint64_t> FieldSpec::coefficients(Elem a) const {
  std::vector<std::uint64_t> c(impl_->e, 0);
  for (unsigned i = 0; i < impl_->e; ++i) {
    c[i] = a % impl_->p;
    a /= impl_->p;
  }
  return c;
}

Elem FieldSpec::encode(std::span<const std::uint64_t> coeffs) const {
  Elem v = 0;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    v = v * impl_->p + coeffs[i] % impl_->p;
  }
  return v;
}

Elem FieldSpec::add_slow(Elem a, Elem b) const {
  const std::uint64_t p = impl_->p;
  if (p == 2) return a ^ b;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < impl_->e; ++i) {
    out += ((a % p + b % p) % p) * scale;
    a /= p;
    b /= p;
    scale *= p;
  }
  return out;
}

Elem FieldSpec::neg_slow(Elem a) const {
  const std::uint64_t p = impl_->p;
  if (p == 2) return a;
  Elem out = 0, scale = 1;
  for (unsigned i = 0; i < impl_->e; ++i) {
    out += ((p - a % p) % p) * scale;
    a /= p;
    scale *= p;
  }
  return out;
}

Elem FieldSpec::mul_slow(Elem a, Elem b) const {
  const std::uint64_t p = impl_->p;
  const auto ca = coefficients(a);
  const auto cb = coefficients(b);
  Polynomial prod(2 * impl_->e - 1, 0);
  for (unsigned i = 0; i < impl_->e; ++i) {
    if (ca[i] == 0) continue;
    for (unsigned j = 0; j < impl_->e; ++j) {
      prod[i + j] = (prod[i + j] + mulmod(ca[i], cb[j], p)) % p;
    }
  }
  const auto r = poly_mod(std::move(prod), impl_->modulus, p);
  return encode(r);
}

Elem FieldSpec::inv_slow(Elem a) const { return pow(a, impl_->q - 2); }

Elem FieldSpec::add(Elem a, Elem b) const {
  if (!impl_->add_table.empty()) return impl_->add_table[a * impl_->q + b];
  return add_slow(a, b);
}

Elem FieldSpec::neg(Elem a) const {
  if (!impl_->neg_table.empty()) return impl_->neg_table[a];
  return neg_slow(a);
}

Elem FieldSpec::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FieldSpec::mul(Elem a, Elem b) const {
  if (!impl_->mul_table.empty()) return impl_->mul_table[a * impl_->q + b];
  return mul_slow(a, b);
}

Elem FieldSpec::inv(Elem a) const {
  if (a == 0) throw Error(ErrorKind::RangeError, "zero has no multiplicative inverse");
  if (!impl_->inv_table.empty()) return impl_->inv_table[a];
  return inv_slow(a);
}

Elem FieldSpec::pow(Elem a, std::uint64_t exponent) const {
  Elem result = 1;
  while (exponent > 0) {
    if (exponent & 1) result = mul(result, a);
    a = mul(a, a);
    exponent >>= 1;
  }
  return result;
}

std::string FieldSpec::describe() const {
  std::ostringstream os;
  os << "GF(" << impl_->q << ")";
  if (impl_->e > 1) {
    os << " mod [";
    for (std::size_t i = 0; i < impl_->modulus.size(); ++i) {
      os << (i ? "," : "") << impl_->modulus[i];
    }
    os << "]";
  }
  return os.str();
}

bool operator==(const FieldSpec& a, const FieldSpec& b) {
  return a.impl_ == b.impl_ ||
         (a.impl_->p == b.impl_->p && a.impl_->e == b.impl_->e && a.impl_->modulus == b.impl_->modulus);
}

FieldElement::FieldElement(FieldSpec spec, Elem value) : spec_(std::move(spec)), value_(value) {
  if (!spec_.contains(value_)) {
    throw Error(ErrorKind::ElementNotInField,
                std::to_string(value_) + " is not an element of " + spec_.describe());
  }
}

namespace {
void require_same_field(const FieldElement& a, const FieldElement& b) {
  if (!(a.spec() == b.spec())) {
    throw Error(ErrorKind::ElementNotInField, "operands belong to different fields");
  }
}
}  // namespace

FieldElement FieldElement::pow(std::uint64_t exponent) const { return {spec_, spec_.pow(value_, exponent)}; }
FieldElement FieldElement::inverse() const { return {spec_, spec_.inv(value_)}; }

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec_, a.spec_.add(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec_, a.spec_.sub(a.value_, b.value_)};
}
FieldElement operator*(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec_, a.spec_.mul(a.value_, b.value_)};
}
FieldElement operator/(const FieldElement& a, const FieldElement& b) {
  require_same_field(a, b);
  return {a.spec_, a.spec_.div(a.value_, b.value_)};
}
FieldElement operator-(const FieldElement& a) { return {a.spec_, a.spec_.neg(a.value_)}; }
bool operator==(const FieldElement& a, const FieldElement& b) {
  return a.spec_ == b.spec_ && a.value_ == b.value_;
}

std::uint64_t multiplicative_order(const FieldSpec& spec, Elem a,
                                   std::span<const std::uint64_t> prime_factors) {
  if (a == 0) throw Error(ErrorKind::RangeError, "zero has no multiplicative order");
  std::uint64_t order = spec.order() - 1;
  for (const auto r : prime_factors) {
    while (order % r == 0 && spec.pow(a, order / r) == 1) order /= r;
  }
  return order;
}

std::vector<std::uint64_t> factor_with_budget(
    std::uint64_t n, const std::optional<std::vector<std::uint64_t>>& supplied,
    std::uint64_t budget) {
  if (supplied) {
    u128 product = 1;
    for (const auto f : *supplied) {
      if (!is_prime(f)) {
        throw Error(ErrorKind::NoFactorizationMatch, "supplied factor " + std::to_string(f) + " is not prime");
      }
      product *= f;
      if (product > n) break;
    }
    if (product != n) {
      throw Error(ErrorKind::NoFactorizationMatch,
                  "supplied factors do not multiply to " + std::to_string(n));
    }
    std::vector<std::uint64_t> out = *supplied;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }
  if (n > budget) {
    throw Error(ErrorKind::FactorizationNeeded,
                std::to_string(n) + " exceeds the trial-division budget; supply its prime factors");
  }
  return distinct_prime_factors(n);
}

FieldElement find_primitive_element(const FieldSpec& spec,
                                    const std::optional<std::vector<std::uint64_t>>& factorization,
                                    std::uint64_t budget) {
  const std::uint64_t q = spec.order();
  const auto factors = factor_with_budget(q - 1, factorization, budget);
  const auto is_generator = [&](Elem a) {
    return std::all_of(factors.begin(), factors.end(),
                       [&](std::uint64_t r) { return spec.pow(a, (q - 1) / r) != 1; });
  };
  const std::uint64_t p = spec.characteristic();
  for (Elem a = p; a < q; ++a) {
    if (is_generator(a)) return {spec, a};
  }
  for (Elem a = 1; a < std::min(p, q); ++a) {
    if (is_generator(a)) return {spec, a};
  }
  throw Error(ErrorKind::ConstructionVerificationFailed, "no primitive element found in " + spec.describe());
}

FieldExtension FieldExtension::over(const FieldSpec& base, unsigned n,
                                    const std::optional<std::vector<std::uint64_t>>& factorization,
                                    std::uint64_t budget) {
  if (n < 1) throw Error(ErrorKind::DegreeMismatch, "extension degree must be >= 1");
  const FieldSpec big = make_field(base.characteristic(), base.degree() * n);
  return between(big, base, find_primitive_element(big, factorization, budget));
}

FieldExtension FieldExtension::between(const FieldSpec& big, const FieldSpec& base,
                                       const FieldElement& primitive) {
  if (big.characteristic() != base.characteristic() || big.degree() % base.degree() != 0) {
    throw Error(ErrorKind::BaseNotSubfield, base.describe() + " is not a subfield of " + big.describe());
  }
  if (!(primitive.spec() == big)) {
    throw Error(ErrorKind::BaseNotSubfield, "primitive element does not belong to the big field");
  }
  FieldExtension ext(big, base, primitive);
  ext.n_ = big.degree() / base.degree();
  const std::uint64_t p = big.characteristic();
  const std::uint64_t q = base.order();
  const std::uint64_t big_q = big.order();
  const unsigned eb = base.degree();
  const unsigned dim = big.degree();

  // A root of the base modulus inside the embedded copy of GF(q).
  if (eb == 1) {
    ext.subfield_root_ = 0;
  } else {
    const Elem g = big.pow(primitive.value(), (big_q - 1) / (q - 1));
    const auto& mod = base.modulus();
    const auto eval = [&](Elem z) {
      Elem acc = 0;
      for (auto it = mod.rbegin(); it != mod.rend(); ++it) acc = big.add(big.mul(acc, z), *it);
      return acc;
    };
    bool found = false;
    Elem z = 1;
    for (std::uint64_t j = 0; j + 1 < q; ++j, z = big.mul(z, g)) {
      if (eval(z) == 0) {
        ext.subfield_root_ = z;
        found = true;
        break;
      }
    }
    if (!found) {
      throw Error(ErrorKind::ConstructionVerificationFailed, "base modulus has no root in the subfield");
    }
  }

  // Power basis, extended greedily if dependent. Rows are the GF(p)
  // coordinate vectors of zeta^k * b for each basis element b.
  std::vector<Elem> zeta_powers(eb, 1);
  for (unsigned k = 1; k < eb; ++k) zeta_powers[k] = big.mul(zeta_powers[k - 1], ext.subfield_root_);

  std::vector<std::vector<std::uint64_t>> echelon;  // reduced rows for rank tests
  std::vector<std::size_t> echelon_pivots;
  const auto try_add = [&](const std::vector<std::uint64_t>& v) {
    auto r = v;
    for (std::size_t i = 0; i < echelon.size(); ++i) {
      const std::uint64_t f = r[echelon_pivots[i]];
      if (f == 0) continue;
      for (unsigned j = 0; j < dim; ++j) r[j] = (r[j] + p - mulmod(f, echelon[i][j], p)) % p;
    }
    std::size_t piv = 0;
    while (piv < dim && r[piv] == 0) ++piv;
    if (piv == dim) return false;
    const std::uint64_t s = inv_mod_prime(r[piv], p);
    for (auto& x : r) x = mulmod(x, s, p);
    echelon.push_back(std::move(r));
    echelon_pivots.push_back(piv);
    return true;
  };

  std::vector<std::uint64_t> rows;
  Elem cand = 1;
  for (std::uint64_t i = 0; ext.basis_.size() < ext.n_ && i + 1 < big_q; ++i, cand = big.mul(cand, primitive.value())) {
    const auto saved_echelon = echelon;
    const auto saved_pivots = echelon_pivots;
    bool independent = true;
    std::vector<std::uint64_t> cand_rows;
    for (unsigned k = 0; k < eb && independent; ++k) {
      const auto v = big.coefficients(big.mul(zeta_powers[k], cand));
      independent = try_add(v);
      cand_rows.insert(cand_rows.end(), v.begin(), v.end());
    }
    if (!independent) {
      echelon = saved_echelon;
      echelon_pivots = saved_pivots;
      continue;
    }
    ext.basis_.push_back(cand);
    rows.insert(rows.end(), cand_rows.begin(), cand_rows.end());
  }
  if (ext.basis_.size() != ext.n_ || !invert_mod_p(rows, dim, p, ext.inverse_)) {
    throw Error(ErrorKind::ConstructionVerificationFailed, "could not build a basis over the subfield");
  }
  return ext;
}

Elem FieldExtension::embed(Elem base_element) const {
  const auto c = base_.coefficients(base_element);
  Elem acc = 0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = big_.add(big_.mul(acc, subfield_root_), *it);
  return acc;
}

std::vector<Elem> FieldExtension::coordinates(Elem big_element) const {
  const std::uint64_t p = big_.characteristic();
  const unsigned dim = big_.degree();
  const unsigned eb = base_.degree();
  const auto x = big_.coefficients(big_element);
  std::vector<std::uint64_t> d(dim, 0);
  for (unsigned row = 0; row < dim; ++row) {
    if (x[row] == 0) continue;
    for (unsigned col = 0; col < dim; ++col) {
      d[col] = (d[col] + mulmod(x[row], inverse_[row * dim + col], p)) % p;
    }
  }
  std::vector<Elem> coords(n_);
  for (unsigned j = 0; j < n_; ++j) {
    coords[j] = base_.encode(std::span<const std::uint64_t>(d.data() + j * eb, eb));
  }
  return coords;
}

Elem FieldExtension::from_coordinates(std::span<const Elem> coords) const {
  if (coords.size() != n_) throw Error(ErrorKind::LengthMismatch, "coordinate vector has wrong length");
  Elem acc = 0;
  for (unsigned j = 0; j < n_; ++j) {
    if (!base_.contains(coords[j])) throw Error(ErrorKind::ElementNotInField, "coordinate not in base field");
    acc = big_.add(acc, big_.mul(embed(coords[j]), basis_[j]));
  }
  return acc;
}

std::vector<FieldElement> subfield_coordinates(const FieldExtension& extension,
                                               const FieldElement& element) {
  if (!(element.spec() == extension.big())) {
    throw Error(ErrorKind::BaseNotSubfield, "element does not belong to the extension field");
  }
  std::vector<FieldElement> out;
  for (const Elem c : extension.coordinates(element.value())) out.emplace_back(extension.base(), c);
  return out;
}

}  // namespace cdc
