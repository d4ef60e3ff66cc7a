#pragma once

// Exact arithmetic in finite fields GF(p^e).
//
// Elements are stored by their integer encoding: the polynomial-basis
// coefficient vector (c_0, ..., c_{e-1}) over GF(p) maps to sum c_i * p^i.
// This is the encoding used in every serialized format of the library.

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cdc {

using Elem = std::uint64_t;

// Coefficients over GF(p), low degree first.
using Polynomial = std::vector<std::uint64_t>;

inline constexpr std::uint64_t kDefaultFactoringBudget = std::uint64_t{1} << 40;

bool is_prime(std::uint64_t n);

// Distinct prime factors of n (n >= 1) by trial division, ascending.
std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n);

// Irreducibility over GF(p) by root test plus trial division by every monic
// polynomial of degree <= deg/2. `poly` must be monic.
bool is_irreducible(const Polynomial& poly, std::uint64_t p);

class FieldSpec {
 public:
  std::uint64_t characteristic() const { return impl_->p; }
  unsigned degree() const { return impl_->e; }
  std::uint64_t order() const { return impl_->q; }
  const Polynomial& modulus() const { return impl_->modulus; }

  bool contains(Elem a) const { return a < impl_->q; }

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  // Throws RangeError for a == 0.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::uint64_t exponent) const;

  std::vector<std::uint64_t> coefficients(Elem a) const;
  Elem encode(std::span<const std::uint64_t> coeffs) const;

  std::string describe() const;

  friend bool operator==(const FieldSpec& a, const FieldSpec& b);

 private:
  struct Impl {
    std::uint64_t p = 0;
    unsigned e = 0;
    std::uint64_t q = 0;
    Polynomial modulus;
    // Full add/mul/inverse tables when q is small.
    std::vector<std::uint16_t> add_table;
    std::vector<std::uint16_t> mul_table;
    std::vector<std::uint16_t> inv_table;
    std::vector<std::uint16_t> neg_table;
  };

  explicit FieldSpec(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}

  Elem add_slow(Elem a, Elem b) const;
  Elem neg_slow(Elem a) const;
  Elem mul_slow(Elem a, Elem b) const;
  Elem inv_slow(Elem a) const;

  std::shared_ptr<const Impl> impl_;

  friend FieldSpec make_field(std::uint64_t, unsigned, std::optional<Polynomial>);
};

// Validated field. Without a modulus, the smallest monic irreducible of
// degree e (ordered by the integer encoding of its non-leading coefficients)
// is used, so the same (p, e) always yields the same field.
FieldSpec make_field(std::uint64_t p, unsigned e,
                     std::optional<Polynomial> modulus = std::nullopt);

// Splits q = p^e; throws NotPrime if q is not a prime power.
std::pair<std::uint64_t, unsigned> prime_power_parts(std::uint64_t q);

class FieldElement {
 public:
  FieldElement(FieldSpec spec, Elem value);

  const FieldSpec& spec() const { return spec_; }
  Elem value() const { return value_; }
  std::vector<std::uint64_t> coeffs() const { return spec_.coefficients(value_); }
  bool is_zero() const { return value_ == 0; }

  FieldElement pow(std::uint64_t exponent) const;
  FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
  friend FieldElement operator-(const FieldElement& a);
  friend bool operator==(const FieldElement& a, const FieldElement& b);

 private:
  FieldSpec spec_;
  Elem value_;
};

// Multiplicative order of a nonzero element, given the distinct prime
// factors of q-1.
std::uint64_t multiplicative_order(const FieldSpec& spec, Elem a,
                                   std::span<const std::uint64_t> prime_factors);

// Distinct prime factors of n. A supplied factorization lists primes with
// multiplicity and must multiply to n; otherwise n is trial-divided when it
// does not exceed `budget`.
std::vector<std::uint64_t> factor_with_budget(
    std::uint64_t n, const std::optional<std::vector<std::uint64_t>>& supplied,
    std::uint64_t budget = kDefaultFactoringBudget);

// Least element of order q-1, scanning encodings upward from the polynomial
// x (encoding p), then the nonzero constants.
FieldElement find_primitive_element(
    const FieldSpec& spec,
    const std::optional<std::vector<std::uint64_t>>& factorization = std::nullopt,
    std::uint64_t budget = kDefaultFactoringBudget);

// GF(q^n) realized as GF(p^(e*n)) with an explicit embedded copy of GF(q)
// and a fixed GF(q)-basis.
//
// The embedded subfield is {0} together with the subgroup generated by
// gamma^((Q-1)/(q-1)), gamma the primitive element of the big field; it is
// identified with the base field through a root of the base modulus. The
// basis is the power basis 1, gamma, ..., gamma^(n-1), with greedy extension
// from higher powers of gamma if that set were ever dependent.
class FieldExtension {
 public:
  static FieldExtension over(
      const FieldSpec& base, unsigned n,
      const std::optional<std::vector<std::uint64_t>>& factorization = std::nullopt,
      std::uint64_t budget = kDefaultFactoringBudget);

  // Uses an existing big field and primitive element. Throws BaseNotSubfield
  // unless big has the same characteristic and a degree divisible by base's.
  static FieldExtension between(const FieldSpec& big, const FieldSpec& base,
                                const FieldElement& primitive);

  const FieldSpec& big() const { return big_; }
  const FieldSpec& base() const { return base_; }
  unsigned degree() const { return n_; }
  const FieldElement& primitive() const { return primitive_; }
  const std::vector<Elem>& basis() const { return basis_; }

  // Base field element -> its image in the big field.
  Elem embed(Elem base_element) const;

  // Coordinates (base-field encodings) of a big-field element in basis().
  std::vector<Elem> coordinates(Elem big_element) const;

  Elem from_coordinates(std::span<const Elem> coords) const;

 private:
  FieldExtension(FieldSpec big, FieldSpec base, FieldElement primitive)
      : big_(std::move(big)), base_(std::move(base)), primitive_(std::move(primitive)) {}

  FieldSpec big_;
  FieldSpec base_;
  FieldElement primitive_;
  unsigned n_ = 0;
  Elem subfield_root_ = 0;                 // image of x from the base modulus
  std::vector<Elem> basis_;                // GF(q)-basis of the big field
  std::vector<std::uint64_t> inverse_;     // (e*n)^2 matrix over GF(p)
};

// The unique coordinate vector of `element` over the extension's base field.
// Throws BaseNotSubfield if `element` does not live in extension.big().
std::vector<FieldElement> subfield_coordinates(const FieldExtension& extension,
                                               const FieldElement& element);

}  // namespace cdc
