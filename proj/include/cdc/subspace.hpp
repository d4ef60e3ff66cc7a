#pragma once

// Subspaces of GF(q)^n in canonical reduced row echelon form.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "cdc/field.hpp"

namespace cdc {

using Vector = std::vector<Elem>;

inline constexpr std::uint64_t kDefaultEnumerationBudget = 1'000'000;

class Subspace {
 public:
  // The zero subspace of GF(q)^n.
  Subspace(FieldSpec field, unsigned n);

  const FieldSpec& field() const { return field_; }
  unsigned ambient() const { return n_; }
  unsigned dim() const { return static_cast<unsigned>(pivots_.size()); }

  // dim() x ambient() RREF matrix, row-major.
  const std::vector<Elem>& matrix() const { return matrix_; }
  const std::vector<unsigned>& pivots() const { return pivots_; }
  std::span<const Elem> row(unsigned i) const {
    return {matrix_.data() + static_cast<std::size_t>(i) * n_, n_};
  }
  std::vector<Vector> rows() const;

  bool contains(std::span<const Elem> v) const;

  // Canonical order: ambient, then dimension, then pivot columns
  // lexicographically, then matrix entries row-major. Enumeration order of
  // enumerate_subspaces() agrees with it.
  friend std::strong_ordering operator<=>(const Subspace& a, const Subspace& b);
  friend bool operator==(const Subspace& a, const Subspace& b);

  std::size_t hash() const;

 private:
  Subspace(FieldSpec field, unsigned n, std::vector<Elem> matrix, std::vector<unsigned> pivots)
      : field_(std::move(field)), n_(n), matrix_(std::move(matrix)), pivots_(std::move(pivots)) {}

  FieldSpec field_;
  unsigned n_;
  std::vector<Elem> matrix_;
  std::vector<unsigned> pivots_;

  friend Subspace subspace_from_rows(const FieldSpec&, unsigned, const std::vector<Vector>&);
  friend class SubspaceEnumerator;
};

// In-place Gauss-Jordan elimination of a rows x cols matrix. Nonzero rows
// end up first, in RREF. Returns the pivot column of each nonzero row.
std::vector<unsigned> row_reduce(const FieldSpec& field, std::vector<Elem>& m, unsigned rows,
                                 unsigned cols);

Subspace subspace_from_rows(const FieldSpec& field, unsigned n, const std::vector<Vector>& rows);

Subspace full_space(const FieldSpec& field, unsigned n);

// Span of the unit vectors e_i for the given (0-based) coordinates.
Subspace coordinate_subspace(const FieldSpec& field, unsigned n, std::span<const unsigned> coords);

unsigned sum_dim(const Subspace& a, const Subspace& b);
// dim(A) + dim(B) - sum_dim(A, B).
unsigned intersect_dim(const Subspace& a, const Subspace& b);

Subspace sum(const Subspace& a, const Subspace& b);
// Computed directly by the Zassenhaus algorithm.
Subspace intersection(const Subspace& a, const Subspace& b);

bool is_subspace_of(const Subspace& inner, const Subspace& outer);

// dim(A+B) - dim(A cap B), cross-checked against dim A + dim B - 2 dim(A cap B).
unsigned dimension_distance(const Subspace& a, const Subspace& b);

// Complement under the standard dot product.
Subspace orthogonal_complement(const Subspace& a);

// {a in V1 : a.b = 0 for all b in V2}. Requires V2 <= V1 (NotASubspaceOf).
// The result may be larger than dim V1 - dim V2 when V2 meets its own
// complement.
Subspace relative_orthogonal_complement(const Subspace& v2, const Subspace& v1);

// Ambient vectors as base-q numbers, first coordinate most significant.
std::uint64_t encode_vector(const FieldSpec& field, std::span<const Elem> v);
Vector decode_vector(const FieldSpec& field, unsigned n, std::uint64_t code);

// Encodings of all nonzero vectors of the subspace, ascending.
std::vector<std::uint64_t> nonzero_vector_codes(const Subspace& a);

// Streams the l-dimensional subspaces of GF(q)^n in canonical order: pivot
// column sets lexicographically, then the free entries read row-major as
// base-q digits with the last entry varying fastest.
class SubspaceEnumerator {
 public:
  SubspaceEnumerator(FieldSpec field, unsigned n, unsigned l,
                     std::uint64_t budget = kDefaultEnumerationBudget);

  std::optional<Subspace> next();

 private:
  bool load_pivot_set();
  bool advance_pivot_set();
  Subspace current() const;

  FieldSpec field_;
  unsigned n_;
  unsigned l_;
  std::vector<unsigned> pivots_;
  std::vector<std::pair<unsigned, unsigned>> free_slots_;  // (row, col)
  std::vector<Elem> digits_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, unsigned n, unsigned l,
                                          std::uint64_t budget = kDefaultEnumerationBudget);

}  // namespace cdc

template <>
struct std::hash<cdc::Subspace> {
  std::size_t operator()(const cdc::Subspace& s) const noexcept { return s.hash(); }
};
