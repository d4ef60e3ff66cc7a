#pragma once

// Constant dimension codes and their binary constant-weight images.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cdc/subspace.hpp"

namespace cdc {

// A set of l-dimensional subspaces of GF(q)^n, deduplicated and kept in
// canonical order. The minimum distance is measured once at construction.
class ConstantDimensionCode {
 public:
  const FieldSpec& field() const { return field_; }
  unsigned ambient() const { return n_; }
  unsigned dim() const { return l_; }
  std::size_t size() const { return codewords_.size(); }
  const std::vector<Subspace>& codewords() const { return codewords_; }

  // Absent for a single codeword.
  std::optional<unsigned> cached_min_distance() const { return min_distance_; }

  friend bool operator==(const ConstantDimensionCode& a, const ConstantDimensionCode& b) {
    return a.field_ == b.field_ && a.n_ == b.n_ && a.l_ == b.l_ && a.codewords_ == b.codewords_;
  }

 private:
  ConstantDimensionCode(FieldSpec field, unsigned n, unsigned l)
      : field_(std::move(field)), n_(n), l_(l) {}

  FieldSpec field_;
  unsigned n_;
  unsigned l_;
  std::vector<Subspace> codewords_;
  std::optional<unsigned> min_distance_;

  friend ConstantDimensionCode new_code(const FieldSpec&, unsigned, unsigned, std::vector<Subspace>);
};

// Throws EmptyCode, DimensionMismatch or AmbientMismatch.
ConstantDimensionCode new_code(const FieldSpec& field, unsigned n, unsigned l,
                               std::vector<Subspace> subspaces);

// Pairwise minimum of dimension_distance; SingletonCode when M < 2.
unsigned min_distance(const ConstantDimensionCode& code);

// Minimum over all pairs, computed without the cache.
unsigned measure_min_distance(const std::vector<Subspace>& codewords);

ConstantDimensionCode dual_code(const ConstantDimensionCode& code);

// "(n, M, 2delta, l)_q"; 2delta printed as "-" for a single codeword.
std::string parameter_string(const ConstantDimensionCode& code);

using BinaryRow = std::vector<std::uint8_t>;

class BinaryConstantWeightCode {
 public:
  // Measures every parameter from the rows. Throws RangeError if rows are
  // empty, differ in length, or differ in weight.
  static BinaryConstantWeightCode from_rows(std::vector<BinaryRow> rows);

  std::size_t length() const { return length_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t weight() const { return weight_; }
  std::optional<std::size_t> min_distance() const { return min_distance_; }
  const std::vector<BinaryRow>& rows() const { return rows_; }

 private:
  BinaryConstantWeightCode() = default;

  std::size_t length_ = 0;
  std::size_t weight_ = 0;
  std::optional<std::size_t> min_distance_;
  std::vector<BinaryRow> rows_;
};

std::size_t hamming_weight(const BinaryRow& a);
std::size_t hamming_distance(const BinaryRow& a, const BinaryRow& b);
// Weight of the coordinatewise product a*b.
std::size_t overlap(const BinaryRow& a, const BinaryRow& b);

// Incidence vector over the nonzero ambient vectors, ordered by
// encode_vector().
BinaryRow incidence_vector(const Subspace& x);

// Encodings of the monic representatives (first nonzero coordinate 1) of the
// projective points of GF(q)^n, ascending.
std::vector<std::uint64_t> projective_point_codes(const FieldSpec& field, unsigned n);

// Incidence vector over projective points, ordered as projective_point_codes().
BinaryRow punctured_incidence_vector(const Subspace& x);

// Parameters are verified against N = q^n - 1, w = q^l - 1 and
// d = 2(q^l - q^(l-delta)); ConstructionVerificationFailed otherwise.
BinaryConstantWeightCode derived_cwc(const ConstantDimensionCode& code);

// Length (q^n-1)/(q-1), weight (q^l-1)/(q-1), distance 2(q^l-q^(l-delta))/(q-1),
// and the derived code is checked to be its (q-1)-fold column replication.
BinaryConstantWeightCode punctured_cwc(const ConstantDimensionCode& code);

// Column v of `derived` equals column [v] of `punctured` for every nonzero
// ambient vector v.
bool is_column_replication(const BinaryConstantWeightCode& derived,
                           const BinaryConstantWeightCode& punctured, const FieldSpec& field,
                           unsigned n);

// Header "N M w d" (d = 0 when M < 2) followed by one 0/1 line per row.
std::string to_cwc_text(const BinaryConstantWeightCode& cwc);
// Throws ParseError on malformed input or a header that disagrees with the rows.
BinaryConstantWeightCode parse_cwc_text(const std::string& text);

}  // namespace cdc
