#include "cdc/code.hpp"

#include <algorithm>
#include <sstream>

#include "cdc/error.hpp"

namespace cdc {

namespace {

std::uint64_t upow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

void verify(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorKind::ConstructionVerificationFailed, what);
}

// Scales v so its first nonzero coordinate is 1.
Vector monic(const FieldSpec& field, Vector v) {
  const auto it = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
  if (it == v.end()) return v;
  const Elem s = field.inv(*it);
  for (auto& x : v) x = field.mul(x, s);
  return v;
}

}  // namespace

ConstantDimensionCode new_code(const FieldSpec& field, unsigned n, unsigned l,
                               std::vector<Subspace> subspaces) {
  if (subspaces.empty()) throw Error(ErrorKind::EmptyCode, "a code needs at least one codeword");
  for (const auto& s : subspaces) {
    if (!(s.field() == field) || s.ambient() != n) {
      throw Error(ErrorKind::AmbientMismatch, "codeword is not a subspace of the code's ambient space");
    }
    if (s.dim() != l) {
      throw Error(ErrorKind::DimensionMismatch,
                  "codeword of dimension " + std::to_string(s.dim()) + " in a code of dimension " + std::to_string(l));
    }
  }
  std::sort(subspaces.begin(), subspaces.end());
  subspaces.erase(std::unique(subspaces.begin(), subspaces.end()), subspaces.end());

  ConstantDimensionCode code(field, n, l);
  code.codewords_ = std::move(subspaces);
  if (code.codewords_.size() >= 2) {
    const unsigned d = measure_min_distance(code.codewords_);
    verify(d % 2 == 0 && d >= 2 && d <= 2 * l, "minimum distance outside the even range [2, 2l]");
    code.min_distance_ = d;
  }
  return code;
}

unsigned measure_min_distance(const std::vector<Subspace>& codewords) {
  if (codewords.size() < 2) throw Error(ErrorKind::SingletonCode, "minimum distance needs two codewords");
  unsigned best = ~0U;
  for (std::size_t i = 0; i < codewords.size(); ++i) {
    for (std::size_t j = i + 1; j < codewords.size(); ++j) {
      const unsigned d = dimension_distance(codewords[i], codewords[j]);
      verify(d % 2 == 0, "odd distance between equal-dimension subspaces");
      best = std::min(best, d);
    }
  }
  return best;
}

unsigned min_distance(const ConstantDimensionCode& code) {
  if (!code.cached_min_distance()) {
    throw Error(ErrorKind::SingletonCode, "minimum distance is undefined for a single codeword");
  }
  return *code.cached_min_distance();
}

ConstantDimensionCode dual_code(const ConstantDimensionCode& code) {
  std::vector<Subspace> duals;
  duals.reserve(code.size());
  for (const auto& x : code.codewords()) duals.push_back(orthogonal_complement(x));
  return new_code(code.field(), code.ambient(), code.ambient() - code.dim(), std::move(duals));
}

std::string parameter_string(const ConstantDimensionCode& code) {
  std::ostringstream os;
  os << "(" << code.ambient() << ", " << code.size() << ", ";
  if (code.cached_min_distance()) {
    os << *code.cached_min_distance();
  } else {
    os << "-";
  }
  os << ", " << code.dim() << ")_" << code.field().order();
  return os.str();
}

std::size_t hamming_weight(const BinaryRow& a) {
  return static_cast<std::size_t>(std::count(a.begin(), a.end(), 1));
}

std::size_t hamming_distance(const BinaryRow& a, const BinaryRow& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

std::size_t overlap(const BinaryRow& a, const BinaryRow& b) {
  std::size_t d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += (a[i] & b[i]);
  return d;
}

BinaryConstantWeightCode BinaryConstantWeightCode::from_rows(std::vector<BinaryRow> rows) {
  if (rows.empty()) throw Error(ErrorKind::RangeError, "a binary code needs at least one row");
  BinaryConstantWeightCode c;
  c.length_ = rows.front().size();
  c.weight_ = hamming_weight(rows.front());
  for (const auto& r : rows) {
    if (r.size() != c.length_) throw Error(ErrorKind::RangeError, "rows differ in length");
    for (const auto bit : r) {
      if (bit > 1) throw Error(ErrorKind::RangeError, "rows must be binary");
    }
    if (hamming_weight(r) != c.weight_) throw Error(ErrorKind::RangeError, "rows differ in weight");
  }
  if (rows.size() >= 2) {
    std::size_t best = c.length_ + 1;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t j = i + 1; j < rows.size(); ++j) best = std::min(best, hamming_distance(rows[i], rows[j]));
    }
    c.min_distance_ = best;
  }
  c.rows_ = std::move(rows);
  return c;
}

BinaryRow incidence_vector(const Subspace& x) {
  const std::uint64_t total = upow(x.field().order(), x.ambient());
  BinaryRow row(total - 1, 0);
  for (const auto code : nonzero_vector_codes(x)) row[code - 1] = 1;
  return row;
}

std::vector<std::uint64_t> projective_point_codes(const FieldSpec& field, unsigned n) {
  const std::uint64_t total = upow(field.order(), n);
  std::vector<std::uint64_t> out;
  for (std::uint64_t c = 1; c < total; ++c) {
    const auto v = decode_vector(field, n, c);
    const auto first = std::find_if(v.begin(), v.end(), [](Elem x) { return x != 0; });
    if (*first == 1) out.push_back(c);
  }
  return out;
}

BinaryRow punctured_incidence_vector(const Subspace& x) {
  const auto points = projective_point_codes(x.field(), x.ambient());
  BinaryRow row(points.size(), 0);
  for (const auto code : nonzero_vector_codes(x)) {
    const auto rep = encode_vector(x.field(), monic(x.field(), decode_vector(x.field(), x.ambient(), code)));
    const auto it = std::lower_bound(points.begin(), points.end(), rep);
    row[static_cast<std::size_t>(it - points.begin())] = 1;
  }
  return row;
}

namespace {

void check_cwc_parameters(const BinaryConstantWeightCode& cwc, const ConstantDimensionCode& code,
                          std::uint64_t divisor) {
  const std::uint64_t q = code.field().order();
  const unsigned l = code.dim();
  verify(cwc.length() == (upow(q, code.ambient()) - 1) / divisor, "binary code length mismatch");
  verify(cwc.size() == code.size(), "binary code size mismatch");
  verify(cwc.weight() == (upow(q, l) - 1) / divisor, "binary code weight mismatch");
  if (code.cached_min_distance()) {
    const unsigned delta = *code.cached_min_distance() / 2;
    verify(cwc.min_distance() == 2 * (upow(q, l) - upow(q, l - delta)) / divisor,
           "binary code minimum distance mismatch");
  }
}

}  // namespace

BinaryConstantWeightCode derived_cwc(const ConstantDimensionCode& code) {
  std::vector<BinaryRow> rows;
  rows.reserve(code.size());
  for (const auto& x : code.codewords()) rows.push_back(incidence_vector(x));
  auto cwc = BinaryConstantWeightCode::from_rows(std::move(rows));
  check_cwc_parameters(cwc, code, 1);
  return cwc;
}

BinaryConstantWeightCode punctured_cwc(const ConstantDimensionCode& code) {
  std::vector<BinaryRow> rows;
  rows.reserve(code.size());
  for (const auto& x : code.codewords()) rows.push_back(punctured_incidence_vector(x));
  auto cwc = BinaryConstantWeightCode::from_rows(std::move(rows));
  check_cwc_parameters(cwc, code, code.field().order() - 1);
  verify(is_column_replication(derived_cwc(code), cwc, code.field(), code.ambient()),
         "derived code is not a column replication of the punctured code");
  return cwc;
}

bool is_column_replication(const BinaryConstantWeightCode& derived,
                           const BinaryConstantWeightCode& punctured, const FieldSpec& field,
                           unsigned n) {
  if (derived.size() != punctured.size()) return false;
  const auto points = projective_point_codes(field, n);
  if (punctured.length() != points.size() || derived.length() != upow(field.order(), n) - 1) return false;
  for (std::uint64_t c = 1; c <= derived.length(); ++c) {
    const auto rep = encode_vector(field, monic(field, decode_vector(field, n, c)));
    const auto col = static_cast<std::size_t>(std::lower_bound(points.begin(), points.end(), rep) - points.begin());
    for (std::size_t r = 0; r < derived.size(); ++r) {
      if (derived.rows()[r][c - 1] != punctured.rows()[r][col]) return false;
    }
  }
  return true;
}

std::string to_cwc_text(const BinaryConstantWeightCode& cwc) {
  std::ostringstream os;
  os << cwc.length() << ' ' << cwc.size() << ' ' << cwc.weight() << ' ' << cwc.min_distance().value_or(0) << '\n';
  for (const auto& r : cwc.rows()) {
    for (const auto bit : r) os << static_cast<char>('0' + bit);
    os << '\n';
  }
  return os.str();
}

BinaryConstantWeightCode parse_cwc_text(const std::string& text) {
  std::istringstream is(text);
  std::size_t n = 0, m = 0, w = 0, d = 0;
  if (!(is >> n >> m >> w >> d)) throw Error(ErrorKind::ParseError, "missing or malformed header line");
  std::vector<BinaryRow> rows;
  std::string line;
  while (is >> line) {
    BinaryRow r;
    r.reserve(line.size());
    for (const char ch : line) {
      if (ch != '0' && ch != '1') throw Error(ErrorKind::ParseError, "row contains a character other than 0/1");
      r.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    rows.push_back(std::move(r));
  }
  if (rows.size() != m) throw Error(ErrorKind::ParseError, "header size disagrees with row count");
  try {
    auto cwc = BinaryConstantWeightCode::from_rows(std::move(rows));
    if (cwc.length() != n || cwc.weight() != w || cwc.min_distance().value_or(0) != d) {
      throw Error(ErrorKind::ParseError, "header disagrees with parameters measured from rows");
    }
    return cwc;
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::ParseError) throw;
    throw Error(ErrorKind::ParseError, e.what());
  }
}

}  // namespace cdc
