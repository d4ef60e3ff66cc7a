#include "cdc/subspace.hpp"

#include <algorithm>
#include <string>

#include "cdc/bounds.hpp"
#include "cdc/error.hpp"

namespace cdc {

namespace {

void require_compatible(const Subspace& a, const Subspace& b) {
  if (!(a.field() == b.field()) || a.ambient() != b.ambient()) {
    throw Error(ErrorKind::AmbientMismatch, "subspaces live in different ambient spaces");
  }
}

Subspace stacked(const Subspace& a, const Subspace& b) {
  auto rows = a.rows();
  auto more = b.rows();
  rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  return subspace_from_rows(a.field(), a.ambient(), rows);
}

}  // namespace

Subspace::Subspace(FieldSpec field, unsigned n) : field_(std::move(field)), n_(n) {}

std::vector<Vector> Subspace::rows() const {
  std::vector<Vector> out;
  out.reserve(dim());
  for (unsigned i = 0; i < dim(); ++i) {
    const auto r = row(i);
    out.emplace_back(r.begin(), r.end());
  }
  return out;
}

bool Subspace::contains(std::span<const Elem> v) const {
  if (v.size() != n_) throw Error(ErrorKind::LengthMismatch, "vector length differs from ambient dimension");
  Vector r(v.begin(), v.end());
  for (unsigned i = 0; i < dim(); ++i) {
    const Elem f = r[pivots_[i]];
    if (f == 0) continue;
    const auto b = row(i);
    for (unsigned j = pivots_[i]; j < n_; ++j) r[j] = field_.sub(r[j], field_.mul(f, b[j]));
  }
  return std::all_of(r.begin(), r.end(), [](Elem x) { return x == 0; });
}

std::strong_ordering operator<=>(const Subspace& a, const Subspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = a.dim() <=> b.dim(); c != 0) return c;
  if (auto c = a.pivots_ <=> b.pivots_; c != 0) return c;
  return a.matrix_ <=> b.matrix_;
}

bool operator==(const Subspace& a, const Subspace& b) {
  return a.n_ == b.n_ && a.pivots_ == b.pivots_ && a.matrix_ == b.matrix_ && a.field_ == b.field_;
}

std::size_t Subspace::hash() const {
  std::size_t h = std::hash<unsigned>{}(n_) ^ (static_cast<std::size_t>(dim()) << 20);
  for (const Elem x : matrix_) h = h * 1099511628211ULL ^ std::hash<Elem>{}(x);
  return h;
}

std::vector<unsigned> row_reduce(const FieldSpec& field, std::vector<Elem>& m, unsigned rows,
                                 unsigned cols) {
  std::vector<unsigned> pivots;
  unsigned r = 0;
  for (unsigned c = 0; c < cols && r < rows; ++c) {
    unsigned sel = r;
    while (sel < rows && m[static_cast<std::size_t>(sel) * cols + c] == 0) ++sel;
    if (sel == rows) continue;
    if (sel != r) {
      std::swap_ranges(m.begin() + static_cast<std::ptrdiff_t>(sel) * cols,
                       m.begin() + static_cast<std::ptrdiff_t>(sel + 1) * cols,
                       m.begin() + static_cast<std::ptrdiff_t>(r) * cols);
    }
    Elem* pr = m.data() + static_cast<std::size_t>(r) * cols;
    const Elem s = field.inv(pr[c]);
    for (unsigned j = c; j < cols; ++j) pr[j] = field.mul(pr[j], s);
    for (unsigned i = 0; i < rows; ++i) {
      if (i == r) continue;
      Elem* pi = m.data() + static_cast<std::size_t>(i) * cols;
      const Elem f = pi[c];
      if (f == 0) continue;
      for (unsigned j = c; j < cols; ++j) pi[j] = field.sub(pi[j], field.mul(f, pr[j]));
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

Subspace subspace_from_rows(const FieldSpec& field, unsigned n, const std::vector<Vector>& rows) {
  std::vector<Elem> m;
  m.reserve(rows.size() * n);
  for (const auto& row : rows) {
    if (row.size() != n) {
      throw Error(ErrorKind::LengthMismatch,
                  "row of length " + std::to_string(row.size()) + " in ambient dimension " + std::to_string(n));
    }
    for (const Elem x : row) {
      if (!field.contains(x)) {
        throw Error(ErrorKind::ElementNotInField, std::to_string(x) + " is not an element of " + field.describe());
      }
      m.push_back(x);
    }
  }
  auto pivots = row_reduce(field, m, static_cast<unsigned>(rows.size()), n);
  m.resize(pivots.size() * n);
  return Subspace(field, n, std::move(m), std::move(pivots));
}

Subspace full_space(const FieldSpec& field, unsigned n) {
  std::vector<unsigned> all(n);
  for (unsigned i = 0; i < n; ++i) all[i] = i;
  return coordinate_subspace(field, n, all);
}

Subspace coordinate_subspace(const FieldSpec& field, unsigned n, std::span<const unsigned> coords) {
  std::vector<Vector> rows;
  for (const unsigned c : coords) {
    if (c >= n) throw Error(ErrorKind::LengthMismatch, "coordinate index out of range");
    Vector v(n, 0);
    v[c] = 1;
    rows.push_back(std::move(v));
  }
  return subspace_from_rows(field, n, rows);
}

unsigned sum_dim(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return stacked(a, b).dim();
}

unsigned intersect_dim(const Subspace& a, const Subspace& b) {
  return a.dim() + b.dim() - sum_dim(a, b);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  return stacked(a, b);
}

Subspace intersection(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const unsigned n = a.ambient();
  const unsigned w = 2 * n;
  const unsigned rows = a.dim() + b.dim();
  std::vector<Elem> m(static_cast<std::size_t>(rows) * w, 0);
  for (unsigned i = 0; i < a.dim(); ++i) {
    const auto r = a.row(i);
    std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * w);
    std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(i) * w + n);
  }
  for (unsigned i = 0; i < b.dim(); ++i) {
    const auto r = b.row(i);
    std::copy(r.begin(), r.end(), m.begin() + static_cast<std::ptrdiff_t>(a.dim() + i) * w);
  }
  const auto pivots = row_reduce(a.field(), m, rows, w);
  std::vector<Vector> basis;
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] < n) continue;
    const auto begin = m.begin() + static_cast<std::ptrdiff_t>(i * w + n);
    basis.emplace_back(begin, begin + n);
  }
  return subspace_from_rows(a.field(), n, basis);
}

bool is_subspace_of(const Subspace& inner, const Subspace& outer) {
  require_compatible(inner, outer);
  return sum_dim(inner, outer) == outer.dim();
}

unsigned dimension_distance(const Subspace& a, const Subspace& b) {
  require_compatible(a, b);
  const unsigned s = sum_dim(a, b);
  const unsigned meet = intersection(a, b).dim();
  const unsigned via_sum = s - meet;
  const unsigned via_dims = a.dim() + b.dim() - 2 * meet;
  if (via_sum != via_dims) {
    throw Error(ErrorKind::ConstructionVerificationFailed, "dimension distance formulas disagree");
  }
  return via_sum;
}

Subspace orthogonal_complement(const Subspace& a) {
  const unsigned n = a.ambient();
  const auto& piv = a.pivots();
  std::vector<bool> is_pivot(n, false);
  for (const unsigned c : piv) is_pivot[c] = true;
  std::vector<Vector> rows;
  for (unsigned f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector v(n, 0);
    v[f] = 1;
    for (unsigned i = 0; i < a.dim(); ++i) v[piv[i]] = a.field().neg(a.row(i)[f]);
    rows.push_back(std::move(v));
  }
  return subspace_from_rows(a.field(), n, rows);
}

Subspace relative_orthogonal_complement(const Subspace& v2, const Subspace& v1) {
  require_compatible(v2, v1);
  if (!is_subspace_of(v2, v1)) {
    throw Error(ErrorKind::NotASubspaceOf, "relative complement needs V2 contained in V1");
  }
  return intersection(v1, orthogonal_complement(v2));
}

std::uint64_t encode_vector(const FieldSpec& field, std::span<const Elem> v) {
  std::uint64_t code = 0;
  for (const Elem x : v) code = code * field.order() + x;
  return code;
}

Vector decode_vector(const FieldSpec& field, unsigned n, std::uint64_t code) {
  Vector v(n, 0);
  for (unsigned i = n; i-- > 0;) {
    v[i] = code % field.order();
    code /= field.order();
  }
  return v;
}

std::vector<std::uint64_t> nonzero_vector_codes(const Subspace& a) {
  const auto& field = a.field();
  const unsigned k = a.dim();
  const unsigned n = a.ambient();
  std::vector<std::uint64_t> out;
  std::vector<Elem> coeffs(k, 0);
  Vector v(n, 0);
  while (true) {
    // Next coefficient tuple (odometer); stop after wrapping.
    unsigned i = 0;
    while (i < k && ++coeffs[i] == field.order()) {
      coeffs[i] = 0;
      ++i;
    }
    if (i == k) break;
    std::fill(v.begin(), v.end(), 0);
    for (unsigned r = 0; r < k; ++r) {
      if (coeffs[r] == 0) continue;
      const auto row = a.row(r);
      for (unsigned j = 0; j < n; ++j) v[j] = field.add(v[j], field.mul(coeffs[r], row[j]));
    }
    out.push_back(encode_vector(field, v));
  }
  std::sort(out.begin(), out.end());
  return out;
}

SubspaceEnumerator::SubspaceEnumerator(FieldSpec field, unsigned n, unsigned l, std::uint64_t budget)
    : field_(std::move(field)), n_(n), l_(l) {
  if (l > n) throw Error(ErrorKind::RangeError, "subspace dimension exceeds ambient dimension");
  const BigInt count = gaussian_binomial(n, l, field_.order());
  if (count > budget) {
    throw Error(ErrorKind::BudgetExceeded, "enumerating " + count.str() + " subspaces exceeds budget " +
                                               std::to_string(budget));
  }
  pivots_.resize(l);
  for (unsigned i = 0; i < l; ++i) pivots_[i] = i;
}

bool SubspaceEnumerator::load_pivot_set() {
  free_slots_.clear();
  std::vector<bool> is_pivot(n_, false);
  for (const unsigned c : pivots_) is_pivot[c] = true;
  for (unsigned r = 0; r < l_; ++r) {
    for (unsigned c = pivots_[r] + 1; c < n_; ++c) {
      if (!is_pivot[c]) free_slots_.emplace_back(r, c);
    }
  }
  digits_.assign(free_slots_.size(), 0);
  return true;
}

bool SubspaceEnumerator::advance_pivot_set() {
  // Next l-subset of {0..n-1} in lexicographic order.
  int i = static_cast<int>(l_) - 1;
  while (i >= 0 && pivots_[i] == n_ - l_ + static_cast<unsigned>(i)) --i;
  if (i < 0) return false;
  ++pivots_[i];
  for (unsigned j = static_cast<unsigned>(i) + 1; j < l_; ++j) pivots_[j] = pivots_[j - 1] + 1;
  return load_pivot_set();
}

Subspace SubspaceEnumerator::current() const {
  std::vector<Elem> m(static_cast<std::size_t>(l_) * n_, 0);
  for (unsigned r = 0; r < l_; ++r) m[static_cast<std::size_t>(r) * n_ + pivots_[r]] = 1;
  for (std::size_t s = 0; s < free_slots_.size(); ++s) {
    m[static_cast<std::size_t>(free_slots_[s].first) * n_ + free_slots_[s].second] = digits_[s];
  }
  return Subspace(field_, n_, std::move(m), pivots_);
}

std::optional<Subspace> SubspaceEnumerator::next() {
  if (done_) return std::nullopt;
  if (!started_) {
    started_ = true;
    load_pivot_set();
    return current();
  }
  // Last free entry varies fastest.
  std::size_t i = digits_.size();
  while (i > 0) {
    --i;
    if (++digits_[i] < field_.order()) return current();
    digits_[i] = 0;
  }
  if (!advance_pivot_set()) {
    done_ = true;
    return std::nullopt;
  }
  return current();
}

std::vector<Subspace> enumerate_subspaces(const FieldSpec& field, unsigned n, unsigned l,
                                          std::uint64_t budget) {
  SubspaceEnumerator it(field, n, l, budget);
  std::vector<Subspace> out;
  while (auto s = it.next()) out.push_back(std::move(*s));
  return out;
}

}  // namespace cdc
