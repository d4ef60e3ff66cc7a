#include "doctest.h"

#include <set>
#include <unordered_set>

#include "cdc/bounds.hpp"
#include "cdc/error.hpp"
#include "cdc/subspace.hpp"
#include "support.hpp"

using namespace cdc;
using testsupport::random_subspace;
using testsupport::random_subspace_of_dim;
using testsupport::uniform;

namespace {

Vector unit(unsigned n, unsigned i) {
  Vector v(n, 0);
  v[i] = 1;
  return v;
}

Subspace span(const FieldSpec& f, unsigned n, std::vector<Vector> rows) {
  return subspace_from_rows(f, n, rows);
}

// Every vector in the row space, by running over all coefficient tuples.
std::set<Vector> all_vectors(const FieldSpec& f, unsigned n, const std::vector<Vector>& rows) {
  std::set<Vector> out;
  const std::size_t k = rows.size();
  std::vector<Elem> c(k, 0);
  while (true) {
    Vector v(n, 0);
    for (std::size_t i = 0; i < k; ++i)
      for (unsigned j = 0; j < n; ++j) v[j] = f.add(v[j], f.mul(c[i], rows[i][j]));
    out.insert(v);
    std::size_t i = 0;
    while (i < k && ++c[i] == f.order()) c[i++] = 0;
    if (i == k) break;
  }
  return out;
}

std::vector<Subspace> pool(const FieldSpec& f, unsigned n, int count) {
  std::vector<Subspace> out;
  for (int i = 0; i < count; ++i) out.push_back(random_subspace(f, n, static_cast<unsigned>(uniform(0, n))));
  return out;
}

const std::vector<std::pair<std::uint64_t, unsigned>> kPropertyFields = {{2, 1}, {3, 1}, {2, 2}, {5, 1}};

}  // namespace

TEST_CASE("row reduction examples") {
  const auto f = make_field(2, 1);
  const auto a = span(f, 4, {unit(4, 0), unit(4, 1)});
  CHECK(a.dim() == 2);
  CHECK(a.rows() == std::vector<Vector>{unit(4, 0), unit(4, 1)});

  const auto b = span(f, 3, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
  CHECK(b.dim() == 2);
  CHECK(b.rows() == std::vector<Vector>{{1, 0, 1}, {0, 1, 1}});

  const auto z = span(f, 5, {});
  CHECK(z.dim() == 0);
  CHECK(z == Subspace(f, 5));
}

TEST_CASE("subspace construction errors") {
  const auto f = make_field(3, 1);
  try {
    span(f, 3, {{1, 2}});
    FAIL("short row accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::LengthMismatch);
  }
  try {
    span(f, 2, {{1, 3}});
    FAIL("out-of-field entry accepted");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ElementNotInField);
  }
  const auto a = span(f, 2, {{1, 0}});
  const auto b = span(f, 3, {{1, 0, 0}});
  CHECK_THROWS_AS(intersect_dim(a, b), Error);
  try {
    sum(a, b);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::AmbientMismatch);
  }
}

TEST_CASE("RREF invariants hold for random inputs") {
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 100; ++i) {
      const unsigned n = static_cast<unsigned>(uniform(1, 7));
      const auto s = random_subspace(f, n, static_cast<unsigned>(uniform(0, n + 1)));
      const auto rows = s.rows();
      const auto& piv = s.pivots();
      REQUIRE(rows.size() == piv.size());
      for (std::size_t r = 0; r < rows.size(); ++r) {
        if (r) CHECK(piv[r] > piv[r - 1]);
        CHECK(rows[r][piv[r]] == 1);
        for (unsigned c = 0; c < piv[r]; ++c) CHECK(rows[r][c] == 0);
        for (std::size_t o = 0; o < rows.size(); ++o) {
          if (o != r) CHECK(rows[o][piv[r]] == 0);
        }
      }
      std::vector<std::vector<std::uint64_t>> m;
      for (const auto& r : rows) m.emplace_back(r.begin(), r.end());
      if (e == 1) CHECK(testsupport::rank_mod_p(m, p) == s.dim());
    }
  }
}

TEST_CASE("sum and intersection examples") {
  const auto f = make_field(2, 1);
  const auto a = span(f, 4, {unit(4, 0), unit(4, 1)});
  const auto b = span(f, 4, {unit(4, 2), unit(4, 3)});
  const auto c = span(f, 4, {unit(4, 1), unit(4, 2)});
  CHECK(sum_dim(a, a) == 2);
  CHECK(intersect_dim(a, a) == 2);
  CHECK(sum_dim(a, b) == 4);
  CHECK(intersect_dim(a, b) == 0);
  CHECK(sum_dim(a, c) == 3);
  CHECK(intersect_dim(a, c) == 1);
  CHECK(intersection(a, c) == span(f, 4, {unit(4, 1)}));
  CHECK(dimension_distance(a, a) == 0);
  CHECK(dimension_distance(a, c) == 2);
  CHECK(dimension_distance(a, b) == 4);
}

TEST_CASE("intersection matches vector-set intersection") {
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    const unsigned n = f.order() == 2 ? 5 : 3;
    for (int i = 0; i < 60; ++i) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto va = all_vectors(f, n, a.rows());
      const auto vb = all_vectors(f, n, b.rows());
      std::set<Vector> both;
      for (const auto& v : va) {
        if (vb.count(v)) both.insert(v);
      }
      const auto meet = intersection(a, b);
      CHECK(all_vectors(f, n, meet.rows()) == both);
      std::uint64_t expect = 1;
      for (unsigned k = 0; k < meet.dim(); ++k) expect *= f.order();
      CHECK(both.size() == expect);
      for (const auto& v : va) CHECK(a.contains(v));
      CHECK(is_subspace_of(meet, a));
      CHECK(is_subspace_of(a, sum(a, b)));
    }
  }
}

TEST_CASE("property: dimension distance is a metric") {
  int cases = 0;
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 80; ++i, ++cases) {
      const unsigned n = static_cast<unsigned>(uniform(2, 6));
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto c = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const unsigned ab = dimension_distance(a, b);
      CHECK((ab == 0) == (a == b));
      CHECK(dimension_distance(a, a) == 0);
      CHECK(ab == dimension_distance(b, a));
      CHECK(dimension_distance(a, c) <= ab + dimension_distance(b, c));
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("property: the two distance formulas agree") {
  int cases = 0;
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 80; ++i, ++cases) {
      const unsigned n = static_cast<unsigned>(uniform(1, 7));
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const unsigned meet = intersection(a, b).dim();
      const unsigned join = sum(a, b).dim();
      CHECK(join - meet == a.dim() + b.dim() - 2 * meet);
      CHECK(dimension_distance(a, b) == join - meet);
      CHECK(intersect_dim(a, b) == meet);
      CHECK(sum_dim(a, b) == join);
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("property: RREF is invariant under invertible row operations") {
  int cases = 0;
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 80; ++i, ++cases) {
      const unsigned n = static_cast<unsigned>(uniform(1, 7));
      const unsigned k = static_cast<unsigned>(uniform(1, n + 1));
      std::vector<Vector> m;
      for (unsigned r = 0; r < k; ++r) m.push_back(testsupport::random_vector(f, n));
      // Random invertible k x k matrix U: retry until its rows are independent.
      std::vector<Vector> u;
      do {
        u.clear();
        for (unsigned r = 0; r < k; ++r) u.push_back(testsupport::random_vector(f, k));
      } while (subspace_from_rows(f, k, u).dim() != k);
      std::vector<Vector> um(k, Vector(n, 0));
      for (unsigned r = 0; r < k; ++r)
        for (unsigned s = 0; s < k; ++s)
          for (unsigned c = 0; c < n; ++c) um[r][c] = f.add(um[r][c], f.mul(u[r][s], m[s][c]));
      const auto a = subspace_from_rows(f, n, m);
      const auto b = subspace_from_rows(f, n, um);
      CHECK(a == b);
      CHECK(a.hash() == b.hash());
      CHECK((a <=> b) == std::strong_ordering::equal);
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("orthogonal complement examples") {
  const auto f = make_field(2, 1);
  CHECK(orthogonal_complement(Subspace(f, 4)) == full_space(f, 4));
  CHECK(orthogonal_complement(span(f, 4, {unit(4, 0), unit(4, 1)})) == span(f, 4, {unit(4, 2), unit(4, 3)}));
  const auto diag = span(f, 2, {{1, 1}});
  CHECK(orthogonal_complement(diag) == diag);
}

TEST_CASE("relative orthogonal complement examples") {
  const auto f = make_field(2, 1);
  const auto v1 = span(f, 4, {unit(4, 0), unit(4, 1)});
  CHECK(relative_orthogonal_complement(Subspace(f, 4), v1) == v1);
  CHECK(relative_orthogonal_complement(span(f, 4, {unit(4, 0)}), v1) == span(f, 4, {unit(4, 1)}));

  const auto w2 = span(f, 2, {{1, 1}});
  const auto w1 = span(f, 2, {{1, 1}, {1, 0}});
  const auto rel = relative_orthogonal_complement(w2, w1);
  CHECK(rel == w2);
  CHECK(rel.dim() == w1.dim() - w2.dim());

  try {
    relative_orthogonal_complement(span(f, 4, {unit(4, 3)}), v1);
    FAIL("V2 outside V1 accepted");
  } catch (const Error& err) {
    CHECK(err.kind() == ErrorKind::NotASubspaceOf);
  }
}

TEST_CASE("property: complements") {
  int cases = 0;
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (int i = 0; i < 80; ++i, ++cases) {
      const unsigned n = static_cast<unsigned>(uniform(1, 7));
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto ap = orthogonal_complement(a);
      const auto bp = orthogonal_complement(b);
      CHECK(ap.dim() == n - a.dim());
      CHECK(orthogonal_complement(ap) == a);
      CHECK(dimension_distance(ap, bp) == dimension_distance(a, b));
      CHECK(intersection(ap, bp) == orthogonal_complement(sum(a, b)));
      // Every basis vector of A-perp is orthogonal to every basis vector of A.
      for (const auto& x : ap.rows())
        for (const auto& y : a.rows()) {
          Elem dot = 0;
          for (unsigned j = 0; j < n; ++j) dot = f.add(dot, f.mul(x[j], y[j]));
          CHECK(dot == 0);
        }
      // Relative complement dimension window.
      const auto inner = intersection(a, b);
      const auto rel = relative_orthogonal_complement(inner, a);
      CHECK(rel.dim() + inner.dim() >= a.dim());
      CHECK(rel.dim() <= a.dim());
      CHECK(is_subspace_of(rel, a));
    }
  }
  CHECK(cases >= 200);
}

TEST_CASE("vector encoding") {
  const auto f = make_field(3, 1);
  CHECK(encode_vector(f, Vector{1, 0, 0}) == 9);
  CHECK(encode_vector(f, Vector{0, 2, 1}) == 7);
  for (std::uint64_t c = 0; c < 27; ++c) CHECK(encode_vector(f, decode_vector(f, 3, c)) == c);
  const auto s = span(f, 3, {{1, 0, 0}});
  CHECK(nonzero_vector_codes(s) == std::vector<std::uint64_t>{9, 18});
}

TEST_CASE("enumeration examples") {
  const auto f2 = make_field(2, 1);
  CHECK(enumerate_subspaces(f2, 4, 2).size() == 35);
  CHECK(enumerate_subspaces(f2, 3, 1).size() == 7);
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (unsigned n = 1; n <= 4; ++n) {
      const auto all = enumerate_subspaces(f, n, n);
      REQUIRE(all.size() == 1);
      CHECK(all.front() == full_space(f, n));
    }
  }
  const auto first = enumerate_subspaces(f2, 4, 2).front();
  const unsigned first_two[] = {0, 1};
  CHECK(first == coordinate_subspace(f2, 4, first_two));
}

TEST_CASE("enumeration counts match independent span closure") {
  // 2-dim subspaces of GF(2)^4 as XOR-closed sets {0,a,b,a^b}.
  std::set<std::set<unsigned>> planes;
  for (unsigned a = 1; a < 16; ++a)
    for (unsigned b = 1; b < 16; ++b)
      if (a != b) planes.insert({0u, a, b, a ^ b});
  CHECK(planes.size() == 35);

  // 2-dim subspaces of GF(3)^3, via coefficient closure on raw vectors.
  const auto f3 = make_field(3, 1);
  std::set<std::set<Vector>> planes3;
  for (std::uint64_t a = 1; a < 27; ++a)
    for (std::uint64_t b = 1; b < 27; ++b) {
      const auto va = decode_vector(f3, 3, a), vb = decode_vector(f3, 3, b);
      const auto closure = all_vectors(f3, 3, {va, vb});
      if (closure.size() == 9) planes3.insert(closure);
    }
  CHECK(planes3.size() == enumerate_subspaces(f3, 3, 2).size());
  CHECK(planes3.size() == 13);
}

TEST_CASE("enumeration is strictly increasing and complete") {
  for (auto [p, e] : kPropertyFields) {
    const auto f = make_field(p, e);
    for (unsigned n = 1; n <= (f.order() == 2 ? 6u : 4u); ++n) {
      for (unsigned l = 0; l <= n; ++l) {
        const auto all = enumerate_subspaces(f, n, l);
        CHECK(BigInt(all.size()) == gaussian_binomial(n, l, f.order()));
        for (std::size_t i = 0; i < all.size(); ++i) {
          CHECK(all[i].dim() == l);
          if (i) CHECK(all[i - 1] < all[i]);
        }
        std::unordered_set<Subspace> distinct(all.begin(), all.end());
        CHECK(distinct.size() == all.size());
      }
    }
  }
}

TEST_CASE("enumeration budget") {
  const auto f = make_field(2, 1);
  try {
    enumerate_subspaces(f, 8, 4, 1000);
    FAIL("budget ignored");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  SubspaceEnumerator en(f, 3, 1);
  int count = 0;
  while (en.next()) ++count;
  CHECK(count == 7);
  CHECK_FALSE(en.next().has_value());
}

TEST_CASE("random subspaces of fixed dimension") {
  const auto f = make_field(2, 2);
  for (int i = 0; i < 20; ++i) CHECK(random_subspace_of_dim(f, 5, 3).dim() == 3);
}
