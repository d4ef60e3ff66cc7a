#pragma once

// Shared helpers for the unit tests: seeded RNG and random subspaces.

#include <cstdint>
#include <random>
#include <vector>

#include "cdc/field.hpp"
#include "cdc/subspace.hpp"

namespace testsupport {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(0x5eed5eedULL);
  return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

inline cdc::Vector random_vector(const cdc::FieldSpec& f, unsigned n) {
  cdc::Vector v(n);
  for (auto& x : v) x = uniform(0, f.order() - 1);
  return v;
}

// Random row space of `rows` random vectors; dimension may come out lower.
inline cdc::Subspace random_subspace(const cdc::FieldSpec& f, unsigned n, unsigned rows) {
  std::vector<cdc::Vector> m;
  for (unsigned i = 0; i < rows; ++i) m.push_back(random_vector(f, n));
  return cdc::subspace_from_rows(f, n, m);
}

// Random subspace of exactly dimension d.
inline cdc::Subspace random_subspace_of_dim(const cdc::FieldSpec& f, unsigned n, unsigned d) {
  while (true) {
    auto s = random_subspace(f, n, d);
    if (s.dim() == d) return s;
  }
}

// Plain textbook rank over GF(p) for prime p, independent of the library.
inline unsigned rank_mod_p(std::vector<std::vector<std::uint64_t>> m, std::uint64_t p) {
  if (m.empty()) return 0;
  const std::size_t cols = m[0].size();
  unsigned r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t piv = r;
    while (piv < m.size() && m[piv][c] % p == 0) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[piv], m[r]);
    std::uint64_t inv = 1;
    for (std::uint64_t t = 1; t < p; ++t) {
      if (m[r][c] * t % p == 1) inv = t;
    }
    for (auto& x : m[r]) x = x * inv % p;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c] == 0) continue;
      const std::uint64_t f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = (m[i][j] + (p - f) * m[r][j]) % p;
    }
    ++r;
  }
  return r;
}

}  // namespace testsupport
