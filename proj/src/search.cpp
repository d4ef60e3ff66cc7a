#include "cdc/search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <string>

#include "cdc/error.hpp"
#include "cdc/steiner.hpp"

namespace cdc {

namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}

  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  void reset(std::size_t i) { words_[i / 64] &= ~(std::uint64_t{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1; }

  bool any() const {
    for (const auto w : words_) {
      if (w) return true;
    }
    return false;
  }

  std::size_t count() const {
    std::size_t c = 0;
    for (const auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  // Index of the lowest set bit at or after `from`, or npos.
  std::size_t find_next(std::size_t from) const {
    std::size_t wi = from / 64;
    if (wi >= words_.size()) return npos;
    std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (from % 64));
    while (true) {
      if (w) return wi * 64 + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return npos;
      w = words_[wi];
    }
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }

  void and_not(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
  }

  static constexpr std::size_t npos = ~std::size_t{0};

 private:
  std::vector<std::uint64_t> words_;
};

class CliqueSearch {
 public:
  explicit CliqueSearch(std::vector<Bitset> adjacency)
      : adj_(std::move(adjacency)), size_(adj_.size()) {}

  std::uint64_t nodes() const { return nodes_; }

  // Maximum clique size, at least `lower` and capped at `upper`.
  std::size_t max_clique_size(std::size_t lower, std::size_t upper, bool through_first_vertex) {
    best_ = lower;
    upper_ = upper;
    if (best_ >= upper_ || size_ == 0) return best_;
    if (through_first_vertex) {
      Bitset p = adj_[0];
      if (!p.any()) {
        best_ = std::max<std::size_t>(best_, 1);
      } else {
        expand(1, p);
      }
    } else {
      Bitset p(size_);
      for (std::size_t v = 0; v < size_; ++v) p.set(v);
      expand(0, p);
    }
    return best_;
  }

  // Cliques of exactly `target` vertices in ascending lexicographic order;
  // stops after the first unless `all`.
  std::vector<std::vector<std::size_t>> cliques_of_size(std::size_t target, bool all) {
    target_ = target;
    all_ = all;
    found_.clear();
    std::vector<std::size_t> cur;
    Bitset p(size_);
    for (std::size_t v = 0; v < size_; ++v) p.set(v);
    lex_dfs(cur, p);
    return found_;
  }

 private:
  // Greedy sequential coloring in ascending vertex order; returns the
  // vertices grouped by color and each vertex's color number (1-based).
  void color_sort(const Bitset& p, std::vector<std::size_t>& order, std::vector<std::size_t>& colors) const {
    order.clear();
    colors.clear();
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.find_next(0); v != Bitset::npos; v = q.find_next(v + 1)) {
        uncolored.reset(v);
        q.and_not(adj_[v]);
        order.push_back(v);
        colors.push_back(color);
      }
    }
  }

  std::size_t color_bound(const Bitset& p) const {
    Bitset uncolored = p;
    std::size_t color = 0;
    while (uncolored.any()) {
      ++color;
      Bitset q = uncolored;
      for (std::size_t v = q.find_next(0); v != Bitset::npos; v = q.find_next(v + 1)) {
        uncolored.reset(v);
        q.and_not(adj_[v]);
      }
    }
    return color;
  }

  bool expand(std::size_t depth, Bitset p) {
    ++nodes_;
    std::vector<std::size_t> order, colors;
    color_sort(p, order, colors);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (depth + colors[i] <= best_) return false;
      const std::size_t v = order[i];
      Bitset next = p;
      next &= adj_[v];
      if (!next.any()) {
        if (depth + 1 > best_) best_ = depth + 1;
      } else if (expand(depth + 1, next)) {
        return true;
      }
      if (best_ >= upper_) return true;
      p.reset(v);
    }
    return best_ >= upper_;
  }

  bool lex_dfs(std::vector<std::size_t>& cur, Bitset p) {
    ++nodes_;
    if (cur.size() == target_) {
      found_.push_back(cur);
      return !all_;
    }
    std::size_t remaining = p.count();
    if (cur.size() + remaining < target_) return false;
    if (cur.size() + color_bound(p) < target_) return false;
    for (std::size_t v = p.find_next(0); v != Bitset::npos; v = p.find_next(v + 1)) {
      Bitset next = p;
      next &= adj_[v];
      // Only vertices after v, so every clique is produced once, in order.
      for (std::size_t u = next.find_next(0); u != Bitset::npos && u <= v; u = next.find_next(u + 1)) {
        next.reset(u);
      }
      cur.push_back(v);
      const bool stop = lex_dfs(cur, next);
      cur.pop_back();
      if (stop) return true;
      p.reset(v);
      if (cur.size() + --remaining < target_) break;
    }
    return false;
  }

  std::vector<Bitset> adj_;
  std::size_t size_;
  std::size_t best_ = 0;
  std::size_t upper_ = 0;
  std::size_t target_ = 0;
  bool all_ = false;
  std::uint64_t nodes_ = 0;
  std::vector<std::vector<std::size_t>> found_;
};

std::size_t to_size(const BigInt& v) {
  if (v > BigInt(std::numeric_limits<std::size_t>::max())) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(v);
}

}  // namespace

SearchResult brute_force_optimum(const CodeParams& params, bool enumerate_all_optima,
                                 const SearchOptions& options) {
  params.validate();
  const auto start = std::chrono::steady_clock::now();
  const auto [p, e] = prime_power_parts(params.q);
  const FieldSpec field = make_field(p, e);

  const BigInt vertex_count = gaussian_binomial(params.n, params.l, params.q);
  if (vertex_count > options.budget) {
    throw Error(ErrorKind::BudgetExceeded, "search graph would have " + vertex_count.str() +
                                               " vertices, budget is " + std::to_string(options.budget));
  }
  const auto vertices = enumerate_subspaces(field, params.n, params.l, options.budget);
  const std::size_t count = vertices.size();

  // Distance >= 2 delta  <=>  dim(X cap Y) <= l - delta.
  std::vector<Bitset> adjacency(count, Bitset(count));
  const unsigned max_meet = params.l - params.delta;
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = i + 1; j < count; ++j) {
      if (intersect_dim(vertices[i], vertices[j]) <= max_meet) {
        adjacency[i].set(j);
        adjacency[j].set(i);
      }
    }
  }

  SearchResult result{.params = params,
                      .optimum = 0,
                      .witness = new_code(field, params.n, params.l, {vertices.front()}),
                      .all_optima_steiner = std::nullopt,
                      .optima_count = std::nullopt,
                      .vertices = count,
                      .upper_bound = std::min(to_size(bound_report(params).best), count),
                      .lower_bound = 1,
                      .nodes_explored = 0,
                      .elapsed = {}};

  // A spread is a clique of size equal to the bound when n = kl, delta = l.
  if (params.delta == params.l && params.n % params.l == 0 && params.n / params.l >= 2) {
    const auto spread = construct_spread(field, params.l, params.n / params.l);
    result.lower_bound = std::max(result.lower_bound, spread.code.size());
  }

  CliqueSearch search(std::move(adjacency));
  result.optimum = search.max_clique_size(result.lower_bound, result.upper_bound, options.symmetry_reduction);

  const auto cliques = search.cliques_of_size(result.optimum, enumerate_all_optima);
  if (cliques.empty()) {
    throw Error(ErrorKind::ConstructionVerificationFailed, "no clique of the reported optimum size");
  }
  const auto to_code = [&](const std::vector<std::size_t>& clique) {
    std::vector<Subspace> words;
    words.reserve(clique.size());
    for (const auto v : clique) words.push_back(vertices[v]);
    return new_code(field, params.n, params.l, std::move(words));
  };
  result.witness = to_code(cliques.front());
  if (result.witness.size() != result.optimum ||
      (result.witness.cached_min_distance() && *result.witness.cached_min_distance() < 2 * params.delta)) {
    throw Error(ErrorKind::ConstructionVerificationFailed, "search witness failed revalidation");
  }
  if (enumerate_all_optima) {
    result.optima_count = cliques.size();
    bool all_steiner = true;
    const unsigned t = params.l - params.delta + 1;
    for (const auto& clique : cliques) {
      if (!is_steiner_structure(to_code(clique), t).is_steiner) {
        all_steiner = false;
        break;
      }
    }
    result.all_optima_steiner = all_steiner;
  }
  result.nodes_explored = search.nodes();
  result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - start);
  return result;
}

DualityCheck verify_duality(const CodeParams& params, const SearchOptions& options) {
  params.validate();
  if (params.n - params.l < params.delta) {
    throw Error(ErrorKind::RangeError, "dual orientation n - l must be at least delta");
  }
  const CodeParams dual_params{params.q, params.n, params.delta, params.n - params.l};
  DualityCheck out{brute_force_optimum(params, false, options),
                   brute_force_optimum(dual_params, false, options), false, false};
  out.optima_equal = out.primary.optimum == out.dual.optimum;

  const auto valid_for = [](const ConstantDimensionCode& code, const SearchResult& target) {
    return code.dim() == target.params.l && code.size() == target.optimum &&
           (!code.cached_min_distance() || *code.cached_min_distance() >= 2 * target.params.delta);
  };
  out.witnesses_map = valid_for(dual_code(out.primary.witness), out.dual) &&
                      valid_for(dual_code(out.dual.witness), out.primary);
  return out;
}

}  // namespace cdc
