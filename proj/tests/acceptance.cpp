// Acceptance suite: one PASS/FAIL line per criterion, exit 1 on any FAIL.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "cdc/bounds.hpp"
#include "cdc/cli.hpp"
#include "cdc/code.hpp"
#include "cdc/error.hpp"
#include "cdc/search.hpp"
#include "cdc/steiner.hpp"

using namespace cdc;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    } else if (!cond) {
      detail += "; " + what;
    }
  }
};

int failures = 0;

void criterion(int id, const std::string& name, double limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (limit_s > 0 && secs >= limit_s) {
    o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(limit_s) + " s");
  }
  if (!o.ok) ++failures;
  std::ostringstream line;
  line << (o.ok ? "PASS" : "FAIL") << "  AC" << id << "  " << name << "  (" << std::fixed << std::setprecision(3)
       << secs << " s";
  if (limit_s > 0) line << " / limit " << limit_s << " s";
  line << ")";
  if (!o.detail.empty()) line << "  " << o.detail;
  std::cout << line.str() << std::endl;
}

std::mt19937_64 gen(20240601ULL);

std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi) {
  return std::uniform_int_distribution<std::uint64_t>(lo, hi)(gen);
}

Subspace random_subspace(const FieldSpec& f, unsigned n, unsigned rows) {
  std::vector<Vector> m(rows, Vector(n));
  for (auto& r : m)
    for (auto& x : r) x = uniform(0, f.order() - 1);
  return subspace_from_rows(f, n, m);
}

Subspace random_of_dim(const FieldSpec& f, unsigned n, unsigned d) {
  while (true) {
    auto s = random_subspace(f, n, d);
    if (s.dim() == d) return s;
  }
}

std::uint64_t upow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

const std::vector<FieldSpec>& property_fields() {
  static const std::vector<FieldSpec> fields = {make_field(2, 1), make_field(3, 1), make_field(2, 2), make_field(5, 1)};
  return fields;
}

// Runs `body` `cases` times over rotating fields and random ambient sizes;
// returns the number of failing cases.
int property(int cases, const std::function<bool(const FieldSpec&, unsigned)>& body) {
  int bad = 0;
  for (int i = 0; i < cases; ++i) {
    const auto& f = property_fields()[static_cast<std::size_t>(i) % property_fields().size()];
    const unsigned n = static_cast<unsigned>(uniform(1, 6));
    if (!body(f, n)) ++bad;
  }
  return bad;
}

struct Sweep {
  long checked = 0;
  long violations = 0;
  std::string first;
};

void note(Sweep& s, bool ok, const CodeParams& p, const char* what) {
  ++s.checked;
  if (!ok) {
    if (!s.violations) s.first = std::string(what) + " at " + to_string(p);
    ++s.violations;
  }
}

}  // namespace

int main() {
  std::cout << "acceptance suite: constant dimension codes\n";

  criterion(1, "bound report at (q=2,n=6,delta=2,l=3)", 1.0, [](Outcome& o) {
    const auto r = bound_report({2, 6, 2, 3});
    o.require(r.primary.singleton == 155, "B_S = " + r.primary.singleton.str());
    o.require(r.primary.wxs.exact == BigRational(93), "B_WXS = " + to_fraction_string(r.primary.wxs.exact));
    o.require(r.primary.wxs.floor == 93, "floor B_WXS = " + r.primary.wxs.floor.str());
    o.require(r.primary.johnson_ii == 90, "Johnson II = " + r.primary.johnson_ii.str());
    o.require(!r.primary.johnson_i.has_value(), "Johnson I should not apply");
  });

  criterion(2, "ratio table n=100 l=40 delta=20", 10.0, [](Outcome& o) {
    std::ostringstream out, err;
    const int code = run_cli({"ratio", "--n", "100", "--l", "40", "--delta", "20", "--q-list", "2,3,4,5"}, out, err);
    o.require(code == 0, "exit code " + std::to_string(code));
    const std::string expect = "q=2 3.46\nq=3 1.79\nq=4 1.45\nq=5 1.32\n";
    const auto text = out.str();
    o.require(text.size() >= expect.size() && text.compare(text.size() - expect.size(), expect.size(), expect) == 0,
              "printed: " + text);
    const auto table = bound_ratio_table(100, 40, 20, {2, 3, 4, 5}, 2);
    o.require(table == std::vector<std::string>{"3.46", "1.79", "1.45", "1.32"}, "library table differs");
  });

  struct SpreadCase {
    std::uint64_t q;
    unsigned l, k;
  };
  const std::vector<SpreadCase> spreads = {{2, 2, 2}, {2, 2, 3}, {2, 3, 2}, {3, 2, 2}};
  std::vector<SpreadConstruction> built;

  criterion(3, "spread constructions verified", 30.0, [&](Outcome& o) {
    for (const auto& c : spreads) {
      const auto tag = "(" + std::to_string(c.q) + "," + std::to_string(c.l) + "," + std::to_string(c.k) + ")";
      const auto field = make_field(c.q, 1);
      auto s = construct_spread(field, c.l, c.k);  // throws on any failed postcondition
      const unsigned n = c.k * c.l;
      o.require(s.code.size() == (upow(c.q, n) - 1) / (upow(c.q, c.l) - 1), tag + " block count");
      bool trivial = true;
      for (std::size_t i = 0; i < s.blocks.size(); ++i)
        for (std::size_t j = i + 1; j < s.blocks.size(); ++j) trivial = trivial && intersect_dim(s.blocks[i], s.blocks[j]) == 0;
      o.require(trivial, tag + " blocks meet nontrivially");
      std::vector<int> hits(upow(c.q, n), 0);
      for (const auto& b : s.blocks)
        for (auto v : nonzero_vector_codes(b)) ++hits[v];
      bool partition = hits[0] == 0;
      for (std::size_t v = 1; v < hits.size(); ++v) partition = partition && hits[v] == 1;
      o.require(partition, tag + " not a partition");
      o.require(min_distance(s.code) == 2 * c.l, tag + " min distance");
      o.require(is_steiner_structure(s.code, 1).is_steiner, tag + " Steiner check at t=1");
      built.push_back(std::move(s));
    }
  });

  criterion(4, "bounds are tight on spreads", 0, [&](Outcome& o) {
    o.require(built.size() == spreads.size(), "spreads missing");
    for (const auto& s : built) {
      const CodeParams p{s.q, s.k * s.l, s.l, s.l};
      const BigInt m(s.code.size());
      o.require(wxs_bound(p).floor == m && wxs_bound(p).exact == BigRational(m), to_string(p) + " wxs");
      o.require(johnson_i_bound(p) == m, to_string(p) + " johnson_i");
      o.require(johnson_ii_bound(p) == m, to_string(p) + " johnson_ii");
    }
  });

  criterion(5, "exact optimum at (2,4,2,2) and Steiner optima", 60.0, [](Outcome& o) {
    const auto r = brute_force_optimum({2, 4, 2, 2}, true);
    o.require(r.optimum == 5, "optimum " + std::to_string(r.optimum));
    o.require(r.optimum == construct_spread(make_field(2, 1), 2, 2).code.size(), "differs from spread size");
    o.require(r.all_optima_steiner.value_or(false), "some optimum is not a Steiner structure");
    o.require(r.optima_count.value_or(0) > 0, "no optima enumerated");
  });

  criterion(6, "property suites", 0, [](Outcome& o) {
    const int N = 250;
    int bad = property(N, [](const FieldSpec& f, unsigned n) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto c = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const unsigned ab = dimension_distance(a, b);
      return ((ab == 0) == (a == b)) && ab == dimension_distance(b, a) &&
             dimension_distance(a, c) <= ab + dimension_distance(b, c);
    });
    o.require(bad == 0, "metric axioms: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const unsigned meet = intersection(a, b).dim(), join = sum(a, b).dim();
      return join - meet == a.dim() + b.dim() - 2 * meet && dimension_distance(a, b) == join - meet;
    });
    o.require(bad == 0, "distance formulas: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      const unsigned k = static_cast<unsigned>(uniform(1, n));
      std::vector<Vector> m(k, Vector(n));
      for (auto& r : m)
        for (auto& x : r) x = uniform(0, f.order() - 1);
      std::vector<Vector> u;
      do {
        u.assign(k, Vector(k));
        for (auto& r : u)
          for (auto& x : r) x = uniform(0, f.order() - 1);
      } while (subspace_from_rows(f, k, u).dim() != k);
      std::vector<Vector> um(k, Vector(n, 0));
      for (unsigned r = 0; r < k; ++r)
        for (unsigned s = 0; s < k; ++s)
          for (unsigned c = 0; c < n; ++c) um[r][c] = f.add(um[r][c], f.mul(u[r][s], m[s][c]));
      return subspace_from_rows(f, n, m) == subspace_from_rows(f, n, um);
    });
    o.require(bad == 0, "RREF canonicality: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      return dimension_distance(orthogonal_complement(a), orthogonal_complement(b)) == dimension_distance(a, b);
    });
    o.require(bad == 0, "complement distance: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto ap = orthogonal_complement(a);
      return orthogonal_complement(ap) == a && ap.dim() == n - a.dim();
    });
    o.require(bad == 0, "double complement: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      const auto a = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      const auto b = random_subspace(f, n, static_cast<unsigned>(uniform(0, n)));
      return intersection(orthogonal_complement(a), orthogonal_complement(b)) == orthogonal_complement(sum(a, b));
    });
    o.require(bad == 0, "complement of sum: " + std::to_string(bad) + " failures");

    bad = property(N, [](const FieldSpec& f, unsigned n) {
      if (upow(f.order(), n) > 1024) n = 3;
      const unsigned l = static_cast<unsigned>(uniform(1, n));
      const auto x = random_of_dim(f, n, l), y = random_of_dim(f, n, l);
      const auto vx = incidence_vector(x), vy = incidence_vector(y);
      const unsigned k = intersect_dim(x, y);
      const std::uint64_t q = f.order();
      return overlap(vx, vy) == upow(q, k) - 1 && hamming_distance(vx, vy) == 2 * (upow(q, l) - upow(q, k));
    });
    o.require(bad == 0, "incidence identities: " + std::to_string(bad) + " failures");

    const auto f3 = make_field(3, 1);
    int rep_bad = 0;
    const auto spread3 = construct_spread(f3, 2, 2).code;
    if (!is_column_replication(derived_cwc(spread3), punctured_cwc(spread3), f3, 4)) ++rep_bad;
    for (int i = 0; i < N; ++i) {
      const unsigned n = static_cast<unsigned>(uniform(2, 4));
      const unsigned l = static_cast<unsigned>(uniform(1, n - 1));
      std::vector<Subspace> words;
      for (std::uint64_t j = uniform(1, 6); j > 0; --j) words.push_back(random_of_dim(f3, n, l));
      const auto code = new_code(f3, n, l, words);
      std::vector<BinaryRow> d, p;
      for (const auto& x : code.codewords()) {
        d.push_back(incidence_vector(x));
        p.push_back(punctured_incidence_vector(x));
      }
      if (!is_column_replication(BinaryConstantWeightCode::from_rows(d), BinaryConstantWeightCode::from_rows(p), f3, n)) ++rep_bad;
    }
    o.require(rep_bad == 0, "column replication at q=3: " + std::to_string(rep_bad) + " failures");
  });

  criterion(7, "comparison sweep q<=5, n<=14", 30.0, [](Outcome& o) {
    Sweep s;
    for (std::uint64_t q = 2; q <= 5; ++q)
      for (unsigned n = 2; n <= 14; ++n)
        for (unsigned l = 1; l <= n; ++l)
          for (unsigned d = 1; d <= l; ++d) {
            const CodeParams p{q, n, d, l};
            const BigRational bs(singleton_bound(p));
            const BigRational bw = wxs_bound(p).exact;
            if (d == 1 || l == n) {
              note(s, bs == bw, p, "B_S != B_WXS in the equality case");
              continue;
            }
            const BigRational mid(4 * ipow(q, (l - d + 1) * (n - l)));
            note(s, bw < bs, p, "B_WXS < B_S");
            note(s, bs < mid, p, "B_S < 4q^((l-d+1)(n-l))");
            note(s, mid < 4 * bw, p, "4q^(..) < 4 B_WXS");
          }
    o.require(s.violations == 0, std::to_string(s.violations) + " violations, first: " + s.first);
    o.require(s.checked > 1000, "sweep too small");
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s.checked) + " comparisons";
  });

  criterion(8, "johnson II <= floor WXS over the sweep", 0, [](Outcome& o) {
    Sweep s;
    for (std::uint64_t q = 2; q <= 5; ++q)
      for (unsigned n = 2; n <= 14; ++n)
        for (unsigned l = 2; l < n; ++l)
          for (unsigned d = 2; d <= l; ++d) {
            const CodeParams p{q, n, d, l};
            note(s, johnson_ii_bound(p) <= wxs_bound(p).floor, p, "johnson_ii > floor(wxs)");
          }
    o.require(s.violations == 0, std::to_string(s.violations) + " violations, first: " + s.first);
    o.detail += (o.detail.empty() ? "" : "; ") + std::to_string(s.checked) + " parameter sets";
  });

  criterion(9, "duality (2,5,2,2)<->(2,5,2,3) and (2,4,1,1)<->(2,4,1,3)", 120.0, [](Outcome& o) {
    for (const CodeParams p : {CodeParams{2, 5, 2, 2}, CodeParams{2, 4, 1, 1}}) {
      const auto d = verify_duality(p);
      o.require(d.optima_equal, to_string(p) + ": optima " + std::to_string(d.primary.optimum) + " vs " +
                                    std::to_string(d.dual.optimum));
      o.require(d.witnesses_map, to_string(p) + ": dual witness invalid");
    }
  });

  std::cout << (failures ? "FAILED: " + std::to_string(failures) + " criteria\n" : "all criteria passed\n");
  return failures ? 1 : 0;
}
