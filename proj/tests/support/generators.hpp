// Random m-branched quivers and independent oracles shared by the tests.

#ifndef GENTLE_TESTS_GENERATORS_HPP_
#define GENTLE_TESTS_GENERATORS_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/cartan.hpp"
#include "gentle/field.hpp"
#include "gentle/mutation.hpp"
#include "gentle/quiver.hpp"

namespace gentle::testing {

// Cactus of oriented (m+2)-cycles with full relations and single arrows, glued
// tree-like at vertices, with a random gentle relation pattern at each vertex.
// Every output is connected, gentle and m-branched by construction.
inline BoundQuiver random_branched(std::mt19937_64& rng, unsigned m,
                                   std::size_t max_vertices) {
  auto pick = [&](std::size_t n) {
    return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng);
  };
  std::size_t const target = 1 + pick(max_vertices);

  std::vector<std::string>           vertices{"v0"};
  std::vector<std::size_t>           indeg{0}, outdeg{0};
  std::vector<Arrow>                 arrows;
  std::vector<int>                   cycle_of;  // per arrow, -1 off cycle
  std::set<std::pair<std::size_t, std::size_t>> forced;  // arrow index pairs
  int                                cycles = 0;

  auto new_vertex = [&] {
    vertices.push_back("v" + std::to_string(vertices.size()));
    indeg.push_back(0);
    outdeg.push_back(0);
    return vertices.size() - 1;
  };
  auto add_arrow = [&](std::size_t s, std::size_t t, int cycle) {
    arrows.push_back({"a" + std::to_string(arrows.size()), vertices[s], vertices[t]});
    cycle_of.push_back(cycle);
    ++outdeg[s];
    ++indeg[t];
  };

  for (int attempts = 0; vertices.size() < target && attempts < 200; ++attempts) {
    std::size_t const v = pick(vertices.size());
    bool const cycle_fits = vertices.size() + m + 1 <= target;
    if (cycle_fits && pick(5) < 2) {
      if (indeg[v] >= 2 || outdeg[v] >= 2) {
        continue;
      }
      std::size_t const first = arrows.size();
      std::size_t       prev = v;
      for (unsigned k = 0; k <= m; ++k) {
        std::size_t w = new_vertex();
        add_arrow(prev, w, cycles);
        prev = w;
      }
      add_arrow(prev, v, cycles);
      for (std::size_t k = 0; k < m + 2; ++k) {
        forced.insert({first + k, first + (k + 1) % (m + 2)});
      }
      ++cycles;
    } else if (pick(2) == 0) {
      if (outdeg[v] >= 2) continue;
      add_arrow(v, new_vertex(), -1);
    } else {
      if (indeg[v] >= 2) continue;
      std::size_t w = new_vertex();
      add_arrow(w, v, -1);
    }
  }

  // Local relation pattern per vertex, subject to the gentle conditions.
  std::vector<Relation> relations;
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    std::vector<std::size_t> ins, outs;
    for (std::size_t a = 0; a < arrows.size(); ++a) {
      if (arrows[a].target == vertices[v]) ins.push_back(a);
      if (arrows[a].source == vertices[v]) outs.push_back(a);
    }
    std::vector<std::pair<std::size_t, std::size_t>> cells;
    for (auto i : ins)
      for (auto o : outs) cells.emplace_back(i, o);
    std::vector<unsigned> valid;
    for (unsigned mask = 0; mask < (1U << cells.size()); ++mask) {
      bool ok = true;
      std::map<std::size_t, int> in_rel, in_free, out_rel, out_free;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        bool const rel = (mask >> c) & 1U;
        if (forced.count(cells[c]) && !rel) ok = false;
        (rel ? in_rel : in_free)[cells[c].first]++;
        (rel ? out_rel : out_free)[cells[c].second]++;
      }
      for (auto const* mp : {&in_rel, &in_free, &out_rel, &out_free})
        for (auto const& [k, n] : *mp)
          if (n > 1) ok = false;
      if (ok) valid.push_back(mask);
    }
    unsigned const mask = valid[pick(valid.size())];
    for (std::size_t c = 0; c < cells.size(); ++c) {
      if ((mask >> c) & 1U) {
        relations.push_back({arrows[cells[c].first].name, arrows[cells[c].second].name});
      }
    }
  }
  return BoundQuiver(vertices, arrows, relations, "random");
}

// Applies up to `length` random admissible tilts or cotilts.
inline std::vector<BoundQuiver> random_chain(std::mt19937_64& rng,
                                             BoundQuiver const& q,
                                             std::size_t length) {
  std::vector<BoundQuiver> chain{q};
  for (std::size_t i = 0; i < length; ++i) {
    BoundQuiver const& cur = chain.back();
    std::vector<std::pair<VertexId, bool>> options;
    for (VertexId v : admissible_vertices(cur)) options.emplace_back(v, false);
    for (VertexId v : admissible_vertices(opposite(cur))) options.emplace_back(v, true);
    if (options.empty()) break;
    auto [v, co] = options[std::uniform_int_distribution<std::size_t>(
        0, options.size() - 1)(rng)];
    std::string const name = cur.vertex_name(v);
    chain.push_back(co ? comutate(cur, name).first : mutate(cur, name).first);
  }
  return chain;
}

// Cartan matrix by enumerating arrow words directly.
inline std::vector<std::vector<long>> brute_force_cartan(BoundQuiver const& q) {
  std::size_t const n = q.vertex_count();
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (std::size_t v = 0; v < n; ++v) c[v][v] = 1;
  std::vector<std::vector<ArrowId>> layer;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) layer.push_back({a});
  for (std::size_t len = 1; !layer.empty(); ++len) {
    if (len > q.arrow_count() + 1) throw std::runtime_error("unbounded paths");
    std::vector<std::vector<ArrowId>> next;
    for (auto const& w : layer) {
      ++c[q.source(w.front())][q.target(w.back())];
      for (ArrowId b = 0; b < q.arrow_count(); ++b) {
        if (q.source(b) == q.target(w.back()) && !q.is_relation(w.back(), b)) {
          auto longer = w;
          longer.push_back(b);
          next.push_back(std::move(longer));
        }
      }
    }
    layer = std::move(next);
  }
  return c;
}

// Determinant by exact rational Gaussian elimination.
inline BigInt rational_determinant(std::vector<std::vector<long>> const& m) {
  std::size_t const n = m.size();
  std::vector<std::vector<Scalar>> a(n);
  for (std::size_t i = 0; i < n; ++i) a[i].assign(m[i].begin(), m[i].end());
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && a[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(a[p], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      Scalar f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
    }
  }
  return boost::multiprecision::numerator(det);
}

// Random prime in [2^30, 2^31).
inline std::uint64_t random_large_prime(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(std::uint64_t{1} << 30,
                                                    (std::uint64_t{1} << 31) - 1);
  while (true) {
    std::uint64_t p = dist(rng) | 1U;
    if (is_prime(p)) return p;
  }
}

}  // namespace gentle::testing

#endif  // GENTLE_TESTS_GENERATORS_HPP_
