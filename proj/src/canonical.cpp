#include "gentle/canonical.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <tuple>

#include "gentle/io.hpp"

namespace gentle {

namespace {

// Edge kinds: 0 vertex -> arrow (source), 1 arrow -> vertex (target),
// 2 arrow -> arrow (relation).
struct Graph {
  std::size_t                                           vertex_count = 0;
  std::size_t                                           node_count   = 0;
  std::vector<std::vector<std::pair<int, std::size_t>>> out;
  std::vector<std::vector<std::pair<int, std::size_t>>> in;
};

Graph build_graph(BoundQuiver const& q) {
  Graph g;
  g.vertex_count = q.vertex_count();
  g.node_count   = q.vertex_count() + q.arrow_count();
  g.out.resize(g.node_count);
  g.in.resize(g.node_count);
  auto edge = [&](int kind, std::size_t x, std::size_t y) {
    g.out[x].push_back({kind, y});
    g.in[y].push_back({kind, x});
  };
  std::size_t const base = q.vertex_count();
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    edge(0, q.source(a), base + a);
    edge(1, base + a, q.target(a));
  }
  for (auto [a, b] : q.relations()) {
    edge(2, base + a, base + b);
  }
  return g;
}

using Colouring = std::vector<std::size_t>;

std::size_t distinct(Colouring const& c) {
  Colouring s = c;
  std::sort(s.begin(), s.end());
  return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
}

// Refine to the coarsest equitable colouring; colours are ranks of
// signatures, so the result depends only on the isomorphism type.
void refine(Graph const& g, Colouring& colour) {
  using Signature =
      std::tuple<std::size_t, std::vector<std::pair<int, std::size_t>>,
                 std::vector<std::pair<int, std::size_t>>>;
  std::size_t classes = distinct(colour);
  while (true) {
    std::vector<Signature> sig(g.node_count);
    for (std::size_t v = 0; v < g.node_count; ++v) {
      auto& [own, outs, ins] = sig[v];
      own = colour[v];
      for (auto [k, w] : g.out[v]) {
        outs.emplace_back(k, colour[w]);
      }
      for (auto [k, w] : g.in[v]) {
        ins.emplace_back(k, colour[w]);
      }
      std::sort(outs.begin(), outs.end());
      std::sort(ins.begin(), ins.end());
    }
    std::vector<Signature> order = sig;
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    for (std::size_t v = 0; v < g.node_count; ++v) {
      colour[v] = static_cast<std::size_t>(
          std::lower_bound(order.begin(), order.end(), sig[v]) - order.begin());
    }
    if (order.size() == classes) {
      return;
    }
    classes = order.size();
  }
}

std::string certificate(Graph const& g, Colouring const& colour) {
  std::string out = std::to_string(g.vertex_count) + ";"
                    + std::to_string(g.node_count - g.vertex_count) + ";";
  std::vector<std::tuple<int, std::size_t, std::size_t>> edges;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    for (auto [k, w] : g.out[v]) {
      edges.emplace_back(k, colour[v], colour[w]);
    }
  }
  std::sort(edges.begin(), edges.end());
  for (auto const& [k, x, y] : edges) {
    out += std::to_string(k) + ":" + std::to_string(x) + ">" + std::to_string(y)
           + ",";
  }
  return out;
}

void search(Graph const& g, Colouring colour, std::optional<std::string>& best) {
  refine(g, colour);
  // First smallest non-singleton cell.
  std::map<std::size_t, std::vector<std::size_t>> cells;
  for (std::size_t v = 0; v < g.node_count; ++v) {
    cells[colour[v]].push_back(v);
  }
  std::vector<std::size_t> const* target = nullptr;
  for (auto const& [c, members] : cells) {
    if (members.size() > 1
        && (target == nullptr || members.size() < target->size())) {
      target = &members;
    }
  }
  if (target == nullptr) {
    std::string cert = certificate(g, colour);
    if (!best || cert < *best) {
      best = std::move(cert);
    }
    return;
  }
  for (std::size_t v : *target) {
    Colouring next = colour;
    for (auto& c : next) {
      c *= 2;
    }
    next[v] -= 1;
    search(g, std::move(next), best);
  }
}

std::string connected_form(BoundQuiver const& q) {
  Graph     g = build_graph(q);
  Colouring colour(g.node_count, 1);
  for (std::size_t v = 0; v < g.vertex_count; ++v) {
    colour[v] = 0;
  }
  std::optional<std::string> best;
  search(g, std::move(colour), best);
  return best.value_or(std::string{});
}

}  // namespace

std::string canonical_form(BoundQuiver const& q) {
  std::vector<std::string> parts;
  for (auto const& c : connected_components(q)) {
    parts.push_back(connected_form(c));
  }
  std::sort(parts.begin(), parts.end());
  std::string out;
  for (auto const& p : parts) {
    out += "[" + p + "]";
  }
  return out;
}

std::string canonical_digest(BoundQuiver const& q) {
  return fnv1a_hex(canonical_form(q));
}

bool isomorphic(BoundQuiver const& a, BoundQuiver const& b) {
  return a.vertex_count() == b.vertex_count()
         && a.arrow_count() == b.arrow_count()
         && a.relation_count() == b.relation_count()
         && canonical_form(a) == canonical_form(b);
}

}  // namespace gentle
