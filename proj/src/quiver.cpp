#include "gentle/quiver.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

template <typename T>
std::size_t index_in(std::vector<T> const& sorted, T const& value) {
  auto it = std::lower_bound(sorted.begin(), sorted.end(), value);
  return static_cast<std::size_t>(it - sorted.begin());
}

// Simple cycles of a directed multigraph given as edges (from, to).  Every
// cycle is found once, from its least node.  Returns edge-id words.
struct CycleSearch {
  std::size_t                                      node_count;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::size_t                                      limit;

  std::vector<std::vector<std::size_t>> out;
  std::vector<bool>                     on_path;
  std::vector<std::size_t>              word;
  std::vector<std::vector<std::size_t>> found;
  bool                                  overflow = false;

  void run() {
    out.assign(node_count, {});
    for (std::size_t e = 0; e < edges.size(); ++e) {
      out[edges[e].first].push_back(e);
    }
    on_path.assign(node_count, false);
    for (std::size_t s = 0; s < node_count && !overflow; ++s) {
      on_path[s] = true;
      extend(s, s);
      on_path[s] = false;
    }
  }

  void extend(std::size_t start, std::size_t at) {
    for (std::size_t e : out[at]) {
      if (overflow) {
        return;
      }
      std::size_t next = edges[e].second;
      if (next < start) {
        continue;
      }
      word.push_back(e);
      if (next == start) {
        if (found.size() == limit) {
          overflow = true;
        } else {
          found.push_back(word);
        }
      } else if (!on_path[next]) {
        on_path[next] = true;
        extend(start, next);
        on_path[next] = false;
      }
      word.pop_back();
    }
  }
};

Cycle canonical_rotation(Cycle c) {
  auto least = std::min_element(c.begin(), c.end());
  std::rotate(c.begin(), least, c.end());
  return c;
}

}  // namespace

// ---------------------------------------------------------------------------
// BoundQuiver

BoundQuiver::BoundQuiver(std::vector<std::string> vertices,
                         std::vector<Arrow>       arrows,
                         std::vector<Relation>    relations,
                         std::string              name)
    : name_(std::move(name)), vertices_(std::move(vertices)) {
  std::sort(vertices_.begin(), vertices_.end());
  auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
  if (dup != vertices_.end()) {
    throw std::invalid_argument("duplicate vertex name '" + *dup + "'");
  }
  std::sort(arrows.begin(), arrows.end(), [](Arrow const& x, Arrow const& y) {
    return x.name < y.name;
  });
  for (std::size_t i = 0; i + 1 < arrows.size(); ++i) {
    if (arrows[i].name == arrows[i + 1].name) {
      throw std::invalid_argument("duplicate arrow name '" + arrows[i].name
                                  + "'");
    }
  }
  for (auto const& a : arrows) {
    for (auto const* end : {&a.source, &a.target}) {
      if (!std::binary_search(vertices_.begin(), vertices_.end(), *end)) {
        throw std::invalid_argument("arrow '" + a.name
                                    + "' has undeclared endpoint '" + *end
                                    + "'");
      }
    }
    arrow_names_.push_back(a.name);
    source_.push_back(index_in(vertices_, a.source));
    target_.push_back(index_in(vertices_, a.target));
  }

  for (auto const& r : relations) {
    auto f = find_arrow(r.first);
    auto s = find_arrow(r.second);
    if (!f || !s) {
      throw std::invalid_argument("relation '" + r.first + " " + r.second
                                  + "' names an unknown arrow");
    }
    if (target_[*f] != source_[*s]) {
      throw std::invalid_argument("relation '" + r.first + " " + r.second
                                  + "' is not composable: target of '"
                                  + r.first + "' is not the source of '"
                                  + r.second + "'");
    }
    relations_.emplace_back(*f, *s);
  }
  std::sort(relations_.begin(), relations_.end());
  auto rdup = std::adjacent_find(relations_.begin(), relations_.end());
  if (rdup != relations_.end()) {
    throw std::invalid_argument("duplicate relation '"
                                + arrow_names_[rdup->first] + " "
                                + arrow_names_[rdup->second] + "'");
  }

  out_.assign(vertices_.size(), {});
  in_.assign(vertices_.size(), {});
  for (ArrowId a = 0; a < arrow_names_.size(); ++a) {
    out_[source_[a]].push_back(a);
    in_[target_[a]].push_back(a);
  }
  rel_next_.assign(arrow_names_.size(), {});
  rel_prev_.assign(arrow_names_.size(), {});
  for (auto [a, b] : relations_) {
    rel_next_[a].push_back(b);
    rel_prev_[b].push_back(a);
  }
}

BoundQuiver BoundQuiver::renamed(std::string name) const {
  BoundQuiver copy = *this;
  copy.name_       = std::move(name);
  return copy;
}

std::optional<VertexId> BoundQuiver::find_vertex(std::string const& n) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), n);
  if (it == vertices_.end() || *it != n) {
    return std::nullopt;
  }
  return static_cast<VertexId>(it - vertices_.begin());
}

std::optional<ArrowId> BoundQuiver::find_arrow(std::string const& n) const {
  auto it = std::lower_bound(arrow_names_.begin(), arrow_names_.end(), n);
  if (it == arrow_names_.end() || *it != n) {
    return std::nullopt;
  }
  return static_cast<ArrowId>(it - arrow_names_.begin());
}

VertexId BoundQuiver::vertex(std::string const& n) const {
  if (auto v = find_vertex(n)) {
    return *v;
  }
  throw std::invalid_argument("unknown vertex '" + n + "'");
}

ArrowId BoundQuiver::arrow(std::string const& n) const {
  if (auto a = find_arrow(n)) {
    return *a;
  }
  throw std::invalid_argument("unknown arrow '" + n + "'");
}

bool BoundQuiver::is_relation(ArrowId a, ArrowId b) const {
  return std::binary_search(relations_.begin(), relations_.end(),
                            std::make_pair(a, b));
}

std::vector<ArrowId> BoundQuiver::free_successors(ArrowId a) const {
  std::vector<ArrowId> result;
  for (ArrowId b : out_[target_[a]]) {
    if (!is_relation(a, b)) {
      result.push_back(b);
    }
  }
  return result;
}

std::vector<ArrowId> BoundQuiver::free_predecessors(ArrowId a) const {
  std::vector<ArrowId> result;
  for (ArrowId c : in_[source_[a]]) {
    if (!is_relation(c, a)) {
      result.push_back(c);
    }
  }
  return result;
}

std::vector<Arrow> BoundQuiver::arrow_list() const {
  std::vector<Arrow> result;
  for (ArrowId a = 0; a < arrow_names_.size(); ++a) {
    result.push_back(
        {arrow_names_[a], vertices_[source_[a]], vertices_[target_[a]]});
  }
  return result;
}

std::vector<Relation> BoundQuiver::relation_list() const {
  std::vector<Relation> result;
  for (auto [a, b] : relations_) {
    result.push_back({arrow_names_[a], arrow_names_[b]});
  }
  return result;
}

// ---------------------------------------------------------------------------
// Paths

VertexId path_target(BoundQuiver const& q, Path const& p) {
  return p.arrows.empty() ? p.source : q.target(p.arrows.back());
}

std::optional<Path> multiply(BoundQuiver const& q,
                             Path const&        x,
                             Path const&        y) {
  if (path_target(q, x) != y.source) {
    return std::nullopt;
  }
  if (x.arrows.empty()) {
    return y;
  }
  if (y.arrows.empty()) {
    return x;
  }
  if (q.is_relation(x.arrows.back(), y.arrows.front())) {
    return std::nullopt;
  }
  Path result = x;
  result.arrows.insert(result.arrows.end(), y.arrows.begin(), y.arrows.end());
  return result;
}

std::string to_string(BoundQuiver const& q, Path const& p) {
  if (p.arrows.empty()) {
    return "e_" + q.vertex_name(p.source);
  }
  std::string result;
  for (std::size_t i = 0; i < p.arrows.size(); ++i) {
    if (i > 0) {
      result += ' ';
    }
    result += q.arrow_name(p.arrows[i]);
  }
  return result;
}

// ---------------------------------------------------------------------------
// Gentleness

char const* to_string(Rule r) noexcept {
  switch (r) {
    case Rule::G1: return "G1";
    case Rule::G2: return "G2";
    case Rule::G3: return "G3";
    case Rule::non_quadratic: return "non-quadratic";
    case Rule::loop_anomaly: return "loop-anomaly";
  }
  return "?";
}

GentleReport validate_gentle(BoundQuiver const& q) {
  GentleReport report;
  auto         flag = [&](Rule r, std::vector<std::string> w) {
    report.violations.push_back({r, std::move(w)});
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (q.source(a) == q.target(a)) {
      flag(Rule::loop_anomaly, {q.arrow_name(a)});
    }
  }
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (q.out_arrows(v).size() > 2 || q.in_arrows(v).size() > 2) {
      flag(Rule::G1, {q.vertex_name(v)});
    }
  }
  auto names = [&](ArrowId a, std::vector<ArrowId> const& others) {
    std::vector<std::string> w{q.arrow_name(a)};
    for (ArrowId b : others) {
      w.push_back(q.arrow_name(b));
    }
    return w;
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    auto fs = q.free_successors(a);
    auto fp = q.free_predecessors(a);
    if (fs.size() > 1) {
      flag(Rule::G2, names(a, fs));
    }
    if (fp.size() > 1) {
      flag(Rule::G2, names(a, fp));
    }
    auto rs = q.relation_successors(a);
    auto rp = q.relation_predecessors(a);
    if (rs.size() > 1) {
      flag(Rule::G3, names(a, {rs.begin(), rs.end()}));
    }
    if (rp.size() > 1) {
      flag(Rule::G3, names(a, {rp.begin(), rp.end()}));
    }
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    for (ArrowId b = a + 1; b < q.arrow_count(); ++b) {
      if (q.source(a) == q.source(b) && q.target(a) == q.target(b)) {
        report.multiple_arrows.emplace_back(q.arrow_name(a), q.arrow_name(b));
      }
    }
  }
  report.is_gentle = report.violations.empty();
  return report;
}

bool is_gentle(BoundQuiver const& q) {
  return validate_gentle(q).is_gentle;
}

// ---------------------------------------------------------------------------
// Graph invariants

std::vector<std::size_t> component_labels(BoundQuiver const& q,
                                          std::size_t*       count) {
  std::size_t const        none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> label(q.vertex_count(), none);
  std::size_t              next = 0;
  for (VertexId s = 0; s < q.vertex_count(); ++s) {
    if (label[s] != none) {
      continue;
    }
    std::queue<VertexId> todo;
    todo.push(s);
    label[s] = next;
    while (!todo.empty()) {
      VertexId v = todo.front();
      todo.pop();
      auto visit = [&](VertexId w) {
        if (label[w] == none) {
          label[w] = next;
          todo.push(w);
        }
      };
      for (ArrowId a : q.out_arrows(v)) {
        visit(q.target(a));
      }
      for (ArrowId a : q.in_arrows(v)) {
        visit(q.source(a));
      }
    }
    ++next;
  }
  if (count != nullptr) {
    *count = next;
  }
  return label;
}

long euler_characteristic(BoundQuiver const& q) {
  std::size_t components = 0;
  component_labels(q, &components);
  return static_cast<long>(q.arrow_count()) - static_cast<long>(q.vertex_count())
         + static_cast<long>(components);
}

bool is_connected(BoundQuiver const& q) {
  std::size_t components = 0;
  component_labels(q, &components);
  return components <= 1;
}

BoundQuiver induced_subquiver(BoundQuiver const&           q,
                              std::vector<VertexId> const& vertices) {
  std::vector<bool> inside(q.vertex_count(), false);
  for (VertexId v : vertices) {
    inside.at(v) = true;
  }
  std::vector<std::string> vs;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (inside[v]) {
      vs.push_back(q.vertex_name(v));
    }
  }
  std::vector<Arrow> as;
  std::vector<bool>  kept(q.arrow_count(), false);
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (inside[q.source(a)] && inside[q.target(a)]) {
      kept[a] = true;
      as.push_back({q.arrow_name(a), q.vertex_name(q.source(a)),
                    q.vertex_name(q.target(a))});
    }
  }
  std::vector<Relation> rs;
  for (auto [a, b] : q.relations()) {
    if (kept[a] && kept[b]) {
      rs.push_back({q.arrow_name(a), q.arrow_name(b)});
    }
  }
  return BoundQuiver(std::move(vs), std::move(as), std::move(rs), q.name());
}

std::vector<BoundQuiver> connected_components(BoundQuiver const& q) {
  std::size_t count  = 0;
  auto        labels = component_labels(q, &count);
  if (count <= 1) {
    return {q};
  }
  std::vector<std::vector<VertexId>> parts(count);
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    parts[labels[v]].push_back(v);
  }
  std::vector<BoundQuiver> result;
  for (auto const& part : parts) {
    result.push_back(induced_subquiver(q, part));
  }
  return result;
}

CycleEnumeration simple_oriented_cycles(BoundQuiver const& q,
                                        std::size_t        limit) {
  CycleSearch search{q.vertex_count(), {}, limit, {}, {}, {}, {}, false};
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    search.edges.emplace_back(q.source(a), q.target(a));
  }
  search.run();
  CycleEnumeration result;
  result.overflow = search.overflow;
  for (auto& word : search.found) {
    result.cycles.push_back(canonical_rotation(std::move(word)));
  }
  std::sort(result.cycles.begin(), result.cycles.end());
  return result;
}

std::vector<Cycle> relation_cycles(BoundQuiver const& q) {
  CycleSearch search{q.arrow_count(), {}, default_cycle_limit, {}, {}, {}, {},
                     false};
  for (auto [a, b] : q.relations()) {
    search.edges.emplace_back(a, b);
  }
  search.run();
  if (search.overflow) {
    throw std::length_error("too many relation cycles");
  }
  std::vector<Cycle> result;
  for (auto const& word : search.found) {
    Cycle c;
    for (std::size_t e : word) {
      c.push_back(search.edges[e].first);
    }
    result.push_back(canonical_rotation(std::move(c)));
  }
  std::sort(result.begin(), result.end());
  return result;
}

std::vector<Cycle> full_relation_cycles(BoundQuiver const& q) {
  std::vector<Cycle> result;
  for (auto& c : relation_cycles(q)) {
    std::set<VertexId> seen;
    bool               simple = true;
    for (ArrowId a : c) {
      simple = simple && seen.insert(q.source(a)).second;
    }
    if (simple) {
      result.push_back(std::move(c));
    }
  }
  return result;
}

bool is_finite_dimensional(BoundQuiver const& q) {
  std::vector<std::size_t>          indegree(q.arrow_count(), 0);
  std::vector<std::vector<ArrowId>> next(q.arrow_count());
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    next[a] = q.free_successors(a);
    for (ArrowId b : next[a]) {
      ++indegree[b];
    }
  }
  std::vector<ArrowId> ready;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (indegree[a] == 0) {
      ready.push_back(a);
    }
  }
  std::size_t removed = 0;
  while (!ready.empty()) {
    ArrowId a = ready.back();
    ready.pop_back();
    ++removed;
    for (ArrowId b : next[a]) {
      if (--indegree[b] == 0) {
        ready.push_back(b);
      }
    }
  }
  return removed == q.arrow_count();
}

std::vector<Path> nonzero_paths(BoundQuiver const& q) {
  if (!is_finite_dimensional(q)) {
    throw std::domain_error("bound quiver is not finite dimensional");
  }
  std::vector<Path> result;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    result.push_back({v, {}});
  }
  std::vector<Path> stack;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    stack.push_back({q.source(a), {a}});
  }
  while (!stack.empty()) {
    Path p = std::move(stack.back());
    stack.pop_back();
    for (ArrowId b : q.free_successors(p.arrows.back())) {
      Path longer = p;
      longer.arrows.push_back(b);
      stack.push_back(std::move(longer));
    }
    result.push_back(std::move(p));
  }
  std::sort(result.begin(), result.end(), [](Path const& x, Path const& y) {
    bool tx = x.arrows.empty();
    bool ty = y.arrows.empty();
    if (tx != ty) {
      return tx;
    }
    return x < y;
  });
  return result;
}

BoundQuiver opposite(BoundQuiver const& q) {
  std::vector<Arrow> arrows;
  for (auto const& a : q.arrow_list()) {
    arrows.push_back({a.name, a.target, a.source});
  }
  std::vector<Relation> relations;
  for (auto const& r : q.relation_list()) {
    relations.push_back({r.second, r.first});
  }
  return BoundQuiver(q.vertex_names(), std::move(arrows), std::move(relations),
                     q.name());
}

}  // namespace gentle
