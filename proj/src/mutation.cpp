#include "gentle/mutation.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "gentle/canonical.hpp"
#include "gentle/classification.hpp"
#include "gentle/io.hpp"
#include "gentle/phi.hpp"

namespace gentle {

char const* to_string(MutationKind k) noexcept {
  return k == MutationKind::tilt ? "tilt" : "cotilt";
}

MutationKind parse_mutation_kind(std::string const& s) {
  if (s == "tilt") {
    return MutationKind::tilt;
  }
  if (s == "cotilt") {
    return MutationKind::cotilt;
  }
  throw std::invalid_argument("unknown mutation kind '" + s + "'");
}

bool is_admissible(BoundQuiver const& q, VertexId x) {
  for (ArrowId a : q.out_arrows(x)) {
    auto in = q.in_arrows(x);
    bool partnered = std::any_of(in.begin(), in.end(), [&](ArrowId b) {
      return !q.is_relation(b, a);
    });
    if (!partnered) {
      return false;
    }
  }
  return true;
}

std::vector<VertexId> admissible_vertices(BoundQuiver const& q) {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (is_admissible(q, v)) {
      out.push_back(v);
    }
  }
  return out;
}

std::pair<BoundQuiver, MutationStep> mutate(BoundQuiver const& q,
                                            std::string const& name) {
  VertexId const x = q.vertex(name);
  if (!is_admissible(q, x)) {
    throw std::invalid_argument("vertex '" + name + "' is not admissible");
  }
  auto const in  = q.in_arrows(x);
  auto const out = q.out_arrows(x);
  for (ArrowId a : in) {
    if (q.source(a) == x) {
      throw std::invalid_argument("cannot mutate at '" + name
                                  + "': it carries a loop");
    }
  }

  enum class Role { keep, in, out, gamma };
  std::vector<Role>    role(q.arrow_count(), Role::keep);
  std::vector<ArrowId> partner(q.arrow_count());
  std::map<ArrowId, ArrowId> gamma_of;  // in-arrow -> its relation predecessor
  for (ArrowId b : in) {
    role[b] = Role::in;
  }
  for (ArrowId a : out) {
    role[a] = Role::out;
    for (ArrowId b : in) {
      if (!q.is_relation(b, a)) {
        partner[a] = b;
      }
    }
  }
  for (ArrowId b : in) {
    for (ArrowId g : q.relation_predecessors(b)) {
      if (role[g] != Role::keep) {
        throw std::invalid_argument("cannot mutate at '" + name + "': arrow '"
                                    + q.arrow_name(g)
                                    + "' plays two roles in the rewrite");
      }
      role[g]     = Role::gamma;
      gamma_of[b] = g;
    }
  }

  std::vector<Arrow> arrows;
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    std::string const& s = q.vertex_name(q.source(a));
    std::string const& t = q.vertex_name(q.target(a));
    switch (role[a]) {
      case Role::keep:
        arrows.push_back({q.arrow_name(a), s, t});
        break;
      case Role::in:
        arrows.push_back({q.arrow_name(a), name, s});
        break;
      case Role::out:
        arrows.push_back(
            {q.arrow_name(a), q.vertex_name(q.source(partner[a])), t});
        break;
      case Role::gamma:
        arrows.push_back({q.arrow_name(a), s, name});
        break;
    }
  }

  std::vector<Relation> relations;
  for (auto [u, v] : q.relations()) {
    if (q.target(u) == x) {
      continue;
    }
    if (role[v] == Role::in && gamma_of.contains(v) && gamma_of.at(v) == u) {
      continue;
    }
    relations.push_back({q.arrow_name(u), q.arrow_name(v)});
  }
  for (ArrowId a : out) {
    relations.push_back({q.arrow_name(partner[a]), q.arrow_name(a)});
  }
  for (auto const& [b, g] : gamma_of) {
    for (ArrowId other : in) {
      if (other != b) {
        relations.push_back({q.arrow_name(g), q.arrow_name(other)});
      }
    }
  }

  BoundQuiver result(q.vertex_names(), std::move(arrows), std::move(relations),
                     q.name());
  GentleReport report = validate_gentle(result);
  if (!report.is_gentle) {
    std::string detail;
    for (auto const& v : report.violations) {
      detail += std::string(" ") + gentle::to_string(v.rule);
      for (auto const& w : v.witnesses) {
        detail += " " + w;
      }
      detail += ";";
    }
    throw std::domain_error("mutation at '" + name
                            + "' produced a non-gentle quiver:" + detail);
  }
  MutationStep step{MutationKind::tilt, name, digest(q), digest(result)};
  return {std::move(result), std::move(step)};
}

std::pair<BoundQuiver, MutationStep> comutate(BoundQuiver const& q,
                                              std::string const& y) {
  BoundQuiver  result = opposite(mutate(opposite(q), y).first);
  MutationStep step{MutationKind::cotilt, y, digest(q), digest(result)};
  return {std::move(result), std::move(step)};
}

BoundQuiver apply(BoundQuiver const& q, MutationStep const& step) {
  return step.kind == MutationKind::tilt ? mutate(q, step.vertex).first
                                         : comutate(q, step.vertex).first;
}

std::string replay(MutationLog const& log) {
  BoundQuiver current = log.start;
  for (std::size_t i = 0; i < log.steps.size(); ++i) {
    auto const& step = log.steps[i];
    std::string const where = "step " + std::to_string(i + 1) + " ("
                              + to_string(step.kind) + " at " + step.vertex + ")";
    if (digest(current) != step.before) {
      return where + ": input digest " + digest(current) + " != recorded "
             + step.before;
    }
    try {
      current = apply(current, step);
    } catch (std::exception const& e) {
      return where + ": " + e.what();
    }
    if (digest(current) != step.after) {
      return where + ": output digest " + digest(current) + " != recorded "
             + step.after;
    }
  }
  if (digest(current) != digest(log.end)) {
    return "replayed end digest " + digest(current) + " != recorded "
           + digest(log.end);
  }
  return {};
}

std::vector<Relation> off_cycle_relations(BoundQuiver const& q) {
  std::set<std::pair<ArrowId, ArrowId>> on_cycles;
  for (auto const& c : full_relation_cycles(q)) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      on_cycles.insert({c[i], c[(i + 1) % c.size()]});
    }
  }
  std::vector<Relation> out;
  for (auto const& r : q.relations()) {
    if (!on_cycles.contains(r)) {
      out.push_back({q.arrow_name(r.first), q.arrow_name(r.second)});
    }
  }
  return out;
}

RelationSplit split_at_relation(BoundQuiver const& q, Relation const& rho) {
  ArrowId const a = q.arrow(rho.first);
  ArrowId const b = q.arrow(rho.second);
  if (!q.is_relation(a, b)) {
    throw std::invalid_argument("'" + rho.first + " " + rho.second
                                + "' is not a relation");
  }
  VertexId const y = q.target(a);
  VertexId const from = q.source(a);
  VertexId const to   = q.target(b);
  if (from == y || to == y) {
    throw std::invalid_argument("relation passes through a loop");
  }
  std::vector<std::size_t> parent(q.vertex_count());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t v) {
    while (parent[v] != v) {
      v = parent[v] = parent[parent[v]];
    }
    return v;
  };
  for (ArrowId e = 0; e < q.arrow_count(); ++e) {
    if (q.source(e) != y && q.target(e) != y) {
      parent[find(q.source(e))] = find(q.target(e));
    }
  }
  if (find(from) == find(to)) {
    throw std::invalid_argument("removing '" + q.vertex_name(y)
                                + "' does not separate the ends of relation '"
                                + rho.first + " " + rho.second + "'");
  }
  RelationSplit split{rho, q.vertex_name(y), {}, {}, {}};
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    if (v == y) {
      continue;
    }
    auto c = find(v);
    (c == find(from) ? split.minus : c == find(to) ? split.plus : split.perp)
        .push_back(q.vertex_name(v));
  }
  return split;
}

char const* to_string(Extremal e) noexcept {
  switch (e) {
    case Extremal::minus:
      return "minus_extremal";
    case Extremal::plus:
      return "plus_extremal";
    case Extremal::both:
      return "both";
    case Extremal::neither:
      break;
  }
  return "neither";
}

namespace {

bool a_branched_for_some_m(BoundQuiver const& q) {
  MCandidates m = infer_m(q);
  if (m.empty()) {
    return false;
  }
  return is_A_branched(q, m.all ? 1U : m.values.front());
}

BoundQuiver restrict_to(BoundQuiver const& q, std::vector<std::string> const& names) {
  std::vector<VertexId> ids;
  for (auto const& n : names) {
    ids.push_back(q.vertex(n));
  }
  return induced_subquiver(q, ids);
}

std::set<Relation> off_set(BoundQuiver const& q) {
  auto r = off_cycle_relations(q);
  return {r.begin(), r.end()};
}

using Progress = std::pair<BoundQuiver, std::vector<MutationStep>>;

// Pushes rho away from its A-branched side: tilts at the end of rho
// (direction +1) or cotilts at its start (direction -1), following the
// displaced relation until one off-cycle relation disappears.
std::optional<Progress> push(BoundQuiver const& start, Relation rho, int direction) {
  std::size_t const         before = off_set(start).size();
  BoundQuiver               current = start;
  std::vector<MutationStep> steps;
  for (std::size_t round = 0; round < 2 * start.vertex_count() + 2; ++round) {
    ArrowId const  first  = current.arrow(rho.first);
    ArrowId const  second = current.arrow(rho.second);
    VertexId const v = direction > 0 ? current.target(second) : current.source(first);
    std::string const name = current.vertex_name(v);
    bool const ok = direction > 0 ? is_admissible(current, v)
                                  : is_admissible(opposite(current), v);
    if (!ok) {
      return std::nullopt;
    }
    std::pair<BoundQuiver, MutationStep> next;
    try {
      next = direction > 0 ? mutate(current, name) : comutate(current, name);
    } catch (std::invalid_argument const&) {
      return std::nullopt;
    } catch (std::domain_error const&) {
      return std::nullopt;
    }
    auto const old_off = off_set(current);
    auto const new_off = off_set(next.first);
    current = std::move(next.first);
    steps.push_back(std::move(next.second));
    if (new_off.size() < before) {
      return Progress{std::move(current), std::move(steps)};
    }
    std::vector<Relation> fresh;
    std::set_difference(new_off.begin(), new_off.end(), old_off.begin(),
                        old_off.end(), std::back_inserter(fresh));
    if (fresh.size() != 1) {
      return std::nullopt;
    }
    rho = fresh.front();
  }
  return std::nullopt;
}

std::optional<Progress> search(BoundQuiver const& start, std::size_t budget,
                               std::size_t& expanded) {
  struct Node {
    BoundQuiver  q;
    std::size_t  parent;
    MutationStep step;
  };
  std::size_t const     target = off_set(start).size();
  std::vector<Node>     nodes{{start, 0, {}}};
  std::deque<std::size_t>         frontier{0};
  std::unordered_set<std::string> seen{canonical_form(start)};
  while (!frontier.empty() && expanded < budget) {
    std::size_t const at = frontier.front();
    frontier.pop_front();
    ++expanded;
    BoundQuiver const here = nodes[at].q;
    BoundQuiver const here_op = opposite(here);
    for (VertexId v = 0; v < here.vertex_count(); ++v) {
      for (MutationKind kind : {MutationKind::tilt, MutationKind::cotilt}) {
        bool const ok = kind == MutationKind::tilt ? is_admissible(here, v)
                                                   : is_admissible(here_op, v);
        if (!ok) {
          continue;
        }
        std::pair<BoundQuiver, MutationStep> next;
        try {
          next = kind == MutationKind::tilt ? mutate(here, here.vertex_name(v))
                                            : comutate(here, here.vertex_name(v));
        } catch (std::invalid_argument const&) {
          continue;
        } catch (std::domain_error const&) {
          continue;
        }
        if (!seen.insert(canonical_form(next.first)).second) {
          continue;
        }
        nodes.push_back({std::move(next.first), at, std::move(next.second)});
        std::size_t const id = nodes.size() - 1;
        if (off_set(nodes[id].q).size() < target) {
          std::vector<MutationStep> steps;
          for (std::size_t k = id; k != 0; k = nodes[k].parent) {
            steps.push_back(nodes[k].step);
          }
          std::reverse(steps.begin(), steps.end());
          return Progress{nodes[id].q, std::move(steps)};
        }
        frontier.push_back(id);
      }
    }
  }
  return std::nullopt;
}

}  // namespace

Extremal extremal_kind(BoundQuiver const& q, RelationSplit const& split) {
  bool const minus = a_branched_for_some_m(restrict_to(q, split.minus));
  bool const plus  = a_branched_for_some_m(restrict_to(q, split.plus));
  if (minus && plus) {
    return Extremal::both;
  }
  return minus ? Extremal::minus : plus ? Extremal::plus : Extremal::neither;
}

ReduceResult reduce_to_A_branched(BoundQuiver const& q, unsigned m,
                                  std::size_t budget) {
  if (!is_connected(q)) {
    throw std::invalid_argument("reduction needs a connected bound quiver");
  }
  if (!is_m_branched(q, m)) {
    throw std::invalid_argument("reduction needs an " + std::to_string(m)
                                + "-branched bound quiver");
  }
  PhiInvariant const phi0 = phi(q);
  long const         chi0 = euler_characteristic(q);

  ReduceResult out;
  out.log.start = q;
  BoundQuiver current = q;
  while (true) {
    auto const off = off_cycle_relations(current);
    if (off.empty()) {
      out.complete = true;
      break;
    }
    std::optional<Progress> progress;
    for (auto const& rho : off) {
      RelationSplit split;
      try {
        split = split_at_relation(current, rho);
      } catch (std::invalid_argument const&) {
        continue;
      }
      Extremal const kind = extremal_kind(current, split);
      if (kind == Extremal::plus || kind == Extremal::both) {
        progress = push(current, rho, +1);
      }
      if (!progress && (kind == Extremal::minus || kind == Extremal::both)) {
        progress = push(current, rho, -1);
      }
      if (progress) {
        break;
      }
    }
    if (!progress) {
      std::size_t const left =
          budget > out.searched_states ? budget - out.searched_states : 0;
      std::size_t used = 0;
      progress = search(current, left, used);
      out.searched_states += used;
    }
    if (!progress) {
      break;
    }
    auto const& next = progress->first;
    if (euler_characteristic(next) != chi0
        || next.vertex_count() != q.vertex_count() || !is_m_branched(next, m)
        || phi(next) != phi0) {
      throw std::logic_error("mutation sequence changed a derived invariant");
    }
    for (auto& s : progress->second) {
      out.log.steps.push_back(std::move(s));
    }
    current = progress->first;
    ++out.macro_steps;
  }
  out.result  = current;
  out.log.end = current;
  return out;
}

}  // namespace gentle
