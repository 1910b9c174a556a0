#include "gentle/classification.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

bool cycle_has_full_relations(BoundQuiver const& q, Cycle const& c) {
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (!q.is_relation(c[i], c[(i + 1) % c.size()])) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool is_m_branched(BoundQuiver const& q, unsigned m) {
  if (m < 1 || !is_gentle(q) || !is_finite_dimensional(q)) {
    return false;
  }
  auto const chi = euler_characteristic(q);
  // More than chi cycles already fails, so stop enumerating there.
  auto const found = simple_oriented_cycles(q, static_cast<std::size_t>(chi) + 1);
  if (found.overflow || static_cast<long>(found.cycles.size()) != chi) {
    return false;
  }
  return std::all_of(found.cycles.begin(), found.cycles.end(), [&](Cycle const& c) {
    return c.size() == m + 2 && cycle_has_full_relations(q, c);
  });
}

bool is_A_branched(BoundQuiver const& q, unsigned m) {
  if (!is_m_branched(q, m)) {
    return false;
  }
  std::set<std::pair<ArrowId, ArrowId>> on_cycles;
  for (auto const& c : simple_oriented_cycles(q).cycles) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      on_cycles.insert({c[i], c[(i + 1) % c.size()]});
    }
  }
  return std::all_of(q.relations().begin(), q.relations().end(),
                     [&](auto const& r) { return on_cycles.contains(r); });
}

bool MCandidates::contains(unsigned m) const {
  return all ? m >= 1 : std::find(values.begin(), values.end(), m) != values.end();
}

std::string MCandidates::to_string() const {
  if (all) {
    return "all";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    out += (i ? "," : "") + std::to_string(values[i]);
  }
  return out + "}";
}

MCandidates infer_m(BoundQuiver const& q) {
  MCandidates out;
  if (!is_gentle(q)) {
    return out;
  }
  auto const found = simple_oriented_cycles(q);
  if (found.cycles.empty()) {
    out.all = !found.overflow && euler_characteristic(q) == 0
              && is_finite_dimensional(q);
    return out;
  }
  std::size_t const L = found.cycles.front().size();
  bool same = std::all_of(found.cycles.begin(), found.cycles.end(),
                          [&](Cycle const& c) { return c.size() == L; });
  if (same && L >= 3 && is_m_branched(q, static_cast<unsigned>(L - 2))) {
    out.values.push_back(static_cast<unsigned>(L - 2));
  }
  return out;
}

InvariantPair invariant_pair(BoundQuiver const& q, unsigned m) {
  if (!is_connected(q)) {
    throw std::invalid_argument("invariant pair needs a connected bound quiver");
  }
  if (!is_m_branched(q, m)) {
    throw std::invalid_argument("invariant pair needs an " + std::to_string(m)
                                + "-branched bound quiver");
  }
  return {euler_characteristic(q), q.vertex_count()};
}

ClassificationReport classify(BoundQuiver const& q, std::optional<unsigned> m) {
  ClassificationReport r;
  r.gentle = validate_gentle(q);
  component_labels(q, &r.components);
  r.connected          = r.components <= 1;
  r.finite_dimensional = is_finite_dimensional(q);
  r.chi                = euler_characteristic(q);
  auto const found     = simple_oriented_cycles(q);
  r.cycle_overflow     = found.overflow;
  for (auto const& c : found.cycles) {
    r.cycles.push_back({c.size(), cycle_has_full_relations(q, c)});
  }
  if (m) {
    if (is_m_branched(q, *m)) {
      r.m_candidates.values.push_back(*m);
    }
  } else {
    r.m_candidates = infer_m(q);
  }
  if (!r.m_candidates.empty()) {
    unsigned probe = r.m_candidates.all ? 1U : r.m_candidates.values.front();
    r.a_branched   = is_A_branched(q, probe);
    if (r.connected) {
      r.invariant_pair = InvariantPair{r.chi, q.vertex_count()};
    }
  }
  r.simply_connected = r.chi == 0;
  r.pi1_rank         = r.chi;
  return r;
}

std::vector<ClassificationReport> classify_components(BoundQuiver const& q,
                                                      std::optional<unsigned> m) {
  std::vector<ClassificationReport> out;
  for (auto const& c : connected_components(q)) {
    out.push_back(classify(c, m));
  }
  return out;
}

char const* to_string(Verdict v) noexcept {
  return v == Verdict::equivalent ? "equivalent" : "inequivalent";
}

EquivalenceResult derived_equivalent(BoundQuiver const& a, BoundQuiver const& b,
                                     unsigned m) {
  for (auto const* q : {&a, &b}) {
    if (!is_connected(*q)) {
      throw std::invalid_argument(
          "derived equivalence is only decided for connected algebras: '"
          + q->name()
          + "' is disconnected, and componentwise invariants (invariant pairs, "
            "Hochschild cohomology, Grothendieck group) do not determine the "
            "derived class of a disconnected algebra");
    }
    if (!is_m_branched(*q, m)) {
      throw std::invalid_argument("'" + q->name() + "' is not "
                                  + std::to_string(m) + "-branched");
    }
  }
  EquivalenceResult result;
  auto&             ev = result.evidence;
  ev.pair_a        = invariant_pair(a, m);
  ev.pair_b        = invariant_pair(b, m);
  ev.phi_a         = phi(a);
  ev.phi_b         = phi(b);
  ev.hh_max_degree = 2 * (m + 2) + 1;
  ev.hh_a          = hh_dims(a, ev.hh_max_degree).dims;
  ev.hh_b          = hh_dims(b, ev.hh_max_degree).dims;
  ev.k0_rank_a     = a.vertex_count();
  ev.k0_rank_b     = b.vertex_count();
  result.verdict = ev.pairs_equal() ? Verdict::equivalent : Verdict::inequivalent;
  if (ev.pairs_equal() != ev.phi_equal() || ev.pairs_equal() != ev.hh_k0_equal()) {
    throw std::logic_error(
        "inconsistent evidence: invariant pairs "
        + std::string(ev.pairs_equal() ? "agree" : "differ") + ", phi "
        + (ev.phi_equal() ? "agrees" : "differs") + ", HH dimensions with K_0 rank "
        + (ev.hh_k0_equal() ? "agree" : "differ"));
  }
  return result;
}

}  // namespace gentle
