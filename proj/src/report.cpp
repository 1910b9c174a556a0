#include "gentle/report.hpp"

#include <limits>
#include <stdexcept>

#include "gentle/io.hpp"

namespace gentle {

Json to_json(BigInt const& x) {
  if (x >= std::numeric_limits<std::int64_t>::min()
      && x <= std::numeric_limits<std::int64_t>::max()) {
    return static_cast<std::int64_t>(x);
  }
  return x.str();
}

Json to_json(BoundQuiver const& q) {
  Json arrows    = Json::array();
  Json relations = Json::array();
  for (auto const& a : q.arrow_list()) {
    arrows.push_back({{"name", a.name}, {"source", a.source}, {"target", a.target}});
  }
  for (auto const& r : q.relation_list()) {
    relations.push_back(Json::array({r.first, r.second}));
  }
  return {{"name", q.name()},
          {"vertices", q.vertex_names()},
          {"arrows", std::move(arrows)},
          {"relations", std::move(relations)}};
}

BoundQuiver quiver_from_json(Json const& j) {
  try {
    std::vector<Arrow> arrows;
    for (auto const& a : j.at("arrows")) {
      arrows.push_back({a.at("name").get<std::string>(),
                        a.at("source").get<std::string>(),
                        a.at("target").get<std::string>()});
    }
    std::vector<Relation> relations;
    for (auto const& r : j.at("relations")) {
      relations.push_back({r.at(0).get<std::string>(), r.at(1).get<std::string>()});
    }
    return BoundQuiver(j.at("vertices").get<std::vector<std::string>>(),
                       std::move(arrows), std::move(relations),
                       j.value("name", std::string{}));
  } catch (Json::exception const& e) {
    throw std::invalid_argument(std::string("malformed quiver JSON: ") + e.what());
  }
}

Json to_json(GentleReport const& r) {
  Json violations = Json::array();
  for (auto const& v : r.violations) {
    violations.push_back({{"rule", to_string(v.rule)}, {"witnesses", v.witnesses}});
  }
  Json multiple = Json::array();
  for (auto const& [a, b] : r.multiple_arrows) {
    multiple.push_back(Json::array({a, b}));
  }
  return {{"is_gentle", r.is_gentle},
          {"violations", std::move(violations)},
          {"multiple_arrows", std::move(multiple)}};
}

Json to_json(MCandidates const& m) {
  if (m.all) {
    return "all";
  }
  return m.values;
}

Json to_json(ClassificationReport const& r) {
  Json cycles = Json::array();
  for (auto const& c : r.cycles) {
    cycles.push_back({{"length", c.length}, {"full_relations", c.full_relations}});
  }
  Json pair = nullptr;
  if (r.invariant_pair) {
    pair = Json::array({r.invariant_pair->r, r.invariant_pair->s});
  }
  return {{"gentle", to_json(r.gentle)},
          {"connected", r.connected},
          {"components", r.components},
          {"finite_dimensional", r.finite_dimensional},
          {"chi", r.chi},
          {"cycles", std::move(cycles)},
          {"cycle_overflow", r.cycle_overflow},
          {"m_candidates", to_json(r.m_candidates)},
          {"a_branched", r.a_branched},
          {"invariant_pair", std::move(pair)},
          {"simply_connected", r.simply_connected},
          {"pi1_rank", r.pi1_rank}};
}

Json to_json(PhiInvariant const& p) {
  Json terms = Json::array();
  for (auto const& [pair, count] : p.counts()) {
    terms.push_back({{"pair", Json::array({pair.first, pair.second})},
                     {"multiplicity", count}});
  }
  return {{"terms", std::move(terms)}, {"text", p.to_string()}};
}

Json to_json(BoundQuiver const& q, PhiComputation const& trace) {
  Json orbits = Json::array();
  for (auto const& o : trace.orbits) {
    Json permitted = Json::array();
    Json forbidden = Json::array();
    for (auto i : o.permitted) {
      permitted.push_back(to_string(q, trace.threads[i]));
    }
    for (auto i : o.forbidden) {
      forbidden.push_back(to_string(q, trace.threads[i]));
    }
    orbits.push_back({{"permitted", std::move(permitted)},
                      {"forbidden", std::move(forbidden)},
                      {"pair", Json::array({o.pair.first, o.pair.second})}});
  }
  Json cycles = Json::array();
  for (auto const& c : trace.relation_cycles) {
    Json word = Json::array();
    for (ArrowId a : c) {
      word.push_back(q.arrow_name(a));
    }
    cycles.push_back(std::move(word));
  }
  return {{"orbits", std::move(orbits)}, {"relation_cycles", std::move(cycles)}};
}

Json to_json(CohomologyReport const& r) {
  return {{"characteristic", r.field.characteristic()},
          {"dims", r.dims},
          {"ranks", r.ranks},
          {"cochain_dims", r.cochain_dims}};
}

Json to_json(CartanMatrix const& c) {
  return {{"order", c.order}, {"entries", c.entries}};
}

Json to_json(SmithForm const& s) {
  Json divisors = Json::array();
  for (auto const& d : s.divisors) {
    divisors.push_back(to_json(d));
  }
  return {{"divisors", std::move(divisors)}, {"det_abs", to_json(s.det_abs)}};
}

Json to_json(MutationStep const& s) {
  return {{"kind", to_string(s.kind)},
          {"vertex", s.vertex},
          {"before", s.before},
          {"after", s.after}};
}

Json to_json(MutationLog const& log) {
  Json steps = Json::array();
  for (auto const& s : log.steps) {
    steps.push_back(to_json(s));
  }
  return {{"steps", std::move(steps)},
          {"start", to_json(log.start)},
          {"end", to_json(log.end)}};
}

MutationLog mutation_log_from_json(Json const& j) {
  try {
    MutationLog log;
    log.start = quiver_from_json(j.at("start"));
    log.end   = quiver_from_json(j.at("end"));
    for (auto const& s : j.at("steps")) {
      log.steps.push_back({parse_mutation_kind(s.at("kind").get<std::string>()),
                           s.at("vertex").get<std::string>(),
                           s.at("before").get<std::string>(),
                           s.at("after").get<std::string>()});
    }
    return log;
  } catch (Json::exception const& e) {
    throw std::invalid_argument(std::string("malformed mutation log: ") + e.what());
  }
}

Json to_json(RelationSplit const& s) {
  return {{"relation", Json::array({s.rho.first, s.rho.second})},
          {"y", s.y},
          {"minus", s.minus},
          {"plus", s.plus},
          {"perp", s.perp}};
}

Json to_json(EquivalenceResult const& r) {
  auto const& ev = r.evidence;
  return {{"verdict", to_string(r.verdict)},
          {"invariant_pairs", Json::array({Json::array({ev.pair_a.r, ev.pair_a.s}),
                                           Json::array({ev.pair_b.r, ev.pair_b.s})})},
          {"pairs_equal", ev.pairs_equal()},
          {"phi", Json::array({to_json(ev.phi_a), to_json(ev.phi_b)})},
          {"phi_equal", ev.phi_equal()},
          {"hh_max_degree", ev.hh_max_degree},
          {"hh_dims", Json::array({ev.hh_a, ev.hh_b})},
          {"hh_equal", ev.hh_equal()},
          {"k0_ranks", Json::array({ev.k0_rank_a, ev.k0_rank_b})},
          {"hh_k0_equal", ev.hh_k0_equal()}};
}

Json make_report(std::string const& command, std::vector<BoundQuiver> const& inputs,
                 Json result, Json evidence) {
  Json in = Json::array();
  for (auto const& q : inputs) {
    in.push_back({{"name", q.name()}, {"digest", digest(q)}});
  }
  return {{"schema", report_schema_id},
          {"command", command},
          {"inputs", std::move(in)},
          {"result", std::move(result)},
          {"evidence", std::move(evidence)}};
}

}  // namespace gentle
