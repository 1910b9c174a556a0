// Command-line front end: gentle <command> [options]; see --help.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <unistd.h>

#include "CLI11.hpp"

#include "gentle/canonical.hpp"
#include "gentle/cartan.hpp"
#include "gentle/classification.hpp"
#include "gentle/fixtures.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/io.hpp"
#include "gentle/mutation.hpp"
#include "gentle/normal_form.hpp"
#include "gentle/phi.hpp"
#include "gentle/report.hpp"

namespace {

using namespace gentle;

constexpr int exit_ok       = 0;
constexpr int exit_negative = 1;
constexpr int exit_usage    = 2;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

bool use_color() {
  char const* no_color = std::getenv("NO_COLOR");
  if (no_color != nullptr && *no_color != '\0') {
    return false;
  }
  return isatty(fileno(stdout)) != 0;
}

std::string paint(std::string const& text, bool good) {
  if (!use_color()) {
    return text;
  }
  return (good ? "\033[32m" : "\033[31m") + text + "\033[0m";
}

// A path, "fixture:<name>", or a bare fixture name.
BoundQuiver load(std::string const& spec) {
  std::string const prefix = "fixture:";
  try {
    if (spec.rfind(prefix, 0) == 0) {
      return fixture(spec.substr(prefix.size()));
    }
    if (std::filesystem::exists(spec)) {
      return read_quiver_file(spec);
    }
    auto names = fixture_names();
    if (std::find(names.begin(), names.end(), spec) != names.end()) {
      return fixture(spec);
    }
  } catch (ParseError const& e) {
    throw InputError(spec + ":" + std::to_string(e.line()) + ":"
                     + std::to_string(e.column()) + ": " + e.message());
  } catch (std::out_of_range const& e) {
    throw InputError(e.what());
  } catch (std::invalid_argument const& e) {
    throw InputError(spec + ": " + e.what());
  }
  throw InputError("'" + spec + "' is neither a readable file nor a fixture name");
}

void emit(Json const& report) { std::cout << report.dump(2) << "\n"; }

std::string pair_text(InvariantPair const& p) {
  return "(" + std::to_string(p.r) + "," + std::to_string(p.s) + ")";
}

std::string list_text(std::vector<std::size_t> const& v) {
  std::string out = "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    out += (i ? "," : "") + std::to_string(v[i]);
  }
  return out + "]";
}

std::string relation_text(Relation const& r) { return r.first + " " + r.second; }

int cmd_validate(std::string const& input, bool json) {
  BoundQuiver  q = load(input);
  GentleReport r = validate_gentle(q);
  if (json) {
    Json result = to_json(r);
    result["finite_dimensional"] = is_finite_dimensional(q);
    emit(make_report("validate", {q}, result,
                     {{"vertices", q.vertex_count()},
                      {"arrows", q.arrow_count()},
                      {"relations", q.relation_count()}}));
  } else {
    std::cout << (r.is_gentle ? paint("gentle", true) : paint("not gentle", false))
              << " (" << q.vertex_count() << " vertices, " << q.arrow_count()
              << " arrows, " << q.relation_count() << " relations)\n";
    for (auto const& v : r.violations) {
      std::cout << "  " << to_string(v.rule) << ":";
      for (auto const& w : v.witnesses) {
        std::cout << " " << w;
      }
      std::cout << "\n";
    }
    for (auto const& [a, b] : r.multiple_arrows) {
      std::cout << "  note: parallel arrows " << a << ", " << b << "\n";
    }
    std::cout << "finite dimensional: " << (is_finite_dimensional(q) ? "yes" : "no")
              << "\n";
  }
  return r.is_gentle ? exit_ok : exit_negative;
}

int cmd_classify(std::string const& input, std::optional<unsigned> m, bool json) {
  BoundQuiver q = load(input);
  auto        r = classify(q, m);
  auto        parts = classify_components(q, m);
  if (json) {
    Json comps = Json::array();
    for (auto const& c : parts) {
      comps.push_back(to_json(c));
    }
    emit(make_report("classify", {q}, to_json(r), {{"components", comps}}));
  } else {
    std::cout << "gentle: " << (r.gentle.is_gentle ? "yes" : "no") << "\n"
              << "connected: " << (r.connected ? "yes" : "no") << " ("
              << r.components << " component" << (r.components == 1 ? "" : "s")
              << ")\n"
              << "finite dimensional: " << (r.finite_dimensional ? "yes" : "no")
              << "\n"
              << "chi: " << r.chi << "\n"
              << "oriented cycles:";
    if (r.cycles.empty()) {
      std::cout << " none";
    }
    for (auto const& c : r.cycles) {
      std::cout << " " << c.length << (c.full_relations ? "(full)" : "(partial)");
    }
    std::cout << (r.cycle_overflow ? " ...(limit reached)" : "") << "\n"
              << "m-branched for m in: " << r.m_candidates.to_string() << "\n"
              << "A-branched: " << (r.a_branched ? "yes" : "no") << "\n"
              << "invariant pair: "
              << (r.invariant_pair ? pair_text(*r.invariant_pair) : "none") << "\n"
              << "simply connected: " << (r.simply_connected ? "yes" : "no")
              << " (pi1 rank " << r.pi1_rank << ")\n";
    if (parts.size() > 1) {
      for (std::size_t i = 0; i < parts.size(); ++i) {
        std::cout << "component " << i + 1 << ": m in "
                  << parts[i].m_candidates.to_string() << ", invariant pair "
                  << (parts[i].invariant_pair ? pair_text(*parts[i].invariant_pair)
                                              : "none")
                  << "\n";
      }
    }
  }
  return r.m_candidates.empty() ? exit_negative : exit_ok;
}

int cmd_phi(std::string const& input, std::string const& convention, bool json) {
  BoundQuiver q     = load(input);
  auto        mode  = convention == "ag" ? ThreadConvention::ag : ThreadConvention::paper;
  auto        trace = phi_trace(q, mode);
  if (json) {
    Json result = to_json(trace.value);
    emit(make_report("phi", {q}, result,
                     {{"thread_convention", convention},
                      {"trace", to_json(q, trace)},
                      {"arrow_count", q.arrow_count()}}));
  } else {
    std::cout << trace.value.to_string() << "\n";
  }
  return exit_ok;
}

int cmd_hh(std::string const& input, std::size_t max_degree, std::uint64_t p, bool json) {
  BoundQuiver q     = load(input);
  FieldSpec   field = FieldSpec::with_characteristic(p);
  auto        r     = hh_dims(q, max_degree, field);
  if (json) {
    emit(make_report("hh", {q}, to_json(r), {{"max_degree", max_degree}}));
  } else {
    std::cout << "field: " << field.describe() << "\n";
    for (std::size_t n = 0; n < r.dims.size(); ++n) {
      std::cout << "HH^" << n << ": " << r.dims[n] << "\n";
    }
  }
  return exit_ok;
}

int cmd_cartan(std::string const& input, bool snf, bool json) {
  BoundQuiver q = load(input);
  auto        c = cartan_matrix(q);
  auto        m = to_int_matrix(c.entries);
  BigInt      det = determinant(m);
  if (json) {
    Json result = to_json(c);
    result["determinant"] = to_json(det);
    if (snf) {
      result["smith_normal_form"] = to_json(smith_normal_form(m));
    }
    emit(make_report("cartan", {q}, result));
  } else {
    std::size_t width = 1;
    for (auto const& v : c.order) {
      width = std::max(width, v.size());
    }
    for (std::size_t i = 0; i < c.order.size(); ++i) {
      std::cout << c.order[i] << std::string(width - c.order[i].size(), ' ') << " |";
      for (long x : c.entries[i]) {
        std::cout << " " << x;
      }
      std::cout << "\n";
    }
    std::cout << "det: " << det << "\n";
    if (snf) {
      std::cout << "smith normal form:";
      for (auto const& d : smith_normal_form(m).divisors) {
        std::cout << " " << d;
      }
      std::cout << "\n";
    }
  }
  return exit_ok;
}

int cmd_mutate(std::string const& input, std::string const& vertex, bool co, bool json) {
  BoundQuiver q = load(input);
  q.vertex(vertex);
  bool const ok = co ? is_admissible(opposite(q), q.vertex(vertex))
                     : is_admissible(q, q.vertex(vertex));
  if (!ok) {
    if (json) {
      emit(make_report("mutate", {q}, {{"admissible", false}},
                       {{"vertex", vertex}, {"kind", co ? "cotilt" : "tilt"}}));
    } else {
      std::cerr << "vertex '" << vertex << "' is not admissible for "
                << (co ? "co-mutation" : "mutation") << "\n";
    }
    return exit_negative;
  }
  auto [result, step] = co ? comutate(q, vertex) : mutate(q, vertex);
  if (json) {
    emit(make_report("mutate", {q},
                     {{"admissible", true}, {"quiver", to_json(result)},
                      {"step", to_json(step)}},
                     {{"phi_before", to_json(phi(q))},
                      {"phi_after", to_json(phi(result))}}));
  } else {
    std::cout << serialize(result);
  }
  return exit_ok;
}

int cmd_reduce(std::string const& input, unsigned m, std::size_t budget,
               std::string const& log_path, bool json) {
  BoundQuiver q = load(input);
  auto        r = reduce_to_A_branched(q, m, budget);
  std::string const replayed = replay(r.log);
  if (!log_path.empty()) {
    std::ofstream out(log_path);
    out << to_json(r.log).dump(2) << "\n";
  }
  if (json) {
    emit(make_report("reduce", {q},
                     {{"complete", r.complete},
                      {"quiver", to_json(r.result)},
                      {"log", to_json(r.log)}},
                     {{"macro_steps", r.macro_steps},
                      {"searched_states", r.searched_states},
                      {"replay_ok", replayed.empty()},
                      {"a_branched", is_A_branched(r.result, m)},
                      {"invariant_pair",
                       Json::array({invariant_pair(r.result, m).r,
                                    invariant_pair(r.result, m).s})},
                      {"phi", to_json(phi(r.result))}}));
  } else {
    std::cout << "# " << (r.complete ? "A-branched" : "partial reduction (budget exhausted)")
              << " after " << r.log.steps.size() << " mutation"
              << (r.log.steps.size() == 1 ? "" : "s") << "\n";
    for (auto const& s : r.log.steps) {
      std::cout << "# " << to_string(s.kind) << " " << s.vertex << "  " << s.before
                << " -> " << s.after << "\n";
    }
    std::cout << "# replay: " << (replayed.empty() ? "ok" : replayed) << "\n";
    std::cout << serialize(r.result);
  }
  return r.complete && replayed.empty() ? exit_ok : exit_negative;
}

int cmd_equivalent(std::string const& a_in, std::string const& b_in, unsigned m, bool json) {
  BoundQuiver a = load(a_in);
  BoundQuiver b = load(b_in);
  auto        r = derived_equivalent(a, b, m);
  if (json) {
    emit(make_report("equivalent", {a, b}, {{"verdict", to_string(r.verdict)}},
                     to_json(r)));
  } else {
    auto const& ev = r.evidence;
    bool const  eq = r.verdict == Verdict::equivalent;
    std::cout << paint(to_string(r.verdict), eq) << "\n"
              << "invariant pairs: " << pair_text(ev.pair_a)
              << (ev.pairs_equal() ? " = " : " != ") << pair_text(ev.pair_b) << "\n"
              << "phi: " << ev.phi_a.to_string() << (ev.phi_equal() ? " = " : " != ")
              << ev.phi_b.to_string() << "\n"
              << "HH dims (char 0, degrees 0.." << ev.hh_max_degree
              << "): " << list_text(ev.hh_a) << (ev.hh_equal() ? " = " : " != ")
              << list_text(ev.hh_b) << "\n"
              << "K_0 rank: " << ev.k0_rank_a
              << (ev.k0_rank_a == ev.k0_rank_b ? " = " : " != ") << ev.k0_rank_b << "\n";
  }
  return r.verdict == Verdict::equivalent ? exit_ok : exit_negative;
}

int cmd_normal_form(unsigned m, std::size_t r, std::size_t s, bool json) {
  NormalFormSpec spec{m, r, s};
  BoundQuiver    q = make_normal_form(spec);
  if (json) {
    emit(make_report("normal-form", {q}, {{"quiver", to_json(q)}},
                     {{"m", m}, {"r", r}, {"s", s},
                      {"tail_length", spec.tail_length()},
                      {"phi_closed_form", to_json(phi_closed_form(spec))}}));
  } else {
    std::cout << serialize(q);
  }
  return exit_ok;
}

int cmd_fixture(std::string const& name, bool json) {
  if (name.empty()) {
    auto names = fixture_names();
    if (json) {
      emit(make_report("fixture", {}, {{"names", names}}));
    } else {
      for (auto const& n : names) {
        std::cout << n << "\n";
      }
    }
    return exit_ok;
  }
  BoundQuiver q = load("fixture:" + name);
  if (json) {
    emit(make_report("fixture", {q}, {{"quiver", to_json(q)}}));
  } else {
    std::cout << serialize(q);
  }
  return exit_ok;
}

int cmd_replay(std::string const& path, bool json) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open '" + path + "'");
  }
  Json j;
  try {
    j = Json::parse(in);
  } catch (Json::exception const& e) {
    throw InputError(path + ": " + e.what());
  }
  // Accept either a bare log or a reduce report.
  if (j.contains("result") && j["result"].contains("log")) {
    j = j["result"]["log"];
  }
  MutationLog log;
  try {
    log = mutation_log_from_json(j);
  } catch (std::invalid_argument const& e) {
    throw InputError(path + ": " + e.what());
  }
  std::string const problem = replay(log);
  if (json) {
    emit(make_report("replay", {log.start, log.end},
                     {{"ok", problem.empty()}, {"steps", log.steps.size()}},
                     {{"problem", problem}}));
  } else {
    std::cout << (problem.empty() ? paint("replay ok", true) : paint(problem, false))
              << " (" << log.steps.size() << " steps)\n";
  }
  return problem.empty() ? exit_ok : exit_negative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Derived-equivalence toolkit for gentle bound quivers"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "Emit a JSON report");

  auto add_json = [&](CLI::App* sub) { sub->add_flag("--json", json, "Emit a JSON report"); };

  std::string input;
  std::string input_b;

  auto* validate = app.add_subcommand("validate", "Check gentleness (G1-G3, loops)");
  validate->add_option("input", input, "Quiver file, fixture:<name> or fixture name")->required();
  add_json(validate);

  std::optional<unsigned> classify_m;
  auto* classify_cmd = app.add_subcommand("classify", "Branched / A-branched classification");
  classify_cmd->add_option("input", input)->required();
  classify_cmd->add_option("--m", classify_m, "Restrict to this m")->check(CLI::PositiveNumber);
  add_json(classify_cmd);

  std::string convention = "paper";
  auto* phi_cmd = app.add_subcommand("phi", "Thread invariant phi");
  phi_cmd->add_option("input", input)->required();
  phi_cmd->add_option("--thread-convention", convention, "Trivial-thread convention")
      ->check(CLI::IsMember({"paper", "ag"}));
  add_json(phi_cmd);

  std::size_t   max_degree = 0;
  std::uint64_t characteristic = 0;
  auto* hh = app.add_subcommand("hh", "Hochschild cohomology dimensions");
  hh->add_option("input", input)->required();
  hh->add_option("--max-degree", max_degree, "Highest degree")->required();
  hh->add_option("--char", characteristic, "Field characteristic: 0 or a prime");
  add_json(hh);

  bool  snf = false;
  auto* cartan = app.add_subcommand("cartan", "Cartan matrix and determinant");
  cartan->add_option("input", input)->required();
  cartan->add_flag("--snf", snf, "Also print the Smith normal form");
  add_json(cartan);

  std::string vertex;
  bool        co = false;
  auto* mutate_cmd = app.add_subcommand("mutate", "Mutate at an admissible vertex");
  mutate_cmd->add_option("input", input)->required();
  mutate_cmd->add_option("--vertex", vertex, "Vertex name")->required();
  mutate_cmd->add_flag("--co", co, "Dual mutation (cotilt)");
  add_json(mutate_cmd);

  unsigned    m = 1;
  std::size_t budget = default_search_budget;
  std::string log_path;
  auto* reduce = app.add_subcommand("reduce", "Remove off-cycle relations by mutations");
  reduce->add_option("input", input)->required();
  reduce->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  reduce->add_option("--budget", budget, "Search budget (states)");
  reduce->add_option("--log", log_path, "Write the mutation log (JSON) here");
  add_json(reduce);

  auto* equivalent = app.add_subcommand("equivalent", "Decide derived equivalence");
  equivalent->add_option("first", input)->required();
  equivalent->add_option("second", input_b)->required();
  equivalent->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  add_json(equivalent);

  std::size_t r = 0;
  std::size_t s = 1;
  auto* normal = app.add_subcommand("normal-form", "Print the normal form N_{r,s}");
  normal->add_option("--m", m)->required()->check(CLI::PositiveNumber);
  normal->add_option("--r", r)->required();
  normal->add_option("--s", s)->required();
  add_json(normal);

  std::string name;
  auto* fixture_cmd = app.add_subcommand("fixture", "Print a bundled fixture (no name: list)");
  fixture_cmd->add_option("name", name);
  add_json(fixture_cmd);

  auto* replay_cmd = app.add_subcommand("replay", "Replay a mutation log");
  replay_cmd->add_option("log", input, "JSON log or reduce report")->required();
  add_json(replay_cmd);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*validate) return cmd_validate(input, json);
    if (*classify_cmd) return cmd_classify(input, classify_m, json);
    if (*phi_cmd) return cmd_phi(input, convention, json);
    if (*hh) return cmd_hh(input, max_degree, characteristic, json);
    if (*cartan) return cmd_cartan(input, snf, json);
    if (*mutate_cmd) return cmd_mutate(input, vertex, co, json);
    if (*reduce) return cmd_reduce(input, m, budget, log_path, json);
    if (*equivalent) return cmd_equivalent(input, input_b, m, json);
    if (*normal) return cmd_normal_form(m, r, s, json);
    if (*fixture_cmd) return cmd_fixture(name, json);
    if (*replay_cmd) return cmd_replay(input, json);
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
  return exit_usage;
}
