#include "gentle/phi.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

namespace gentle {

namespace {

// Union-find over the variables sigma(a) = 2a, epsilon(a) = 2a + 1, tracking
// the parity of each variable relative to its root.
class ParityForest {
 public:
  explicit ParityForest(std::size_t n) : parent_(n), parity_(n, 0) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::pair<std::size_t, int> find(std::size_t x) {
    int p = 0;
    std::size_t root = x;
    while (parent_[root] != root) {
      p ^= parity_[root];
      root = parent_[root];
    }
    // Path compression, keeping parities relative to the root.
    int acc = p;
    while (parent_[x] != root) {
      std::size_t next = parent_[x];
      int         px   = parity_[x];
      parent_[x] = root;
      parity_[x] = acc;
      acc ^= px;
      x = next;
    }
    return {root, p};
  }

  // Returns false on contradiction.
  bool join(std::size_t x, std::size_t y, int parity) {
    auto [rx, px] = find(x);
    auto [ry, py] = find(y);
    if (rx == ry) {
      return (px ^ py) == parity;
    }
    if (ry < rx) {
      std::swap(rx, ry);
    }
    parent_[ry] = rx;
    parity_[ry] = px ^ py ^ parity;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int>         parity_;
};

std::string arrow_word(BoundQuiver const& q, std::vector<ArrowId> const& w) {
  std::string out;
  for (ArrowId a : w) {
    out += (out.empty() ? "" : " ") + q.arrow_name(a);
  }
  return out;
}

}  // namespace

SignAssignment assign_signs(BoundQuiver const& q, std::optional<std::uint64_t> seed) {
  std::size_t const n = q.arrow_count();
  ParityForest      forest(2 * n);
  auto sigma   = [](ArrowId a) { return 2 * a; };
  auto epsilon = [](ArrowId a) { return 2 * a + 1; };
  auto require = [&](std::size_t x, std::size_t y, std::string const& why) {
    if (!forest.join(x, y, 1)) {
      throw std::domain_error("sign constraints are inconsistent at " + why);
    }
  };
  for (VertexId v = 0; v < q.vertex_count(); ++v) {
    auto out = q.out_arrows(v);
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      require(sigma(out[i]), sigma(out[i + 1]), "vertex " + q.vertex_name(v));
    }
    auto in = q.in_arrows(v);
    for (std::size_t i = 0; i + 1 < in.size(); ++i) {
      require(epsilon(in[i]), epsilon(in[i + 1]), "vertex " + q.vertex_name(v));
    }
  }
  for (ArrowId a = 0; a < n; ++a) {
    for (ArrowId b : q.free_successors(a)) {
      require(sigma(b), epsilon(a),
              "path " + q.arrow_name(a) + " " + q.arrow_name(b));
    }
  }

  std::vector<int>    root_value(2 * n, 0);
  std::mt19937_64     rng(seed.value_or(0));
  for (std::size_t x = 0; x < 2 * n; ++x) {
    auto [root, p] = forest.find(x);
    if (root == x) {
      // Roots are the least variable of their class.
      root_value[x] = seed ? (rng() & 1U ? 1 : -1) : 1;
    }
  }
  SignAssignment s;
  s.sigma.resize(n);
  s.epsilon.resize(n);
  for (ArrowId a = 0; a < n; ++a) {
    auto [rs, ps] = forest.find(sigma(a));
    auto [re, pe] = forest.find(epsilon(a));
    s.sigma[a]    = ps ? -root_value[rs] : root_value[rs];
    s.epsilon[a]  = pe ? -root_value[re] : root_value[re];
  }
  return s;
}

std::string to_string(BoundQuiver const& q, Thread const& t) {
  std::string out = t.kind == ThreadKind::permitted ? "H[" : "P[";
  if (t.trivial()) {
    out += "e_" + q.vertex_name(t.at);
    if (t.slot != Slot::none) {
      out += t.slot == Slot::plus ? "+" : "-";
    }
  } else {
    out += arrow_word(q, t.body);
  }
  out += "]";
  return out;
}

std::vector<Thread> threads(BoundQuiver const&    q,
                            SignAssignment const& signs,
                            ThreadConvention      convention) {
  std::vector<Thread> permitted;
  std::vector<Thread> forbidden;

  auto nontrivial = [&](ThreadKind kind, std::vector<ArrowId> body) {
    Thread t;
    t.kind    = kind;
    t.sigma   = signs.sigma[body.front()];
    t.epsilon = signs.epsilon[body.back()];
    t.source  = q.source(body.front());
    t.target  = q.target(body.back());
    t.body    = std::move(body);
    return t;
  };

  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (!q.free_predecessors(a).empty()) {
      continue;
    }
    std::vector<ArrowId> body{a};
    for (auto next = q.free_successors(a); !next.empty();
         next      = q.free_successors(body.back())) {
      if (body.size() > q.arrow_count()) {
        throw std::domain_error("permitted thread does not terminate; the "
                                "algebra is infinite dimensional");
      }
      body.push_back(next.front());
    }
    permitted.push_back(nontrivial(ThreadKind::permitted, std::move(body)));
  }

  std::vector<bool> on_cycle(q.arrow_count(), false);
  for (auto const& c : relation_cycles(q)) {
    for (ArrowId a : c) {
      on_cycle[a] = true;
    }
  }
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    if (on_cycle[a] || !q.relation_predecessors(a).empty()) {
      continue;
    }
    std::vector<ArrowId> body{a};
    while (!q.relation_successors(body.back()).empty()) {
      body.push_back(q.relation_successors(body.back()).front());
    }
    forbidden.push_back(nontrivial(ThreadKind::forbidden, std::move(body)));
  }

  for (VertexId x = 0; x < q.vertex_count(); ++x) {
    auto in  = q.in_arrows(x);
    auto out = q.out_arrows(x);
    if (in.size() > 1 || out.size() > 1) {
      continue;
    }
    auto trivial = [&](ThreadKind kind, int sg, int ep, Slot slot) {
      Thread t;
      t.kind    = kind;
      t.at      = x;
      t.source  = x;
      t.target  = x;
      t.sigma   = sg;
      t.epsilon = ep;
      t.slot    = slot;
      (kind == ThreadKind::permitted ? permitted : forbidden).push_back(t);
    };
    if (in.empty() && out.empty()) {
      trivial(ThreadKind::permitted, 1, -1, Slot::plus);
      trivial(ThreadKind::permitted, -1, 1, Slot::minus);
      trivial(ThreadKind::forbidden, 1, 1, Slot::plus);
      trivial(ThreadKind::forbidden, -1, -1, Slot::minus);
      continue;
    }
    bool has_h = true;
    bool has_p = true;
    if (!in.empty() && !out.empty()) {
      bool through_ideal = q.is_relation(in[0], out[0]);
      if (convention == ThreadConvention::ag) {
        through_ideal = !through_ideal;
      }
      has_h = !through_ideal;
      has_p = through_ideal;
    }
    for (ThreadKind kind : {ThreadKind::permitted, ThreadKind::forbidden}) {
      if ((kind == ThreadKind::permitted && !has_h)
          || (kind == ThreadKind::forbidden && !has_p)) {
        continue;
      }
      int const fill = kind == ThreadKind::permitted ? -1 : 1;  // sigma = fill * epsilon
      int       sg   = 0;
      int       ep   = 0;
      if (!in.empty()) {
        ep = -signs.epsilon[in[0]];
      }
      if (!out.empty()) {
        sg = -signs.sigma[out[0]];
      }
      if (in.empty()) {
        ep = fill * sg;
      }
      if (out.empty()) {
        sg = fill * ep;
      }
      trivial(kind, sg, ep, Slot::none);
    }
  }

  auto key = [](Thread const& t) {
    return std::tuple(t.trivial(), t.body, t.at, t.slot);
  };
  auto by_key = [&](Thread const& x, Thread const& y) { return key(x) < key(y); };
  std::sort(permitted.begin(), permitted.end(), by_key);
  std::sort(forbidden.begin(), forbidden.end(), by_key);
  permitted.insert(permitted.end(), forbidden.begin(), forbidden.end());
  return permitted;
}

PhiInvariant::PhiInvariant(std::map<Pair, std::size_t> counts) {
  for (auto const& [p, c] : counts) {
    add(p, c);
  }
}

void PhiInvariant::add(Pair p, std::size_t multiplicity) {
  if (multiplicity > 0) {
    counts_[p] += multiplicity;
  }
}

std::size_t PhiInvariant::weight() const {
  std::size_t total = 0;
  for (auto const& [p, c] : counts_) {
    total += p.second * c;
  }
  return total;
}

std::string PhiInvariant::to_string() const {
  if (counts_.empty()) {
    return "0";
  }
  std::string out;
  for (auto const& [p, c] : counts_) {
    if (!out.empty()) {
      out += " + ";
    }
    out += std::to_string(c) + "·(" + std::to_string(p.first) + ","
           + std::to_string(p.second) + ")";
  }
  return out;
}

PhiComputation phi_trace(BoundQuiver const&           q,
                         ThreadConvention             convention,
                         std::optional<std::uint64_t> seed) {
  if (!is_gentle(q)) {
    throw std::domain_error("phi requires a gentle bound quiver");
  }
  if (!is_finite_dimensional(q)) {
    throw std::domain_error("phi requires a finite-dimensional bound quiver");
  }
  PhiComputation result;
  SignAssignment signs = assign_signs(q, seed);
  result.threads       = threads(q, signs, convention);
  auto const& all      = result.threads;

  std::map<std::pair<VertexId, int>, std::vector<std::size_t>> forbidden_at;
  std::map<std::pair<VertexId, int>, std::vector<std::size_t>> permitted_at;
  std::vector<std::size_t>                                     permitted;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (all[i].kind == ThreadKind::forbidden) {
      forbidden_at[{all[i].target, all[i].epsilon}].push_back(i);
    } else {
      permitted_at[{all[i].source, all[i].sigma}].push_back(i);
      permitted.push_back(i);
    }
  }
  auto unique = [&](auto const& table, std::pair<VertexId, int> key,
                    std::size_t from, char const* what) {
    auto it = table.find(key);
    std::size_t found = it == table.end() ? 0 : it->second.size();
    if (found != 1) {
      throw std::runtime_error(
          "thread pairing failed after " + to_string(q, all[from]) + ": "
          + std::to_string(found) + " candidate " + what + " threads at vertex "
          + q.vertex_name(key.first) + " with sign "
          + (key.second > 0 ? "+" : "-"));
    }
    return it->second.front();
  };

  std::vector<bool> used(all.size(), false);
  for (std::size_t start : permitted) {
    if (used[start]) {
      continue;
    }
    PhiOrbit    orbit;
    std::size_t h = start;
    while (true) {
      used[h] = true;
      orbit.permitted.push_back(h);
      std::size_t p = unique(forbidden_at, {all[h].target, -all[h].epsilon}, h,
                             "forbidden");
      if (used[p]) {
        throw std::runtime_error("thread pairing reuses " + to_string(q, all[p]));
      }
      used[p] = true;
      orbit.forbidden.push_back(p);
      std::size_t next = unique(permitted_at, {all[p].source, -all[p].sigma}, p,
                                "permitted");
      if (next == start) {
        break;
      }
      if (used[next]) {
        throw std::runtime_error("thread pairing reuses " + to_string(q, all[next]));
      }
      h = next;
    }
    std::size_t len = 0;
    for (std::size_t p : orbit.forbidden) {
      len += all[p].length();
    }
    orbit.pair = {orbit.permitted.size(), len};
    result.value.add(orbit.pair);
    result.orbits.push_back(std::move(orbit));
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (!used[i]) {
      throw std::runtime_error("thread pairing left " + to_string(q, all[i])
                               + " unmatched");
    }
  }
  result.relation_cycles = relation_cycles(q);
  for (auto const& c : result.relation_cycles) {
    result.value.add({0, c.size()});
  }
  if (result.value.weight() != q.arrow_count()) {
    throw std::logic_error("phi weight " + std::to_string(result.value.weight())
                           + " differs from the arrow count "
                           + std::to_string(q.arrow_count()));
  }
  return result;
}

PhiInvariant phi(BoundQuiver const& q, ThreadConvention convention,
                 std::optional<std::uint64_t> seed) {
  return phi_trace(q, convention, seed).value;
}

PhiInvariant phi_closed_form(NormalFormSpec const& spec) {
  std::size_t const n = spec.tail_length();
  PhiInvariant      result;
  result.add({0, spec.m + 2}, spec.r);
  result.add({spec.s + 1 - spec.r, n});
  return result;
}

bool phi_equal(PhiInvariant const& p, PhiInvariant const& q) { return p == q; }

}  // namespace gentle
