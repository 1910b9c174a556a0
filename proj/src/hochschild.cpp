#include "gentle/hochschild.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace gentle {

namespace {

bool odd(long x) { return (x % 2 + 2) % 2 == 1; }

Path word(VertexId start, std::vector<ArrowId> arrows) {
  return Path{start, std::move(arrows)};
}

}  // namespace

std::vector<Path> gamma_set(BoundQuiver const& q, std::size_t n) {
  std::vector<Path> out;
  if (n == 0) {
    for (VertexId v = 0; v < q.vertex_count(); ++v) {
      out.push_back(word(v, {}));
    }
    return out;
  }
  std::vector<ArrowId> current;
  auto extend = [&](auto& self) -> void {
    if (current.size() == n) {
      out.push_back(word(q.source(current.front()), current));
      return;
    }
    for (ArrowId b : q.relation_successors(current.back())) {
      current.push_back(b);
      self(self);
      current.pop_back();
    }
  };
  for (ArrowId a = 0; a < q.arrow_count(); ++a) {
    current = {a};
    extend(extend);
  }
  std::sort(out.begin(), out.end());
  return out;
}

HochschildComplex::HochschildComplex(BoundQuiver q, FieldSpec field)
    : q_(std::move(q)), field_(field), paths_(nonzero_paths(q_)) {
  for (std::size_t i = 0; i < paths_.size(); ++i) {
    path_index_.emplace(paths_[i], i);
  }
}

std::optional<std::size_t> HochschildComplex::path_index(Path const& p) const {
  auto it = path_index_.find(p);
  if (it == path_index_.end()) {
    return std::nullopt;
  }
  return it->second;
}

std::vector<Path> HochschildComplex::gamma(std::size_t n) const {
  return gamma_set(q_, n);
}

std::vector<BasisElement> HochschildComplex::basis(std::size_t n) const {
  std::vector<Path> const   g = gamma(n);
  std::vector<BasisElement> out;
  for (std::size_t i = 0; i < g.size(); ++i) {
    VertexId const s = g[i].source;
    VertexId const t = path_target(q_, g[i]);
    for (std::size_t p = 0; p < paths_.size(); ++p) {
      if (paths_[p].source == s && path_target(q_, paths_[p]) == t) {
        out.push_back({i, p});
      }
    }
  }
  return out;
}

std::size_t HochschildComplex::dimension(std::size_t n) const {
  return basis(n).size();
}

IntMatrix HochschildComplex::differential(std::size_t n) const {
  std::vector<Path> const         src_gamma = gamma(n);
  std::vector<BasisElement> const cols      = basis(n);
  std::vector<Path> const         dst_gamma = gamma(n + 1);
  std::vector<BasisElement> const rows      = basis(n + 1);

  std::map<Path, std::size_t> dst_index;
  for (std::size_t i = 0; i < dst_gamma.size(); ++i) {
    dst_index.emplace(dst_gamma[i], i);
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    row_of.emplace(std::pair{rows[r].gamma, rows[r].path}, r);
  }

  IntMatrix m(rows.size(), std::vector<BigInt>(cols.size(), 0));
  int const right_sign = odd(static_cast<long>(n) + 1) ? -1 : 1;
  for (std::size_t c = 0; c < cols.size(); ++c) {
    Path const& g = src_gamma[cols[c].gamma];
    Path const& p = paths_[cols[c].path];
    VertexId const s = g.source;
    VertexId const t = path_target(q_, g);

    auto deposit = [&](Path const& longer, std::optional<Path> const& product,
                       int sign) {
      if (!product) {
        return;
      }
      std::size_t gi = dst_index.at(longer);
      std::size_t pi = path_index(*product).value();
      m[row_of.at({gi, pi})][c] += sign;
    };
    for (ArrowId a : q_.in_arrows(s)) {
      if (n > 0 && !q_.is_relation(a, g.arrows.front())) {
        continue;
      }
      std::vector<ArrowId> w{a};
      w.insert(w.end(), g.arrows.begin(), g.arrows.end());
      deposit(word(q_.source(a), std::move(w)),
              gentle::multiply(q_, word(q_.source(a), {a}), p), 1);
    }
    for (ArrowId a : q_.out_arrows(t)) {
      if (n > 0 && !q_.is_relation(g.arrows.back(), a)) {
        continue;
      }
      std::vector<ArrowId> w = g.arrows;
      w.push_back(a);
      deposit(word(s, std::move(w)), gentle::multiply(q_, p, word(t, {a})),
              right_sign);
    }
  }
  return m;
}

std::size_t HochschildComplex::differential_rank(std::size_t n) const {
  return rank_over(field_, differential(n));
}

CohomologyReport HochschildComplex::dims(std::size_t max_degree) const {
  CohomologyReport r;
  r.field = field_;
  for (std::size_t n = 0; n <= max_degree + 1; ++n) {
    r.cochain_dims.push_back(dimension(n));
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    r.ranks.push_back(differential_rank(n));
  }
  for (std::size_t n = 0; n <= max_degree; ++n) {
    std::size_t const before = n == 0 ? 0 : r.ranks[n - 1];
    r.dims.push_back(r.cochain_dims[n] - r.ranks[n] - before);
  }
  return r;
}

CohomologyReport hh_dims(BoundQuiver const& q, std::size_t max_degree,
                         FieldSpec const& field) {
  return HochschildComplex(q, field).dims(max_degree);
}

Cochain HochschildComplex::zero(std::size_t n) const {
  return Cochain{n, std::vector<Scalar>(dimension(n), Scalar(0))};
}

void HochschildComplex::check(Cochain const& f) const {
  if (f.coefficients.size() != dimension(f.degree)) {
    throw std::invalid_argument("cochain of degree " + std::to_string(f.degree)
                                + " has the wrong number of coefficients");
  }
}

Cochain HochschildComplex::from_function(
    std::size_t n, std::function<AlgebraElement(Path const&)> const& value) const {
  std::vector<Path> const         g = gamma(n);
  std::vector<BasisElement> const b = basis(n);
  Cochain                         out{n, std::vector<Scalar>(b.size(), Scalar(0))};
  std::vector<AlgebraElement>     values(g.size());
  for (std::size_t i = 0; i < g.size(); ++i) {
    values[i] = value(g[i]);
  }
  for (std::size_t k = 0; k < b.size(); ++k) {
    auto const& v  = values[b[k].gamma];
    auto        it = v.find(b[k].path);
    if (it != v.end()) {
      out.coefficients[k] = field_.normalize(it->second);
    }
  }
  // Components outside the parallel paths would be silently dropped.
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (auto const& [p, c] : values[i]) {
      if (field_.is_zero(c)) {
        continue;
      }
      if (paths_[p].source != g[i].source
          || path_target(q_, paths_[p]) != path_target(q_, g[i])) {
        throw std::logic_error("cochain value is not parallel to its argument");
      }
    }
  }
  return out;
}

Cochain HochschildComplex::from_values(
    std::size_t n, std::vector<std::pair<Path, AlgebraElement>> const& values) const {
  std::map<Path, AlgebraElement> table(values.begin(), values.end());
  std::vector<Path> const        g = gamma(n);
  for (auto const& [p, v] : table) {
    if (!std::binary_search(g.begin(), g.end(), p)) {
      throw std::invalid_argument("'" + to_string(q_, p) + "' is not in Gamma_"
                                  + std::to_string(n));
    }
  }
  return from_function(n, [&](Path const& x) {
    auto it = table.find(x);
    return it == table.end() ? AlgebraElement{} : it->second;
  });
}

AlgebraElement HochschildComplex::evaluate(Cochain const& f, Path const& x) const {
  check(f);
  std::vector<Path> const         g = gamma(f.degree);
  std::vector<BasisElement> const b = basis(f.degree);
  auto it = std::lower_bound(g.begin(), g.end(), x);
  AlgebraElement out;
  if (it == g.end() || *it != x) {
    return out;
  }
  std::size_t const gi = static_cast<std::size_t>(it - g.begin());
  for (std::size_t k = 0; k < b.size(); ++k) {
    if (b[k].gamma == gi && !field_.is_zero(f.coefficients[k])) {
      out[b[k].path] = f.coefficients[k];
    }
  }
  return out;
}

AlgebraElement HochschildComplex::multiply(AlgebraElement const& x,
                                           AlgebraElement const& y) const {
  AlgebraElement out;
  for (auto const& [p, a] : x) {
    for (auto const& [r, b] : y) {
      auto prod = gentle::multiply(q_, paths_[p], paths_[r]);
      if (!prod) {
        continue;
      }
      std::size_t k = path_index(*prod).value();
      out[k]        = field_.add(out[k], field_.mul(a, b));
    }
  }
  std::erase_if(out, [&](auto const& e) { return field_.is_zero(e.second); });
  return out;
}

Cochain HochschildComplex::coboundary(Cochain const& f) const {
  check(f);
  IntMatrix const d = differential(f.degree);
  Cochain         out{f.degree + 1, std::vector<Scalar>(d.size(), Scalar(0))};
  for (std::size_t r = 0; r < d.size(); ++r) {
    Scalar acc = 0;
    for (std::size_t c = 0; c < f.coefficients.size(); ++c) {
      if (d[r][c] != 0) {
        acc += Scalar(d[r][c]) * f.coefficients[c];
      }
    }
    out.coefficients[r] = field_.normalize(acc);
  }
  return out;
}

bool HochschildComplex::is_zero(Cochain const& f) const {
  return std::all_of(f.coefficients.begin(), f.coefficients.end(),
                     [&](Scalar const& x) { return field_.is_zero(x); });
}

bool HochschildComplex::is_cocycle(Cochain const& f) const {
  return is_zero(coboundary(f));
}

namespace {

ScalarMatrix to_scalar(IntMatrix const& m) {
  ScalarMatrix out;
  for (auto const& row : m) {
    out.emplace_back(row.begin(), row.end());
  }
  return out;
}

}  // namespace

bool HochschildComplex::is_coboundary(Cochain const& f) const {
  if (!is_cocycle(f)) {
    throw std::invalid_argument("is_coboundary: input is not a cocycle");
  }
  if (f.degree == 0) {
    return is_zero(f);
  }
  return solve(field_, to_scalar(differential(f.degree - 1)), f.coefficients)
      .has_value();
}

std::optional<Scalar> HochschildComplex::class_ratio(Cochain const& f,
                                                     Cochain const& g) const {
  if (f.degree != g.degree) {
    throw std::invalid_argument("class_ratio: degree mismatch");
  }
  if (!is_cocycle(f) || !is_cocycle(g)) {
    throw std::invalid_argument("class_ratio: inputs must be cocycles");
  }
  ScalarMatrix a;
  if (f.degree == 0) {
    a.assign(g.coefficients.size(), {});
  } else {
    a = to_scalar(differential(f.degree - 1));
  }
  for (std::size_t r = 0; r < a.size(); ++r) {
    a[r].push_back(g.coefficients[r]);
  }
  auto x = solve(field_, a, f.coefficients);
  if (!x) {
    return std::nullopt;
  }
  if (is_coboundary(g)) {
    return Scalar(0);
  }
  return x->back();
}

Cochain HochschildComplex::add(Cochain const& f, Cochain const& g,
                               Scalar const& scale) const {
  check(f);
  check(g);
  if (f.degree != g.degree) {
    throw std::invalid_argument("add: degree mismatch");
  }
  Cochain out = f;
  for (std::size_t k = 0; k < out.coefficients.size(); ++k) {
    out.coefficients[k] =
        field_.add(out.coefficients[k], field_.mul(scale, g.coefficients[k]));
  }
  return out;
}

Cochain HochschildComplex::cup(Cochain const& f, Cochain const& g) const {
  check(f);
  check(g);
  std::size_t const n = f.degree;
  std::size_t const m = g.degree;
  return from_function(n + m, [&](Path const& x) {
    VertexId mid = x.source;
    for (std::size_t k = 0; k < n; ++k) {
      mid = q_.target(x.arrows[k]);
    }
    Path left{x.source, {x.arrows.begin(), x.arrows.begin() + static_cast<long>(n)}};
    Path right{mid, {x.arrows.begin() + static_cast<long>(n), x.arrows.end()}};
    return multiply(evaluate(f, left), evaluate(g, right));
  });
}

Cochain HochschildComplex::circle_i(Cochain const& f, Cochain const& g,
                                    std::size_t i) const {
  check(f);
  check(g);
  std::size_t const n = f.degree;
  std::size_t const m = g.degree;
  if (i < 1 || i > n) {
    throw std::invalid_argument("circle_i: position out of range");
  }
  std::vector<Path> const gamma_n = gamma(n);
  return from_function(n + m - 1, [&](Path const& x) {
    // Consumed subword x[i-1, i-1+m), starting at vertex `at`.
    VertexId at = x.source;
    for (std::size_t k = 0; k + 1 < i; ++k) {
      at = q_.target(x.arrows[k]);
    }
    auto first = x.arrows.begin() + static_cast<long>(i - 1);
    Path inner{at, {first, first + static_cast<long>(m)}};
    AlgebraElement out;
    for (auto const& [p, c] : evaluate(g, inner)) {
      if (paths_[p].arrows.size() != 1) {
        continue;
      }
      std::vector<ArrowId> w(x.arrows.begin(), first);
      w.push_back(paths_[p].arrows.front());
      w.insert(w.end(), first + static_cast<long>(m), x.arrows.end());
      Path substituted{x.source, std::move(w)};
      if (!std::binary_search(gamma_n.begin(), gamma_n.end(), substituted)) {
        continue;
      }
      for (auto const& [r, d] : evaluate(f, substituted)) {
        out[r] = field_.add(out[r], field_.mul(c, d));
      }
    }
    return out;
  });
}

Cochain HochschildComplex::circle(Cochain const& f, Cochain const& g) const {
  std::size_t const n = f.degree;
  std::size_t const m = g.degree;
  if (n + m == 0) {
    throw std::invalid_argument("circle product of two degree-0 cochains");
  }
  Cochain out = zero(n + m - 1);
  for (std::size_t i = 1; i <= n; ++i) {
    long const e = static_cast<long>(i - 1) * (static_cast<long>(m) - 1);
    out = add(out, circle_i(f, g, i), odd(e) ? -1 : 1);
  }
  return out;
}

Cochain HochschildComplex::bracket(Cochain const& f, Cochain const& g) const {
  long const e = (static_cast<long>(f.degree) - 1) * (static_cast<long>(g.degree) - 1);
  return add(circle(f, g), circle(g, f), odd(e) ? 1 : -1);
}

Cochain cycle_generator_f(HochschildComplex const& c, Cycle const& cycle,
                          std::size_t d) {
  std::size_t const L = cycle.size();
  if (L == 0 || d % L != 0) {
    throw std::invalid_argument("generator degree must be a multiple of the cycle length");
  }
  BoundQuiver const& q = c.quiver();
  std::vector<std::pair<Path, AlgebraElement>> values;
  for (std::size_t k = 0; k < L; ++k) {
    Path w{q.source(cycle[k]), {}};
    for (std::size_t j = 0; j < d; ++j) {
      w.arrows.push_back(cycle[(k + j) % L]);
    }
    std::size_t idx = static_cast<std::size_t>(
        std::find(c.paths().begin(), c.paths().end(), Path{w.source, {}})
        - c.paths().begin());
    values.push_back({std::move(w), AlgebraElement{{idx, Scalar(1)}}});
  }
  return c.from_values(d, values);
}

Cochain cycle_generator_g(HochschildComplex const& c, ArrowId arrow) {
  BoundQuiver const& q = c.quiver();
  Path               a{q.source(arrow), {arrow}};
  std::size_t        idx = static_cast<std::size_t>(
      std::find(c.paths().begin(), c.paths().end(), a) - c.paths().begin());
  return c.from_values(1, {{a, AlgebraElement{{idx, Scalar(1)}}}});
}

}  // namespace gentle
