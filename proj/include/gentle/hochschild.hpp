// Hochschild cohomology of quadratic monomial algebras kQ/I through the
// complex whose n-cochains are E-bimodule maps kGamma_n -> A, where Gamma_n is
// the set of arrow words a_1 ... a_n with every a_i a_{i+1} in I.

#ifndef GENTLE_HOCHSCHILD_HPP_
#define GENTLE_HOCHSCHILD_HPP_

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "gentle/cartan.hpp"
#include "gentle/field.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// Gamma_0 = trivial paths, Gamma_1 = arrows, Gamma_n = relation walks.
// Elements are in lexicographic (source, word) order.
std::vector<Path> gamma_set(BoundQuiver const& q, std::size_t n);

struct BasisElement {
  std::size_t gamma;  // index into gamma_set(q, n)
  std::size_t path;   // index into HochschildComplex::paths()
};

struct Cochain {
  std::size_t         degree = 0;
  std::vector<Scalar> coefficients;  // over HochschildComplex::basis(degree)
};

// An element of A as coefficients on nonzero paths.
using AlgebraElement = std::map<std::size_t, Scalar>;

struct CohomologyReport {
  FieldSpec                field;
  std::vector<std::size_t> dims;         // dim HH^n, n = 0..max_degree
  std::vector<std::size_t> ranks;        // rank delta^n, n = 0..max_degree
  std::vector<std::size_t> cochain_dims; // dim C^n, n = 0..max_degree + 1
};

class HochschildComplex {
 public:
  // Throws std::domain_error for infinite-dimensional input.
  HochschildComplex(BoundQuiver q, FieldSpec field = {});

  BoundQuiver const&       quiver() const noexcept { return q_; }
  FieldSpec const&         field() const noexcept { return field_; }
  std::vector<Path> const& paths() const noexcept { return paths_; }

  std::vector<Path>         gamma(std::size_t n) const;
  std::vector<BasisElement> basis(std::size_t n) const;
  std::size_t               dimension(std::size_t n) const;

  // Matrix of delta^n: rows basis(n + 1), columns basis(n).
  IntMatrix   differential(std::size_t n) const;
  std::size_t differential_rank(std::size_t n) const;

  CohomologyReport dims(std::size_t max_degree) const;

  Cochain zero(std::size_t n) const;
  // Cochain with f(gamma) = value for each listed gamma, zero elsewhere.
  Cochain from_values(std::size_t n,
                      std::vector<std::pair<Path, AlgebraElement>> const& values) const;
  AlgebraElement evaluate(Cochain const& f, Path const& gamma) const;

  Cochain coboundary(Cochain const& f) const;
  bool    is_zero(Cochain const& f) const;
  bool    is_cocycle(Cochain const& f) const;
  // Throws std::invalid_argument when f is not a cocycle.
  bool is_coboundary(Cochain const& f) const;
  // Some s with [f] = s [g]; std::nullopt when none exists.  When g is a
  // coboundary and f is too, returns 0.  Throws unless both are cocycles.
  std::optional<Scalar> class_ratio(Cochain const& f, Cochain const& g) const;

  Cochain cup(Cochain const& f, Cochain const& g) const;
  Cochain circle_i(Cochain const& f, Cochain const& g, std::size_t i) const;
  Cochain circle(Cochain const& f, Cochain const& g) const;
  Cochain bracket(Cochain const& f, Cochain const& g) const;

  Cochain add(Cochain const& f, Cochain const& g, Scalar const& scale = 1) const;

 private:
  std::optional<std::size_t> path_index(Path const& p) const;
  AlgebraElement             multiply(AlgebraElement const& x,
                                      AlgebraElement const& y) const;
  Cochain                    from_function(
      std::size_t n, std::function<AlgebraElement(Path const&)> const& value) const;
  void check(Cochain const& f) const;

  BoundQuiver                  q_;
  FieldSpec                    field_;
  std::vector<Path>            paths_;
  std::map<Path, std::size_t>  path_index_;
};

CohomologyReport hh_dims(BoundQuiver const& q, std::size_t max_degree,
                         FieldSpec const& field = {});

// Cochain generators on a cycle with full relations: F sends each relation walk
// of length d around the cycle to the idempotent at its source; G sends one
// arrow of the cycle to itself.
Cochain cycle_generator_f(HochschildComplex const& c, Cycle const& cycle,
                          std::size_t d);
Cochain cycle_generator_g(HochschildComplex const& c, ArrowId arrow);

}  // namespace gentle

#endif  // GENTLE_HOCHSCHILD_HPP_
