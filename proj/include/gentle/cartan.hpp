// Cartan matrices of finite-dimensional bound quivers and the integer linear
// algebra used to compare them up to unimodular equivalence.

#ifndef GENTLE_CARTAN_HPP_
#define GENTLE_CARTAN_HPP_

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/quiver.hpp"

namespace gentle {

using BigInt    = boost::multiprecision::cpp_int;
using IntMatrix = std::vector<std::vector<BigInt>>;

struct CartanMatrix {
  std::vector<std::string>       order;    // vertex names, row/column order
  std::vector<std::vector<long>> entries;  // (x, y): nonzero paths x -> y
};

// Path counts by dynamic programming over the free-composition graph.
// Throws std::domain_error for infinite-dimensional input.
CartanMatrix cartan_matrix(BoundQuiver const& q);

IntMatrix to_int_matrix(std::vector<std::vector<long>> const& m);

struct SmithForm {
  std::vector<BigInt> divisors;  // d_1 | d_2 | ... , nonnegative
  BigInt              det_abs;   // |det|, zero for singular input
};

// Elementary divisors of a square integer matrix.  Two integer matrices are
// unimodular equivalent iff their Smith forms agree.
SmithForm smith_normal_form(IntMatrix m);

// Exact determinant by fraction-free (Bareiss) elimination.
BigInt determinant(IntMatrix m);

// Rank over the rationals, fraction-free.
std::size_t rank(IntMatrix m);

}  // namespace gentle

#endif  // GENTLE_CARTAN_HPP_
