// Exact ground fields: the rationals, or Z/p for a prime p.

#ifndef GENTLE_FIELD_HPP_
#define GENTLE_FIELD_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "gentle/cartan.hpp"

namespace gentle {

using Scalar = boost::multiprecision::cpp_rational;

class FieldSpec {
 public:
  FieldSpec() = default;

  // 0 selects the rationals; anything else must be a prime below 2^31.
  static FieldSpec with_characteristic(std::uint64_t p);
  static FieldSpec rationals() { return {}; }

  std::uint64_t characteristic() const noexcept { return p_; }
  std::string   describe() const;

  // Canonical representative: reduced rational, or an integer in [0, p).
  Scalar normalize(Scalar const& x) const;
  Scalar add(Scalar const& x, Scalar const& y) const;
  Scalar sub(Scalar const& x, Scalar const& y) const;
  Scalar mul(Scalar const& x, Scalar const& y) const;
  Scalar inverse(Scalar const& x) const;  // throws on zero
  bool   is_zero(Scalar const& x) const { return normalize(x) == 0; }

  friend bool operator==(FieldSpec const&, FieldSpec const&) = default;

 private:
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

bool is_prime(std::uint64_t n);

using ScalarMatrix = std::vector<std::vector<Scalar>>;

// Rank of an integer matrix read in the given field.  Characteristic 0 uses
// fraction-free elimination; characteristic p uses 64-bit modular elimination.
std::size_t rank_over(FieldSpec const& field, IntMatrix const& m);

// Some solution x of a x = b over the field, or std::nullopt.
std::optional<std::vector<Scalar>> solve(FieldSpec const&          field,
                                         ScalarMatrix              a,
                                         std::vector<Scalar> const& b);

}  // namespace gentle

#endif  // GENTLE_FIELD_HPP_
