// The normal forms N_{r,s}: r oriented (m+2)-cycles with full relations,
// chained at junction vertices, plus a relation-free linear tail.

#ifndef GENTLE_NORMAL_FORM_HPP_
#define GENTLE_NORMAL_FORM_HPP_

#include <cstddef>

#include "gentle/quiver.hpp"

namespace gentle {

struct NormalFormSpec {
  unsigned    m = 1;  // cycles have length m + 2
  std::size_t r = 0;  // number of cycles
  std::size_t s = 1;  // number of vertices

  // Length of the tail, s - 1 - r(m + 1).  Throws std::invalid_argument when
  // the spec is invalid.
  std::size_t tail_length() const;
  void        validate() const;

  auto operator<=>(NormalFormSpec const&) const = default;
};

// Vertex "v0" carries the tail u1 -> v0 ... (arrows b1..bn, b_t: u_t -> u_{t-1}).
// Cycle j (1-based) has arrows a<j>_0 .. a<j>_<m+1>, starting at v<j-1>; its
// vertex at position (m+3)/2 is v<j>, where cycle j+1 starts.
BoundQuiver make_normal_form(NormalFormSpec const& spec);

}  // namespace gentle

#endif  // GENTLE_NORMAL_FORM_HPP_
