// Isomorphism-invariant certificates for bound quivers, by colour refinement
// and individualization over the graph whose nodes are vertices and arrows.

#ifndef GENTLE_CANONICAL_HPP_
#define GENTLE_CANONICAL_HPP_

#include <string>

#include "gentle/quiver.hpp"

namespace gentle {

// Equal for two bound quivers iff they are isomorphic (names ignored).
std::string canonical_form(BoundQuiver const& q);
std::string canonical_digest(BoundQuiver const& q);
bool        isomorphic(BoundQuiver const& a, BoundQuiver const& b);

}  // namespace gentle

#endif  // GENTLE_CANONICAL_HPP_
