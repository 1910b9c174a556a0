// Bound quivers transcribed from worked examples, shipped as data/fixtures/*.quiver
// and compiled into the library.

#ifndef GENTLE_FIXTURES_HPP_
#define GENTLE_FIXTURES_HPP_

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

std::vector<std::string> fixture_names();
std::string              fixture_text(std::string_view name);  // throws std::out_of_range
BoundQuiver              fixture(std::string_view name);       // throws std::out_of_range

namespace detail {
std::vector<std::pair<std::string_view, std::string_view>> const& embedded_fixtures();
}

}  // namespace gentle

#endif  // GENTLE_FIXTURES_HPP_
