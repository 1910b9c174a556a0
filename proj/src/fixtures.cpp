#include "gentle/fixtures.hpp"

#include <stdexcept>

#include "gentle/io.hpp"

namespace gentle {

std::vector<std::string> fixture_names() {
  std::vector<std::string> names;
  for (auto const& [name, text] : detail::embedded_fixtures()) {
    names.emplace_back(name);
  }
  return names;
}

std::string fixture_text(std::string_view name) {
  for (auto const& [n, text] : detail::embedded_fixtures()) {
    if (n == name) {
      return std::string(text);
    }
  }
  std::string known;
  for (auto const& n : fixture_names()) {
    known += (known.empty() ? "" : ", ") + n;
  }
  throw std::out_of_range("unknown fixture '" + std::string(name)
                          + "' (known: " + known + ")");
}

BoundQuiver fixture(std::string_view name) {
  return parse_quiver(fixture_text(name));
}

}  // namespace gentle
