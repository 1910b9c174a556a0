#include "gentle/normal_form.hpp"

#include <stdexcept>
#include <string>

namespace gentle {

void NormalFormSpec::validate() const {
  if (m < 1) {
    throw std::invalid_argument("normal form needs m >= 1");
  }
  if (s < 1) {
    throw std::invalid_argument("normal form needs s >= 1");
  }
  if (s < r * (m + 1) + 1) {
    throw std::invalid_argument(
        "normal form needs s >= r(m+1) + 1, got m=" + std::to_string(m)
        + " r=" + std::to_string(r) + " s=" + std::to_string(s));
  }
}

std::size_t NormalFormSpec::tail_length() const {
  validate();
  return s - 1 - r * (m + 1);
}

BoundQuiver make_normal_form(NormalFormSpec const& spec) {
  std::size_t const n = spec.tail_length();
  std::size_t const L = spec.m + 2;
  std::size_t const junction = (spec.m + 3) / 2;

  std::vector<std::string> vertices{"v0"};
  std::vector<Arrow>       arrows;
  std::vector<Relation>    relations;

  for (std::size_t t = 1; t <= n; ++t) {
    vertices.push_back("u" + std::to_string(t));
    std::string to = t == 1 ? "v0" : "u" + std::to_string(t - 1);
    arrows.push_back({"b" + std::to_string(t), "u" + std::to_string(t), to});
  }
  for (std::size_t j = 1; j <= spec.r; ++j) {
    std::string const tag = std::to_string(j);
    std::vector<std::string> cyc(L);
    cyc[0] = "v" + std::to_string(j - 1);
    for (std::size_t i = 1; i < L; ++i) {
      cyc[i] = i == junction ? "v" + tag : "c" + tag + "_" + std::to_string(i);
      vertices.push_back(cyc[i]);
    }
    for (std::size_t k = 0; k < L; ++k) {
      arrows.push_back({"a" + tag + "_" + std::to_string(k), cyc[k],
                        cyc[(k + 1) % L]});
    }
    for (std::size_t k = 0; k < L; ++k) {
      relations.push_back({"a" + tag + "_" + std::to_string(k),
                           "a" + tag + "_" + std::to_string((k + 1) % L)});
    }
  }
  std::string name = "N_" + std::to_string(spec.r) + "_" + std::to_string(spec.s)
                     + "_m" + std::to_string(spec.m);
  return BoundQuiver(std::move(vertices), std::move(arrows),
                     std::move(relations), std::move(name));
}

}  // namespace gentle
