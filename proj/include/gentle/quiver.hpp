// Bound quivers with quadratic monomial relations, gentleness checks and the
// basic graph invariants used throughout the library.
//
// Path convention: the path "a b" means the arrow a followed by the arrow b,
// so it is composable when target(a) == source(b).  A relation (a, b) states
// that this length-two path lies in the ideal.

#ifndef GENTLE_QUIVER_HPP_
#define GENTLE_QUIVER_HPP_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gentle {

using VertexId = std::size_t;
using ArrowId  = std::size_t;

struct Arrow {
  std::string name;
  std::string source;
  std::string target;

  auto operator<=>(Arrow const&) const = default;
};

struct Relation {
  std::string first;
  std::string second;

  auto operator<=>(Relation const&) const = default;
};

// Immutable bound quiver.  Vertices and arrows are stored sorted by name, so
// VertexId / ArrowId order is the lexicographic order of names.
class BoundQuiver {
 public:
  BoundQuiver() = default;

  // Throws std::invalid_argument on duplicate names, dangling endpoints,
  // non-composable or duplicate relations.
  BoundQuiver(std::vector<std::string> vertices,
              std::vector<Arrow>       arrows,
              std::vector<Relation>    relations,
              std::string              name = {});

  std::string const& name() const noexcept { return name_; }
  BoundQuiver        renamed(std::string name) const;

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t arrow_count() const noexcept { return arrow_names_.size(); }
  std::size_t relation_count() const noexcept { return relations_.size(); }

  std::string const& vertex_name(VertexId v) const { return vertices_[v]; }
  std::string const& arrow_name(ArrowId a) const { return arrow_names_[a]; }
  VertexId           source(ArrowId a) const { return source_[a]; }
  VertexId           target(ArrowId a) const { return target_[a]; }

  std::optional<VertexId> find_vertex(std::string const& name) const;
  std::optional<ArrowId>  find_arrow(std::string const& name) const;
  VertexId                vertex(std::string const& name) const;  // throws
  ArrowId                 arrow(std::string const& name) const;   // throws

  std::span<ArrowId const> out_arrows(VertexId v) const { return out_[v]; }
  std::span<ArrowId const> in_arrows(VertexId v) const { return in_[v]; }

  // Relations as sorted pairs of arrow ids.
  std::vector<std::pair<ArrowId, ArrowId>> const& relations() const noexcept {
    return relations_;
  }
  bool is_relation(ArrowId a, ArrowId b) const;
  // Arrows b with (a, b) a relation, and arrows c with (c, a) a relation.
  std::span<ArrowId const> relation_successors(ArrowId a) const {
    return rel_next_[a];
  }
  std::span<ArrowId const> relation_predecessors(ArrowId a) const {
    return rel_prev_[a];
  }
  // Arrows b with target(a) == source(b) and (a, b) not a relation.
  std::vector<ArrowId> free_successors(ArrowId a) const;
  std::vector<ArrowId> free_predecessors(ArrowId a) const;

  // Name-level views, in canonical order.
  std::vector<std::string> const& vertex_names() const noexcept {
    return vertices_;
  }
  std::vector<Arrow>    arrow_list() const;
  std::vector<Relation> relation_list() const;

  friend bool operator==(BoundQuiver const& x, BoundQuiver const& y) {
    return x.vertices_ == y.vertices_ && x.arrow_names_ == y.arrow_names_
           && x.source_ == y.source_ && x.target_ == y.target_
           && x.relations_ == y.relations_;
  }

 private:
  std::string                              name_;
  std::vector<std::string>                 vertices_;
  std::vector<std::string>                 arrow_names_;
  std::vector<VertexId>                    source_;
  std::vector<VertexId>                    target_;
  std::vector<std::pair<ArrowId, ArrowId>> relations_;
  std::vector<std::vector<ArrowId>>        out_;
  std::vector<std::vector<ArrowId>>        in_;
  std::vector<std::vector<ArrowId>>        rel_next_;
  std::vector<std::vector<ArrowId>>        rel_prev_;
};

// A nonzero path of kQ/I: a start vertex plus a (possibly empty) arrow word.
struct Path {
  VertexId             source = 0;
  std::vector<ArrowId> arrows;

  auto operator<=>(Path const&) const = default;
};

VertexId path_target(BoundQuiver const& q, Path const& p);
// Concatenation in kQ/I; std::nullopt when the product is zero or the paths
// are not composable.
std::optional<Path> multiply(BoundQuiver const& q, Path const& x, Path const& y);
std::string         to_string(BoundQuiver const& q, Path const& p);

// ---------------------------------------------------------------------------
// Gentleness

enum class Rule { G1, G2, G3, non_quadratic, loop_anomaly };

char const* to_string(Rule r) noexcept;

struct Violation {
  Rule                     rule;
  std::vector<std::string> witnesses;  // vertex / arrow names
};

struct GentleReport {
  bool                   is_gentle = true;
  std::vector<Violation> violations;
  // Pairs of parallel arrows.  Reported, not a violation.
  std::vector<std::pair<std::string, std::string>> multiple_arrows;
};

GentleReport validate_gentle(BoundQuiver const& q);
bool         is_gentle(BoundQuiver const& q);

// ---------------------------------------------------------------------------
// Graph invariants

// |Q_1| - |Q_0| + c where c is the number of connected components.
long euler_characteristic(BoundQuiver const& q);

// Undirected component label per vertex, labels numbered by first vertex.
std::vector<std::size_t> component_labels(BoundQuiver const& q,
                                          std::size_t*       count = nullptr);
std::vector<BoundQuiver> connected_components(BoundQuiver const& q);
bool                     is_connected(BoundQuiver const& q);

// Full bound subquiver on the given vertices: arrows with both ends inside and
// relations with both arrows inside.
BoundQuiver induced_subquiver(BoundQuiver const&           q,
                              std::vector<VertexId> const& vertices);

// A cycle as a cyclic arrow word, rotated to start at its least arrow.
using Cycle = std::vector<ArrowId>;

struct CycleEnumeration {
  std::vector<Cycle> cycles;
  bool               overflow = false;
};

inline constexpr std::size_t default_cycle_limit = 10'000;

// Simple directed cycles (no repeated vertex), each reported once.
CycleEnumeration simple_oriented_cycles(
    BoundQuiver const& q,
    std::size_t        limit = default_cycle_limit);

// Closed orbits of the relation-successor graph: cyclic words in which every
// consecutive pair (including last, first) is a relation and no arrow repeats.
std::vector<Cycle> relation_cycles(BoundQuiver const& q);
// The simple oriented cycles with full relations.
std::vector<Cycle> full_relation_cycles(BoundQuiver const& q);

// True iff the graph on arrows with edges a -> b for composable a b not in I
// is acyclic, i.e. kQ/I is finite dimensional.
bool is_finite_dimensional(BoundQuiver const& q);

// All nonzero paths, trivial paths first, then by (source, word).  Throws
// std::domain_error for infinite-dimensional input.
std::vector<Path> nonzero_paths(BoundQuiver const& q);

// Reverse every arrow; the relation (a, b) becomes (b, a).
BoundQuiver opposite(BoundQuiver const& q);

}  // namespace gentle

#endif  // GENTLE_QUIVER_HPP_
