// Bound-quiver mutations at admissible vertices, extremal relations, and the
// reduction of branched quivers to A-branched ones with a replayable log.

#ifndef GENTLE_MUTATION_HPP_
#define GENTLE_MUTATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/quiver.hpp"

namespace gentle {

enum class MutationKind { tilt, cotilt };
char const*  to_string(MutationKind k) noexcept;
MutationKind parse_mutation_kind(std::string const& s);  // throws std::invalid_argument

struct MutationStep {
  MutationKind kind = MutationKind::tilt;
  std::string  vertex;
  std::string  before;  // digest()
  std::string  after;

  friend bool operator==(MutationStep const&, MutationStep const&) = default;
};

struct MutationLog {
  std::vector<MutationStep> steps;
  BoundQuiver               start;
  BoundQuiver               end;
};

// x is admissible when every arrow leaving x has an arrow entering x that
// composes with it outside I.
bool                  is_admissible(BoundQuiver const& q, VertexId x);
std::vector<VertexId> admissible_vertices(BoundQuiver const& q);

// The rewrite at an admissible vertex x.  Arrow and vertex names survive:
//   b: u -> x            becomes  b: x -> u
//   a: x -> w            becomes  a: s(b) -> w   (b the in-arrow with b a not in I)
//   g: c -> u, (g, b) in I   becomes  g: c -> x
// Relations through x and the pairs (g, b) are replaced by (b, a) for each
// out-arrow a with partner b, and (g, b') for the other in-arrow b'.
// Throws std::invalid_argument for inadmissible x or configurations the
// rewrite does not cover, std::domain_error when the result is not gentle.
std::pair<BoundQuiver, MutationStep> mutate(BoundQuiver const& q,
                                            std::string const& x);
// opposite(mutate(opposite(q), y)).
std::pair<BoundQuiver, MutationStep> comutate(BoundQuiver const& q,
                                              std::string const& y);
BoundQuiver apply(BoundQuiver const& q, MutationStep const& step);

// Replays every step, checking each digest.  Returns an empty string on
// success, otherwise a description of the first mismatch.
std::string replay(MutationLog const& log);

// Relations that are not consecutive pairs on a cycle with full relations.
std::vector<Relation> off_cycle_relations(BoundQuiver const& q);

struct RelationSplit {
  Relation                 rho;
  std::string              y;      // middle vertex
  std::vector<std::string> minus;  // component of the source of rho
  std::vector<std::string> plus;   // component of the target of rho
  std::vector<std::string> perp;   // everything else except y
};

// Throws std::invalid_argument when rho is not a relation of q or removing
// its middle vertex does not separate its ends.
RelationSplit split_at_relation(BoundQuiver const& q, Relation const& rho);

enum class Extremal { neither, minus, plus, both };
char const* to_string(Extremal e) noexcept;
Extremal    extremal_kind(BoundQuiver const& q, RelationSplit const& split);

inline constexpr std::size_t default_search_budget = 20'000;

struct ReduceResult {
  BoundQuiver result;
  MutationLog log;
  bool        complete = false;      // result is A-branched
  std::size_t macro_steps = 0;       // relation-pushing sequences applied
  std::size_t searched_states = 0;   // states expanded by the fallback search
};

// Removes off-cycle relations by pushing each extremal relation off its
// A-branched side; falls back to breadth-first search over single mutations
// (isomorphism classes deduplicated) when no push succeeds.  Verifies that phi,
// chi and the vertex count are unchanged.  Throws std::invalid_argument unless
// q is connected and m-branched.
ReduceResult reduce_to_A_branched(BoundQuiver const& q, unsigned m,
                                  std::size_t budget = default_search_budget);

}  // namespace gentle

#endif  // GENTLE_MUTATION_HPP_
