// Branched and A-branched bound quivers, invariant pairs and the derived
// equivalence decision for connected m-branched algebras.

#ifndef GENTLE_CLASSIFICATION_HPP_
#define GENTLE_CLASSIFICATION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "gentle/hochschild.hpp"
#include "gentle/normal_form.hpp"
#include "gentle/phi.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

// Gentle, finite dimensional, and exactly chi(Q) simple oriented cycles, each
// of length m + 2 with full relations.
bool is_m_branched(BoundQuiver const& q, unsigned m);
// m-branched, and every relation is a consecutive pair on one of the cycles.
bool is_A_branched(BoundQuiver const& q, unsigned m);

// The set of m for which q is m-branched.  Gentle trees are m-branched for
// every m, reported as `all`.
struct MCandidates {
  bool                  all = false;
  std::vector<unsigned> values;

  bool        empty() const noexcept { return !all && values.empty(); }
  bool        contains(unsigned m) const;
  std::string to_string() const;  // "all", "{}" or "{3}"
};
MCandidates infer_m(BoundQuiver const& q);

struct InvariantPair {
  long        r = 0;
  std::size_t s = 0;

  auto operator<=>(InvariantPair const&) const = default;
};

// (chi(Q), |Q_0|).  Throws std::invalid_argument unless q is connected and
// m-branched.
InvariantPair invariant_pair(BoundQuiver const& q, unsigned m);

struct CycleSummary {
  std::size_t length = 0;
  bool        full_relations = false;
};

struct ClassificationReport {
  GentleReport               gentle;
  bool                       connected = false;
  std::size_t                components = 0;
  bool                       finite_dimensional = false;
  long                       chi = 0;
  std::vector<CycleSummary>  cycles;
  bool                       cycle_overflow = false;
  MCandidates                m_candidates;
  bool                       a_branched = false;
  std::optional<InvariantPair> invariant_pair;
  bool                       simply_connected = false;
  long                       pi1_rank = 0;
};

// With m given, the candidate set is restricted to {m}.
ClassificationReport classify(BoundQuiver const&      q,
                              std::optional<unsigned> m = std::nullopt);
std::vector<ClassificationReport> classify_components(
    BoundQuiver const& q, std::optional<unsigned> m = std::nullopt);

enum class Verdict { equivalent, inequivalent };
char const* to_string(Verdict v) noexcept;

struct EquivalenceEvidence {
  InvariantPair            pair_a;
  InvariantPair            pair_b;
  PhiInvariant             phi_a;
  PhiInvariant             phi_b;
  std::size_t              hh_max_degree = 0;
  std::vector<std::size_t> hh_a;
  std::vector<std::size_t> hh_b;
  std::size_t              k0_rank_a = 0;  // rank of the Grothendieck group, |Q_0|
  std::size_t              k0_rank_b = 0;

  bool pairs_equal() const { return pair_a == pair_b; }
  bool phi_equal() const { return phi_a == phi_b; }
  bool hh_equal() const { return hh_a == hh_b; }
  // HH alone does not see the number of vertices; it is paired with K_0.
  bool hh_k0_equal() const { return hh_equal() && k0_rank_a == k0_rank_b; }
};

struct EquivalenceResult {
  Verdict             verdict = Verdict::inequivalent;
  EquivalenceEvidence evidence;
};

// Decides derived equivalence of connected m-branched algebras by comparing
// invariant pairs; phi and HH dimensions (char 0, degrees 0..2(m+2)+1) are
// computed as evidence and must agree with the verdict (std::logic_error
// otherwise).  Throws std::invalid_argument for disconnected or
// non-m-branched input.
EquivalenceResult derived_equivalent(BoundQuiver const& a, BoundQuiver const& b,
                                     unsigned m);

}  // namespace gentle

#endif  // GENTLE_CLASSIFICATION_HPP_
