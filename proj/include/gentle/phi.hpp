// The thread invariant phi of a gentle algebra: signs on arrows, permitted
// and forbidden threads, and the orbit pairing that produces a multiset of
// pairs of naturals.

#ifndef GENTLE_PHI_HPP_
#define GENTLE_PHI_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gentle/normal_form.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

struct SignAssignment {
  std::vector<int> sigma;    // per ArrowId, +1 or -1
  std::vector<int> epsilon;  // per ArrowId, +1 or -1
};

// Solves the sign constraints by union-find with parity.  Each free parity
// class is +1 at its least variable, or random when a seed is given.
// Throws std::domain_error when the constraints are inconsistent.
SignAssignment assign_signs(BoundQuiver const&           q,
                            std::optional<std::uint64_t> seed = std::nullopt);

enum class ThreadKind { permitted, forbidden };
enum class Slot { none, plus, minus };

// Which trivial threads exist at a vertex with one in-arrow a and one
// out-arrow b.  In `paper` mode the trivial permitted thread exists iff
// a b is not in I and the trivial forbidden thread iff it is; `ag` swaps them.
enum class ThreadConvention { paper, ag };

struct Thread {
  ThreadKind           kind = ThreadKind::permitted;
  std::vector<ArrowId> body;     // empty for trivial threads
  VertexId             at = 0;   // trivial threads only
  Slot                 slot = Slot::none;
  int                  sigma = 1;
  int                  epsilon = 1;
  VertexId             source = 0;
  VertexId             target = 0;

  bool        trivial() const noexcept { return body.empty(); }
  std::size_t length() const noexcept { return body.size(); }
};

std::string to_string(BoundQuiver const& q, Thread const& t);

// Permitted threads first, then forbidden; each group in a fixed order.
std::vector<Thread> threads(BoundQuiver const&    q,
                            SignAssignment const& signs,
                            ThreadConvention      convention = ThreadConvention::paper);

class PhiInvariant {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  PhiInvariant() = default;
  explicit PhiInvariant(std::map<Pair, std::size_t> counts);

  void add(Pair p, std::size_t multiplicity = 1);

  std::map<Pair, std::size_t> const& counts() const noexcept { return counts_; }
  // Sum of second components weighted by multiplicity.
  std::size_t weight() const;
  // "2·(0,3) + 1·(7,3)"; "0" when empty.
  std::string to_string() const;

  friend bool operator==(PhiInvariant const&, PhiInvariant const&) = default;

 private:
  std::map<Pair, std::size_t> counts_;
};

struct PhiOrbit {
  std::vector<std::size_t> permitted;  // indices into the thread list
  std::vector<std::size_t> forbidden;
  PhiInvariant::Pair       pair;
};

struct PhiComputation {
  std::vector<Thread>   threads;
  std::vector<PhiOrbit> orbits;
  std::vector<Cycle>    relation_cycles;
  PhiInvariant          value;
};

// Throws std::domain_error for non-gentle or infinite-dimensional input, and
// std::runtime_error when the orbit pairing fails.
PhiComputation phi_trace(BoundQuiver const&           q,
                         ThreadConvention             convention = ThreadConvention::paper,
                         std::optional<std::uint64_t> seed       = std::nullopt);
PhiInvariant   phi(BoundQuiver const&           q,
                   ThreadConvention             convention = ThreadConvention::paper,
                   std::optional<std::uint64_t> seed       = std::nullopt);

// r copies of (0, m+2) plus one (s+1-r, s-1-r(m+1)).
PhiInvariant phi_closed_form(NormalFormSpec const& spec);

bool phi_equal(PhiInvariant const& p, PhiInvariant const& q);

}  // namespace gentle

#endif  // GENTLE_PHI_HPP_
