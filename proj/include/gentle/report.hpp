// JSON encodings of library values and the versioned command report envelope:
// {"schema", "command", "inputs": [{name, digest}], "result", "evidence"}.

#ifndef GENTLE_REPORT_HPP_
#define GENTLE_REPORT_HPP_

#include <string>
#include <vector>

#include "json.hpp"

#include "gentle/cartan.hpp"
#include "gentle/classification.hpp"
#include "gentle/hochschild.hpp"
#include "gentle/mutation.hpp"
#include "gentle/phi.hpp"
#include "gentle/quiver.hpp"

namespace gentle {

using Json = nlohmann::json;

inline constexpr char const* report_schema_id = "gentle-report/1";

Json to_json(BigInt const& x);  // integer, or decimal string beyond 64 bits
Json to_json(BoundQuiver const& q);
BoundQuiver quiver_from_json(Json const& j);  // throws std::invalid_argument
Json to_json(GentleReport const& r);
Json to_json(MCandidates const& m);
Json to_json(ClassificationReport const& r);
Json to_json(PhiInvariant const& p);
Json to_json(BoundQuiver const& q, PhiComputation const& trace);
Json to_json(CohomologyReport const& r);
Json to_json(CartanMatrix const& c);
Json to_json(SmithForm const& s);
Json to_json(MutationStep const& s);
Json to_json(MutationLog const& log);
MutationLog mutation_log_from_json(Json const& j);  // throws std::invalid_argument
Json to_json(RelationSplit const& s);
Json to_json(EquivalenceResult const& r);

Json make_report(std::string const& command, std::vector<BoundQuiver> const& inputs,
                 Json result, Json evidence = Json::object());

}  // namespace gentle

#endif  // GENTLE_REPORT_HPP_
