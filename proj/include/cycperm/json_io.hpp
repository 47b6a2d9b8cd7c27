#pragma once

#include <cstdint>
#include <string_view>

#include <json.hpp>

#include "cycperm/bijections.hpp"
#include "cycperm/compatibility.hpp"
#include "cycperm/perm_core.hpp"
#include "cycperm/qpoly.hpp"
#include "cycperm/statistics.hpp"

namespace cycperm {

using Json = nlohmann::json;

// Permutations are arrays of letters (cycles by canonical word), position
// sets are sorted arrays, multisets are sorted arrays with repeats written
// out, counts are integers and polynomials are coefficient arrays from the
// constant term up.
Json to_json(const Word &w);
Json to_json(const Cycle &c);
Json to_json(const IndexSet &s);
Json to_json(const StatValue &v);
Json to_json(const Distribution &d);
Json to_json(const QPoly &p);

Json to_json(const WordBijection &b);
Json to_json(const CycleBijection &b);

std::string_view to_string(Verdict v);
std::string_view to_string(LiftingVerdict v);
std::string_view to_string(Mode m);
std::string_view to_string(LiftingCondition c);

/// Report body without verdict and counterexample.
Json report_body(const CompatReport &r);
Json report_body(const LiftingReport &r);
Json counterexample_json(const Counterexample &c);
Json violation_json(const LiftingViolation &v);

/**
 * The CLI document: {"command", "inputs", "result", "elapsed_ms"} plus
 * "verdict" and "counterexample" for verification reports. Keys are emitted
 * in sorted order.
 */
Json envelope(std::string_view command, Json inputs, Json result,
              std::int64_t elapsed_ms);
Json envelope(std::string_view command, Json inputs, const CompatReport &r,
              std::int64_t elapsed_ms);
Json envelope(std::string_view command, Json inputs, const LiftingReport &r,
              std::int64_t elapsed_ms);

} // namespace cycperm
