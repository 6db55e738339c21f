#ifndef CONTALG_REPORT_HPP
#define CONTALG_REPORT_HPP

#include <string>
#include <vector>

#include "json.hpp"

#include "contalg/checks.hpp"
#include "contalg/ring.hpp"

namespace contalg {

/// Reports use ordered JSON so that identical inputs render byte-identical
/// documents (insertion order, no hash-map reshuffling).
using Json = nlohmann::ordered_json;

const char* verdict_name(Verdict v);

Json outcome_to_json(const CheckOutcome& o);

/// The full structural report for one ring: zero divisors, nilradical,
/// prime data, primality, zd degree, graph diameter and the extension
/// prediction. degrees/seed document the configuration used for checks.
Json ring_report(const RingPtr& r, const std::vector<std::uint32_t>& degrees,
                 const Limits& limits);

/// Attach check outcomes (and pool their witnesses) to a report.
void attach_outcomes(Json& report, const std::vector<CheckOutcome>& outcomes);

/// Human-readable rendering of a report document.
std::string render_text(const Json& report);

}  // namespace contalg

#endif
