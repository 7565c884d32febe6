#pragma once

// JSON and CSV serialization of reports, and scenario documents for --config.

#include <json.hpp>
#include <string>

#include "auctionlab/harness.hpp"
#include "auctionlab/rational.hpp"

namespace auctionlab {

// {"num": "p", "den": "q", "decimal": "..."}; num and den are decimal strings
// so arbitrarily large values survive a round trip.
nlohmann::json rational_to_json(const Rational& r);

// Accepts the object form above, a string such as "1/5" or "0.2", or a JSON
// number (read back through its shortest decimal form).
Rational rational_from_json(const nlohmann::json& j);

nlohmann::json scenario_to_json(const Scenario& s);

// Top-level keys: scenario, estimates, exact, statistics, meta.
nlohmann::json report_to_json(const Report& r);

// Header bidder,mean,stderr,exact_num,exact_den and one row per bidder.
std::string report_to_csv(const Report& r);

// Keys that a scenario document may contain, in documentation order.
inline constexpr const char* kScenarioKeys[] = {"mode", "n", "k", "adversary", "bids", "sizes",
                                                "samples", "seed", "threads", "format", "out"};

// Applies a scenario document onto `base`. Unknown keys and ill-typed values
// throw AuctionError(kInvalidScenario). "format" and "out" are ignored here.
Scenario scenario_from_json(const nlohmann::json& j, Scenario base = {});

}  // namespace auctionlab
