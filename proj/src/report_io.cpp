#include "auctionlab/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include "auctionlab/error.hpp"

namespace auctionlab {

using nlohmann::json;

namespace {

[[noreturn]] void bad_config(const std::string& what) {
  throw AuctionError(ErrorCode::kInvalidScenario, "config: " + what);
}

std::string format_double(double x) {
  std::ostringstream out;
  out << std::setprecision(std::numeric_limits<double>::max_digits10) << x;
  return out.str();
}

json rational_list(const std::vector<Rational>& values) {
  json out = json::array();
  for (const Rational& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> rational_list_from(const json& j, const char* key) {
  if (!j.is_array()) bad_config(std::string(key) + " must be an array");
  std::vector<Rational> out;
  for (const json& v : j) out.push_back(rational_from_json(v));
  return out;
}

template <class T>
T integer_field(const json& j, const char* key, T lo) {
  if (!j.is_number_integer()) bad_config(std::string(key) + " must be an integer");
  if (j.is_number_unsigned()) {
    const auto v = j.get<std::uint64_t>();
    if (v > static_cast<std::uint64_t>(std::numeric_limits<T>::max())) {
      bad_config(std::string(key) + " is out of range");
    }
    return static_cast<T>(v);
  }
  const auto v = j.get<std::int64_t>();
  if (v < static_cast<std::int64_t>(lo)) bad_config(std::string(key) + " is out of range");
  return static_cast<T>(v);
}

}  // namespace

json rational_to_json(const Rational& r) {
  return json{{"num", numerator_string(r)},
              {"den", denominator_string(r)},
              {"decimal", to_decimal_string(r)}};
}

Rational rational_from_json(const json& j) {
  try {
    if (j.is_object()) {
      if (!j.contains("num") || !j.contains("den")) bad_config("rational object needs num and den");
      const auto part = [](const json& v) {
        return v.is_string() ? v.get<std::string>() : v.dump();
      };
      return parse_rational(part(j.at("num")) + "/" + part(j.at("den")));
    }
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number()) return parse_rational(j.dump());
  } catch (const std::invalid_argument& e) {
    if (dynamic_cast<const AuctionError*>(&e)) throw;
    bad_config(e.what());
  }
  bad_config("expected a rational, got " + j.dump());
}

json scenario_to_json(const Scenario& s) {
  return json{{"mode", to_string(s.mode)},
              {"n", s.n},
              {"k", s.k},
              {"adversary", to_string(s.adversary)},
              {"bids", rational_list(s.fixed_bids)},
              {"sizes", rational_list(s.group_sizes)},
              {"samples", s.samples},
              {"seed", s.seed}};
}

json report_to_json(const Report& r) {
  json estimates = json::array();
  json exact = json::array();
  for (std::size_t j = 0; j < r.bidders.size(); ++j) {
    const McEstimate& e = r.estimates[j];
    estimates.push_back(json{{"bidder", r.bidders[j]},
                             {"mean", e.mean},
                             {"stderr", e.std_error},
                             {"samples", e.samples}});
    exact.push_back(json{{"bidder", r.bidders[j]},
                         {"value", r.exact[j] ? rational_to_json(*r.exact[j]) : json(nullptr)}});
  }
  json ks = json::array();
  for (const KsEntry& e : r.ks) {
    ks.push_back(json{{"coordinate", e.coordinate},
                      {"statistic", e.statistic},
                      {"threshold", e.threshold},
                      {"passed", e.passed()}});
  }
  return json{{"scenario", scenario_to_json(r.scenario)},
              {"estimates", estimates},
              {"exact", exact},
              {"statistics",
               {{"ks", ks},
                {"zero_sum_violations", r.zero_sum_violations},
                {"max_sum_deviation", r.max_sum_deviation}}},
              {"meta",
               {{"seed", r.meta.seed},
                {"version", r.meta.version},
                {"samples", r.meta.samples},
                {"elapsed_ms", r.meta.elapsed_ms}}}};
}

std::string report_to_csv(const Report& r) {
  std::ostringstream out;
  out << "bidder,mean,stderr,exact_num,exact_den\n";
  for (std::size_t j = 0; j < r.bidders.size(); ++j) {
    out << r.bidders[j] << ',' << format_double(r.estimates[j].mean) << ','
        << format_double(r.estimates[j].std_error) << ',';
    if (r.exact[j]) {
      out << numerator_string(*r.exact[j]) << ',' << denominator_string(*r.exact[j]);
    } else {
      out << ',';
    }
    out << '\n';
  }
  return out.str();
}

Scenario scenario_from_json(const json& j, Scenario base) {
  if (!j.is_object()) bad_config("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (std::none_of(std::begin(kScenarioKeys), std::end(kScenarioKeys),
                     [&](const char* k) { return key == k; })) {
      bad_config("unknown key '" + key + "'");
    }
  }
  const auto text = [&](const char* key) {
    if (!j.at(key).is_string()) bad_config(std::string(key) + " must be a string");
    return j.at(key).get<std::string>();
  };
  if (j.contains("mode")) base.mode = parse_mode(text("mode"));
  if (j.contains("adversary")) base.adversary = parse_adversary(text("adversary"));
  if (j.contains("n")) base.n = integer_field<int>(j.at("n"), "n", 0);
  if (j.contains("k")) base.k = integer_field<int>(j.at("k"), "k", 0);
  if (j.contains("samples")) base.samples = integer_field<std::size_t>(j.at("samples"), "samples", 0);
  if (j.contains("seed")) base.seed = integer_field<std::uint64_t>(j.at("seed"), "seed", 0);
  if (j.contains("threads")) base.threads = integer_field<unsigned>(j.at("threads"), "threads", 0);
  if (j.contains("bids")) base.fixed_bids = rational_list_from(j.at("bids"), "bids");
  if (j.contains("sizes")) base.group_sizes = rational_list_from(j.at("sizes"), "sizes");
  if (j.contains("format")) {
    const std::string f = text("format");
    if (f != "json" && f != "csv") bad_config("format must be json or csv");
  }
  if (j.contains("out")) text("out");
  return base;
}

}  // namespace auctionlab
