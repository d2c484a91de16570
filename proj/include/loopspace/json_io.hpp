#pragma once

// JSON forms of toolkit values. Rationals are lowest-terms "p/q" strings;
// object keys come out sorted, so equal values dump to identical bytes.

#include "loopspace/bott.hpp"
#include "loopspace/certify.hpp"
#include "loopspace/cohomology.hpp"
#include "loopspace/spaceform.hpp"

#include <json.hpp>

#include <string>

namespace loopspace::json_io {

using nlohmann::json;

inline constexpr const char* kToolkitVersion = "0.1.0";

json to_json(const AlgebraElement& x);
json to_json(const BettiTable& t);
json to_json(const DgaModel& m);
json to_json(const ModelReport& r);
json to_json(const RingReport& r);
json to_json(const HomotopyTable& t);
json to_json(const SpaceFormSpec& s);
json to_json(const GysinReport& r);
json to_json(const BottFunction& f);
json to_json(const Certificate& c);

/// Throws std::invalid_argument on schema violations.
BettiTable betti_from_json(const json& j);

/// {"kind", "input", "result", "version"}.
json envelope(const std::string& kind, const std::string& input, json result);

}  // namespace loopspace::json_io
