#pragma once

#include <string>

#include <json.hpp>

#include "dmb/bound.hpp"

namespace dmb {

using json = nlohmann::json;

json to_json(const Interval& x);   // {"mid", "rad"}
json to_json(const CInterval& z);  // {"re", "im", "rad"}
json to_json(const RootSet& roots);
json to_json(const VandermondeCertificate& cert);
json to_json(const InvariantBundle& inv);

/// Report in the documented schema; roots are echoed when analysis is given
/// so that graph indices can be audited.
json to_json(const BoundReport& rep, const Polynomial* poly = nullptr, const Analysis* analysis = nullptr);

json error_json(const std::string& kind, const std::string& message);

/// Writes to path.tmp then renames over path.
void write_atomic(const std::string& path, const std::string& contents);

}  // namespace dmb
