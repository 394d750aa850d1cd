#pragma once

#include <bincover/core.hpp>
#include <bincover/generators.hpp>
#include <bincover/measures.hpp>
#include <bincover/oracles.hpp>

#include <json.hpp>

namespace bincover {

using Json = nlohmann::ordered_json;

/// {"events":[{"item":i,"bin":b,"action":"open|place|close"}],"covered":c}
/// Open and close events carry "item": null.
Json trace_to_json(const PackingTrace& trace);

/// {"groups":[["1/2","1/2"],...],"claimed":c}
Json certificate_to_json(const PartitionCertificate& cert);
PartitionCertificate certificate_from_json(const Json& j);

/// Sidecar written next to a generated sequence file.
Json family_to_json(const GeneratedFamily& family);

/// {"point","ci":[lo,hi],"samples","seed",...}
Json estimate_to_json(const RatioEstimate& est);

Json rational_to_json(const Rational& q);

/// A float rounded to 12 significant digits so that dumps are stable.
Json json_number(double x);

}  // namespace bincover
