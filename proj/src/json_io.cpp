#include <bincover/json_io.hpp>

#include <cmath>
#include <cstdlib>

namespace bincover {

Json json_number(double x) {
  if (!std::isfinite(x)) return nullptr;
  return std::strtod(format_decimal(x, 12).c_str(), nullptr);
}

Json rational_to_json(const Rational& q) { return format_rational(q); }

Json trace_to_json(const PackingTrace& trace) {
  Json events = Json::array();
  for (const auto& ev : trace.events) {
    Json e;
    if (ev.action == TraceAction::Place) {
      e["item"] = ev.item;
    } else {
      e["item"] = nullptr;
    }
    e["bin"] = ev.bin;
    e["action"] = std::string(to_string(ev.action));
    events.push_back(std::move(e));
  }
  Json out;
  out["events"] = std::move(events);
  out["covered"] = trace.covered();
  return out;
}

Json certificate_to_json(const PartitionCertificate& cert) {
  Json groups = Json::array();
  for (const auto& g : cert.groups) {
    Json group = Json::array();
    for (const auto& item : g) group.push_back(to_string(item));
    groups.push_back(std::move(group));
  }
  Json out;
  out["groups"] = std::move(groups);
  out["claimed"] = cert.claimed_covered;
  return out;
}

PartitionCertificate certificate_from_json(const Json& j) {
  PartitionCertificate cert;
  try {
    for (const auto& group : j.at("groups")) {
      std::vector<ItemSize> g;
      for (const auto& item : group) g.emplace_back(parse_rational(item.get<std::string>()));
      cert.groups.push_back(std::move(g));
    }
    cert.claimed_covered = j.at("claimed").get<std::size_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad certificate JSON: ") + e.what());
  }
  return cert;
}

Json family_to_json(const GeneratedFamily& family) {
  Json out;
  out["provenance"] = family.seq.provenance;
  out["items"] = family.seq.size();
  out["eps"] = rational_to_json(family.eps);
  out["n"] = family.scale_n;
  if (family.interval) {
    Json iv;
    iv["a"] = rational_to_json(family.interval->a());
    iv["b"] = rational_to_json(family.interval->b());
    iv["p"] = family.interval->p();
    iv["case"] = std::string(to_string(family.interval->border_case()));
    out["interval"] = std::move(iv);
  } else {
    out["interval"] = nullptr;
  }
  Json claims = Json::array();
  for (const auto& c : family.claims) {
    Json cj;
    cj["subject"] = c.subject();
    cj["expected"] = c.expected;
    cj["exactness"] = std::string(to_string(c.exactness));
    claims.push_back(std::move(cj));
  }
  out["claims"] = std::move(claims);
  Json segments = Json::array();
  for (const auto& s : family.segments) {
    Json sj;
    sj["label"] = s.label;
    sj["begin"] = s.begin;
    sj["end"] = s.end;
    sj["dnf_expected"] = s.dnf_expected;
    segments.push_back(std::move(sj));
  }
  out["segments"] = std::move(segments);
  out["certificate"] = family.opt_cert ? certificate_to_json(*family.opt_cert) : Json(nullptr);
  return out;
}

Json estimate_to_json(const RatioEstimate& est) {
  Json out;
  out["point"] = json_number(est.point);
  out["ci"] = Json::array({json_number(est.ci_low), json_number(est.ci_high)});
  out["stddev"] = json_number(est.stddev);
  out["samples"] = est.samples;
  out["seed"] = est.seed;
  if (est.opt) out["opt"] = *est.opt;
  if (est.ratio) {
    out["ratio"] = json_number(*est.ratio);
    out["ratio_ci"] = Json::array({json_number(*est.ratio_ci_low), json_number(*est.ratio_ci_high)});
  }
  return out;
}

}  // namespace bincover
