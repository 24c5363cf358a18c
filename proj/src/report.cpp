#include "tg/report.hpp"

#include <cstdio>

#include <nlohmann/json.hpp>

namespace tg {

namespace {

using nlohmann::json;

std::string hex_fingerprint(std::uint64_t fp) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(fp));
  return buf;
}

json record_json(const VerificationRecord& rec, bool with_edges) {
  json j;
  j["trial"] = rec.trial;
  j["n"] = rec.n;
  j["m"] = rec.m;
  j["fingerprint"] = hex_fingerprint(rec.fingerprint);
  j["family"] = family_name(rec.family);
  j["r"] = rec.r;
  j["s"] = rec.s;
  j["p"] = rec.p;
  j["q"] = rec.q;
  j["oracle"] = rec.oracle;
  j["derived"] = rec.derived;
  j["as_printed"] = rec.as_printed;
  j["derived_matches"] = rec.derived_matches;
  j["printed_matches"] = rec.printed_matches;
  j["delta_printed"] = rec.delta_printed;
  if (with_edges) j["edges"] = rec.edges_text;
  return j;
}

json stats_json(const FamilyStats& stats) {
  json j;
  j["records"] = stats.records;
  j["derived_matches"] = stats.derived_matches;
  j["printed_matches"] = stats.printed_matches;
  return j;
}

json claim_json(const ClaimVerdict& claim) {
  json j;
  j["name"] = claim.name;
  j["matches"] = claim.matches;
  if (!claim.matches) {
    json w;
    w["edges"] = claim.witness_edges;
    w["r"] = claim.r;
    w["s"] = claim.s;
    w["p"] = claim.p;
    w["q"] = claim.q;
    w["oracle"] = claim.oracle;
    w["printed"] = claim.printed;
    w["delta"] = claim.delta;
    j["witness"] = w;
  }
  return j;
}

}  // namespace

std::string report_document(const SweepParams& params, const SweepReport& report,
                            const std::vector<ClaimVerdict>& claims) {
  json doc;
  doc["schema_version"] = kReportSchemaVersion;
  doc["tool_version"] = kToolVersion;

  json inputs;
  inputs["n_min"] = params.n_min;
  inputs["n_max"] = params.n_max;
  inputs["trials"] = params.trials;
  inputs["edge_prob"] = params.edge_prob;
  inputs["seed"] = params.seed;
  inputs["r_max"] = params.r_max;
  inputs["s_max"] = params.s_max;
  doc["inputs"] = inputs;

  json records = json::array();
  for (const auto& rec : report.records) records.push_back(record_json(rec, false));
  doc["records"] = records;

  json summary;
  summary["record_count"] = report.record_count;
  summary["degree_audit_failures"] = report.degree_audit_failures;
  summary["plus_incidence"] = stats_json(report.plus_stats);
  summary["minus_incidence"] = stats_json(report.minus_stats);
  json erratum;
  erratum["plus_incidence"] = json(report.erratum_plus);
  erratum["minus_incidence"] = json(report.erratum_minus);
  summary["erratum"] = erratum;
  json failing = json::array();
  for (const auto& rec : report.failing) failing.push_back(record_json(rec, true));
  summary["failing"] = failing;
  json minimized = json::array();
  for (const auto& rec : report.minimized_counterexamples)
    minimized.push_back(record_json(rec, true));
  summary["minimized_counterexamples"] = minimized;
  doc["summary"] = summary;

  json claims_json = json::array();
  for (const auto& claim : claims) claims_json.push_back(claim_json(claim));
  doc["claims"] = claims_json;

  return doc.dump(2) + "\n";
}

}  // namespace tg
