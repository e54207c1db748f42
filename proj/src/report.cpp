#include "alcove/report.hpp"

namespace alcove {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::verified: return "verified";
    case Verdict::failed: return "failed";
    case Verdict::not_computed: return "not-computed";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "unknown";
}

Json Certificate::to_json() const {
  Json j;
  j["claim"] = claim;
  j["scope"] = scope;
  j["verdict"] = verdict_name(verdict);
  j["witness"] = witness;
  return j;
}

const char* engine_version() { return "0.1.0"; }

Json conventions_json() {
  Json j;
  j["numbering"] = "Bourbaki";
  j["root_order"] = "height, then lexicographic in simple-root coordinates";
  j["base_chamber"] = "fundamental alcove of the affine basis";
  j["base_point"] = "hyperspecial origin; affine levels are integers";
  j["signs"] = "extraspecial pairs minimal in the canonical root order";
  return j;
}

Json report_envelope(Json results) {
  Json j;
  j["engine_version"] = engine_version();
  j["conventions"] = conventions_json();
  j["results"] = std::move(results);
  return j;
}

}  // namespace alcove
