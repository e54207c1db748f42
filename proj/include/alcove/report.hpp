#pragma once

#include <string>

#include <json.hpp>

// Certificates and the JSON report schema shared by the verification
// operations and the command line tool.  Field names are stable: claim,
// scope, verdict, witness.

namespace alcove {

using Json = nlohmann::ordered_json;

enum class Verdict { verified, failed, not_computed, not_applicable };

const char* verdict_name(Verdict v);

struct Certificate {
  std::string claim;
  Json scope = Json::object();
  Verdict verdict = Verdict::not_computed;
  Json witness = Json::object();

  Json to_json() const;
  bool ok() const { return verdict == Verdict::verified || verdict == Verdict::not_applicable; }
};

const char* engine_version();

// Canonicalization conventions carried by every report.
Json conventions_json();

Json report_envelope(Json results);

}  // namespace alcove
