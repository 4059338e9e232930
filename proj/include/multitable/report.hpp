#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

#include "multitable/asymptotic_order.hpp"
#include "multitable/gap_theorem.hpp"
#include "multitable/stats_diagnostics.hpp"
#include "multitable/table_oracle.hpp"
#include "multitable/verify.hpp"

namespace multitable::report {

// Machine-readable rendering for the CLI.  JSON payloads use snake_case
// fields in a fixed order; identical inputs render byte-identically (no
// timestamps, no locale, no pointer-dependent ordering).

using json = nlohmann::ordered_json;

inline constexpr const char* kToolVersion = "0.1.0";

// exit_status contract shared by the envelope and the process exit code
inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitMismatch = 2;
inline constexpr int kExitCapExceeded = 3;

/// One envelope per invocation: command, its scope parameters, the payload.
struct Envelope {
  std::string command;
  json params;   // "n", or "from"/"to", or "count", ... (flat object)
  json payload;  // schema fixed per command
  std::string tool_version = kToolVersion;
  int exit_status = kExitOk;
};

json to_json(const Envelope& envelope);
Envelope envelope_from_json(const json& j);

// payload serializers (and parsers, so round-trips are testable)
json to_json(const NForm& form);
NForm nform_from_json(const json& j);

json to_json(const WitnessInterval& w);
WitnessInterval witness_from_json(const json& j);

json to_json(const GapClassification& gc);
GapClassification classification_from_json(const json& j);

json to_json(const MultiplicityProfile& profile);
MultiplicityProfile profile_from_json(const json& j);

json to_json(const FordPoint& point);
FordPoint ford_point_from_json(const json& j);

json to_json(const CensusRow& row);
CensusRow census_row_from_json(const json& j);

json to_json(const PairAB& pair);
PairAB pair_from_json(const json& j);

json to_json(const SymbolicGap& gap);
SymbolicGap symbolic_gap_from_json(const json& j);

json to_json(const VerifyReport& report);

// command payloads
json gaps_payload(const GapClassification& gc, bool with_witnesses);
json profile_payload(const MultiplicityProfile& profile);
json order_payload(const std::vector<PairAB>& pairs, const std::vector<SymbolicGap>& gaps);
json ford_payload(const std::vector<FordPoint>& points);
json census_payload(const std::vector<CensusRow>& rows);
json witness_payload(std::uint64_t n, std::uint64_t gap, const WitnessInterval& w);

// CSV renderings (RFC 4180, \r\n line endings, header row first)
std::string gaps_csv(const GapClassification& gc);
std::string witness_table_csv(const std::vector<std::pair<std::uint64_t, WitnessInterval>>& rows);
std::string profile_csv(const MultiplicityProfile& profile);
std::string order_csv(const std::vector<PairAB>& pairs, const std::vector<SymbolicGap>& gaps);
std::string ford_csv(const std::vector<FordPoint>& points);
std::string census_csv(const std::vector<CensusRow>& rows);
std::string verify_csv(const VerifyReport& report);

// plain-text renderings
std::string gaps_text(const GapClassification& gc, bool with_witnesses);
std::string profile_text(const MultiplicityProfile& profile);
std::string order_text(const std::vector<PairAB>& pairs, const std::vector<SymbolicGap>& gaps);
std::string ford_text(const std::vector<FordPoint>& points);
std::string census_text(const std::vector<CensusRow>& rows);
std::string verify_text(const VerifyReport& report);
std::string witness_text(std::uint64_t gap, const WitnessInterval& w);

}  // namespace multitable::report
