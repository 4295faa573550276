#pragma once

#include "json.hpp"

#include "emc/algorithm.hpp"
#include "emc/family.hpp"
#include "emc/matching.hpp"
#include "emc/oracle.hpp"
#include "emc/shifting.hpp"

namespace emc {

inline constexpr int kSchemaVersion = 1;

// Family: {"n":..,"k":..,"s":..,"sets":[[..],..]} with ascending inner lists.
nlohmann::json json_of(const SetFamily& f);
SetFamily family_from_json(const nlohmann::json& j);

nlohmann::json json_of(const Params& p);
Params params_from_json(const nlohmann::json& j);

// Certificate: {"size":.., "sets":[[..],..]}.
nlohmann::json json_of(const MatchingCertificate& c);

// Sequence: {"steps":[{"i":..,"j":..},..]} in position order 1..t.
nlohmann::json json_of(const ShiftSequence& s);
ShiftSequence shift_sequence_from_json(const nlohmann::json& j);

nlohmann::json json_of(const PairSelection& p);
nlohmann::json json_of(const ChainResult& c);
nlohmann::json json_of(const ProgressAssertions& a);
nlohmann::json json_of(const IterationTrace& t);
nlohmann::json json_of(const CompactionResult& c);
nlohmann::json json_of(const CompactionEvent& c);

const char* to_string(OutcomeKind k);
nlohmann::json json_of(const Outcome& o);

const char* to_string(OracleMethod m);
nlohmann::json json_of(const OracleResult& r);

}  // namespace emc
