#pragma once

#include <string>

#include "hbsa/detection.hpp"
#include "hbsa/experiments.hpp"

namespace hbsa {

inline constexpr const char* kSchemaVersion = "1";

enum class OutputFormat : std::uint8_t { human, records, flat };

// structured-records output: one JSON document, schema-version field included
std::string table_to_records(const SignatureTable& table);
std::string distribution_to_records(const HyperBellIndex& input, const Distribution& dist);
std::string sweep_to_records(const std::vector<SweepPoint>& points);

// flat tabular output: comma separated, header row, '.' decimal point
std::string table_to_flat(const SignatureTable& table);
std::string distribution_to_flat(const Distribution& dist);
std::string sweep_to_flat(const std::vector<SweepPoint>& points);

// human-readable renderings
std::string table_to_human(const SignatureTable& table);
std::string distribution_to_human(const Distribution& dist);
std::string diff_to_human(const DiffReport& report);
std::string state_to_human(const TwoPhotonState& state);

}  // namespace hbsa
