#pragma once

#include "punar/verify.hpp"

#include <json.hpp>

namespace punar {

nlohmann::ordered_json field_json(const FieldPtr& field, const LogUnitLattice& lat);
nlohmann::ordered_json bounds_json(const BoundReport& b);
nlohmann::ordered_json enumeration_json(const EnumerationReport& rep);
nlohmann::ordered_json checks_json(const std::vector<CheckResult>& checks);

// Top-level report: { "field", "bounds", "enumeration", "checks" }.
nlohmann::ordered_json report_json(const FieldPtr& field, const LogUnitLattice& lat,
                                   const VerifyResult& r);

extern const char* const kSweepCsvHeader;
std::string sweep_csv_row(long d, const LogUnitLattice& lat, const VerifyResult& r);

} // namespace punar
