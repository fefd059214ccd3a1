#pragma once

#include <json.hpp>

#include "eroot/certify.hpp"
#include "eroot/compare.hpp"
#include "eroot/pade.hpp"
#include "eroot/verify.hpp"

namespace eroot {

using ordered_json = nlohmann::ordered_json;

// Numbers that can exceed double range are rendered as decimal strings.
ordered_json system_to_json(const ApproximationSystem& system);
ordered_json certificate_to_json(const CertificateRecord& record);
ordered_json comparison_row_to_json(const ComparisonRow& row);
ordered_json check_to_json(const CheckResult& check);

std::string comparison_rows_to_csv(const std::vector<ComparisonRow>& rows);

// Append one JSON document as a single line (newline-delimited archive).
void append_ndjson(const std::string& path, const ordered_json& doc);

}  // namespace eroot
