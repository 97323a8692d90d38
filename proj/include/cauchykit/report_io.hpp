#pragma once

#include <json.hpp>

#include "cauchykit/identity.hpp"

namespace cauchykit {

/// Stable JSON schema: {"mode","order","partition_count","lhs","rhs",
/// "residual","verdict","terms":[{"lambda","staircase","G","C","s_a","s_x",
/// "term"}]}. Exact-mode numbers render as "p/q" strings, analytic-mode
/// numbers as doubles. "terms" appears only when requested.
nlohmann::json report_to_json(const IdentityReport& rep, bool include_terms);

IdentityReport report_from_json(const nlohmann::json& j);

nlohmann::json audit_to_json(const std::vector<AuditRecord>& records);

} // namespace cauchykit
