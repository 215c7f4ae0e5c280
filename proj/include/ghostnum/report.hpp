#pragma once

// JSON is the canonical report format (keys sorted, no timestamps); CSV and
// Markdown are projections of the same data.

#include <string>

#include <json.hpp>

#include "ghostnum/bounds.hpp"
#include "ghostnum/stmod.hpp"
#include "ghostnum/verify.hpp"

namespace ghostnum {

inline constexpr const char* kSchemaVersion = "1";

nlohmann::json flags_json(const ClassificationFlags& f);
nlohmann::json bounds_json(const BoundsReport& r);
nlohmann::json verification_json(const VerificationReport& r);
nlohmann::json certificate_json(const ChainCertificate& c);
nlohmann::json group_info_json(const GroupTable& g);

nlohmann::json summary_json(std::size_t pass, std::size_t fail, std::size_t skipped);

// Wraps a payload as {schema_version, command, result, summary}.
nlohmann::json make_report(const nlohmann::json& command, const nlohmann::json& result, const nlohmann::json& summary);

// Canonical text: two-space indent, trailing newline.
std::string dump(const nlohmann::json& j);

std::string verification_csv(const VerificationReport& r);
std::string verification_markdown(const VerificationReport& r);

}  // namespace ghostnum
