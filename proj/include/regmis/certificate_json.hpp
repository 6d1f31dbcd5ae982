#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "regmis/regularizer.hpp"
#include "regmis/verifier.hpp"

namespace regmis {

nlohmann::json certificate_to_json(const ReductionCertificate& cert);
/// Throws InputError on missing fields or wrong types.
ReductionCertificate certificate_from_json(const nlohmann::json& j);

std::string dump_certificate(const ReductionCertificate& cert);
ReductionCertificate parse_certificate(std::string_view text);

nlohmann::json report_to_json(const VerificationReport& report);

}  // namespace regmis
