#pragma once

#include <string>

#include "tg/verify.hpp"

namespace tg {

inline constexpr const char* kReportSchemaVersion = "1.0";
inline constexpr const char* kToolVersion = "0.1.0";

/// JSON report document: schema/tool versions, echoed sweep parameters, all
/// records in deterministic order, summary (match rates, erratum deltas,
/// failing and minimized records) and the printed-claim verdicts. Serialized
/// with sorted keys and fixed indentation, so identical inputs give
/// byte-identical output.
std::string report_document(const SweepParams& params, const SweepReport& report,
                            const std::vector<ClaimVerdict>& claims);

}  // namespace tg
