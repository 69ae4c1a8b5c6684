#pragma once

#include <optional>

#include "fuchsian/engine.hpp"
#include "fuchsian/report.hpp"

namespace fuchsian {

// Structured run report with stable field names; byte-identical for equal
// inputs. Timing is opt-in because it breaks byte stability.
Report run_report(const RunResult& result, const std::string& backend_label,
                  unsigned max_precision, std::optional<long> timing_ms = std::nullopt);

}  // namespace fuchsian
