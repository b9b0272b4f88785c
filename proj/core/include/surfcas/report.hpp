#pragma once

#include <string>
#include <vector>

#include "surfcas/certify.hpp"

namespace surfcas {

/// Betti diagram of I: columns are syzygy steps (0 = generators), rows are twist - step.
std::string betti_diagram(const BettiTable& b);

/// Stable key order and no wall-clock data, so equal inputs give byte-identical text.
std::string report_json(const CertificationReport& r, const Construction* c = nullptr);
std::string report_text(const CertificationReport& r, const Construction* c = nullptr);
std::string timings_json(const std::vector<StageTiming>& t);

}  // namespace surfcas
