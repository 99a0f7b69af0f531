#pragma once

#include <string>
#include <vector>

#include "gem/experiment.hpp"

namespace gem {

enum class ReportFormat { CSV, JSON };

/// Plot-ready summary of an experiment batch: one row per experiment in
/// ascending order of average delta_v (ties by experiment id), followed by
/// the positive/negative/none classification counts. Output is byte-stable
/// for identical records.
std::string render_report(const std::vector<ExperimentRecord>& records, ReportFormat format);

/// render_report written to `path`; I/O failures raise with the path included.
void emit_report(const std::vector<ExperimentRecord>& records, ReportFormat format,
                 const std::string& path);

}  // namespace gem
