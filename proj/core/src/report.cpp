#include "gem/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include "gem/serialization.hpp"

namespace gem {

namespace {

std::string format_real(double value) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", value);
  return buf;
}

std::vector<const ExperimentRecord*> sorted_view(const std::vector<ExperimentRecord>& records) {
  std::vector<const ExperimentRecord*> view;
  view.reserve(records.size());
  for (const auto& r : records) {
    view.push_back(&r);
  }
  std::sort(view.begin(), view.end(), [](const ExperimentRecord* a, const ExperimentRecord* b) {
    if (a->avg_delta_v != b->avg_delta_v) {
      return a->avg_delta_v < b->avg_delta_v;
    }
    return a->experiment_id < b->experiment_id;
  });
  return view;
}

struct Counts {
  int positive = 0, negative = 0, none = 0;
};

Counts count_classes(const std::vector<ExperimentRecord>& records) {
  Counts c;
  for (const auto& r : records) {
    switch (r.classification) {
      case MitigationClass::Positive: ++c.positive; break;
      case MitigationClass::Negative: ++c.negative; break;
      case MitigationClass::None: ++c.none; break;
    }
  }
  return c;
}

std::string render_csv(const std::vector<ExperimentRecord>& records) {
  std::string out =
      "experiment_id,num_qubits,depth,avg_delta_v,min_delta_v,max_delta_v,"
      "avg_delta_x,min_delta_x,max_delta_x,delta_g,classification\n";
  for (const ExperimentRecord* r : sorted_view(records)) {
    out += std::to_string(r->experiment_id);
    out += ',' + std::to_string(r->circuit.num_qubits);
    out += ',' + std::to_string(r->depth);
    out += ',' + format_real(r->avg_delta_v);
    out += ',' + format_real(r->min_delta_v);
    out += ',' + format_real(r->max_delta_v);
    out += ',' + format_real(r->avg_delta_x);
    out += ',' + format_real(r->min_delta_x);
    out += ',' + format_real(r->max_delta_x);
    out += ',' + format_real(r->delta_g);
    out += ',' + mitigation_class_name(r->classification);
    out += '\n';
  }
  const Counts c = count_classes(records);
  out += "# summary,positive,negative,none\n";
  out += "# counts," + std::to_string(c.positive) + ',' + std::to_string(c.negative) + ',' +
         std::to_string(c.none) + '\n';
  return out;
}

}  // namespace

std::string render_report(const std::vector<ExperimentRecord>& records, ReportFormat format) {
  if (records.empty()) {
    throw std::invalid_argument("no records to report");
  }
  if (format == ReportFormat::CSV) {
    return render_csv(records);
  }
  std::vector<ExperimentRecord> sorted;
  sorted.reserve(records.size());
  for (const ExperimentRecord* r : sorted_view(records)) {
    sorted.push_back(*r);
  }
  const Counts c = count_classes(records);
  return report_to_json(sorted, c.positive, c.negative, c.none);
}

void emit_report(const std::vector<ExperimentRecord>& records, ReportFormat format,
                 const std::string& path) {
  std::ofstream file(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open report file for writing: " + path);
  }
  file << render_report(records, format);
  if (!file.good()) {
    throw std::runtime_error("failed while writing report: " + path);
  }
}

}  // namespace gem
