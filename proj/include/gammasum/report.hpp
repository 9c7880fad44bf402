#ifndef GAMMASUM_REPORT_HPP
#define GAMMASUM_REPORT_HPP

#include <iosfwd>
#include <string>

#include "gammasum/registry.hpp"

namespace gammasum {

enum class ReportFormat { text, csv, json };

/// Deterministic rendering of a report.  The seconds column is emitted as 0
/// unless the report was configured with timings, which keeps byte-identical
/// output across runs and parallelism levels.
std::string render_report(const Report& r, ReportFormat format);

/// Writes render_report output; file errors carry the path in the message.
void emit_report(const Report& r, ReportFormat format, const std::string& out_path);
void emit_report(const Report& r, ReportFormat format, std::ostream& os);

/// 0 when no record failed, 1 otherwise (flagged records never count)
int report_exit_code(const Report& r);

/// 17-significant-digit decimal rendering used by the csv/json emitters
std::string format_full(double v);

} // namespace gammasum

#endif
