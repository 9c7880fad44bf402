#include "gammasum/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

namespace gammasum {

namespace {

double canonical(double v) {
    if (v == 0.0) return 0.0; // fold -0.0
    return v;
}

std::string format_tol(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", v);
    return buf;
}

std::string format_seconds(const Report& r, double seconds) {
    if (!r.config.timings) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6f", seconds);
    return buf;
}

const RouteValue* best_route(const VerificationRecord& rec) {
    const RouteValue* best = nullptr;
    for (const auto& rv : rec.route_values) {
        if (!std::isfinite(rv.value)) continue;
        if (!best || rv.abs_err < best->abs_err) best = &rv;
    }
    return best;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace

std::string format_full(double v) {
    v = canonical(v);
    if (std::isnan(v)) return "nan";
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

std::string render_report(const Report& r, ReportFormat format) {
    std::ostringstream os;
    if (format == ReportFormat::csv) {
        os << "id,status,lhs_best,rhs,diff,tol,seconds\n";
        for (const auto& rec : r.records) {
            const RouteValue* best = best_route(rec);
            os << rec.id << ',' << to_string(rec.status) << ','
               << format_full(best ? best->value : std::nan("")) << ','
               << format_full(rec.rhs_value) << ',' << format_full(rec.max_diff) << ','
               << format_tol(rec.tol) << ',' << format_seconds(r, rec.seconds) << '\n';
        }
        return os.str();
    }
    if (format == ReportFormat::json) {
        os << "[\n";
        bool first = true;
        for (const auto& rec : r.records) {
            const RouteValue* best = best_route(rec);
            if (!first) os << ",\n";
            first = false;
            os << "  {\"id\":\"" << json_escape(rec.id) << "\",\"status\":\""
               << to_string(rec.status) << "\",\"lhs_best\":\""
               << format_full(best ? best->value : std::nan("")) << "\",\"rhs\":\""
               << format_full(rec.rhs_value) << "\",\"diff\":\"" << format_full(rec.max_diff)
               << "\",\"tol\":\"" << format_tol(rec.tol) << "\",\"seconds\":\""
               << format_seconds(r, rec.seconds) << "\"}";
        }
        os << "\n]\n";
        return os.str();
    }
    // text: aligned table plus a summary line
    std::size_t idw = 2;
    for (const auto& rec : r.records) idw = std::max(idw, rec.id.size());
    char line[256];
    std::snprintf(line, sizeof line, "%-*s  %-19s  %-24s  %-24s  %-12s  %-8s\n",
                  static_cast<int>(idw), "id", "status", "lhs_best", "rhs", "diff", "tol");
    os << line;
    for (const auto& rec : r.records) {
        const RouteValue* best = best_route(rec);
        char lhs[40], rhs[40], diff[40];
        std::snprintf(lhs, sizeof lhs, "%.15e", canonical(best ? best->value : std::nan("")));
        std::snprintf(rhs, sizeof rhs, "%.15e", canonical(rec.rhs_value));
        std::snprintf(diff, sizeof diff, "%.3e", canonical(rec.max_diff));
        std::snprintf(line, sizeof line, "%-*s  %-19s  %-24s  %-24s  %-12s  %-8s\n",
                      static_cast<int>(idw), rec.id.c_str(), to_string(rec.status).c_str(), lhs,
                      rhs, diff, format_tol(rec.tol).c_str());
        os << line;
        if (!rec.note.empty()) os << std::string(idw + 2, ' ') << "note: " << rec.note << "\n";
    }
    os << "summary: pass " << r.n_pass << ", fail " << r.n_fail << ", flagged " << r.n_flagged
       << ", conjecture " << r.n_conjecture << ", total " << r.records.size() << "\n";
    return os.str();
}

void emit_report(const Report& r, ReportFormat format, std::ostream& os) {
    os << render_report(r, format);
}

void emit_report(const Report& r, ReportFormat format, const std::string& out_path) {
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("emit_report: cannot open " + out_path);
    f << render_report(r, format);
    if (!f) throw std::runtime_error("emit_report: write failed for " + out_path);
}

int report_exit_code(const Report& r) { return r.n_fail > 0 ? 1 : 0; }

} // namespace gammasum
