#include "monocert/report.hpp"

#include <cstdio>
#include <ostream>

#include "json.hpp"

namespace monocert {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void emit_csv(const ReportDocument& doc, std::ostream& out) {
    out << "series,order,x,value,margin,verdict\n";
    for (const ReportSection& sec : doc.sections) {
        for (const ReportRow& row : sec.rows) {
            out << row.series << ',';
            if (row.order) out << *row.order;
            out << ',';
            if (row.x) out << format_double(*row.x);
            out << ',';
            out << format_double(row.value) << ',';
            if (row.margin) out << format_double(*row.margin);
            out << ',' << row.verdict << '\n';
        }
    }
}

void emit_json(const ReportDocument& doc, std::ostream& out) {
    nlohmann::ordered_json j;
    j["schema_version"] = doc.schema_version;
    j["command"] = doc.command;
    auto& sections = j["sections"] = nlohmann::ordered_json::array();
    for (const ReportSection& sec : doc.sections) {
        nlohmann::ordered_json js;
        js["name"] = sec.name;
        js["verdict"] = sec.verdict;
        if (!sec.note.empty()) js["note"] = sec.note;
        auto& rows = js["rows"] = nlohmann::ordered_json::array();
        for (const ReportRow& row : sec.rows) {
            nlohmann::ordered_json jr;
            jr["series"] = row.series;
            if (row.order) jr["order"] = *row.order;
            if (row.x) jr["x"] = *row.x;
            jr["value"] = row.value;
            if (row.margin) jr["margin"] = *row.margin;
            jr["verdict"] = row.verdict;
            rows.push_back(std::move(jr));
        }
        sections.push_back(std::move(js));
    }
    j["summary"] = {{"checks_total", doc.summary.checks_total},
                    {"checks_passed", doc.summary.checks_passed},
                    {"violations", doc.summary.violations},
                    {"inconclusive", doc.summary.inconclusive}};
    if (doc.elapsed_seconds) j["elapsed_seconds"] = *doc.elapsed_seconds;
    out << j.dump(2) << '\n';
}

void emit_table(const ReportDocument& doc, std::ostream& out) {
    out << "command: " << doc.command << '\n';
    for (const ReportSection& sec : doc.sections) {
        out << "\n[" << sec.name << "]  verdict: " << sec.verdict;
        if (!sec.note.empty()) out << "  (" << sec.note << ')';
        out << '\n';
        if (!sec.rows.empty())
            out << "  series                     order  x                       "
                   "value                     margin                    verdict\n";
        for (const ReportRow& row : sec.rows) {
            char line[256];
            std::snprintf(line, sizeof line, "  %-26s %5s  %-23s %-25s %-25s %s\n",
                          row.series.c_str(),
                          row.order ? std::to_string(*row.order).c_str() : "",
                          row.x ? format_double(*row.x).c_str() : "",
                          format_double(row.value).c_str(),
                          row.margin ? format_double(*row.margin).c_str() : "",
                          row.verdict.c_str());
            out << line;
        }
    }
    out << "\nsummary: total=" << doc.summary.checks_total
        << " passed=" << doc.summary.checks_passed << " violations=" << doc.summary.violations
        << " inconclusive=" << doc.summary.inconclusive << '\n';
    if (doc.elapsed_seconds) out << "elapsed_seconds: " << format_double(*doc.elapsed_seconds) << '\n';
}

int exit_code_for(const ReportDocument& doc) {
    if (doc.summary.violations > 0) return 1;
    if (doc.summary.inconclusive > 0) return 2;
    return 0;
}

}  // namespace monocert
