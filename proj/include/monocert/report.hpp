#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace monocert {

struct ReportRow {
    std::string series;
    std::optional<int> order;
    std::optional<double> x;
    double value = 0.0;
    std::optional<double> margin;
    std::string verdict;
};

struct ReportSection {
    std::string name;
    std::string verdict;
    std::string note;
    std::vector<ReportRow> rows;
};

struct ReportSummary {
    int checks_total = 0;
    int checks_passed = 0;
    int violations = 0;
    int inconclusive = 0;
};

struct ReportDocument {
    std::string schema_version = "1.0";
    std::string command;
    std::vector<ReportSection> sections;
    ReportSummary summary;
    std::optional<double> elapsed_seconds;  // present only with --timing
};

// %.17g rendering used by every emitter (doubles round-trip exactly).
std::string format_double(double v);

// Header "series,order,x,value,margin,verdict" then one row per sample;
// empty cells for absent fields, "\n" line endings.
void emit_csv(const ReportDocument& doc, std::ostream& out);

void emit_json(const ReportDocument& doc, std::ostream& out);

void emit_table(const ReportDocument& doc, std::ostream& out);

// 0 = all sections pass, 1 = violations, 2 = inconclusive (violations win).
int exit_code_for(const ReportDocument& doc);

}  // namespace monocert
