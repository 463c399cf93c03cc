#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "json.hpp"

#include "monocert/cli_app.hpp"
#include "monocert/report.hpp"

using namespace monocert;

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    std::string cmd = env_prefix + MONOCERT_CLI_PATH + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    char buf[4096];
    std::size_t n;
    while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.output.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

ReportDocument sample_doc() {
    ReportDocument doc;
    doc.command = "monocert demo";
    ReportSection sec;
    sec.name = "demo";
    sec.verdict = "pass";
    sec.note = "synthetic";
    sec.rows.push_back({"alpha-row", 3, 2.5, 1.5, 0.25, "ok"});
    sec.rows.push_back({"beta-row", {}, {}, -1.0, {}, "fail"});
    doc.sections.push_back(sec);
    ReportSection empty;
    empty.name = "empty";
    empty.verdict = "pass";
    doc.sections.push_back(empty);
    doc.summary = {2, 1, 1, 0};
    return doc;
}

}  // namespace

TEST_CASE("format_double round-trips doubles exactly") {
    for (double v : {0.0, 1.0, -1.0, 0.1, 2.5, 1e-300, -3.0e300, 0.056016372108691611,
                     -8.397526e-17, 12815504.569147612, 1.3738488e-30}) {
        std::string s = format_double(v);
        CHECK(std::strtod(s.c_str(), nullptr) == v);
    }
    CHECK(format_double(2.5) == "2.5");
    CHECK(format_double(-1.0) == "-1");
}

TEST_CASE("emit_csv writes the golden layout with empty optional cells") {
    std::ostringstream os;
    emit_csv(sample_doc(), os);
    CHECK(os.str() ==
          "series,order,x,value,margin,verdict\n"
          "alpha-row,3,2.5,1.5,0.25,ok\n"
          "beta-row,,,-1,,fail\n");
}

TEST_CASE("emit_json produces the documented schema") {
    std::ostringstream os;
    emit_json(sample_doc(), os);
    auto j = nlohmann::json::parse(os.str());
    CHECK(j["schema_version"] == "1.0");
    CHECK(j["command"] == "monocert demo");
    REQUIRE(j["sections"].size() == 2);
    CHECK(j["sections"][0]["name"] == "demo");
    CHECK(j["sections"][0]["verdict"] == "pass");
    CHECK(j["sections"][0]["note"] == "synthetic");
    REQUIRE(j["sections"][0]["rows"].size() == 2);
    auto& full = j["sections"][0]["rows"][0];
    CHECK(full["series"] == "alpha-row");
    CHECK(full["order"] == 3);
    CHECK(full["x"] == 2.5);
    CHECK(full["value"] == 1.5);
    CHECK(full["margin"] == 0.25);
    CHECK(full["verdict"] == "ok");
    auto& sparse = j["sections"][0]["rows"][1];
    CHECK(!sparse.contains("order"));
    CHECK(!sparse.contains("x"));
    CHECK(!sparse.contains("margin"));
    CHECK(j["sections"][1].contains("note") == false);
    CHECK(j["summary"]["checks_total"] == 2);
    CHECK(j["summary"]["checks_passed"] == 1);
    CHECK(j["summary"]["violations"] == 1);
    CHECK(j["summary"]["inconclusive"] == 0);
    CHECK(!j.contains("elapsed_seconds"));

    ReportDocument timed = sample_doc();
    timed.elapsed_seconds = 0.125;
    std::ostringstream os2;
    emit_json(timed, os2);
    CHECK(nlohmann::json::parse(os2.str())["elapsed_seconds"] == 0.125);
}

TEST_CASE("emit_table echoes the command, sections, and summary") {
    std::ostringstream os;
    emit_table(sample_doc(), os);
    std::string text = os.str();
    CHECK(text.find("command: monocert demo") != std::string::npos);
    CHECK(text.find("[demo]  verdict: pass  (synthetic)") != std::string::npos);
    CHECK(text.find("alpha-row") != std::string::npos);
    CHECK(text.find("summary: total=2 passed=1 violations=1 inconclusive=0") != std::string::npos);
}

TEST_CASE("exit_code_for maps summaries to the exit contract") {
    ReportDocument doc;
    CHECK(exit_code_for(doc) == 0);
    doc.summary.violations = 1;
    CHECK(exit_code_for(doc) == 1);
    doc.summary.inconclusive = 5;
    CHECK(exit_code_for(doc) == 1);  // violations win
    doc.summary.violations = 0;
    CHECK(exit_code_for(doc) == 2);
}

TEST_CASE("dispatch_table names every public operation once") {
    const auto& table = cli::dispatch_table();
    CHECK(table.size() == 28);
    std::set<std::pair<std::string, std::string>> unique(table.begin(), table.end());
    CHECK(unique.size() == table.size());
    std::set<std::string> subs;
    for (const auto& [sub, op] : table) subs.insert(sub);
    CHECK(subs == std::set<std::string>{"eval", "kernel", "verify-cm", "verify-claims", "bounds",
                                        "counterexample", "sweep"});
    CHECK(unique.count({"eval", "binet_theta"}) == 1);
    CHECK(unique.count({"verify-cm", "classify_fa"}) == 1);
    CHECK(unique.count({"counterexample", "gamma_bound_counterexample"}) == 1);
}

TEST_CASE("cli reports are byte-identical across repeated runs") {
    std::string args = "verify-cm --mode classify --a 0.25 --grid 0.05:100:40:log --format csv";
    RunResult first = run_cli(args);
    RunResult second = run_cli(args);
    CHECK(first.exit_code == 1);
    CHECK(first.output == second.output);
    CHECK(first.output.rfind("series,order,x,value,margin,verdict\n", 0) == 0);

    std::string serial_args = args + " --serial";
    CHECK(run_cli(serial_args).output == first.output);
}

TEST_CASE("cli classify verdicts and exit codes follow the margins") {
    RunResult neg = run_cli("verify-cm --a 0.5 --grid 0.5:50:30:log --format json");
    CHECK(neg.exit_code == 0);
    auto jn = nlohmann::json::parse(neg.output);
    CHECK(jn["sections"][0]["verdict"] == "NegativeCompletelyMonotonic");
    CHECK(jn["summary"]["violations"] == 0);

    RunResult neither = run_cli("verify-cm --a 0.25 --grid 0.05:100:30:log --format json");
    CHECK(neither.exit_code == 1);
    auto jx = nlohmann::json::parse(neither.output);
    CHECK(jx["sections"][0]["verdict"] == "Neither");
    CHECK(jx["summary"]["violations"] == 2);

    RunResult dead = run_cli(
        "verify-cm --a 0.5 --grid 0.5:50:30:log --dead-band 1e6 --format json");
    CHECK(dead.exit_code == 2);
    auto jd = nlohmann::json::parse(dead.output);
    CHECK(jd["sections"][0]["verdict"] == "Inconclusive");
    CHECK(jd["summary"]["inconclusive"] > 0);
}

TEST_CASE("cli eval prints values with converged diagnostics") {
    RunResult r = run_cli("eval --fn f_a --x 1 --format csv");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("f_a,,1,0.0560163721086") != std::string::npos);

    RunResult theta = run_cli("eval --fn binet_theta --x 2 --format json");
    CHECK(theta.exit_code == 0);
    auto j = nlohmann::json::parse(theta.output);
    auto& row = j["sections"][0]["rows"][0];
    CHECK(row["verdict"] == "converged");
    double value = row["value"].get<double>();
    CHECK(std::abs(value - 0.041340695955409294) <= 1e-10);
    CHECK(row["margin"].get<double>() <= 1e-10);  // echoed tail bound

    RunResult grid = run_cli("eval --fn phi_threshold --grid 1e-3:100:120:log --format csv");
    CHECK(grid.exit_code == 0);
    int lines = 0;
    for (char c : grid.output) lines += c == '\n';
    CHECK(lines == 121);
}

TEST_CASE("cli kernel sweep reports the crossing rows only when mixed") {
    RunResult mixed = run_cli("kernel --a 0.3 --grid 1e-3:100:80:log --format json");
    CHECK(mixed.exit_code == 1);
    auto jm = nlohmann::json::parse(mixed.output);
    CHECK(jm["sections"][0]["verdict"] == "Mixed");
    const auto& rows = jm["sections"][0]["rows"];
    REQUIRE(rows.size() == 82);
    CHECK(rows[80]["series"] == "crossing-lo");
    CHECK(rows[81]["series"] == "crossing-hi");
    double lo = rows[80]["x"].get<double>();
    double hi = rows[81]["x"].get<double>();
    CHECK(lo < 10.2873479080688);
    CHECK(10.2873479080688 < hi);
    CHECK(hi - lo <= 1e-8);

    RunResult pos = run_cli("kernel --a 0.5 --grid 1e-3:100:80:log --format json");
    CHECK(pos.exit_code == 0);
    auto jp = nlohmann::json::parse(pos.output);
    CHECK(jp["sections"][0]["verdict"] == "AllPositive");
    CHECK(jp["sections"][0]["rows"].size() == 80);

    RunResult curve = run_cli("kernel --threshold-curve --grid 1e-3:100:150:log --format json");
    CHECK(curve.exit_code == 0);
    auto jc = nlohmann::json::parse(curve.output);
    CHECK(jc["sections"][0]["name"] == "threshold-curve");
    CHECK(jc["sections"][0]["verdict"] == "pass");
    std::string note = jc["sections"][0]["note"].get<std::string>();
    CHECK(note.find("strictly_decreasing=yes") != std::string::npos);
    CHECK(note.find("in_range=yes") != std::string::npos);
}

TEST_CASE("cli claims and counterexample subcommands follow the exit contract") {
    RunResult claims = run_cli("verify-claims --max-index 500 --format json");
    CHECK(claims.exit_code == 0);
    auto j = nlohmann::json::parse(claims.output);
    CHECK(j["sections"][0]["verdict"] == "pass");
    CHECK(j["sections"][0]["rows"].size() == 3);

    RunResult series = run_cli("verify-claims --series-check --a 0.5 --t 0.5 --format json");
    CHECK(series.exit_code == 0);
    CHECK(nlohmann::json::parse(series.output)["sections"][0]["verdict"] == "pass");

    RunResult found = run_cli("counterexample --side lower --a 0.45 --grid 1:1e6:2:log --format json");
    CHECK(found.exit_code == 1);
    auto jf = nlohmann::json::parse(found.output);
    CHECK(jf["sections"][0]["verdict"] == "violation-found");
    CHECK(jf["sections"][0]["rows"][0]["verdict"] == "violation");

    RunResult exhausted =
        run_cli("counterexample --side upper --a 0.01 --grid 1e-30:1:2:log --format json");
    CHECK(exhausted.exit_code == 2);
    CHECK(nlohmann::json::parse(exhausted.output)["sections"][0]["verdict"] == "exhausted");
}

TEST_CASE("cli bounds subcommand certifies enclosures") {
    RunResult gamma = run_cli("bounds --mode gamma --grid 0.1:100:50:log --format json");
    CHECK(gamma.exit_code == 0);
    auto j = nlohmann::json::parse(gamma.output);
    CHECK(j["sections"][0]["name"] == "gamma-bounds");
    CHECK(j["sections"][0]["verdict"] == "pass");
    CHECK(j["sections"][0]["rows"].size() == 100);
    CHECK(j["sections"][0]["rows"][0]["verdict"] == "inside");

    RunResult ratio = run_cli("bounds --mode ratio --x 1 --s 0 --t 1 --format json");
    CHECK(ratio.exit_code == 0);
    auto jr = nlohmann::json::parse(ratio.output);
    CHECK(jr["sections"][0]["name"] == "ratio-bounds");
    CHECK(jr["sections"][0]["rows"].size() == 2);

    RunResult lemmas = run_cli("bounds --mode lemmas --grid 0.3:100:120:log --format json");
    CHECK(lemmas.exit_code == 0);
    CHECK(nlohmann::json::parse(lemmas.output)["sections"][0]["rows"].size() == 8);

    RunResult limits = run_cli("bounds --mode limits --format json");
    CHECK(limits.exit_code == 0);
    CHECK(nlohmann::json::parse(limits.output)["sections"][0]["verdict"] == "pass");
}

TEST_CASE("cli usage errors exit with 64") {
    CHECK(run_cli("bogus-subcommand").exit_code == 64);
    CHECK(run_cli("verify-cm --a 0.5").exit_code == 64);              // missing --grid
    CHECK(run_cli("eval --fn binet_theta --x 1 --route bogus").exit_code == 64);
    CHECK(run_cli("eval --fn nope --x 1").exit_code == 64);
    CHECK(run_cli("eval --fn f_a").exit_code == 64);                  // no --x or --grid
    CHECK(run_cli("eval --fn f_a --x 1", "MONOCERT_THREADS=abc ").exit_code == 64);
    CHECK(run_cli("eval --fn f_a --x 1", "MONOCERT_THREADS=2 ").exit_code == 0);
    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("eval --help").exit_code == 0);
}

TEST_CASE("cli convergence failures exit with 2") {
    RunResult r = run_cli("eval --fn binet_theta --x 0.5 --truncation-T 1");
    CHECK(r.exit_code == 2);
}

TEST_CASE("cli --output writes the same bytes as stdout") {
    std::string path = "/tmp/monocert_report_test.csv";
    std::remove(path.c_str());
    std::string args = "bounds --mode gamma --x 1 --format csv";
    RunResult direct = run_cli(args);
    RunResult filed = run_cli(args + " --output " + path);
    CHECK(filed.exit_code == direct.exit_code);
    CHECK(filed.output.empty());
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == direct.output);
    std::remove(path.c_str());
}

TEST_CASE("cli --timing adds elapsed_seconds to json output") {
    RunResult r = run_cli("eval --fn f_a --x 1 --format json --timing");
    CHECK(r.exit_code == 0);
    auto j = nlohmann::json::parse(r.output);
    REQUIRE(j.contains("elapsed_seconds"));
    CHECK(j["elapsed_seconds"].get<double>() >= 0.0);

    RunResult bare = run_cli("eval --fn f_a --x 1 --format json");
    CHECK(!nlohmann::json::parse(bare.output).contains("elapsed_seconds"));
}
