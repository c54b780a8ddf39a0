#include "doctest.h"
#include "test_helpers.hpp"

#include "etg/graph6.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <cstdio>
#include <cstdlib>
#include <string>

// End-to-end checks of the installed command-line surface.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd = std::string(ETG_CLI_PATH) + " " + args + " 2>&1";
    auto heredoc = args.find(" <<< ");
    if (heredoc != std::string::npos) {
        std::string real_args = args.substr(0, heredoc);
        cmd = "printf '%s\\n' '" + stdin_text + "' | " + std::string(ETG_CLI_PATH) + " " +
              real_args + " 2>&1";
    }
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::array<char, 4096> buf;
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    int status = pclose(pipe);
    r.exit_code = WEXITSTATUS(status);
    return r;
}

int count_lines(const std::string& s) {
    int n = 0;
    for (char c : s)
        if (c == '\n') ++n;
    return n;
}

const std::string kCat = std::string("--catalogue ") + ETG_DATA_DIR + "/transitive_groups.cat";

} // namespace

TEST_SUITE_BEGIN("cli");

TEST_CASE("census order 10 prints 13 graph6 lines") {
    RunResult r = run("census --order 10 " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 13);
    // every emitted string round-trips through the codec unchanged
    std::istringstream lines(r.output);
    std::string line;
    while (std::getline(lines, line))
        CHECK(etg::graph6_encode(etg::graph6_decode(line)) == line);
}

TEST_CASE("census order 1 prints K1") {
    RunResult r = run("census --order 1 " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "@\n");
}

TEST_CASE("bipartite-only census order 14") {
    RunResult r = run("census --order 14 --bipartite-only " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(count_lines(r.output) == 13);
}

TEST_CASE("missing catalogue exits 2 with remediation text") {
    RunResult r = run("census --order 4 --catalogue /nonexistent/cat.txt");
    CHECK(r.exit_code == 2);
    CHECK(r.output.find("catalogue") != std::string::npos);
}

TEST_CASE("capability exceeded exits 3 naming the blocking side") {
    RunResult r = run("census --order 34 " + kCat);
    CHECK(r.exit_code == 3);
    CHECK(r.output.find("parts (9,") != std::string::npos);
}

TEST_CASE("classify petersen from stdin") {
    RunResult r = run("classify <<< petersen", "IsP@OkWHG");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("10,IsP@OkWHG,1,1,0,1,1,1,1,0,0,120") != std::string::npos);
}

TEST_CASE("classify empty input is ok, malformed input is not") {
    RunResult ok = run("classify </dev/null");
    CHECK(ok.exit_code == 0);
    CHECK(count_lines(ok.output) == 1); // header only
    RunResult bad = run("classify <<< bad", "not-a-graph6-line!!");
    CHECK(bad.exit_code != 0);
}

TEST_CASE("verify-table on rows 1..8") {
    RunResult r = run("verify-table --orders 1..8 " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("MISMATCH") == std::string::npos);
    CHECK(count_lines(r.output) == 8);
}

TEST_CASE("verify-table reports out-of-scope rows as skipped") {
    RunResult r = run("verify-table --orders 47 " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("SKIPPED") != std::string::npos);
}

TEST_CASE("verify-table covers the bipartite column beyond the full-census range") {
    RunResult r = run("verify-table --orders 11 " + kCat);
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("PARTIAL Bpte computed 5 expected 5 MATCH") != std::string::npos);
}

TEST_CASE("edge list output format") {
    RunResult r = run("construct folkman --k 3 --format edges");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("36\n") == 0); // order line, then "u v" pairs
}

TEST_CASE("construct folkman") {
    RunResult r = run("construct folkman --k 3");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order 36, valency 12") != std::string::npos);
    CHECK(r.output.find("semisym=1") != std::string::npos);
    RunResult bad = run("construct folkman --k 2");
    CHECK(bad.exit_code == 1);
}

TEST_CASE("construct gq") {
    RunResult r = run("construct gq --q 3 --complement");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("order 80, valency 36, worthy=1") != std::string::npos);
    CHECK(r.output.find("aut=51840") != std::string::npos);
}

TEST_CASE("catalogue build summary") {
    RunResult r = run("catalogue build --max-degree 5");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("degree 4: 5 groups") != std::string::npos);
    CHECK(r.output.find("degree 5: 5 groups") != std::string::npos);
    RunResult bad = run("catalogue build --max-degree 9");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("catalogue verify") {
    RunResult r = run(std::string("catalogue verify ") + ETG_DATA_DIR + "/transitive_groups.cat");
    CHECK(r.exit_code == 0);
}

TEST_CASE("oracle row") {
    RunResult r = run("oracle --n 6");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tot,reg,bpte,vt,at,wthy = 6,4,4,4,4,2") != std::string::npos);
    RunResult bad = run("oracle --n 10");
    CHECK(bad.exit_code == 3);
}

TEST_CASE("census file outputs") {
    std::string prefix = "/tmp/etg_cli_test_out";
    RunResult r = run("census --order 6 --out " + prefix + " " + kCat);
    CHECK(r.exit_code == 0);
    std::ifstream g6(prefix + ".g6"), csv(prefix + ".csv"), table(prefix + "_table.csv");
    CHECK(g6.good());
    CHECK(csv.good());
    CHECK(table.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "n,graph6,connected,regular,bipartite,worthy,vt,et,at,hat,semisym,aut_order");
    std::getline(table, header);
    CHECK(header == "n,tot,reg,bpte,vt,at,wthy");
    std::getline(table, header);
    CHECK(header == "6,6,4,4,4,4,2");
}

TEST_CASE("oracle emit-et CSV") {
    std::string path = "/tmp/etg_cli_test_et.csv";
    RunResult r = run("oracle --n 5 --emit-et " + path);
    CHECK(r.exit_code == 0);
    std::ifstream in(path);
    REQUIRE(in.good());
    int lines = 0;
    std::string line;
    while (std::getline(in, line)) ++lines;
    CHECK(lines == 5); // header + the four edge-transitive graphs of order 5
}

TEST_CASE("identical invocations give identical bytes") {
    RunResult a = run("census --orders 4..8 " + kCat);
    RunResult b = run("census --orders 4..8 " + kCat);
    CHECK(a.output == b.output);
    RunResult c = run("census --orders 4..8 --workers 1 " + kCat);
    CHECK(a.output == c.output);
}

TEST_SUITE_END();
