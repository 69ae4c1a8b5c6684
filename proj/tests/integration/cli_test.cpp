// Drives the fuchsian binary end to end: exit codes, structured output
// determinism and round-trips, golden files for reports and figures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "fuchsian/report.hpp"

namespace {

struct RunOutput {
    int exit_code;
    std::string stdout_text;
};

RunOutput run_cli(const std::string& args) {
    std::string cmd = std::string(FUCHSIAN_CLI_PATH) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), out};
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const std::string kTestDir = FUCHSIAN_TEST_DIR;

void check_golden(const std::string& name, const std::string& actual) {
    std::string path = kTestDir + "/golden/" + name;
    if (std::getenv("UPDATE_GOLDEN")) {
        std::ofstream out(path, std::ios::binary);
        out << actual;
        return;
    }
    CHECK(actual == read_file(path));
}

}  // namespace

TEST_CASE("classify: classes and exit codes") {
    RunOutput hyp = run_cli("classify \"[[2,1],[1,1]]\"");
    CHECK(hyp.exit_code == 0);
    CHECK(hyp.stdout_text.find("Hyperbolic") != std::string::npos);
    CHECK(hyp.stdout_text.find("trace: 3") != std::string::npos);

    RunOutput par = run_cli("classify \"[[1,1],[0,1]]\"");
    CHECK(par.exit_code == 0);
    CHECK(par.stdout_text.find("Parabolic") != std::string::npos);

    RunOutput bad = run_cli("classify \"[[1,0],[0,2]]\"");
    CHECK(bad.exit_code == 2);

    RunOutput garbled = run_cli("classify \"[[1,0],[0\"");
    CHECK(garbled.exit_code == 2);
}

TEST_CASE("classify on the interval backend can stay unresolved") {
    // Trace 2 exactly: |trace| - 2 straddles zero at every precision.
    RunOutput r = run_cli("--backend interval classify \"[[1,1],[0,1]]\"");
    CHECK(r.exit_code == 1);
    CHECK(r.stdout_text.find("Unresolved") != std::string::npos);
}

TEST_CASE("classify on the algebraic backend") {
    RunOutput r = run_cli(
        "--backend algebraic --field \"[-2,0,1];[1,2]\" classify \"[[[0,1],0],[0,[0,1/2]]]\"");
    CHECK(r.exit_code == 0);
    CHECK(r.stdout_text.find("Hyperbolic") != std::string::npos);
}

TEST_CASE("run-gm structured reports are deterministic and round-trip") {
    const std::string args =
        "--format structured run-gm \"[[2,0],[0,1/2]]\" \"[[25/3,-32],[4/3,-5]]\"";
    RunOutput first = run_cli(args);
    RunOutput second = run_cli(args);
    CHECK(first.exit_code == 0);
    CHECK(first.stdout_text == second.stdout_text);

    fuchsian::Report rep = fuchsian::Report::parse(first.stdout_text);
    CHECK(rep.get("verdict") == "DiscreteFree");
    CHECK(rep.print() == first.stdout_text);
    check_golden("run_gm_discrete_free.report", first.stdout_text);
}

TEST_CASE("run-gm exit codes span the verdict lattice") {
    CHECK(run_cli("run-gm \"[[2,0],[0,1/2]]\" \"[[25/3,-32],[4/3,-5]]\"").exit_code == 0);
    // tr AB^-1 = 2 exactly: parabolic routing is Unresolved.
    CHECK(run_cli("run-gm \"[[2,0],[0,1/2]]\" \"[[16/9,-1/9],[1/9,5/9]]\"").exit_code == 1);
    CHECK(run_cli("run-gm \"[[2,0],[0,1/2]]\" \"[[oops\"").exit_code == 2);
}

TEST_CASE("run-gm with --verify re-certifies the verdict in the report") {
    RunOutput r = run_cli(
        "--format structured --verify run-gm \"[[2,0],[0,1/2]]\" \"[[13/5,3],[-17/25,-2/5]]\"");
    CHECK(r.exit_code == 0);
    fuchsian::Report rep = fuchsian::Report::parse(r.stdout_text);
    CHECK(rep.get("verdict") == "NotDiscrete");
    CHECK(rep.get("witness.kind") == "InfiniteOrderElliptic");
    CHECK(rep.get("replay.ok") == "yes");
}

TEST_CASE("interval backend run-gm reaches the bit-model obstruction") {
    // Conjugate of the tr AB^-1 = 2 fixture with no zero entries, so the run
    // stalls exactly at the tr AB^-1 vs 2 comparison.
    RunOutput r = run_cli(
        "--backend interval --format structured run-gm \"[[2,0],[3/2,1/2]]\" "
        "\"[[17/9,-1/9],[13/9,4/9]]\"");
    CHECK(r.exit_code == 1);
    fuchsian::Report rep = fuchsian::Report::parse(r.stdout_text);
    CHECK(rep.get("verdict") == "Unresolved");
    CHECK(rep.get("reason") == "OracleIndeterminate");
    CHECK(rep.get("detail").find("tr AB^-1 vs 2") != std::string::npos);

    // The exact backend resolves the same input to the parabolic routing.
    RunOutput exact = run_cli(
        "--format structured run-gm \"[[2,0],[3/2,1/2]]\" \"[[17/9,-1/9],[13/9,4/9]]\"");
    CHECK(exact.exit_code == 1);
    CHECK(fuchsian::Report::parse(exact.stdout_text).get("reason") == "ParabolicCase");
}

TEST_CASE("bit-demo escalation tables") {
    RunOutput zero = run_cli("--format structured bit-demo 0 --max-precision 16");
    CHECK(zero.exit_code == 1);
    fuchsian::Report zr = fuchsian::Report::parse(zero.stdout_text);
    CHECK(zr.get("sign") == "Indeterminate");
    CHECK(zr.get("query.16.certified") == "no");

    RunOutput tiny = run_cli("--format structured bit-demo 1/32");
    CHECK(tiny.exit_code == 0);
    fuchsian::Report tr = fuchsian::Report::parse(tiny.stdout_text);
    CHECK(tr.get("sign") == "Positive");
    CHECK(!tr.has("query.8.phi"));  // resolved by m = 7

    RunOutput neg = run_cli("--format structured bit-demo -- -1");
    CHECK(neg.exit_code == 0);
    CHECK(fuchsian::Report::parse(neg.stdout_text).get("sign") == "Negative");
    CHECK(fuchsian::Report::parse(neg.stdout_text).has("query.1.phi"));

    RunOutput root = run_cli("--format structured bit-demo \"sqrt(2)\"");
    CHECK(root.exit_code == 0);
    CHECK(fuchsian::Report::parse(root.stdout_text).get("sign") == "Positive");
}

TEST_CASE("sa-member explains atoms") {
    std::string domain = kTestDir + "/fixtures/domains/unit_disk.sa";
    RunOutput in_disk = run_cli("--format structured sa-member --domain " + domain + " 1/2 1/2");
    CHECK(in_disk.exit_code == 0);
    fuchsian::Report rep = fuchsian::Report::parse(in_disk.stdout_text);
    CHECK(rep.get("member") == "yes");
    CHECK(rep.has("atom.0"));

    RunOutput out_disk = run_cli("--format structured sa-member --domain " + domain + " 2 0");
    CHECK(out_disk.exit_code == 0);
    CHECK(fuchsian::Report::parse(out_disk.stdout_text).get("member") == "no");

    CHECK(run_cli("sa-member --domain " + domain + " 1/2").exit_code == 2);
    CHECK(run_cli("sa-member --domain /nonexistent.sa 1 2").exit_code == 2);
}

TEST_CASE("render produces the golden figure") {
    std::string scene = kTestDir + "/fixtures/scenes/axes_pair.scene";
    RunOutput r = run_cli("render --scene " + scene);
    CHECK(r.exit_code == 0);
    RunOutput again = run_cli("render --scene " + scene);
    CHECK(r.stdout_text == again.stdout_text);
    check_golden("axes_pair.svg", r.stdout_text);
}

TEST_CASE("batch mode keeps input order") {
    std::string batch = kTestDir + "/fixtures/batch_pairs.txt";
    RunOutput r = run_cli("--format structured run-gm --batch " + batch);
    CHECK(r.exit_code == 1);  // the corpus contains an Unresolved fixture
    CHECK(r.stdout_text.find("# input 0") != std::string::npos);
    CHECK(r.stdout_text.find("# input 1") != std::string::npos);
    CHECK(r.stdout_text.find("# input 2") != std::string::npos);
    CHECK(r.stdout_text.find("# input 0") < r.stdout_text.find("# input 1"));
    CHECK(r.stdout_text.find("# input 1") < r.stdout_text.find("# input 2"));
    RunOutput again = run_cli("--format structured run-gm --batch " + batch);
    CHECK(r.stdout_text == again.stdout_text);
}
