#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

// Exercises the installed command-line surface end to end.

namespace {

struct RunResult {
    int exit_code = -1;
    std::string output;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(STARKIT_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    RunResult r;
    std::array<char, 4096> buf{};
    while (fgets(buf.data(), buf.size(), pipe)) r.output += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string tmpdir() {
    static int counter = 0;
    const std::string dir = "cli_scratch_" + std::to_string(counter++);
    REQUIRE(std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str()) == 0);
    return dir;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    out << content;
}

const char* kE12M2 = R"({"n": 2, "entries": [[0,0],[1,0],[0,0],[0,0]]})";
const char* kDiag221 = R"({"n": 3, "entries": [[2,0],[0,0],[0,0],[0,0],[2,0],[0,0],[0,0],[0,0],[-1,0]]})";

}  // namespace

TEST_CASE("closure of e12 reports the full 2x2 algebra") {
    const std::string dir = tmpdir();
    write_file(dir + "/m.json", kE12M2);
    const RunResult r = run("closure " + dir + "/m.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("algebra dimension: 4") != std::string::npos);
    CHECK(r.output.find("unit present: yes") != std::string::npos);
}

TEST_CASE("closure exits 2 on malformed JSON") {
    const std::string dir = tmpdir();
    write_file(dir + "/bad.json", "{not json");
    const RunResult r = run("closure " + dir + "/bad.json");
    CHECK(r.exit_code == 2);
}

TEST_CASE("decompose reports one block of size 2 for the full 2x2 algebra") {
    const std::string dir = tmpdir();
    write_file(dir + "/m.json", kE12M2);
    const RunResult r = run("decompose " + dir + "/m.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("blocks: 1") != std::string::npos);
    CHECK(r.output.find("d=2 m=1") != std::string::npos);
    CHECK(r.output.find("abelian: false") != std::string::npos);
}

TEST_CASE("decompose output is byte-identical across repeated runs") {
    const std::string dir = tmpdir();
    write_file(dir + "/m.json", kE12M2);
    const RunResult r1 = run("--seed 5 decompose " + dir + "/m.json");
    const RunResult r2 = run("--seed 5 decompose " + dir + "/m.json");
    CHECK(r1.exit_code == 0);
    CHECK(r1.output == r2.output);
}

TEST_CASE("spectral reports lambdas and the dimension identity") {
    const std::string dir = tmpdir();
    write_file(dir + "/a.json", kDiag221);
    const RunResult r = run("--out " + dir + " spectral " + dir + "/a.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("clusters: 2") != std::string::npos);
    CHECK(r.output.find("lambda_1 = 2") != std::string::npos);
    CHECK(r.output.find("lambda_2 = -1") != std::string::npos);
    CHECK(r.output.find("dim C*(A,I): 2") != std::string::npos);
    CHECK(r.output.find("|spec(A)|: 2") != std::string::npos);
    std::ifstream proj(dir + "/projector_1.json");
    CHECK(proj.good());
}

TEST_CASE("spectral exits 5 on a non-Hermitian matrix") {
    const std::string dir = tmpdir();
    write_file(dir + "/a.json", kE12M2);
    const RunResult r = run("spectral " + dir + "/a.json");
    CHECK(r.exit_code == 5);
}

TEST_CASE("spectral of the zero matrix reports an empty spectrum") {
    const std::string dir = tmpdir();
    write_file(dir + "/z.json", R"({"n": 2, "entries": [[0,0],[0,0],[0,0],[0,0]]})");
    const RunResult r = run("spectral " + dir + "/z.json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("clusters: 0") != std::string::npos);
}

TEST_CASE("fpp c0 reports the 1/2 tail coordinate") {
    const std::string dir = tmpdir();
    const RunResult r = run("--out " + dir + " fpp c0 --m 8");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("tail_coordinate=0.5") != std::string::npos);
    std::ifstream csv(dir + "/trace_c0.csv");
    REQUIRE(csv.good());
    std::string header;
    std::getline(csv, header);
    CHECK(header == "step,displacement,norm");
}

TEST_CASE("fpp cs on a 16-point grid reports Lipschitz constant 15") {
    const std::string dir = tmpdir();
    const RunResult r = run("--out " + dir + " fpp cs --grid-points 16 --lambda 1");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("discrete_lipschitz=15") != std::string::npos);
}

TEST_CASE("fpp c0 with m=0 exits 6") {
    const RunResult r = run("fpp c0 --m 0");
    CHECK(r.exit_code == 6);
}
