#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

namespace {

std::string binary_path() {
    const char* env = std::getenv("MMP_BIN");
    REQUIRE_MESSAGE(env != nullptr, "MMP_BIN must point at the CLI binary");
    return env;
}

struct RunResult {
    int status;
    std::string out;
};

RunResult run(const std::string& args, const std::string& stderr_file) {
    std::string cmd = binary_path() + " " + args + " 2>" + stderr_file;
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int rc = pclose(pipe);
    return {WEXITSTATUS(rc), out};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    return std::string((std::istreambuf_iterator<char>(in)),
                       std::istreambuf_iterator<char>());
}

void write(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
}

}  // namespace

TEST_CASE("reports are byte-identical across runs and quiet on success") {
    write("cli_q.mmp", "kind=quotient n=8 q=5\n");
    RunResult first = run("resolve --input cli_q.mmp", "cli_err1.txt");
    RunResult second = run("resolve --input cli_q.mmp", "cli_err2.txt");
    CHECK(first.status == 0);
    CHECK(first.out == second.out);
    CHECK(slurp("cli_err1.txt").empty());
    CHECK(first.out.find("chain: [2,3,2]") != std::string::npos);
    CHECK(first.out.find("discrepancies: [-1/4,-1/2,-1/4]") != std::string::npos);
}

TEST_CASE("exit codes partition the outcomes") {
    write("cli_bad.mmp", "kind=quotient n=6 q=2\n");
    RunResult bad = run("resolve --input cli_bad.mmp", "cli_err3.txt");
    CHECK(bad.status == 1);
    CHECK(slurp("cli_err3.txt").find("gcd(n,q) must be 1") != std::string::npos);

    // Termination budget violations are invariant violations: exit 2.
    write("cli_state.mmp", "kind=flip_state points=[(9,4,3),(7,2,2)] seed=1\n");
    RunResult tight = run("flip-run --input cli_state.mmp --max-steps 2", "cli_err4.txt");
    CHECK(tight.status == 2);
    CHECK(slurp("cli_err4.txt").find("max_steps exceeded") != std::string::npos);

    RunResult missing = run("resolve --input no_such_file.mmp", "cli_err5.txt");
    CHECK(missing.status == 1);
}

TEST_CASE("flip-run emits a trace and honors the seed") {
    write("cli_fs.mmp", "kind=flip_state points=[(5,2,2)] seed=11\n");
    RunResult a = run("flip-run --input cli_fs.mmp", "cli_err6.txt");
    RunResult b = run("flip-run --input cli_fs.mmp --seed 11", "cli_err7.txt");
    CHECK(a.status == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("kind=FLIP") != std::string::npos);
    CHECK(a.out.find("final measure=(1,0)") != std::string::npos);
}

TEST_CASE("flip-run accepts curve configs and terminal points") {
    write("cli_c1.mmp", "kind=curve_config case=1 index=(5,2)\n");
    RunResult c1 = run("flip-run --input cli_c1.mmp", "cli_errc1.txt");
    CHECK(c1.status == 0);
    // A case-1 curve flips through a (-1,-1)-curve: the first move pair is
    // FLIP with post 0 followed by FLOP.
    CHECK(c1.out.find("kind=FLIP point=(5,1)") != std::string::npos);
    CHECK(c1.out.find("kind=FLOP") != std::string::npos);
    CHECK(c1.out.find("kC=- post=0") != std::string::npos);

    write("cli_c3.mmp", "kind=curve_config case=3 points=[(9,5,1),(4,1,1)]\n");
    RunResult c3 = run("flip-run --input cli_c3.mmp", "cli_errc3.txt");
    CHECK(c3.status == 0);
    CHECK(c3.out.find("final measure=(1,0)") != std::string::npos);

    write("cli_tp.mmp", "kind=terminal_point r=5 a=2 g=[(0,2),(1,0)]\n");
    RunResult tp = run("flip-run --input cli_tp.mmp --seed 3", "cli_errtp.txt");
    CHECK(tp.status == 0);
    CHECK(tp.out.find("kind=FLIP point=(5,2)") != std::string::npos);
}

TEST_CASE("exclusion survivors") {
    RunResult r = run("exclusion --lmax 50", "cli_err8.txt");
    CHECK(r.status == 0);
    CHECK(r.out.find("survivors=3b3(l=5,kC=3/10);3b4(l=3,kC=1/6);3b7(l=6,kC=5/14)") !=
          std::string::npos);
}

TEST_CASE("dot output is written") {
    write("cli_q2.mmp", "kind=quotient n=3 q=1\n");
    RunResult r = run("resolve --input cli_q2.mmp --dot cli_graph.dot", "cli_err9.txt");
    CHECK(r.status == 0);
    std::string dot = slurp("cli_graph.dot");
    CHECK(dot.find("digraph") != std::string::npos);
    CHECK(dot.find("F1 (-3)") != std::string::npos);
}

TEST_CASE("json output parses and matches the text body") {
    write("cli_q3.mmp", "kind=quotient n=18 q=5\n");
    RunResult r = run("resolve --input cli_q3.mmp --json", "cli_err10.txt");
    CHECK(r.status == 0);
    auto j = nlohmann::json::parse(r.out);
    CHECK(j["command"] == "resolve");
    CHECK(j["version"] == "0.1.0");
    bool found = false;
    for (const auto& line : j["body"])
        if (line.get<std::string>().find("family: (h,r,b)=(2,3,1)") != std::string::npos)
            found = true;
    CHECK(found);
}

TEST_CASE("blowup of a non-simple point is a validation error") {
    write("cli_ns.mmp", "kind=terminal_point r=5 a=2 g=[(0,2),(2,0)]\n");
    RunResult r = run("blowup --input cli_ns.mmp", "cli_err11.txt");
    CHECK(r.status == 1);
    CHECK(slurp("cli_err11.txt").find("simple") != std::string::npos);
}
