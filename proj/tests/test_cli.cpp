#include "doctest.h"

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef PRODSET_CLI_PATH
#error "PRODSET_CLI_PATH must point at the built binary"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run_shell(const std::string& cmd_line) {
    std::string cmd = cmd_line + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult result{};
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    while (std::size_t n = fread(buf.data(), 1, buf.size(), pipe))
        result.output.append(buf.data(), n);
    int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

RunResult run(const std::string& args, const std::string& env = "") {
    return run_shell(env + " " + std::string(PRODSET_CLI_PATH) + " " + args);
}

std::string write_temp(const std::string& name, const std::string& content) {
    std::string path = std::string("/tmp/prodset_test_") + name;
    std::ofstream out(path);
    out << content;
    return path;
}

}  // namespace

TEST_CASE("enumerate emits the canonical listing") {
    RunResult r = run("enumerate --q 2 --qprime 2");
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/2\n1/1\n2/1\n");
}

TEST_CASE("set operations read the line format, stdin included") {
    std::string a = write_temp("a.txt", "# set A\n1/2\n2/1\n");
    RunResult r = run("product-set --a " + a + " --b " + a);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "1/4\n1/1\n4/1\n");

    RunResult q = run_shell("printf '1/2\\n3/1\\n' | " + std::string(PRODSET_CLI_PATH) +
                            " quotient-set --a - --b " + a);
    CHECK(q.exit_code == 0);
    CHECK(q.output == "1/4\n1/1\n3/2\n6/1\n");
}

TEST_CASE("decompose prints the class CSV") {
    std::string a = write_temp("da.txt", "2/3\n4/1\n");
    std::string b = write_temp("db.txt", "2/1\n3/1\n");
    RunResult r = run("decompose --a " + a + " --b " + b);
    CHECK(r.exit_code == 0);
    CHECK(r.output == "r,s,count_a,count_b,count_m\n1,1,2,2,2\n2,1,2,1,2\n");
}

TEST_CASE("tau and tmax") {
    CHECK(run("tau --m 36").output == "9\n");
    CHECK(run("tmax --x 11").output == "4\n");
}

TEST_CASE("bounds emits one JSON report") {
    std::string a = write_temp("ba.txt", "1/2\n1/1\n2/1\n");
    RunResult r = run("bounds --a " + a + " --b " + a + " --q 2 --qprime 2 --n-max 3 --format json");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"actual_quotient\":5") != std::string::npos);
    CHECK(r.output.find("\"lemma_n3\":") != std::string::npos);
}

TEST_CASE("certify round-trips with validation") {
    std::string a = write_temp("ca.txt", "1/2\n1/1\n2/1\n");
    RunResult r = run("certify --a " + a + " --b " + a + " --q 2 --qprime 2 --n 2 --validate");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"branch\":\"RECURSE\"") != std::string::npos);
    CHECK(r.output.find("validation: true") != std::string::npos);
}

TEST_CASE("search subcommand") {
    RunResult r = run("search --q 3 --qprime 3 --k 3 --method exhaustive --symmetric");
    CHECK(r.exit_code == 0);
    CHECK(r.output.find("\"objective\":5") != std::string::npos);
}

TEST_CASE("exit codes distinguish failure classes") {
    CHECK(run("enumerate --q 0.5 --qprime 2").exit_code == 1);       // domain
    CHECK(run("enumerate --q 30000 --qprime 30000").exit_code == 2); // capacity
    CHECK(run("enumerate --q 2 --qprime 2 --bogus-flag").exit_code == 64);
    CHECK(run("no-such-command").exit_code == 64);
}

TEST_CASE("report output is byte-deterministic across runs and thread counts") {
    std::string args = "report --q 12 --qprime 12 --count 12 --max-k 20 --seed 7 --n-max 3";
    RunResult one = run(args, "PRODUCTSET_THREADS=1");
    RunResult four = run(args, "PRODUCTSET_THREADS=4");
    RunResult again = run(args, "PRODUCTSET_THREADS=4");
    CHECK(one.exit_code == 0);
    CHECK(one.output == four.output);
    CHECK(four.output == again.output);
    CHECK(one.output.find("q,qprime,card_a,card_b,t_qq,actual_quotient,lemma_n1") == 0);
}

TEST_CASE("enumerate output parses back to an equal set") {
    RunResult r = run("enumerate --q 7 --qprime 5");
    std::string path = write_temp("roundtrip.txt", r.output);
    RunResult q = run("quotient-set --a " + path + " --b " + write_temp("one.txt", "1/1\n"));
    CHECK(q.output == r.output);
}
