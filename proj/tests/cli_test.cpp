#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>

#include "schurkit/partitions.hpp"
#include "schurkit/verify.hpp"

#ifndef SCHURKIT_BIN
#define SCHURKIT_BIN "./schurkit"
#endif

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(SCHURKIT_BIN) + " " + args + " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r{-1, {}};
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    std::size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int status = pclose(p);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

}  // namespace

TEST_CASE("lr subcommand") {
    RunResult r = run("lr --mu 1,1 --tau 1,1 --lambda 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
    CHECK(run("--format json lr --mu 1,1 --tau 1,1 --lambda 2,2").out.find("\"coefficient\": 1") !=
          std::string::npos);
}

TEST_CASE("schur and weyl subcommands") {
    RunResult r = run("schur --shape 2,1 --rank 2 rank");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");
    CHECK(run("weyl --shape 2,1 --rank 2 rank").out == "2\n");
    long long skew_rank = schurkit::ssyt_count(schurkit::SkewShape::parse("3,2,1/1"), 3);
    CHECK(run("schur --shape 3,2,1/1 --rank 3 rank").out == std::to_string(skew_rank) + "\n");

    // basis lists one tableau per line
    RunResult b = run("schur --shape 1,1 --rank 2 basis");
    CHECK(b.exit_code == 0);
    CHECK(b.out == "1 | 2 | \n");
}

TEST_CASE("bott subcommand") {
    RunResult r = run("bott --weight 0,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "Twist(1,1)[1]\n");
    RunResult j = run("--format json bott --weight 0,2");
    CHECK(j.out.find("\"answer\": \"twist\"") != std::string::npos);
    CHECK(j.out.find("\"shift\": 1") != std::string::npos);
    CHECK(j.out.find("\"negative_flag\": false") != std::string::npos);
    CHECK(run("--format json bott --weight 0,1").out.find("\"answer\": \"zero\"") !=
          std::string::npos);
    CHECK(run("bott --weight 3,1,0,2 --dd 2,3").out == "Twist(3,1,1,1)[1]\n");
    CHECK(run("bott --weight 2,0 --char 2").out.find("hypothesis not satisfied") !=
          std::string::npos);
    // block validation error goes to standard error with a usage exit
    CHECK(run("bott --weight 0,1,2,0 --dd 2").exit_code == 2);
}

TEST_CASE("skew-decompose and complexes") {
    RunResult r = run("skew-decompose --shape 3,2,1/1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "(2,2,1)\n(3,1,1)\n(3,2)\n");
    CHECK(run("schur-complex --shape 2 --m 1 --n 1").out ==
          "degree 0: rank 1\ndegree 1: rank 1\ndegree 2: rank 0\n");
    RunResult h = run("homology --shape 2 --rho 2");
    CHECK(h.exit_code == 0);
    CHECK(h.out.find("H_0 = Z/2") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run("nonsense").exit_code == 2);
    CHECK(run("lr --mu 1,1").exit_code == 2);
    CHECK(run("schur-complex --shape 2").exit_code == 2);
}

TEST_CASE("deterministic output") {
    const std::string cmd = "--format json schur-complex --shape 2,1 --m 2 --n 2";
    CHECK(run(cmd).out == run(cmd).out);
    const std::string vcmd = "--format json verify cauchy";
    std::string a = run(vcmd).out, b = run(vcmd).out;
    // elapsed time may differ; strip it before comparing
    auto strip = [](std::string s) {
        std::string out;
        std::size_t pos = 0;
        while (pos < s.size()) {
            std::size_t hit = s.find("\"elapsed_ms\":", pos);
            if (hit == std::string::npos) {
                out += s.substr(pos);
                break;
            }
            std::size_t end = s.find('\n', hit);
            out += s.substr(pos, hit - pos);
            pos = end;
        }
        return out;
    };
    CHECK(strip(a) == strip(b));
}

TEST_CASE("verify subcommand exit codes") {
    CHECK(run("verify cauchy").exit_code == 0);
    CHECK(run("verify bott-p1").exit_code == 0);
    CHECK(run("verify no-such-suite").exit_code == 2);
}

TEST_CASE("suite library") {
    auto names = schurkit::suite_names();
    CHECK(names.size() == 14);
    for (const auto& n : names) CHECK(!n.empty());
    auto rep = schurkit::run_suite("plucker");
    CHECK(rep.pass());
    CHECK(rep.cases.size() == 8);
    CHECK_THROWS_AS(schurkit::run_suite("bogus"), std::invalid_argument);
}
